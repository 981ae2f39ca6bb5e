#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace avgalg {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

std::string format_integer(const Integer& value);

}  // namespace avgalg
