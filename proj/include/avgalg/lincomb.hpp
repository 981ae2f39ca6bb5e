#pragma once

#include <map>
#include <string>
#include <string_view>

#include "avgalg/rational.hpp"
#include "avgalg/word.hpp"

namespace avgalg {

// Finite sum of averaging words with nonzero rational coefficients,
// iterated in canonical word order.
class LinearCombination {
 public:
  using Terms = std::map<AveragingWord, Rational, AveragingOrder>;

  LinearCombination() = default;
  static LinearCombination monomial(const AveragingWord& w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const AveragingWord& w) const;

  void add_term(const AveragingWord& w, const Rational& c);

  LinearCombination& operator+=(const LinearCombination& other);
  LinearCombination& operator-=(const LinearCombination& other);
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  bool operator==(const LinearCombination& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

LinearCombination scale(const Rational& c, const LinearCombination& a);
LinearCombination product(const LinearCombination& a, const LinearCombination& b);
LinearCombination apply_p(const LinearCombination& a);

// Terms "c*word" joined by " + " / " - "; the empty combination is "0".
std::string format_lincomb(const LinearCombination& a);

// Accepts "c1*w1 + c2*w2 - ...", a bare word, or "0". Coefficients default
// to 1. Each word is brought to normal form with reduce.
LinearCombination parse_lincomb(std::string_view text);

}  // namespace avgalg
