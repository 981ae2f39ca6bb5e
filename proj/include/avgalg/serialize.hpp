#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "avgalg/enumeration.hpp"
#include "avgalg/instances.hpp"
#include "avgalg/lincomb.hpp"
#include "avgalg/operad.hpp"
#include "avgalg/series.hpp"
#include "avgalg/word.hpp"

namespace avgalg {

using Json = nlohmann::ordered_json;

// Integers that fit in a signed 64-bit value become JSON numbers, larger
// ones decimal strings.
Json integer_to_json(const Integer& value);
// Rationals are always strings "p" or "p/q".
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

// {terms: [{coeff, word}]} in canonical order.
Json lincomb_to_json(const LinearCombination& a);
// Throws std::invalid_argument on schema errors; words are reduced.
LinearCombination lincomb_from_json(const Json& j);

Json word_to_json(const BracketedWord& w);
Json analysis_to_json(const WordAnalysis& a);
Json violation_to_json(const Violation& v);

// {run_cap, include_one, max_degree, max_arity, rows: [[n, m, count]],
// degree_totals}. Zero cells are omitted from rows.
Json count_table_to_json(const CountTable& t);
// Header "n,m,count", one line per nonzero cell.
std::string count_table_to_csv(const CountTable& t);
// One line per degree: "n: total" followed by the nonzero cells.
std::string count_table_to_text(const CountTable& t);

Json series_to_json(const BivariateSeries& s, SeriesKind kind);
std::string series_to_csv(const BivariateSeries& s);
std::string series_to_text(const BivariateSeries& s);

// {dim, basis, mul, op}; op rows are images of basis vectors.
Json algebra_to_json(const FiniteAlgebra& a);
// Throws std::invalid_argument on schema errors.
FiniteAlgebra algebra_from_json(const Json& j);

Json check_report_to_json(const CheckReport& r, const FiniteAlgebra& a);
Json axiom_report_to_json(const AxiomReport& r);

}  // namespace avgalg
