#include "avgalg/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "avgalg/algebra.hpp"

namespace avgalg {

Json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<long long>(value.get_si());
  return format_integer(value);
}

Json rational_to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw std::invalid_argument("expected a rational as string or integer, found " + j.dump());
}

Json lincomb_to_json(const LinearCombination& a) {
  Json terms = Json::array();
  for (const auto& [w, c] : a.terms()) terms.push_back({{"coeff", rational_to_json(c)}, {"word", w.text()}});
  return {{"terms", terms}};
}

LinearCombination lincomb_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("linear combination must be an object with a 'terms' array");
  LinearCombination out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("word") || !t["word"].is_string())
      throw std::invalid_argument("each term needs 'coeff' and 'word'");
    out.add_term(reduce(parse_word(t["word"].get<std::string>())), rational_from_json(t["coeff"]));
  }
  return out;
}

Json word_to_json(const BracketedWord& w) {
  return {{"word", w.text()}, {"degree", w.degree()}, {"arity", w.arity()}};
}

namespace {

std::string factor_text(const Factor& f) { return BracketedWord(f).text(); }

}  // namespace

Json analysis_to_json(const WordAnalysis& a) {
  Json standard = Json::array();
  for (const Factor& f : a.standard_factors) standard.push_back(factor_text(f));
  Json blocks = Json::array();
  for (const Block& b : a.block_factors) {
    if (const auto* run = std::get_if<LetterRun>(&b)) {
      std::string text;
      for (const auto& s : run->letters) text += (text.empty() ? "" : " ") + s;
      blocks.push_back({{"run", text}});
    } else {
      blocks.push_back({{"bracket", factor_text(std::get<Factor>(b))}});
    }
  }
  return {{"depth", a.depth},
          {"breadth", a.breadth},
          {"head", a.head},
          {"tail", a.tail},
          {"standard_factors", standard},
          {"block_factors", blocks}};
}

Json violation_to_json(const Violation& v) { return {{"pattern", pattern_name(v.pattern)}, {"path", v.path}}; }

Json count_table_to_json(const CountTable& t) {
  Json rows = Json::array();
  for (unsigned n = 0; n <= t.max_degree(); ++n)
    for (unsigned m = 0; m <= t.max_arity(); ++m)
      if (t.at(n, m) != 0) rows.push_back({n, m, integer_to_json(t.at(n, m))});
  Json totals = Json::array();
  for (const auto& v : t.degree_totals()) totals.push_back(integer_to_json(v));
  return {{"run_cap", t.run_cap().to_string()},
          {"include_one", t.include_one()},
          {"max_degree", t.max_degree()},
          {"max_arity", t.max_arity()},
          {"rows", rows},
          {"degree_totals", totals}};
}

std::string count_table_to_csv(const CountTable& t) {
  std::ostringstream out;
  out << "n,m,count\n";
  for (unsigned n = 0; n <= t.max_degree(); ++n)
    for (unsigned m = 0; m <= t.max_arity(); ++m)
      if (t.at(n, m) != 0) out << n << ',' << m << ',' << format_integer(t.at(n, m)) << '\n';
  return out.str();
}

std::string count_table_to_text(const CountTable& t) {
  std::ostringstream out;
  for (unsigned n = 0; n <= t.max_degree(); ++n) {
    out << n << ": " << format_integer(t.degree_total(n));
    for (unsigned m = 0; m <= t.max_arity(); ++m)
      if (t.at(n, m) != 0) out << "  t^" << m << ':' << format_integer(t.at(n, m));
    out << '\n';
  }
  return out.str();
}

Json series_to_json(const BivariateSeries& s, SeriesKind kind) {
  Json rows = Json::array();
  for (unsigned n = 0; n <= s.max_degree(); ++n)
    for (unsigned m = 0; m <= s.max_arity(); ++m)
      if (s.at(n, m) != 0) rows.push_back({n, m, rational_to_json(s.at(n, m))});
  return {{"kind", series_kind_name(kind)}, {"N", s.max_degree()}, {"M", s.max_arity()}, {"rows", rows}};
}

std::string series_to_csv(const BivariateSeries& s) {
  std::ostringstream out;
  out << "n,m,coefficient\n";
  for (unsigned n = 0; n <= s.max_degree(); ++n)
    for (unsigned m = 0; m <= s.max_arity(); ++m)
      if (s.at(n, m) != 0) out << n << ',' << m << ',' << format_rational(s.at(n, m)) << '\n';
  return out.str();
}

std::string series_to_text(const BivariateSeries& s) {
  std::ostringstream out;
  for (unsigned n = 0; n <= s.max_degree(); ++n) {
    out << "z^" << n << ':';
    bool any = false;
    for (unsigned m = 0; m <= s.max_arity(); ++m)
      if (s.at(n, m) != 0) {
        out << "  " << format_rational(s.at(n, m)) << "*t^" << m;
        any = true;
      }
    if (!any) out << "  0";
    out << '\n';
  }
  return out.str();
}

namespace {

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(rational_to_json(c));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw std::invalid_argument(where + ": expected an array of " + std::to_string(dim) + " rationals");
  Vector v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return v;
}

}  // namespace

Json algebra_to_json(const FiniteAlgebra& a) {
  Json mul = Json::array();
  for (const auto& row : a.mul()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(vector_to_json(v));
    mul.push_back(r);
  }
  Json op = Json::array();
  for (const auto& row : a.op()) op.push_back(vector_to_json(row));
  return {{"dim", a.dim()}, {"basis", a.basis()}, {"mul", mul}, {"op", op}};
}

FiniteAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra must be a JSON object");
  for (const char* key : {"dim", "basis", "mul", "op"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("algebra is missing '") + key + "'");
  if (!j["dim"].is_number_unsigned()) throw std::invalid_argument("'dim' must be a nonnegative integer");
  const std::size_t dim = j["dim"].get<std::size_t>();
  if (!j["basis"].is_array() || j["basis"].size() != dim)
    throw std::invalid_argument("'basis' must list " + std::to_string(dim) + " labels");
  std::vector<std::string> basis;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw std::invalid_argument("basis labels must be strings");
    basis.push_back(b.get<std::string>());
  }
  const Json& mj = j["mul"];
  if (!mj.is_array() || mj.size() != dim) throw std::invalid_argument("'mul' must have " + std::to_string(dim) + " rows");
  std::vector<std::vector<Vector>> mul(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!mj[i].is_array() || mj[i].size() != dim)
      throw std::invalid_argument("'mul' row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k)
      mul[i].push_back(vector_from_json(mj[i][k], dim, "mul[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  const Json& oj = j["op"];
  if (!oj.is_array() || oj.size() != dim) throw std::invalid_argument("'op' must have " + std::to_string(dim) + " rows");
  Matrix op;
  for (std::size_t i = 0; i < dim; ++i) op.push_back(vector_from_json(oj[i], dim, "op[" + std::to_string(i) + "]"));
  return FiniteAlgebra(std::move(basis), std::move(mul), std::move(op));
}

Json check_report_to_json(const CheckReport& r, const FiniteAlgebra& a) {
  if (r.passed()) return {{"pass", true}};
  const Counterexample& c = *r.failure;
  return {{"pass", false},
          {"counterexample", {{"left", a.basis()[c.left]}, {"right", a.basis()[c.right]}, {"identity", c.identity}}}};
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"axiom", f.axiom}, {"detail", f.detail}});
  return {{"family_size", r.family_size},
          {"unit_checks", r.unit_checks},
          {"sequential_checks", r.sequential_checks},
          {"parallel_checks", r.parallel_checks},
          {"arity_checks", r.arity_checks},
          {"pass", r.passed()},
          {"failures", failures}};
}

}  // namespace avgalg
