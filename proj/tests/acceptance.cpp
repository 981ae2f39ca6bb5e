// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "avgalg/algebra.hpp"
#include "avgalg/binary_tree.hpp"
#include "avgalg/enumeration.hpp"
#include "avgalg/operad.hpp"
#include "avgalg/rewrite.hpp"
#include "avgalg/schroeder_tree.hpp"
#include "avgalg/series.hpp"
#include "avgalg/universal.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace avgalg;

namespace {

constexpr double kCensusSeconds = 60.0;
constexpr double kSeriesSeconds = 5.0;
constexpr double kOperadSeconds = 120.0;
constexpr double kClosedFormTolerance = 1e-9;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x.get_str();
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

CensusResult run_census(RunCap cap, unsigned n, unsigned m, bool include_one, bool keep_words = false) {
  CensusOptions o;
  o.run_cap = cap;
  o.max_degree = n;
  o.max_arity = m;
  o.include_one = include_one;
  o.keep_words = keep_words;
  return census(o);
}

Integer cell(const CountTable& t, int n, int m) {
  if (n < 0 || m < 0 || n > int(t.max_degree()) || m > int(t.max_arity())) return 0;
  return t.at(n, m);
}

Outcome schroeder_identification() {
  const auto start = std::chrono::steady_clock::now();
  const CensusResult r = run_census(RunCap::at_most(1), 7, 15, true);
  const double census_time = seconds_since(start);
  const std::vector<Integer> totals = r.all.degree_totals();
  const std::vector<Integer> expected = ints({2, 4, 12, 44, 180, 788, 3612, 17116});

  const auto series_start = std::chrono::steady_clock::now();
  const std::vector<Integer> from_series = univariate(SeriesKind::A, 12);
  const double series_time = seconds_since(series_start);
  bool series_ok = true;
  for (unsigned n = 0; n <= 12; ++n) series_ok = series_ok && from_series[n] == 2 * schroeder(n);
  for (unsigned n = 0; n <= 7; ++n) series_ok = series_ok && from_series[n] == expected[n];

  std::ostringstream d;
  d << "census " << join(totals) << " in " << census_time << "s; series(A) n<=12 in " << series_time << "s";
  return {totals == expected && census_time <= kCensusSeconds && series_ok && series_time <= kSeriesSeconds, d.str()};
}

Outcome indecomposable_shift() {
  const CensusResult r = run_census(RunCap::at_most(1), 7, 15, false);
  const std::vector<Integer> i = r.indecomposable.degree_totals();
  bool ok = i == ints({0, 1, 2, 6, 22, 90, 394, 1806});
  const std::vector<Integer> longer = univariate(SeriesKind::I, 12);
  for (unsigned n = 0; n <= 11; ++n) ok = ok && schroeder(n) == longer[n + 1];
  return {ok, "i = " + join(i) + "; schroeder(n) = i_{n+1} for n <= 11"};
}

Outcome decomposable_sequence() {
  const CensusResult r = run_census(RunCap::at_most(1), 7, 15, false);
  const std::vector<Integer> d = r.decomposable.degree_totals();
  return {d == ints({0, 0, 1, 5, 23, 107, 509, 2473}), "d = " + join(d)};
}

Outcome schroeder_tree_counts() {
  std::vector<Integer> counts;
  for (unsigned n = 1; n <= 6; ++n) counts.push_back(Integer(enumerate_schroeder(n).size()));
  bool ok = counts == ints({1, 2, 6, 22, 90, 394});
  for (unsigned n = 1; n <= 5; ++n) {
    const CensusResult r = run_census(RunCap::at_most(1), n, 2 * n + 1, false, true);
    std::set<std::string> image, listed;
    std::size_t words = 0;
    for (const auto& [key, list] : r.words)
      if (key.first == n)
        for (const auto& w : list)
          if (testgen::is_indecomposable(w)) {
            image.insert(psi(w).text());
            ++words;
          }
    for (const auto& t : enumerate_schroeder(n)) listed.insert(t.text());
    ok = ok && image == listed && image.size() == words;
  }
  return {ok, "|Sh_n| = " + join(counts) + "; psi image equals enumeration for n <= 5"};
}

Outcome recurrence_web() {
  const CensusResult r = run_census(RunCap::at_most(1), 6, 12, false);
  const CountTable &a = r.all, &b = r.bracketed, &c = r.associate, &i = r.indecomposable, &d = r.decomposable;
  std::size_t failures = 0, checks = 0;
  for (int n = 1; n <= 6; ++n)
    for (int m = 2; m <= 12; ++m) {
      failures += cell(a, n, m) != cell(b, n, m) + cell(c, n, m);
      failures += cell(c, n, m) != 2 * cell(b, n, m - 1) + cell(b, n, m - 2);
      failures += cell(b, n, m) != cell(i, n, m) + cell(d, n, m);
      failures += cell(i, n, m) != cell(c, n - 1, m) - cell(b, n - 1, m - 1);
      failures += cell(i, n, m) != cell(b, n - 1, m - 1) + cell(b, n - 1, m - 2);
      checks += 5;
    }
  return {failures == 0, std::to_string(checks) + " identities, " + std::to_string(failures) + " failures"};
}

Outcome run_cap_reduction() {
  std::string detail;
  bool ok = true;
  for (RunCap v : {RunCap::at_most(2), RunCap::at_most(3), RunCap::unbounded()}) {
    const bool equal = run_census(v, 4, 10, true).all == reduce_to_v1(v, 4, 10, true);
    ok = ok && equal;
    detail += "v=" + v.to_string() + (equal ? " equal; " : " DIFFERENT; ");
  }
  return {ok, detail + "(n,m) <= (4,10)"};
}

Outcome algebra_laws() {
  testgen::Rng rng(7);
  const std::vector<std::string> letters{"x", "y"};
  std::size_t failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const AveragingWord u = testgen::random_averaging_word(rng, letters, 4);
    const AveragingWord v = testgen::random_averaging_word(rng, letters, 4);
    const AveragingWord w = testgen::random_averaging_word(rng, letters, 4);
    failures += diamond(diamond(u, v), w) != diamond(u, diamond(v, w));
    const AveragingWord lhs = diamond(apply_p(u), apply_p(v));
    failures += lhs != apply_p(diamond(u, apply_p(v)));
    failures += lhs != apply_p(diamond(apply_p(u), v));
  }
  std::size_t words = 0, mismatches = 0;
  for (const auto& w : testgen::all_bracketed_words_up_to(8)) {
    ++words;
    const AveragingWord folded = reduce(w);
    mismatches += rewrite_reduce(w, Strategy::LeftmostInnermost) != folded;
    mismatches += rewrite_reduce(w, Strategy::LeftmostOutermost) != folded;
  }
  std::ostringstream d;
  d << "1000 triples, " << failures << " law failures; " << words << " words of size <= 8, " << mismatches
    << " oracle mismatches";
  return {failures == 0 && mismatches == 0, d.str()};
}

Vector random_vector(testgen::Rng& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Vector v(dim);
  for (auto& c : v) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return v;
}

Outcome universal_property() {
  testgen::Rng rng(11);
  const auto fixtures = testgen::instance_fixtures();
  std::size_t failures = 0;
  for (const auto& f : fixtures) {
    const FiniteAlgebra& alg = f.algebra;
    for (int k = 0; k < 200; ++k) {
      const Assignment<FiniteAlgebra> assignment{{"x", random_vector(rng, alg.dim())},
                                                 {"y", random_vector(rng, alg.dim())}};
      const LinearCombination a = testgen::random_lincomb(rng, {"x", "y"}, 3);
      const LinearCombination b = testgen::random_lincomb(rng, {"x", "y"}, 3);
      const Vector fa = universal_map(alg, assignment, a);
      const Vector fb = universal_map(alg, assignment, b);
      failures += universal_map(alg, assignment, product(a, b)) != alg.multiply(fa, fb);
      failures += universal_map(alg, assignment, apply_p(a)) != alg.apply(fa);
      failures += universal_map(alg, assignment, a + b) != alg.add(fa, fb);
    }
  }
  return {failures == 0 && fixtures.size() >= 4,
          std::to_string(fixtures.size()) + " fixtures x 200 elements, " + std::to_string(failures) + " failures"};
}

Outcome bijections() {
  std::size_t words = 0, trees = 0, failures = 0;
  std::set<std::string> image;
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned d = 0; d <= 3; ++d)
      for (const auto& w : testgen::bracketed_words_with(m, d)) {
        if (!is_averaging(w)) continue;
        const AveragingWord a = AveragingWord::unchecked(w);
        const AveragingTree t = phi(a);
        failures += phi_inverse(t) != a;
        ++words;
        if (m <= 5) image.insert(t.text());
      }
  for (unsigned m = 1; m <= 5; ++m)
    for (const auto& w : testgen::bracketed_words_with(m, 4))
      if (is_averaging(w)) image.insert(phi(AveragingWord::unchecked(w)).text());
  for (const auto& t : enumerate_binary_trees(6, 3)) {
    if (!is_averaging_tree(t)) continue;
    const AveragingTree a(t);
    failures += phi(phi_inverse(a)) != a;
    ++trees;
  }
  std::set<std::string> filtered;
  for (const auto& t : enumerate_binary_trees(5, 4))
    if (is_averaging_tree(t)) filtered.insert(t.text());
  std::ostringstream d;
  d << words << " words (<= 6 x's, <= 3 brackets), " << trees << " trees (<= 6 leaves, <= 3 unis), " << failures
    << " round-trip failures; image " << image.size() << " vs filter " << filtered.size()
    << " (<= 5 leaves, <= 4 unis)";
  return {failures == 0 && image == filtered, d.str()};
}

Outcome operad_axioms() {
  const auto start = std::chrono::steady_clock::now();
  const auto family = averaging_trees(4, 3);
  const AxiomReport r = check_operad_axioms(family, 1);
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << family.size() << " trees; unit " << r.unit_checks << ", sequential " << r.sequential_checks << ", parallel "
    << r.parallel_checks << ", arity " << r.arity_checks << " checks; " << r.failures.size() << " failures in "
    << elapsed << "s";
  if (!r.passed()) d << "; first: " << r.failures.front().axiom << " " << r.failures.front().detail;
  return {r.passed() && elapsed <= kOperadSeconds, d.str()};
}

Outcome closed_forms() {
  const unsigned N = 40, M = 2 * N + 1;
  const std::pair<double, double> points[] = {{0.01, 0.5}, {0.02, 0.3}, {0.05, 1.0}};
  double worst = 0;
  for (SeriesKind k : {SeriesKind::I, SeriesKind::B, SeriesKind::A}) {
    const BivariateSeries s = series(k, N, M);
    for (const auto& [z, t] : points) worst = std::max(worst, std::fabs(closed_form(k, z, t) - truncated_sum(s, z, t)));
  }
  std::ostringstream d;
  d << "I, B, A at 3 points; max |closed - truncated| = " << worst;
  return {worst <= kClosedFormTolerance, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Schroeder identification", schroeder_identification},
      {"indecomposable = shifted Schroeder", indecomposable_shift},
      {"decomposable sequence", decomposable_sequence},
      {"Schroeder-tree counts", schroeder_tree_counts},
      {"recurrence web", recurrence_web},
      {"run-cap reduction", run_cap_reduction},
      {"algebra laws", algebra_laws},
      {"universal property", universal_property},
      {"bijections", bijections},
      {"operad axioms", operad_axioms},
      {"closed-form spot check", closed_forms},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
