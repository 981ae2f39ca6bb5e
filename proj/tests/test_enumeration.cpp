#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "avgalg/enumeration.hpp"
#include "avgalg/series.hpp"
#include "generators.hpp"

using namespace avgalg;

namespace {

std::vector<std::vector<unsigned>> parts_of(const std::vector<Composition>& cs) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& c : cs) out.push_back(c.parts);
  return out;
}

CensusResult run_census(RunCap cap, unsigned n, unsigned m, bool include_one = false, bool keep_words = false) {
  CensusOptions o;
  o.run_cap = cap;
  o.max_degree = n;
  o.max_arity = m;
  o.include_one = include_one;
  o.keep_words = keep_words;
  return census(o);
}

// Table entry, zero outside the table.
Integer cell(const CountTable& t, int n, int m) {
  if (n < 0 || m < 0 || n > static_cast<int>(t.max_degree()) || m > static_cast<int>(t.max_arity())) return 0;
  return t.at(n, m);
}

}  // namespace

TEST(RunCap, ParseAndFormat) {
  EXPECT_EQ(RunCap::parse("inf"), RunCap::unbounded());
  EXPECT_EQ(RunCap::parse("3"), RunCap::at_most(3));
  EXPECT_EQ(RunCap::at_most(2).to_string(), "2");
  EXPECT_EQ(RunCap::unbounded().to_string(), "inf");
  EXPECT_THROW(RunCap::parse("0"), std::invalid_argument);
  EXPECT_THROW(RunCap::parse("-1"), std::invalid_argument);
  EXPECT_THROW(RunCap::parse("two"), std::invalid_argument);
  EXPECT_TRUE(RunCap::at_most(2).allows(2));
  EXPECT_FALSE(RunCap::at_most(2).allows(3));
}

TEST(Compositions, Examples) {
  EXPECT_EQ(parts_of(compositions(3, 2, RunCap::unbounded())), (std::vector<std::vector<unsigned>>{{1, 2}, {2, 1}}));
  for (unsigned k = 1; k <= 6; ++k) {
    const auto cs = compositions(k, k, RunCap::at_most(1));
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].parts, std::vector<unsigned>(k, 1));
  }
  EXPECT_EQ(parts_of(compositions(4, 2, RunCap::at_most(2))), (std::vector<std::vector<unsigned>>{{2, 2}}));
  EXPECT_TRUE(compositions(2, 3, RunCap::unbounded()).empty());
}

TEST(Compositions, CountsMatchBinomial) {
  // Unbounded compositions of m into k parts number C(m-1, k-1).
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned k = 1; k <= m; ++k) {
      mpz_class expected;
      mpz_bin_uiui(expected.get_mpz_t(), m - 1, k - 1);
      const auto cs = compositions(m, k, RunCap::unbounded());
      ASSERT_EQ(cs.size(), expected.get_ui());
      for (const auto& c : cs) ASSERT_EQ(c.total(), m);
    }
}

TEST(Census, DegreeOneWords) {
  const CensusResult r = run_census(RunCap::at_most(1), 1, 3, true, true);
  std::vector<std::string> degree_one;
  for (unsigned m = 1; m <= 3; ++m)
    for (const auto& w : r.words.at({1, m})) degree_one.push_back(w.text());
  std::sort(degree_one.begin(), degree_one.end());
  EXPECT_EQ(degree_one, (std::vector<std::string>{"[x]", "[x]x", "x[x]", "x[x]x"}));
  EXPECT_EQ(r.all.degree_total(1), 4);
  EXPECT_EQ(r.all.at(1, 2), 2);
  EXPECT_EQ(r.all.at(1, 3), 1);
  EXPECT_EQ(r.associate.at(1, 2), 2);
  EXPECT_EQ(r.all.degree_total(0), 2);
  EXPECT_EQ(r.all.at(0, 0), 1);
}

TEST(Census, WordListsAreCanonicalAndValid) {
  const CensusResult r = run_census(RunCap::at_most(2), 3, 7, false, true);
  for (const auto& [key, words] : r.words) {
    ASSERT_EQ(words.size(), r.all.at(key.first, key.second));
    for (std::size_t k = 0; k < words.size(); ++k) {
      ASSERT_EQ(words[k].degree(), key.first);
      ASSERT_EQ(words[k].arity(), key.second);
      ASSERT_TRUE(is_averaging(words[k]));
      ASSERT_LE(testgen::longest_run(words[k]), 2u);
      if (k > 0) ASSERT_TRUE(CanonicalOrder{}(words[k - 1], words[k]));
    }
  }
}

TEST(Census, MatchesBruteForce) {
  for (RunCap cap : {RunCap::at_most(1), RunCap::at_most(2), RunCap::unbounded()}) {
    SCOPED_TRACE(cap.to_string());
    EXPECT_EQ(run_census(cap, 3, 6, true).all, testgen::brute_force_census(cap, 3, 6, true));
    EXPECT_EQ(run_census(cap, 4, 4, false).all, testgen::brute_force_census(cap, 4, 4, false));
  }
}

TEST(Census, ClassesMatchBruteForceFilters) {
  const CensusResult r = run_census(RunCap::at_most(1), 4, 9, false, true);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 1; m <= 9; ++m) {
      Integer bracketed = 0, indecomposable = 0, associate = 0;
      auto it = r.words.find({n, m});
      if (it != r.words.end())
        for (const auto& w : it->second) {
          const bool b = w.head() == 1 && w.tail() == 1;
          bracketed += b;
          indecomposable += testgen::is_indecomposable(w);
          associate += !b;
        }
      ASSERT_EQ(r.bracketed.at(n, m), bracketed);
      ASSERT_EQ(r.indecomposable.at(n, m), indecomposable);
      ASSERT_EQ(r.decomposable.at(n, m), bracketed - indecomposable);
      ASSERT_EQ(r.associate.at(n, m), associate);
    }
}

TEST(Census, BudgetExceeded) {
  CensusOptions o;
  o.max_degree = 6;
  o.max_arity = 13;
  o.budget = 100;
  EXPECT_THROW(census(o), BudgetExceeded);
}

TEST(Census, SequencesForRunCapOne) {
  const CensusResult r = run_census(RunCap::at_most(1), 7, 15, true);
  const std::vector<long> a{2, 4, 12, 44, 180, 788, 3612, 17116};
  const std::vector<long> i{0, 1, 2, 6, 22, 90, 394, 1806};
  const std::vector<long> d{0, 0, 1, 5, 23, 107, 509, 2473};
  for (unsigned n = 0; n <= 7; ++n) {
    EXPECT_EQ(r.all.degree_total(n), a[n]) << n;
    EXPECT_EQ(r.indecomposable.degree_total(n), i[n]) << n;
    EXPECT_EQ(r.decomposable.degree_total(n), d[n]) << n;
  }
}

TEST(Census, RecurrenceWeb) {
  // Arity up to 2n + 1 keeps every degree-6 word.
  const CensusResult r = run_census(RunCap::at_most(1), 6, 13, false);
  const CountTable &a = r.all, &b = r.bracketed, &c = r.associate, &i = r.indecomposable, &d = r.decomposable;
  for (int n = 1; n <= 6; ++n)
    for (int m = 2; m <= 13; ++m) {
      SCOPED_TRACE(std::to_string(n) + "," + std::to_string(m));
      ASSERT_EQ(cell(a, n, m), cell(b, n, m) + cell(c, n, m));
      ASSERT_EQ(cell(c, n, m), 2 * cell(b, n, m - 1) + cell(b, n, m - 2));
      ASSERT_EQ(cell(b, n, m), cell(i, n, m) + cell(d, n, m));
      ASSERT_EQ(cell(i, n, m), cell(c, n - 1, m) - cell(b, n - 1, m - 1));
      ASSERT_EQ(cell(i, n, m), cell(b, n - 1, m - 1) + cell(b, n - 1, m - 2));
    }
  for (unsigned n = 1; n <= 6; ++n) ASSERT_EQ(c.degree_total(n), 3 * b.degree_total(n));
  for (unsigned n = 2; n <= 6; ++n) ASSERT_EQ(i.degree_total(n), 2 * b.degree_total(n - 1));
}

TEST(Census, Deterministic) {
  EXPECT_EQ(run_census(RunCap::at_most(2), 4, 9).all, run_census(RunCap::at_most(2), 4, 9).all);
}

TEST(CollapseRuns, Examples) {
  const auto [c1, r1] = collapse_runs(parse_word("x x[x]"));
  EXPECT_EQ(c1.text(), "x[x]");
  EXPECT_EQ(r1.parts, (std::vector<unsigned>{2, 1}));
  const auto [c2, r2] = collapse_runs(parse_word("x[x]x"));
  EXPECT_EQ(c2.text(), "x[x]x");
  EXPECT_EQ(r2.parts, (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(expand_runs(parse_word("x[x]"), Composition{{3, 1}, RunCap::unbounded()}).text(), "x x x[x]");
  EXPECT_THROW(collapse_runs(parse_word("x x x"), RunCap::at_most(2)), std::invalid_argument);
  EXPECT_THROW(expand_runs(parse_word("x[x]"), Composition{{1}, RunCap::unbounded()}), std::invalid_argument);
  EXPECT_THROW(expand_runs(parse_word("x[x]"), Composition{{1, 1, 1}, RunCap::unbounded()}), std::invalid_argument);
}

TEST(CollapseRuns, BijectionOnCensus) {
  const CensusResult r = run_census(RunCap::at_most(3), 3, 8, false, true);
  const CensusResult one = run_census(RunCap::at_most(1), 3, 8, false, true);
  std::set<std::string> run_free;
  for (const auto& [key, words] : one.words)
    for (const auto& w : words) run_free.insert(w.text());
  std::set<std::pair<std::string, std::vector<unsigned>>> seen;
  for (const auto& [key, words] : r.words)
    for (const auto& w : words) {
      const auto [collapsed, runs] = collapse_runs(w, RunCap::at_most(3));
      ASSERT_TRUE(run_free.count(collapsed.text())) << w.text();
      ASSERT_EQ(runs.total(), w.arity());
      ASSERT_EQ(runs.parts.size(), collapsed.arity());
      ASSERT_EQ(expand_runs(collapsed, runs), w);
      ASSERT_TRUE(seen.insert({collapsed.text(), runs.parts}).second) << w.text();
    }
}

TEST(ReduceToV1, MatchesCensus) {
  for (RunCap cap : {RunCap::at_most(1), RunCap::at_most(2), RunCap::at_most(3), RunCap::unbounded()}) {
    SCOPED_TRACE(cap.to_string());
    EXPECT_EQ(reduce_to_v1(cap, 4, 10, true), run_census(cap, 4, 10, true).all);
    EXPECT_EQ(reduce_to_v1(cap, 4, 10, false), run_census(cap, 4, 10, false).all);
  }
}

TEST(ReduceToV1, Examples) {
  const CountTable inf = reduce_to_v1(RunCap::unbounded(), 1, 3);
  EXPECT_EQ(inf.at(1, 1), 1);
  EXPECT_EQ(inf.at(1, 2), 3);
  EXPECT_EQ(inf.at(1, 3), 6);
  EXPECT_EQ(reduce_to_v1(RunCap::at_most(2), 3, 8), testgen::brute_force_census(RunCap::at_most(2), 3, 8, true));
  // v = 1 is the identity substitution.
  const BivariateSeries a = series(SeriesKind::A, 5, 11);
  const CountTable one = reduce_to_v1(RunCap::at_most(1), 5, 11);
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned m = 0; m <= 11; ++m) ASSERT_EQ(Rational(one.at(n, m)), a.at(n, m));
}
