#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avgalg/rational.hpp"
#include "avgalg/word.hpp"

namespace avgalg {

// Upper bound on the length of x-runs; empty means unbounded.
struct RunCap {
  std::optional<unsigned> limit;

  static RunCap unbounded() { return {}; }
  static RunCap at_most(unsigned v);
  bool allows(unsigned length) const { return !limit || length <= *limit; }
  bool is_unbounded() const { return !limit.has_value(); }
  // "inf" or the decimal limit.
  std::string to_string() const;
  static RunCap parse(const std::string& text);
  bool operator==(const RunCap&) const = default;
};

struct Composition {
  std::vector<unsigned> parts;
  RunCap cap;
  unsigned total() const;
  bool operator==(const Composition& other) const { return parts == other.parts; }
};

// All compositions of m into k positive parts, each part allowed by v, in
// lexicographic order.
std::vector<Composition> compositions(unsigned m, unsigned k, RunCap v);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t budget);
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

// Dense table of counts indexed by (degree n, arity m), 0 <= n <= N, 0 <= m <= M.
class CountTable {
 public:
  CountTable() = default;
  CountTable(unsigned max_degree, unsigned max_arity, RunCap run_cap, bool include_one);

  unsigned max_degree() const { return max_degree_; }
  unsigned max_arity() const { return max_arity_; }
  const RunCap& run_cap() const { return run_cap_; }
  bool include_one() const { return include_one_; }

  const Integer& at(unsigned n, unsigned m) const;
  Integer& at(unsigned n, unsigned m);
  Integer degree_total(unsigned n) const;
  std::vector<Integer> degree_totals() const;

  bool operator==(const CountTable& other) const;

 private:
  unsigned max_degree_ = 0;
  unsigned max_arity_ = 0;
  RunCap run_cap_;
  bool include_one_ = false;
  std::vector<Integer> cells_;
};

// A: all words; B: bracketed (head and tail both brackets); I: indecomposable
// (outer pair matched); D = B minus I; C: associates (begin or end with x).
enum class WordClass { All, Bracketed, Indecomposable, Decomposable, Associate };
std::string word_class_name(WordClass c);

struct CensusOptions {
  RunCap run_cap = RunCap::at_most(1);
  unsigned max_degree = 0;
  unsigned max_arity = 0;
  bool include_one = false;
  bool keep_words = false;
  std::size_t budget = 10'000'000;
};

struct CensusResult {
  CensusOptions options;
  CountTable all;
  CountTable bracketed;
  CountTable indecomposable;
  CountTable decomposable;
  CountTable associate;
  // Words of class All per (n, m) in canonical order; the empty word is not
  // listed. Filled only when keep_words is set.
  std::map<std::pair<unsigned, unsigned>, std::vector<BracketedWord>> words;

  const CountTable& table(WordClass c) const;
};

// Exhaustive generation of averaging words over {x} with all bracket powers
// 1 and x-runs bounded by the cap, counted by (degree, arity).
CensusResult census(const CensusOptions& options);

// Replaces each maximal letter run by its first letter; the composition
// records the run lengths from left to right.
std::pair<BracketedWord, Composition> collapse_runs(const BracketedWord& w, RunCap cap = RunCap::unbounded());
// Inverse of collapse_runs: the i-th letter becomes a run of parts[i] copies.
BracketedWord expand_runs(const BracketedWord& collapsed, const Composition& runs);

}  // namespace avgalg
