#pragma once

#include <string>
#include <vector>

#include "avgalg/enumeration.hpp"
#include "avgalg/rational.hpp"

namespace avgalg {

// Coefficients [z^n t^m] for 0 <= n <= N, 0 <= m <= M.
class BivariateSeries {
 public:
  BivariateSeries(unsigned max_degree, unsigned max_arity);

  unsigned max_degree() const { return max_degree_; }
  unsigned max_arity() const { return max_arity_; }
  const Rational& at(unsigned n, unsigned m) const;
  Rational& at(unsigned n, unsigned m);
  // Row n as a polynomial in t.
  std::vector<Rational> row(unsigned n) const;
  bool operator==(const BivariateSeries& other) const = default;

 private:
  unsigned max_degree_;
  unsigned max_arity_;
  std::vector<Rational> cells_;
};

enum class SeriesKind { I, B, D, C, A };
std::string series_kind_name(SeriesKind k);
SeriesKind parse_series_kind(const std::string& text);

// Exact coefficients from the functional equations
//   I - zt = zt(1+t) B,  B = I / (1 - tI),  D = B - I,
//   C = t + 2tB + t^2 B,  A = 1 + B + C,
// solved degree by degree in z.
BivariateSeries series(SeriesKind kind, unsigned N, unsigned M);

// Row sums at t = 1 for degrees 0..N (no arity truncation).
std::vector<Integer> univariate(SeriesKind kind, unsigned N);

// Large Schröder number s_n from the composition recursion
// s_n = 2 sum_j sum_{(p_1..p_j) in G(n,j)} s_{p_1 - 1} ... s_{p_j - 1}.
Integer schroeder(unsigned n);

// i_1 = 1, i_n = 2 sum_j sum_{(p_1..p_j) in G(n-1,j)} i_{p_1} ... i_{p_j};
// entry n of the result is i_n, with i_0 = 0.
std::vector<Integer> indecomposable_recursion(unsigned N);

// Coefficients of A_1(z, G(t)) with G(t) = t + ... + t^v (t/(1-t) when
// unbounded): counts of averaging words with x-runs bounded by v.
CountTable reduce_to_v1(RunCap v, unsigned N, unsigned M, bool include_one = true);

// Radical closed forms evaluated in double precision. For A this is the
// "double" form (1+t)(1 - zt - S)/(2zt^2), S = sqrt(z^2t^2 - (2t+4t^2)z + 1).
double closed_form(SeriesKind kind, double z, double t);

// sum_{n,m} [z^n t^m] z^n t^m over the truncation.
double truncated_sum(const BivariateSeries& s, double z, double t);

}  // namespace avgalg
