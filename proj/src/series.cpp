#include "avgalg/series.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace avgalg {

BivariateSeries::BivariateSeries(unsigned max_degree, unsigned max_arity)
    : max_degree_(max_degree),
      max_arity_(max_arity),
      cells_(static_cast<std::size_t>(max_degree + 1) * (max_arity + 1)) {}

const Rational& BivariateSeries::at(unsigned n, unsigned m) const {
  if (n > max_degree_ || m > max_arity_) throw std::out_of_range("series index out of range");
  return cells_[static_cast<std::size_t>(n) * (max_arity_ + 1) + m];
}

Rational& BivariateSeries::at(unsigned n, unsigned m) {
  if (n > max_degree_ || m > max_arity_) throw std::out_of_range("series index out of range");
  return cells_[static_cast<std::size_t>(n) * (max_arity_ + 1) + m];
}

std::vector<Rational> BivariateSeries::row(unsigned n) const {
  std::vector<Rational> r(max_arity_ + 1);
  for (unsigned m = 0; m <= max_arity_; ++m) r[m] = at(n, m);
  return r;
}

std::string series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::I: return "I";
    case SeriesKind::B: return "B";
    case SeriesKind::D: return "D";
    case SeriesKind::C: return "C";
    case SeriesKind::A: return "A";
  }
  return "?";
}

SeriesKind parse_series_kind(const std::string& text) {
  if (text == "I") return SeriesKind::I;
  if (text == "B") return SeriesKind::B;
  if (text == "D") return SeriesKind::D;
  if (text == "C") return SeriesKind::C;
  if (text == "A") return SeriesKind::A;
  throw std::invalid_argument("series kind must be one of I, B, D, C, A: '" + text + "'");
}

namespace {

using Poly = std::vector<Rational>;

// Product truncated to the length of a.
Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly shift(const Poly& a, unsigned k) {
  Poly r(a.size());
  for (std::size_t i = 0; i + k < a.size(); ++i) r[i + k] = a[i];
  return r;
}

void add_into(Poly& acc, const Poly& a, const Rational& c = 1) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (a[i] != 0) acc[i] += c * a[i];
}

}  // namespace

BivariateSeries series(SeriesKind kind, unsigned N, unsigned M) {
  const std::size_t len = M + 1;
  std::vector<Poly> I(N + 1, Poly(len));
  std::vector<Poly> B(N + 1, Poly(len));
  for (unsigned n = 1; n <= N; ++n) {
    // I_n = [n = 1] t + (t + t^2) B_{n-1}
    if (n == 1 && len > 1) I[n][1] = 1;
    add_into(I[n], shift(B[n - 1], 1));
    add_into(I[n], shift(B[n - 1], 2));
    // B = I + t I B
    B[n] = I[n];
    for (unsigned k = 1; k < n; ++k) add_into(B[n], shift(multiply(I[k], B[n - k]), 1));
  }

  BivariateSeries out(N, M);
  for (unsigned n = 0; n <= N; ++n) {
    Poly row(len);
    switch (kind) {
      case SeriesKind::I: row = I[n]; break;
      case SeriesKind::B: row = B[n]; break;
      case SeriesKind::D:
        row = B[n];
        add_into(row, I[n], -1);
        break;
      case SeriesKind::C:
      case SeriesKind::A:
        // C = t + 2tB + t^2 B; A = 1 + B + C
        if (n == 0 && len > 1) row[1] = 1;
        add_into(row, shift(B[n], 1), 2);
        add_into(row, shift(B[n], 2));
        if (kind == SeriesKind::A) {
          add_into(row, B[n]);
          if (n == 0) row[0] += 1;
        }
        break;
    }
    for (unsigned m = 0; m <= M; ++m) out.at(n, m) = row[m];
  }
  return out;
}

std::vector<Integer> univariate(SeriesKind kind, unsigned N) {
  // A word of degree n has at most 2n + 1 letters.
  BivariateSeries s = series(kind, N, 2 * N + 1);
  std::vector<Integer> out;
  for (unsigned n = 0; n <= N; ++n) {
    Rational total = 0;
    for (unsigned m = 0; m <= s.max_arity(); ++m) total += s.at(n, m);
    if (total.get_den() != 1) throw std::logic_error("non-integral series coefficient");
    out.push_back(total.get_num());
  }
  return out;
}

Integer schroeder(unsigned n) {
  static std::map<unsigned, Integer> memo;
  static std::mutex guard;
  {
    std::lock_guard<std::mutex> lock(guard);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  Integer value = 1;
  if (n > 0) {
    Integer sum = 0;
    for (unsigned j = 1; j <= n; ++j)
      for (const Composition& c : compositions(n, j, RunCap::unbounded())) {
        Integer prod = 1;
        for (unsigned p : c.parts) prod *= schroeder(p - 1);
        sum += prod;
      }
    value = 2 * sum;
  }
  std::lock_guard<std::mutex> lock(guard);
  memo.emplace(n, value);
  return value;
}

std::vector<Integer> indecomposable_recursion(unsigned N) {
  std::vector<Integer> i(N + 1, 0);
  if (N >= 1) i[1] = 1;
  for (unsigned n = 2; n <= N; ++n) {
    Integer sum = 0;
    for (unsigned j = 1; j <= n - 1; ++j)
      for (const Composition& c : compositions(n - 1, j, RunCap::unbounded())) {
        Integer prod = 1;
        for (unsigned p : c.parts) prod *= i[p];
        sum += prod;
      }
    i[n] = 2 * sum;
  }
  return i;
}

CountTable reduce_to_v1(RunCap v, unsigned N, unsigned M, bool include_one) {
  BivariateSeries a = series(SeriesKind::A, N, M);
  const std::size_t len = M + 1;
  Poly g(len);
  for (unsigned j = 1; j <= M; ++j)
    if (v.allows(j)) g[j] = 1;
  // powers[k] = G(t)^k truncated
  std::vector<Poly> powers(len, Poly(len));
  powers[0][0] = 1;
  for (unsigned k = 1; k <= M; ++k) powers[k] = multiply(powers[k - 1], g);

  CountTable out(N, M, v, include_one);
  for (unsigned n = 0; n <= N; ++n) {
    Poly row(len);
    for (unsigned k = 0; k <= M; ++k)
      if (a.at(n, k) != 0) add_into(row, powers[k], a.at(n, k));
    for (unsigned m = 0; m <= M; ++m) {
      if (row[m].get_den() != 1) throw std::logic_error("non-integral substituted coefficient");
      out.at(n, m) = row[m].get_num();
    }
  }
  if (!include_one) out.at(0, 0) -= 1;
  return out;
}

double closed_form(SeriesKind kind, double z, double t) {
  const double s = std::sqrt(z * z * t * t - (2 * t + 4 * t * t) * z + 1);
  switch (kind) {
    case SeriesKind::I: return (1 - z * t - s) / (2 * t);
    case SeriesKind::B: return (1 - z * t - 2 * z * t * t - s) / (2 * z * t * t * (1 + t));
    case SeriesKind::D:
      return (1 - 2 * z * t - 3 * z * t * t + z * z * t * t + z * z * t * t * t + (z * t + z * t * t - 1) * s) /
             (2 * z * t * t * (1 + t));
    case SeriesKind::C: return (2 + t - 2 * z * t - 3 * z * t * t - (2 + t) * s) / (2 * z * t * (1 + t));
    case SeriesKind::A: return (1 + t) * (1 - z * t - s) / (2 * z * t * t);
  }
  return 0;
}

double truncated_sum(const BivariateSeries& s, double z, double t) {
  long double total = 0;
  for (unsigned n = 0; n <= s.max_degree(); ++n) {
    long double zn = std::pow(static_cast<long double>(z), n);
    for (unsigned m = 0; m <= s.max_arity(); ++m) {
      const Rational& c = s.at(n, m);
      if (c == 0) continue;
      total += static_cast<long double>(c.get_d()) * zn * std::pow(static_cast<long double>(t), m);
    }
  }
  return static_cast<double>(total);
}

}  // namespace avgalg
