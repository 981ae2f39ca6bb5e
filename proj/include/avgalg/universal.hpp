#pragma once

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>

#include "avgalg/algebra.hpp"
#include "avgalg/lincomb.hpp"

namespace avgalg {

// Target of the universal map: a (nonunital) algebra over the rationals with
// a linear operator satisfying P(x)P(y) = P(xP(y)) = P(P(x)y).
template <class A>
concept AveragingAlgebraInterface =
    requires(const A& a, const typename A::Element& x, const Rational& c) {
      { a.zero() } -> std::convertible_to<typename A::Element>;
      { a.add(x, x) } -> std::convertible_to<typename A::Element>;
      { a.scale(c, x) } -> std::convertible_to<typename A::Element>;
      { a.multiply(x, x) } -> std::convertible_to<typename A::Element>;
      { a.apply(x) } -> std::convertible_to<typename A::Element>;
      { a.equal(x, x) } -> std::convertible_to<bool>;
    };

template <class A>
using Assignment = std::map<std::string, typename A::Element>;

// Product over the standard factors; a letter maps through the assignment
// and ⌊u⌋^(s) maps to Q^s applied to the image of u.
template <AveragingAlgebraInterface A>
typename A::Element evaluate_word(const A& target, const Assignment<A>& assignment, const BracketedWord& w) {
  std::optional<typename A::Element> acc;
  for (const Factor& f : w.factors()) {
    typename A::Element piece = [&] {
      if (f.is_letter()) {
        auto it = assignment.find(f.symbol());
        if (it == assignment.end()) throw std::out_of_range("unmapped letter '" + f.symbol() + "'");
        return it->second;
      }
      typename A::Element inner = evaluate_word(target, assignment, f.core());
      for (unsigned i = 0; i < f.power(); ++i) inner = target.apply(inner);
      return inner;
    }();
    acc = acc ? target.multiply(*acc, piece) : piece;
  }
  return *acc;
}

template <AveragingAlgebraInterface A>
typename A::Element universal_map(const A& target, const Assignment<A>& assignment, const LinearCombination& v) {
  typename A::Element sum = target.zero();
  for (const auto& [w, c] : v.terms())
    sum = target.add(sum, target.scale(c, evaluate_word(target, assignment, w.word())));
  return sum;
}

// The free averaging algebra itself as a target.
struct FreeAveragingAlgebra {
  using Element = LinearCombination;
  Element zero() const { return {}; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Rational& c, const Element& a) const { return avgalg::scale(c, a); }
  Element multiply(const Element& a, const Element& b) const { return product(a, b); }
  Element apply(const Element& a) const { return apply_p(a); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
};

}  // namespace avgalg
