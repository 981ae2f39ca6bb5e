#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "avgalg/binary_tree.hpp"
#include "avgalg/rational.hpp"

namespace avgalg {

// reduce(substitute_letter(outer, i, inner)) for averaging words, computed
// by re-normalizing only along the path to the i-th letter. Throws
// std::out_of_range unless 1 <= i <= arity of outer.
AveragingWord compose_words(const AveragingWord& outer, std::size_t i, const AveragingWord& inner);

// Partial composition: the i-th x (1-based, from the left) of
// phi_inverse(tau) is replaced by phi_inverse(sigma), then the result is
// reduced and mapped back by phi. Throws std::out_of_range unless
// 1 <= i <= tau.arity().
AveragingTree compose(const AveragingTree& tau, unsigned i, const AveragingTree& sigma);

// Transported product and operator of the free averaging algebra on {x}.
AveragingTree tree_product(const AveragingTree& p, const AveragingTree& q);
AveragingTree tree_apply(const AveragingTree& t);

// Rational combination of averaging trees of one arity.
class OperadElement {
 public:
  using Terms = std::map<AveragingTree, Rational>;

  explicit OperadElement(unsigned arity);
  static OperadElement basis(const AveragingTree& t, const Rational& c = 1);

  unsigned arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  // Throws std::invalid_argument if t has a different arity.
  void add_term(const AveragingTree& t, const Rational& c);
  bool operator==(const OperadElement& other) const = default;

 private:
  unsigned arity_;
  Terms terms_;
};

// Bilinear extension of compose.
OperadElement compose(const OperadElement& a, unsigned i, const OperadElement& b);

// All averaging trees with at most max_leaves leaves and max_unis
// uni-vertices, ordered by (arity, text).
std::vector<AveragingTree> averaging_trees(unsigned max_leaves, unsigned max_unis);

struct AxiomFailure {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  std::size_t family_size = 0;
  std::size_t unit_checks = 0;
  std::size_t sequential_checks = 0;
  std::size_t parallel_checks = 0;
  std::size_t arity_checks = 0;
  std::vector<AxiomFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Unit, sequential and parallel axioms plus arity bookkeeping over every
// triple drawn from family. Failures are capped at max_failures.
AxiomReport check_operad_axioms(const std::vector<AveragingTree>& family, unsigned threads = 1,
                                std::size_t max_failures = 20);

}  // namespace avgalg
