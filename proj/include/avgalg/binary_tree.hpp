#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avgalg/word.hpp"

namespace avgalg {

// Planar tree whose vertices have one input (uni-vertex) or two (bi-vertex).
// Text form: `L`, `U(t)`, `B(l,r)`.
class BinaryTree {
 public:
  enum class Kind { Leaf, Uni, Bi };

  static BinaryTree leaf();
  static BinaryTree uni(const BinaryTree& child);
  static BinaryTree bi(const BinaryTree& left, const BinaryTree& right);
  // s uni-vertices stacked on base.
  static BinaryTree ladder(unsigned s, const BinaryTree& base = leaf());

  Kind kind() const;
  bool is_leaf() const { return kind() == Kind::Leaf; }
  const BinaryTree& child() const;
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  unsigned leaf_count() const;
  unsigned uni_count() const;
  // Length of the uni-vertex chain at the root.
  unsigned bracketed_power() const;
  bool is_bracketed() const { return kind() == Kind::Uni; }
  // The tree below the root uni-vertex chain.
  const BinaryTree& unbracketed() const;
  const std::string& text() const;

  bool operator==(const BinaryTree& other) const;
  bool operator<(const BinaryTree& other) const { return text() < other.text(); }

 private:
  struct Node;
  explicit BinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

BinaryTree parse_binary_tree(std::string_view text);

// Replace the right subtree of every bi-vertex by a leaf.
BinaryTree left_factor(const BinaryTree& t);
// A bracketed tree with one leaf.
bool is_ladder(const BinaryTree& t);
// Every bi-vertex has a leaf as right subtree, and among t and the left
// subtrees of all bi-vertices at most one is bracketed.
bool is_left_factor_tree(const BinaryTree& t);
// t = U^s(B(l, r)) with s >= 1, left_factor(t) a left factor tree, and
// bracketed_power(r) <= 1.
bool is_fat(const BinaryTree& t);
// (a) every bracketed subtree is a ladder or fat; (b) at every bi-vertex the
// right subtree is a leaf, or it is bracketed and the left subtree is a leaf
// or a bi-vertex whose right subtree is a leaf.
bool is_averaging_tree(const BinaryTree& t);

class AveragingTree {
 public:
  // Throws std::invalid_argument if t fails is_averaging_tree.
  explicit AveragingTree(BinaryTree t);
  static AveragingTree unchecked(BinaryTree t);
  static AveragingTree identity() { return unchecked(BinaryTree::leaf()); }

  const BinaryTree& tree() const { return tree_; }
  unsigned arity() const { return tree_.leaf_count(); }
  const std::string& text() const { return tree_.text(); }
  bool operator==(const AveragingTree& other) const { return tree_ == other.tree_; }
  bool operator<(const AveragingTree& other) const { return tree_ < other.tree_; }

 private:
  struct Unchecked {};
  AveragingTree(BinaryTree t, Unchecked) : tree_(std::move(t)) {}
  BinaryTree tree_;
};

// All trees with 1..max_leaves leaves and 0..max_unis uni-vertices.
std::vector<BinaryTree> enumerate_binary_trees(unsigned max_leaves, unsigned max_unis);

// x -> L, ⌊u⌋^(s) -> U^s(phi(u)), w_1...w_m -> B(phi(w_1...w_{m-1}), phi(w_m)).
// Throws std::invalid_argument for letters other than x.
AveragingTree phi(const AveragingWord& w);
// L -> x, U^s(L) -> ⌊x⌋^(s), U^s(B(l, r)) -> ⌊Phi(l) Phi(r)⌋^(s).
AveragingWord phi_inverse(const AveragingTree& t);

}  // namespace avgalg
