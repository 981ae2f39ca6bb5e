#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "avgalg/word.hpp"

namespace avgalg {

// Planar reduced tree with ω/ι decorations: an ι-leaf, an ω-leaf, or an
// ω-node with at least two branches where branches 1, 3, 5, ... are ι-leaves
// and branches 2, 4, ... are not.
class SchroederTree {
 public:
  enum class Kind { Iota, Omega, Node };

  static SchroederTree iota();
  static SchroederTree omega();
  // Throws std::invalid_argument if the branch conditions fail.
  static SchroederTree node(std::vector<SchroederTree> branches);

  Kind kind() const { return kind_; }
  const std::vector<SchroederTree>& branches() const { return branches_; }
  // ω-decorated vertices and leaves.
  unsigned omega_count() const { return omega_count_; }
  // Node `w(b1,...,bk)`, ι-leaf `i`, ω-leaf `o`.
  const std::string& text() const { return text_; }

  bool operator==(const SchroederTree& other) const { return text_ == other.text_; }
  bool operator<(const SchroederTree& other) const { return text_ < other.text_; }

 private:
  SchroederTree() = default;
  Kind kind_ = Kind::Omega;
  std::vector<SchroederTree> branches_;
  unsigned omega_count_ = 0;
  std::string text_;
};

// Throws ParseError on malformed text, std::invalid_argument on a tree
// violating the branch conditions.
SchroederTree parse_schroeder_tree(std::string_view text);

// The trees with n ω-decorations, by grafting: for a composition
// (p_1, ..., p_k) of n - 1, branches ι, T_1, ι, ..., ι, T_k with optional
// trailing ι, where T_j ranges over the trees with p_j decorations.
std::vector<SchroederTree> enumerate_schroeder(unsigned n, std::size_t budget = 10'000'000);

// Indecomposable averaging word over {x} with all bracket powers 1
// ⌊w_1 ... w_m⌋: odd w_i = x become ι-leaves, even w_i recurse.
// Throws std::invalid_argument on any other input.
SchroederTree psi(const BracketedWord& w);
// Throws std::invalid_argument on an ι-leaf.
BracketedWord psi_inverse(const SchroederTree& t);

}  // namespace avgalg
