#include "avgalg/binary_tree.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace avgalg {

struct BinaryTree::Node {
  Kind kind;
  std::optional<BinaryTree> first;
  std::optional<BinaryTree> second;
  unsigned leaves = 1;
  unsigned unis = 0;
  unsigned power = 0;
  std::string text;
};

BinaryTree BinaryTree::leaf() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->text = "L";
    return n;
  }();
  return BinaryTree(node);
}

BinaryTree BinaryTree::uni(const BinaryTree& child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Uni;
  n->first = child;
  n->leaves = child.leaf_count();
  n->unis = child.uni_count() + 1;
  n->power = child.bracketed_power() + 1;
  n->text = "U(" + child.text() + ")";
  return BinaryTree(std::move(n));
}

BinaryTree BinaryTree::bi(const BinaryTree& left, const BinaryTree& right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bi;
  n->first = left;
  n->second = right;
  n->leaves = left.leaf_count() + right.leaf_count();
  n->unis = left.uni_count() + right.uni_count();
  n->text = "B(" + left.text() + "," + right.text() + ")";
  return BinaryTree(std::move(n));
}

BinaryTree BinaryTree::ladder(unsigned s, const BinaryTree& base) {
  BinaryTree t = base;
  for (unsigned i = 0; i < s; ++i) t = uni(t);
  return t;
}

BinaryTree::Kind BinaryTree::kind() const { return node_->kind; }

const BinaryTree& BinaryTree::child() const {
  if (kind() != Kind::Uni) throw std::logic_error("child() on a non-uni vertex");
  return *node_->first;
}

const BinaryTree& BinaryTree::left() const {
  if (kind() != Kind::Bi) throw std::logic_error("left() on a non-bi vertex");
  return *node_->first;
}

const BinaryTree& BinaryTree::right() const {
  if (kind() != Kind::Bi) throw std::logic_error("right() on a non-bi vertex");
  return *node_->second;
}

unsigned BinaryTree::leaf_count() const { return node_->leaves; }
unsigned BinaryTree::uni_count() const { return node_->unis; }
unsigned BinaryTree::bracketed_power() const { return node_->power; }
const std::string& BinaryTree::text() const { return node_->text; }

const BinaryTree& BinaryTree::unbracketed() const {
  const BinaryTree* t = this;
  while (t->kind() == Kind::Uni) t = &t->child();
  return *t;
}

bool BinaryTree::operator==(const BinaryTree& other) const {
  return node_ == other.node_ || node_->text == other.node_->text;
}

namespace {

class BinaryTreeParser {
 public:
  explicit BinaryTreeParser(std::string_view text) : text_(text) {}

  BinaryTree parse_all() {
    BinaryTree t = parse();
    skip();
    if (pos_ < text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  BinaryTree parse() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of tree", pos_);
    char c = text_[pos_++];
    if (c == 'L') return BinaryTree::leaf();
    if (c == 'U') {
      expect('(');
      BinaryTree child = parse();
      expect(')');
      return BinaryTree::uni(child);
    }
    if (c == 'B') {
      expect('(');
      BinaryTree l = parse();
      expect(',');
      BinaryTree r = parse();
      expect(')');
      return BinaryTree::bi(l, r);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BinaryTree parse_binary_tree(std::string_view text) { return BinaryTreeParser(text).parse_all(); }

BinaryTree left_factor(const BinaryTree& t) {
  switch (t.kind()) {
    case BinaryTree::Kind::Leaf: return t;
    case BinaryTree::Kind::Uni: return BinaryTree::uni(left_factor(t.child()));
    case BinaryTree::Kind::Bi: return BinaryTree::bi(left_factor(t.left()), BinaryTree::leaf());
  }
  return t;
}

bool is_ladder(const BinaryTree& t) { return t.is_bracketed() && t.leaf_count() == 1; }

namespace {

void for_each_vertex(const BinaryTree& t, const std::function<void(const BinaryTree&)>& f) {
  f(t);
  switch (t.kind()) {
    case BinaryTree::Kind::Leaf: break;
    case BinaryTree::Kind::Uni: for_each_vertex(t.child(), f); break;
    case BinaryTree::Kind::Bi:
      for_each_vertex(t.left(), f);
      for_each_vertex(t.right(), f);
      break;
  }
}

}  // namespace

bool is_left_factor_tree(const BinaryTree& t) {
  bool right_leaves = true;
  unsigned bracketed = t.is_bracketed() ? 1 : 0;
  for_each_vertex(t, [&](const BinaryTree& v) {
    if (v.kind() != BinaryTree::Kind::Bi) return;
    if (!v.right().is_leaf()) right_leaves = false;
    if (v.left().is_bracketed()) ++bracketed;
  });
  return right_leaves && bracketed <= 1;
}

bool is_fat(const BinaryTree& t) {
  if (!t.is_bracketed() || t.leaf_count() < 2) return false;
  const BinaryTree& body = t.unbracketed();
  return is_left_factor_tree(left_factor(t)) && body.right().bracketed_power() <= 1;
}

bool is_averaging_tree(const BinaryTree& t) {
  bool ok = true;
  for_each_vertex(t, [&](const BinaryTree& v) {
    if (!ok) return;
    if (v.is_bracketed() && !is_ladder(v) && !is_fat(v)) ok = false;
    if (v.kind() == BinaryTree::Kind::Bi) {
      const BinaryTree& l = v.left();
      const BinaryTree& r = v.right();
      if (r.is_leaf()) return;
      const bool left_ok = l.is_leaf() || (l.kind() == BinaryTree::Kind::Bi && l.right().is_leaf());
      if (!r.is_bracketed() || !left_ok) ok = false;
    }
  });
  return ok;
}

AveragingTree::AveragingTree(BinaryTree t) : tree_(std::move(t)) {
  if (!is_averaging_tree(tree_)) throw std::invalid_argument("not an averaging tree: " + tree_.text());
}

AveragingTree AveragingTree::unchecked(BinaryTree t) { return AveragingTree(std::move(t), Unchecked{}); }

std::vector<BinaryTree> enumerate_binary_trees(unsigned max_leaves, unsigned max_unis) {
  std::map<std::pair<unsigned, unsigned>, std::vector<BinaryTree>> memo;
  std::function<const std::vector<BinaryTree>&(unsigned, unsigned)> exact =
      [&](unsigned l, unsigned u) -> const std::vector<BinaryTree>& {
    auto it = memo.find({l, u});
    if (it != memo.end()) return it->second;
    std::vector<BinaryTree> out;
    if (l == 1 && u == 0) out.push_back(BinaryTree::leaf());
    if (u >= 1)
      for (const auto& c : exact(l, u - 1)) out.push_back(BinaryTree::uni(c));
    for (unsigned l1 = 1; l1 < l; ++l1)
      for (unsigned u1 = 0; u1 <= u; ++u1) {
        const auto& lefts = exact(l1, u1);
        const auto& rights = exact(l - l1, u - u1);
        for (const auto& a : lefts)
          for (const auto& b : rights) out.push_back(BinaryTree::bi(a, b));
      }
    return memo.emplace(std::make_pair(l, u), std::move(out)).first->second;
  };
  std::vector<BinaryTree> all;
  for (unsigned l = 1; l <= max_leaves; ++l)
    for (unsigned u = 0; u <= max_unis; ++u) {
      const auto& part = exact(l, u);
      all.insert(all.end(), part.begin(), part.end());
    }
  return all;
}

namespace {

BinaryTree phi_word(const BracketedWord& w) {
  const auto& fs = w.factors();
  if (fs.size() >= 2) return BinaryTree::bi(phi_word(slice(w, 0, fs.size() - 1)), phi_word(slice(w, fs.size() - 1, fs.size())));
  const Factor& f = fs.front();
  if (f.is_letter()) {
    if (f.symbol() != "x") throw std::invalid_argument("trees encode words over the single letter x, found '" + f.symbol() + "'");
    return BinaryTree::leaf();
  }
  return BinaryTree::ladder(f.power(), phi_word(f.core()));
}

BracketedWord phi_inverse_tree(const BinaryTree& t) {
  const unsigned s = t.bracketed_power();
  const BinaryTree& body = t.unbracketed();
  BracketedWord inner = body.is_leaf() ? BracketedWord::letter("x")
                                       : concat(phi_inverse_tree(body.left()), phi_inverse_tree(body.right()));
  if (s == 0) return inner;
  return BracketedWord(Factor::bracket(inner, s));
}

}  // namespace

AveragingTree phi(const AveragingWord& w) { return AveragingTree::unchecked(phi_word(w.word())); }

AveragingWord phi_inverse(const AveragingTree& t) { return AveragingWord::unchecked(phi_inverse_tree(t.tree())); }

}  // namespace avgalg
