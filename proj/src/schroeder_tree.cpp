#include "avgalg/schroeder_tree.hpp"

#include <cctype>
#include <map>

#include "avgalg/enumeration.hpp"

namespace avgalg {

SchroederTree SchroederTree::iota() {
  SchroederTree t;
  t.kind_ = Kind::Iota;
  t.text_ = "i";
  return t;
}

SchroederTree SchroederTree::omega() {
  SchroederTree t;
  t.kind_ = Kind::Omega;
  t.omega_count_ = 1;
  t.text_ = "o";
  return t;
}

SchroederTree SchroederTree::node(std::vector<SchroederTree> branches) {
  if (branches.size() < 2) throw std::invalid_argument("a Schröder node needs at least two branches");
  SchroederTree t;
  t.kind_ = Kind::Node;
  t.omega_count_ = 1;
  t.text_ = "w(";
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const bool odd_position = i % 2 == 0;
    const bool is_iota = branches[i].kind() == Kind::Iota;
    if (odd_position && !is_iota)
      throw std::invalid_argument("branch " + std::to_string(i + 1) + " must be an ι-leaf");
    if (!odd_position && is_iota)
      throw std::invalid_argument("branch " + std::to_string(i + 1) + " must not be an ι-leaf");
    t.omega_count_ += branches[i].omega_count();
    if (i > 0) t.text_ += ',';
    t.text_ += branches[i].text();
  }
  t.text_ += ')';
  t.branches_ = std::move(branches);
  return t;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  SchroederTree parse_all() {
    SchroederTree t = parse();
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

  SchroederTree parse() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of tree", pos_);
    char c = text_[pos_++];
    if (c == 'i') return SchroederTree::iota();
    if (c == 'o') return SchroederTree::omega();
    if (c != 'w') throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
    expect('(');
    std::vector<SchroederTree> branches{parse()};
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        branches.push_back(parse());
        continue;
      }
      expect(')');
      break;
    }
    return SchroederTree::node(std::move(branches));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SchroederTree parse_schroeder_tree(std::string_view text) { return TreeParser(text).parse_all(); }

namespace {

class SchroederEnumerator {
 public:
  explicit SchroederEnumerator(std::size_t budget) : budget_(budget) {}

  const std::vector<SchroederTree>& trees(unsigned n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    std::vector<SchroederTree> out;
    if (n == 1) {
      emit(out, SchroederTree::omega());
    } else {
      for (unsigned k = 1; k <= n - 1; ++k)
        for (const Composition& c : compositions(n - 1, k, RunCap::unbounded())) {
          std::vector<SchroederTree> chosen;
          graft(c.parts, 0, chosen, out);
        }
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  void graft(const std::vector<unsigned>& parts, std::size_t j, std::vector<SchroederTree>& chosen,
             std::vector<SchroederTree>& out) {
    if (j == parts.size()) {
      std::vector<SchroederTree> branches;
      for (const auto& t : chosen) {
        branches.push_back(SchroederTree::iota());
        branches.push_back(t);
      }
      emit(out, SchroederTree::node(branches));
      branches.push_back(SchroederTree::iota());
      emit(out, SchroederTree::node(std::move(branches)));
      return;
    }
    for (const auto& t : trees(parts[j])) {
      chosen.push_back(t);
      graft(parts, j + 1, chosen, out);
      chosen.pop_back();
    }
  }

  void emit(std::vector<SchroederTree>& out, SchroederTree t) {
    if (++generated_ > budget_) throw BudgetExceeded("Schröder tree enumeration", budget_);
    out.push_back(std::move(t));
  }

  std::size_t budget_;
  std::size_t generated_ = 0;
  std::map<unsigned, std::vector<SchroederTree>> memo_;
};

}  // namespace

std::vector<SchroederTree> enumerate_schroeder(unsigned n, std::size_t budget) {
  if (n == 0) throw std::invalid_argument("Schröder trees need n >= 1");
  SchroederEnumerator e(budget);
  return e.trees(n);
}

namespace {

[[noreturn]] void reject(const BracketedWord& w, const std::string& why) {
  throw std::invalid_argument("not an indecomposable word of the idempotent census (" + why + "): " + w.text());
}

SchroederTree psi_rec(const BracketedWord& w, const BracketedWord& whole) {
  if (w.breadth() != 1 || !w.front().is_bracket()) reject(whole, "expected a single bracket");
  if (w.front().power() != 1) reject(whole, "bracket power above 1");
  const BracketedWord& content = w.front().core();
  const auto& fs = content.factors();
  if (fs.size() == 1) {
    if (!fs[0].is_letter() || fs[0].symbol() != "x") reject(whole, "content must start with x");
    return SchroederTree::omega();
  }
  std::vector<SchroederTree> branches;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i % 2 == 0) {
      if (!fs[i].is_letter() || fs[i].symbol() != "x") reject(whole, "odd factors must be x");
      branches.push_back(SchroederTree::iota());
    } else {
      if (!fs[i].is_bracket()) reject(whole, "even factors must be brackets");
      branches.push_back(psi_rec(BracketedWord(fs[i]), whole));
    }
  }
  return SchroederTree::node(std::move(branches));
}

}  // namespace

SchroederTree psi(const BracketedWord& w) { return psi_rec(w, w); }

BracketedWord psi_inverse(const SchroederTree& t) {
  const BracketedWord x = BracketedWord::letter("x");
  switch (t.kind()) {
    case SchroederTree::Kind::Iota: throw std::invalid_argument("an ι-leaf has no word");
    case SchroederTree::Kind::Omega: return BracketedWord(Factor::bracket(x, 1));
    case SchroederTree::Kind::Node: break;
  }
  std::vector<Factor> content;
  for (const auto& b : t.branches()) {
    if (b.kind() == SchroederTree::Kind::Iota)
      content.push_back(Factor::letter("x"));
    else
      content.push_back(psi_inverse(b).front());
  }
  return BracketedWord(Factor::bracket(BracketedWord(std::move(content)), 1));
}

}  // namespace avgalg
