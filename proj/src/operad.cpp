#include "avgalg/operad.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "avgalg/algebra.hpp"

namespace avgalg {

namespace {

using Factors = std::vector<Factor>;

// Appends averaging factors [first, last), merging a bracket-bracket
// junction at the boundary.
void append_diamond(Factors& acc, Factors::const_iterator first, Factors::const_iterator last) {
  if (first == last) return;
  if (!acc.empty() && acc.back().is_bracket() && first->is_bracket()) {
    const BracketedWord merged = diamond(AveragingWord::unchecked(BracketedWord(acc.back())),
                                         AveragingWord::unchecked(BracketedWord(*first)))
                                     .word();
    acc.pop_back();
    acc.insert(acc.end(), merged.factors().begin(), merged.factors().end());
    ++first;
  }
  acc.insert(acc.end(), first, last);
}

// Only the factors on the path to the substituted letter change; the other
// factors are already in normal form and meet the new piece through the
// product.
BracketedWord splice(const BracketedWord& outer, std::size_t index, const BracketedWord& inner) {
  const Factors& fs = outer.factors();
  std::size_t p = 0;
  for (; p < fs.size(); ++p) {
    const std::size_t width = fs[p].is_letter() ? 1 : fs[p].core().arity();
    if (index <= width) break;
    index -= width;
  }
  BracketedWord piece = inner;
  if (fs[p].is_bracket()) {
    const BracketedWord core = splice(fs[p].core(), index, inner);
    const Factor once = apply_p(AveragingWord::unchecked(core)).word().front();
    piece = BracketedWord(fs[p].power() == 1 ? once : once.with_power(once.power() + fs[p].power() - 1));
  }
  Factors acc(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(p));
  acc.reserve(fs.size() + piece.breadth());
  append_diamond(acc, piece.factors().begin(), piece.factors().end());
  append_diamond(acc, fs.begin() + static_cast<std::ptrdiff_t>(p) + 1, fs.end());
  return BracketedWord(std::move(acc));
}

}  // namespace

AveragingWord compose_words(const AveragingWord& outer, std::size_t i, const AveragingWord& inner) {
  if (i < 1 || i > outer.word().arity())
    throw std::out_of_range("composition index " + std::to_string(i) + " outside 1.." +
                            std::to_string(outer.word().arity()));
  return AveragingWord::unchecked(splice(outer.word(), i, inner.word()));
}

AveragingTree compose(const AveragingTree& tau, unsigned i, const AveragingTree& sigma) {
  if (i < 1 || i > tau.arity())
    throw std::out_of_range("composition index " + std::to_string(i) + " outside 1.." + std::to_string(tau.arity()));
  return phi(compose_words(phi_inverse(tau), i, phi_inverse(sigma)));
}

AveragingTree tree_product(const AveragingTree& p, const AveragingTree& q) {
  return phi(diamond(phi_inverse(p), phi_inverse(q)));
}

AveragingTree tree_apply(const AveragingTree& t) { return phi(apply_p(phi_inverse(t))); }

OperadElement::OperadElement(unsigned arity) : arity_(arity) {
  if (arity == 0) throw std::invalid_argument("operad elements have arity at least 1");
}

OperadElement OperadElement::basis(const AveragingTree& t, const Rational& c) {
  OperadElement e(t.arity());
  e.add_term(t, c);
  return e;
}

void OperadElement::add_term(const AveragingTree& t, const Rational& c) {
  if (t.arity() != arity_)
    throw std::invalid_argument("tree of arity " + std::to_string(t.arity()) + " in an element of arity " +
                                std::to_string(arity_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

OperadElement compose(const OperadElement& a, unsigned i, const OperadElement& b) {
  if (i < 1 || i > a.arity())
    throw std::out_of_range("composition index " + std::to_string(i) + " outside 1.." + std::to_string(a.arity()));
  OperadElement out(a.arity() + b.arity() - 1);
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) out.add_term(compose(ta, i, tb), ca * cb);
  return out;
}

std::vector<AveragingTree> averaging_trees(unsigned max_leaves, unsigned max_unis) {
  std::vector<AveragingTree> out;
  for (const BinaryTree& t : enumerate_binary_trees(max_leaves, max_unis))
    if (is_averaging_tree(t)) out.push_back(AveragingTree::unchecked(t));
  std::sort(out.begin(), out.end(), [](const AveragingTree& a, const AveragingTree& b) {
    return std::make_tuple(a.arity(), a.text()) < std::make_tuple(b.arity(), b.text());
  });
  return out;
}

namespace {

// The sweep runs on the words phi_inverse(tree); compose is phi of the word
// composition and phi is injective, so word equality is tree equality.
// Compositions of two family members are precomputed.
struct Sweep {
  const std::vector<AveragingTree>& trees;
  const std::vector<BracketedWord>& words;
  // pair[a][i - 1][b] = words[a] o_i words[b]
  const std::vector<std::vector<std::vector<BracketedWord>>>& pair;
  std::size_t max_failures;
  AxiomReport report;

  static BracketedWord compose_words(const BracketedWord& outer, unsigned i, const BracketedWord& inner) {
    return avgalg::compose_words(AveragingWord::unchecked(outer), i, AveragingWord::unchecked(inner)).word();
  }

  void fail(const std::string& axiom, const std::string& detail) {
    if (report.failures.size() < max_failures) report.failures.push_back({axiom, detail});
  }

  std::string describe(std::size_t a, unsigned i, std::size_t b) const {
    return trees[a].text() + " o_" + std::to_string(i) + " " + trees[b].text();
  }

  static std::string tree_text(const BracketedWord& w) { return phi(AveragingWord::unchecked(w)).text(); }

  void run_outer(std::size_t a) {
    const BracketedWord x = BracketedWord::letter("x");
    const unsigned l = trees[a].arity();
    const std::size_t count = words.size();

    for (unsigned i = 1; i <= l; ++i) {
      ++report.unit_checks;
      const BracketedWord r = compose_words(words[a], i, x);
      if (!(r == words[a])) fail("right unit", trees[a].text() + " o_" + std::to_string(i) + " L = " + tree_text(r));
    }
    ++report.unit_checks;
    if (!(compose_words(x, 1, words[a]) == words[a])) fail("left unit", "L o_1 " + trees[a].text());

    for (std::size_t b = 0; b < count; ++b) {
      const unsigned m = trees[b].arity();
      for (unsigned i = 1; i <= l; ++i) {
        const BracketedWord& lm = pair[a][i - 1][b];
        ++report.arity_checks;
        if (lm.arity() != l + m - 1) fail("arity", describe(a, i, b) + " = " + tree_text(lm));
        for (std::size_t c = 0; c < count; ++c) {
          for (unsigned j = 1; j <= m; ++j) {
            ++report.sequential_checks;
            const BracketedWord lhs = compose_words(lm, i - 1 + j, words[c]);
            const BracketedWord rhs = compose_words(words[a], i, pair[b][j - 1][c]);
            if (!(lhs == rhs))
              fail("sequential", "(" + describe(a, i, b) + ") o_" + std::to_string(i - 1 + j) + " " + trees[c].text() +
                                     " = " + tree_text(lhs) + " but " + trees[a].text() + " o_" + std::to_string(i) +
                                     " (" + describe(b, j, c) + ") = " + tree_text(rhs));
          }
          for (unsigned k = i + 1; k <= l; ++k) {
            ++report.parallel_checks;
            const BracketedWord lhs = compose_words(lm, k - 1 + m, words[c]);
            const BracketedWord rhs = compose_words(pair[a][k - 1][c], i, words[b]);
            if (!(lhs == rhs))
              fail("parallel", "(" + describe(a, i, b) + ") o_" + std::to_string(k - 1 + m) + " " + trees[c].text() +
                                   " = " + tree_text(lhs) + " but (" + describe(a, k, c) + ") o_" +
                                   std::to_string(i) + " " + trees[b].text() + " = " + tree_text(rhs));
          }
        }
      }
    }
  }
};

}  // namespace

AxiomReport check_operad_axioms(const std::vector<AveragingTree>& family, unsigned threads, std::size_t max_failures) {
  const std::size_t count = family.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, count))));

  std::vector<BracketedWord> words;
  words.reserve(count);
  for (const auto& t : family) words.push_back(phi_inverse(t).word());
  std::vector<std::vector<std::vector<BracketedWord>>> pair(count);
  for (std::size_t a = 0; a < count; ++a) {
    pair[a].resize(family[a].arity());
    for (unsigned i = 1; i <= family[a].arity(); ++i)
      for (std::size_t b = 0; b < count; ++b) pair[a][i - 1].push_back(Sweep::compose_words(words[a], i, words[b]));
  }

  std::vector<Sweep> sweeps;
  sweeps.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) sweeps.push_back(Sweep{family, words, pair, max_failures, {}});

  auto work = [&](unsigned t) {
    for (std::size_t k = t; k < count; k += threads) sweeps[t].run_outer(k);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  AxiomReport total;
  total.family_size = count;
  for (const Sweep& s : sweeps) {
    total.unit_checks += s.report.unit_checks;
    total.sequential_checks += s.report.sequential_checks;
    total.parallel_checks += s.report.parallel_checks;
    total.arity_checks += s.report.arity_checks;
    for (const auto& f : s.report.failures)
      if (total.failures.size() < max_failures) total.failures.push_back(f);
  }
  return total;
}

}  // namespace avgalg
