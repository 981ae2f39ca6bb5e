#include "avgalg/algebra.hpp"

namespace avgalg {

namespace {

using Factors = std::vector<Factor>;

BracketedWord diamond_words(const BracketedWord& u, const BracketedWord& v);

// ⌊a⌋^(s) ⋄ ⌊b⌋^(t) = ⌊a ⋄ ⌊b⌋⌋^(s+t-1)
Factor junction(const Factor& left, const Factor& right) {
  BracketedWord inner = diamond_words(left.core(), BracketedWord(Factor::bracket(right.core(), 1)));
  return Factor::bracket(inner, left.power() + right.power() - 1);
}

BracketedWord diamond_words(const BracketedWord& u, const BracketedWord& v) {
  if (!u.back().is_bracket() || !v.front().is_bracket()) return concat(u, v);
  Factors out(u.factors().begin(), u.factors().end() - 1);
  out.push_back(junction(u.back(), v.front()));
  out.insert(out.end(), v.factors().begin() + 1, v.factors().end());
  return BracketedWord(std::move(out));
}

}  // namespace

AveragingWord diamond(const AveragingWord& u, const AveragingWord& v) {
  return AveragingWord::unchecked(diamond_words(u.word(), v.word()));
}

AveragingWord apply_p(const AveragingWord& u) {
  const BracketedWord& w = u.word();
  const std::size_t b = w.breadth();
  const unsigned h = w.head();
  const unsigned t = w.tail();

  if ((b == 1 && h == 1) || (h == 0 && (t == 0 || w.back().power() == 1)))
    return AveragingWord::unchecked(BracketedWord(Factor::bracket(w, 1)));

  if (h == 0) {
    // u = u1' ⌊u2'⌋^(s), s >= 2  ->  ⌊u1' ⌊u2'⌋⌋^(s)
    Factors body(w.factors().begin(), w.factors().end() - 1);
    body.push_back(w.back().with_power(1));
    return AveragingWord::unchecked(BracketedWord(Factor::bracket(BracketedWord(body), w.back().power())));
  }

  const Factor& first = w.front();
  if (t == 0) {
    // u = ⌊u1⌋^(s) u2  ->  ⌊u1 ⋄ ⌊u2⌋⌋^(s)
    BracketedWord rest = slice(w, 1, b);
    AveragingWord inner = diamond(AveragingWord::unchecked(first.core()),
                                  AveragingWord::unchecked(BracketedWord(Factor::bracket(rest, 1))));
    return AveragingWord::unchecked(BracketedWord(Factor::bracket(inner.word(), first.power())));
  }

  // u = ⌊u1⌋^(s) u2 ⌊u3⌋^(t)  ->  ⌊u1 ⋄ ⌊u2 ⌊u3⌋⌋⌋^(s+t-1)
  const Factor& last = w.back();
  Factors middle(w.factors().begin() + 1, w.factors().end() - 1);
  middle.push_back(last.with_power(1));
  AveragingWord inner =
      diamond(AveragingWord::unchecked(first.core()),
              AveragingWord::unchecked(BracketedWord(Factor::bracket(BracketedWord(middle), 1))));
  return AveragingWord::unchecked(
      BracketedWord(Factor::bracket(inner.word(), first.power() + last.power() - 1)));
}

AveragingWord apply_p_power(const AveragingWord& u, unsigned times) {
  AveragingWord r = u;
  for (unsigned i = 0; i < times; ++i) r = apply_p(r);
  return r;
}

namespace {

// Appends an averaging factor to acc, merging at a bracket-bracket junction.
// Returns true when a merge happened.
bool diamond_into(Factors& acc, const Factor& piece) {
  if (!acc.empty() && acc.back().is_bracket() && piece.is_bracket()) {
    acc.back() = junction(acc.back(), piece);
    return true;
  }
  acc.push_back(piece);
  return false;
}

// P(c) falls in the first case of the dispatch: plain bracketing.
bool brackets_plainly(const BracketedWord& c) {
  if (c.breadth() == 1) return true;
  return c.head() == 0 && (c.tail() == 0 || c.back().power() == 1);
}

BracketedWord reduce_rec(const BracketedWord& w, bool& changed) {
  Factors acc;
  acc.reserve(w.breadth());
  changed = false;
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      acc.push_back(f);
      continue;
    }
    bool core_changed = false;
    BracketedWord core = reduce_rec(f.core(), core_changed);
    Factor piece = f;
    if (core_changed || !brackets_plainly(core)) {
      // ⌊c⌋^(p) with c averaging: one application of P, then each further
      // application raises the power of the resulting single bracket.
      const Factor once = apply_p(AveragingWord::unchecked(core)).word().front();
      piece = f.power() == 1 ? once : once.with_power(once.power() + f.power() - 1);
      changed = true;
    }
    if (diamond_into(acc, piece)) changed = true;
  }
  if (!changed) return w;
  return BracketedWord(std::move(acc));
}

}  // namespace

AveragingWord reduce(const BracketedWord& w) {
  bool changed = false;
  return AveragingWord::unchecked(reduce_rec(w, changed));
}

}  // namespace avgalg
