#include "avgalg/rewrite.hpp"

namespace avgalg {

StepBudgetExceeded::StepBudgetExceeded(std::size_t budget)
    : std::runtime_error("rewrite step budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}

namespace {

using Factors = std::vector<Factor>;

// ⌊u⌋^(s) viewed as ⌊u'⌋ with u' = u when s = 1 and u' = ⌊u⌋^(s-1) otherwise.
Factors unwrap_once(const Factor& f) {
  if (f.power() == 1) return f.core().factors();
  return {f.with_power(f.power() - 1)};
}

std::optional<Factor> rule_r1(const Factor& left, const Factor& right) {
  if (!left.is_bracket() || !right.is_bracket()) return std::nullopt;
  Factors content = unwrap_once(left);
  content.push_back(right);
  return Factor::bracket(BracketedWord(std::move(content)), 1);
}

std::optional<Factor> rule_r2(const Factor& f) {
  if (!f.is_bracket()) return std::nullopt;
  const BracketedWord& c = f.core();
  if (c.breadth() < 2 || !c.front().is_bracket()) return std::nullopt;
  Factors content = unwrap_once(c.front());
  content.push_back(Factor::bracket(slice(c, 1, c.breadth()), 1));
  return Factor::bracket(BracketedWord(std::move(content)), f.power());
}

std::optional<Factor> rule_r3(const Factor& f) {
  if (!f.is_bracket()) return std::nullopt;
  const BracketedWord& c = f.core();
  if (c.breadth() < 2 || !c.back().is_bracket() || c.back().power() < 2) return std::nullopt;
  Factors content(c.factors().begin(), c.factors().end() - 1);
  content.push_back(c.back().with_power(1));
  return Factor::bracket(BracketedWord(std::move(content)), c.back().power() + f.power() - 1);
}

std::optional<Factor> rule_at(const Factor& f) {
  if (auto r = rule_r2(f)) return r;
  return rule_r3(f);
}

BracketedWord replace(const BracketedWord& w, std::size_t i, const Factor& f) {
  Factors fs = w.factors();
  fs[i] = f;
  return BracketedWord(std::move(fs));
}

BracketedWord replace_pair(const BracketedWord& w, std::size_t i, const Factor& f) {
  Factors fs = w.factors();
  fs[i] = f;
  fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  return BracketedWord(std::move(fs));
}

std::optional<BracketedWord> step_innermost(const BracketedWord& w) {
  const Factors& fs = w.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_bracket()) continue;
    if (auto core = step_innermost(fs[i].core()))
      return replace(w, i, Factor::bracket(*core, fs[i].power()));
    if (auto r = rule_at(fs[i])) return replace(w, i, *r);
    if (i > 0) {
      if (auto r = rule_r1(fs[i - 1], fs[i])) return replace_pair(w, i - 1, *r);
    }
  }
  return std::nullopt;
}

std::optional<BracketedWord> step_outermost(const BracketedWord& w) {
  const Factors& fs = w.factors();
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    if (auto r = rule_r1(fs[i], fs[i + 1])) return replace_pair(w, i, *r);
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (auto r = rule_at(fs[i])) return replace(w, i, *r);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_bracket()) continue;
    if (auto core = step_outermost(fs[i].core()))
      return replace(w, i, Factor::bracket(*core, fs[i].power()));
  }
  return std::nullopt;
}

}  // namespace

std::size_t default_step_budget(const BracketedWord& w) {
  std::size_t n = w.size();
  return 10 * n * n;
}

std::optional<BracketedWord> rewrite_step(const BracketedWord& w, Strategy strategy) {
  return strategy == Strategy::LeftmostInnermost ? step_innermost(w) : step_outermost(w);
}

RewriteResult rewrite_normalize(const BracketedWord& w, Strategy strategy, std::optional<std::size_t> budget) {
  const std::size_t limit = budget.value_or(default_step_budget(w));
  BracketedWord current = w;
  std::size_t steps = 0;
  while (auto next = rewrite_step(current, strategy)) {
    if (++steps > limit) throw StepBudgetExceeded(limit);
    current = std::move(*next);
  }
  return {AveragingWord::unchecked(current), steps};
}

AveragingWord rewrite_reduce(const BracketedWord& w, Strategy strategy, std::optional<std::size_t> budget) {
  return rewrite_normalize(w, strategy, budget).word;
}

}  // namespace avgalg
