#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "avgalg/word.hpp"

namespace avgalg {

// R1: ⌊u⌋⌊v⌋ -> ⌊u⌊v⌋⌋
// R2: ⌊⌊u⌋v⌋ -> ⌊u⌊v⌋⌋, v nonempty
// R3: ⌊u⌊v⌋^(s)⌋ -> ⌊u⌊v⌋⌋^(s), s >= 2, u nonempty
enum class Strategy { LeftmostInnermost, LeftmostOutermost };

class StepBudgetExceeded : public std::runtime_error {
 public:
  explicit StepBudgetExceeded(std::size_t budget);
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

struct RewriteResult {
  AveragingWord word;
  std::size_t steps;
};

std::size_t default_step_budget(const BracketedWord& w);

// One rule application at the position chosen by the strategy, or nothing
// if w is already an averaging word.
std::optional<BracketedWord> rewrite_step(const BracketedWord& w, Strategy strategy);

// Budget defaults to 10·size².
RewriteResult rewrite_normalize(const BracketedWord& w, Strategy strategy = Strategy::LeftmostInnermost,
                                std::optional<std::size_t> budget = std::nullopt);

AveragingWord rewrite_reduce(const BracketedWord& w, Strategy strategy = Strategy::LeftmostInnermost,
                             std::optional<std::size_t> budget = std::nullopt);

}  // namespace avgalg
