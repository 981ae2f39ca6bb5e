#pragma once

#include "avgalg/word.hpp"

namespace avgalg {

// Product of the free averaging algebra on basis words.
AveragingWord diamond(const AveragingWord& u, const AveragingWord& v);

// The operator of the free averaging algebra on basis words.
AveragingWord apply_p(const AveragingWord& u);
AveragingWord apply_p_power(const AveragingWord& u, unsigned times);

// Normal form of w: concatenation read as diamond, brackets as apply_p.
AveragingWord reduce(const BracketedWord& w);

}  // namespace avgalg
