#include <gtest/gtest.h>

#include "avgalg/algebra.hpp"
#include "avgalg/word.hpp"
#include "generators.hpp"

using namespace avgalg;

namespace {

BracketedWord w(const char* text) { return parse_word(text); }

}  // namespace

TEST(ParseWord, LetterThenBracket) {
  const BracketedWord v = w("x[x]");
  ASSERT_EQ(v.breadth(), 2u);
  EXPECT_TRUE(v.factors()[0].is_letter());
  EXPECT_EQ(v.factors()[0].symbol(), "x");
  ASSERT_TRUE(v.factors()[1].is_bracket());
  EXPECT_EQ(v.factors()[1].power(), 1u);
  EXPECT_EQ(v.factors()[1].core(), BracketedWord::letter("x"));
}

TEST(ParseWord, PoweredBracket) {
  const BracketedWord v = w("[x[x]]^2");
  ASSERT_EQ(v.breadth(), 1u);
  EXPECT_EQ(v.front().power(), 2u);
  EXPECT_EQ(v.front().core(), w("x[x]"));
}

TEST(ParseWord, NestedBracketsMergeIntoPower) {
  const BracketedWord v = w("[[x]]");
  ASSERT_EQ(v.breadth(), 1u);
  EXPECT_EQ(v.front().power(), 2u);
  EXPECT_EQ(v.front().core(), BracketedWord::letter("x"));
  EXPECT_EQ(w("[[x]^2]^3"), w("[x]^5"));
}

TEST(ParseWord, WhitespaceAndIdentifiers) {
  const BracketedWord v = w("  alpha [ beta_2 ] gamma ");
  ASSERT_EQ(v.breadth(), 3u);
  EXPECT_EQ(v.factors()[0].symbol(), "alpha");
  EXPECT_EQ(v.factors()[1].core().front().symbol(), "beta_2");
  EXPECT_EQ(v.arity(), 3u);
  // Adjacent identifiers need a separator.
  EXPECT_EQ(w("xy").breadth(), 1u);
  EXPECT_EQ(w("x y").breadth(), 2u);
}

TEST(ParseWord, Errors) {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_THROW(parse_word(""), ParseError);
  EXPECT_THROW(parse_word("   "), ParseError);
  EXPECT_THROW(parse_word("[]"), ParseError);
  EXPECT_THROW(parse_word("[x]^0"), ParseError);
  EXPECT_THROW(parse_word("[x]^"), ParseError);
  EXPECT_THROW(parse_word("[x"), ParseError);
  EXPECT_THROW(parse_word("x]"), ParseError);
  EXPECT_THROW(parse_word("x+y"), ParseError);
  EXPECT_THROW(parse_word("1x"), ParseError);
  EXPECT_EQ(position_of("x]"), 1u);
  EXPECT_EQ(position_of("x [x] $"), 6u);
}

TEST(RenderWord, Examples) {
  EXPECT_EQ(render_word(BracketedWord(Factor::bracket(BracketedWord::letter("x"), 2))), "[x]^2");
  const Factor x = Factor::letter("x");
  const Factor bx = Factor::bracket(BracketedWord(x));
  EXPECT_EQ(render_word(BracketedWord({x, bx, x})), "x[x]x");
  EXPECT_EQ(render_word(BracketedWord(Factor::bracket(BracketedWord({x, bx})))), "[x[x]]");
  EXPECT_EQ(render_word(BracketedWord({x, x})), "x x");
}

TEST(RenderWord, RoundTripOnRandomWords) {
  testgen::Rng rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const BracketedWord v = testgen::random_bracketed_word(rng, {"x", "y", "z1"}, 4);
    const BracketedWord back = parse_word(render_word(v));
    ASSERT_EQ(back, v) << render_word(v);
    ASSERT_EQ(render_word(back), render_word(v));
  }
}

TEST(Analyze, MixedWord) {
  const WordAnalysis a = analyze(w("x[y[x]]x y[y]"));
  EXPECT_EQ(a.depth, 2u);
  EXPECT_EQ(a.breadth, 5u);
  EXPECT_EQ(a.head, 0u);
  EXPECT_EQ(a.tail, 1u);
  ASSERT_EQ(a.block_factors.size(), 4u);
  EXPECT_EQ(std::get<LetterRun>(a.block_factors[0]).letters, std::vector<std::string>{"x"});
  EXPECT_EQ(BracketedWord(std::get<Factor>(a.block_factors[1])), w("[y[x]]"));
  EXPECT_EQ(std::get<LetterRun>(a.block_factors[2]).letters, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(BracketedWord(std::get<Factor>(a.block_factors[3])), w("[y]"));
}

TEST(Analyze, SingleLetterAndLadder) {
  const WordAnalysis a = analyze(w("x"));
  EXPECT_EQ(a.depth, 0u);
  EXPECT_EQ(a.breadth, 1u);
  EXPECT_EQ(a.head, 0u);
  EXPECT_EQ(a.tail, 0u);
  const WordAnalysis l = analyze(w("[x]^3"));
  EXPECT_EQ(l.depth, 3u);
  EXPECT_EQ(l.breadth, 1u);
  EXPECT_EQ(l.head, 1u);
  EXPECT_EQ(l.tail, 1u);
}

TEST(Analyze, Properties) {
  testgen::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const BracketedWord v = testgen::random_bracketed_word(rng, {"x", "y"}, 4);
    const WordAnalysis a = analyze(v);
    ASSERT_GE(a.breadth, 1u);
    ASSERT_EQ(a.breadth, a.standard_factors.size());
    ASSERT_EQ(a.head, a.standard_factors.front().is_bracket() ? 1u : 0u);
    ASSERT_EQ(a.tail, a.standard_factors.back().is_bracket() ? 1u : 0u);
    bool has_bracket = false;
    for (const auto& f : v.factors()) has_bracket |= f.is_bracket();
    ASSERT_EQ(a.depth == 0, !has_bracket);
    for (std::size_t k = 1; k < a.block_factors.size(); ++k)
      ASSERT_FALSE(std::holds_alternative<LetterRun>(a.block_factors[k]) &&
                   std::holds_alternative<LetterRun>(a.block_factors[k - 1]));
  }
}

TEST(Validate, Examples) {
  EXPECT_TRUE(std::holds_alternative<AveragingWord>(validate_averaging(w("[x[x]^2x[x]]"))));
  const auto tail = validate_averaging(w("[x[x]^2]"));
  ASSERT_TRUE(std::holds_alternative<Violation>(tail));
  EXPECT_EQ(std::get<Violation>(tail).pattern, Pattern::PowerTail);
  const auto adjacent = validate_averaging(w("[x][x]"));
  ASSERT_TRUE(std::holds_alternative<Violation>(adjacent));
  EXPECT_EQ(std::get<Violation>(adjacent).pattern, Pattern::AdjacentBrackets);
  EXPECT_EQ(std::get<Violation>(adjacent).path, std::vector<std::size_t>{0});
  const auto headed = validate_averaging(w("[[x]x]"));
  ASSERT_TRUE(std::holds_alternative<Violation>(headed));
  EXPECT_EQ(std::get<Violation>(headed).pattern, Pattern::BracketHeaded);
}

TEST(Validate, LeftmostInnermost) {
  // The inner adjacent pair is reported before the outer one.
  const auto v = find_violation(w("x[x[x][x]][x]"));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->pattern, Pattern::AdjacentBrackets);
  EXPECT_EQ(v->path, (std::vector<std::size_t>{1, 1}));
  // A bracket with power 2 alone is not a power tail.
  EXPECT_TRUE(is_averaging(w("[x]^2")));
  EXPECT_TRUE(is_averaging(w("x[x]^2")));
}

TEST(Validate, ViolationPathAddressesPattern) {
  for (const BracketedWord& v : testgen::all_bracketed_words_up_to(7)) {
    const auto found = find_violation(v);
    if (!found) continue;
    const BracketedWord* level = &v;
    for (std::size_t k = 0; k + 1 < found->path.size(); ++k) level = &level->factors()[found->path[k]].core();
    const auto& fs = level->factors();
    const std::size_t i = found->path.back();
    ASSERT_TRUE(fs[i].is_bracket());
    const BracketedWord& core = fs[i].core();
    switch (found->pattern) {
      case Pattern::AdjacentBrackets: ASSERT_TRUE(i + 1 < fs.size() && fs[i + 1].is_bracket()); break;
      case Pattern::BracketHeaded: ASSERT_TRUE(core.breadth() >= 2 && core.front().is_bracket()); break;
      case Pattern::PowerTail: ASSERT_TRUE(core.breadth() >= 2 && core.back().is_bracket() && core.back().power() >= 2); break;
    }
  }
}

TEST(Validate, GeneratedAveragingWordsValidate) {
  testgen::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const AveragingWord a = testgen::random_averaging_word(rng, {"x", "y"}, 5);
    ASSERT_LE(a.word().depth(), 5u);
    ASSERT_TRUE(std::holds_alternative<AveragingWord>(validate_averaging(a.word()))) << a.text();
  }
}

TEST(Validate, SplitsOfAveragingWordsValidate) {
  for (const BracketedWord& v : testgen::all_bracketed_words_up_to(8)) {
    if (v.depth() > 3 || !is_averaging(v)) continue;
    for (std::size_t k = 1; k < v.breadth(); ++k) {
      ASSERT_TRUE(is_averaging(slice(v, 0, k))) << v.text();
      ASSERT_TRUE(is_averaging(slice(v, k, v.breadth()))) << v.text();
    }
  }
}

TEST(Peel, Examples) {
  const auto [core, power] = peel(AveragingWord::parse("[x[x]]^2"));
  EXPECT_EQ(core.text(), "x[x]");
  EXPECT_EQ(power, 2u);
  const auto [c1, p1] = peel(AveragingWord::parse("[x]"));
  EXPECT_EQ(c1.text(), "x");
  EXPECT_EQ(p1, 1u);
  EXPECT_THROW(peel(AveragingWord::parse("x[x]")), std::invalid_argument);
  EXPECT_THROW(peel(AveragingWord::parse("x")), std::invalid_argument);
}

TEST(Peel, CoreHasHeadZero) {
  testgen::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const AveragingWord a = testgen::random_averaging_word(rng, {"x", "y"}, 4);
    if (a.word().breadth() != 1 || a.word().head() != 1) continue;
    const auto [core, power] = peel(a);
    ASSERT_EQ(core.word().head(), 0u);
    ASSERT_TRUE(is_averaging(core.word()));
    ASSERT_EQ(BracketedWord(Factor::bracket(core.word(), power)), a.word());
  }
}

TEST(Words, DegreeArityAndOrder) {
  const BracketedWord v = w("[x[y]^2]z");
  EXPECT_EQ(v.degree(), 3u);
  EXPECT_EQ(v.arity(), 3u);
  EXPECT_EQ(v.size(), 6u);
  EXPECT_TRUE(CanonicalOrder{}(w("x x"), w("[x]")));
  EXPECT_TRUE(CanonicalOrder{}(w("[x]"), w("x[x]")));
  EXPECT_TRUE(CanonicalOrder{}(w("[x]x"), w("x[x]")));
}

TEST(Words, SubstituteLetter) {
  EXPECT_EQ(substitute_letter(w("x[x]"), 2, w("[x]")), w("x[x]^2"));
  EXPECT_EQ(substitute_letter(w("x[x]"), 1, w("y z")), w("y z[x]"));
  EXPECT_THROW(substitute_letter(w("x[x]"), 3, w("x")), std::out_of_range);
  EXPECT_THROW(substitute_letter(w("x[x]"), 0, w("x")), std::out_of_range);
}
