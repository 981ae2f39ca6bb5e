#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace avgalg {

class Factor;

// Nonempty sequence of factors. Immutable; copies share structure.
class BracketedWord {
 public:
  explicit BracketedWord(std::vector<Factor> factors);
  explicit BracketedWord(Factor factor);
  static BracketedWord letter(std::string symbol);

  const std::vector<Factor>& factors() const;
  std::size_t breadth() const;
  const Factor& front() const;
  const Factor& back() const;
  unsigned head() const;
  unsigned tail() const;

  // Bracket pairs counted with powers.
  unsigned degree() const;
  // Number of letter occurrences.
  unsigned arity() const;
  unsigned depth() const;
  unsigned size() const { return degree() + arity(); }
  const std::string& text() const;

  // Structural equality, which coincides with equality of rendered text.
  bool operator==(const BracketedWord& other) const;

 private:
  friend class Factor;
  struct Data;
  BracketedWord() = default;
  std::shared_ptr<const Data> data_;
};

// A letter, or a bracket ⌊core⌋^(power) with power >= 1.
class Factor {
 public:
  static Factor letter(std::string symbol);
  // A core that is itself a single bracket is merged into the power.
  static Factor bracket(const BracketedWord& core, unsigned power = 1);

  bool is_letter() const { return power_ == 0; }
  bool is_bracket() const { return power_ > 0; }
  const std::string& symbol() const;
  const BracketedWord& core() const;
  unsigned power() const { return power_; }
  Factor with_power(unsigned power) const;

  bool operator==(const Factor& other) const;

 private:
  Factor() = default;
  // Interned; equal symbols share one pointer.
  const std::string* symbol_ = nullptr;
  BracketedWord core_;
  unsigned power_ = 0;
};

struct BracketedWord::Data {
  std::vector<Factor> factors;
  unsigned degree = 0;
  unsigned arity = 0;
  unsigned depth = 0;
  // Rendered on first use.
  mutable std::once_flag text_once;
  mutable std::string text;
};

inline const std::vector<Factor>& BracketedWord::factors() const { return data_->factors; }
inline std::size_t BracketedWord::breadth() const { return data_->factors.size(); }
inline const Factor& BracketedWord::front() const { return data_->factors.front(); }
inline const Factor& BracketedWord::back() const { return data_->factors.back(); }
inline unsigned BracketedWord::head() const { return front().is_bracket() ? 1 : 0; }
inline unsigned BracketedWord::tail() const { return back().is_bracket() ? 1 : 0; }
inline unsigned BracketedWord::degree() const { return data_->degree; }
inline unsigned BracketedWord::arity() const { return data_->arity; }
inline unsigned BracketedWord::depth() const { return data_->depth; }

BracketedWord concat(const BracketedWord& u, const BracketedWord& v);
// Factors [first, last) of w; the range must be nonempty.
BracketedWord slice(const BracketedWord& w, std::size_t first, std::size_t last);
// Replaces the index-th letter occurrence (1-based, left to right).
BracketedWord substitute_letter(const BracketedWord& w, std::size_t index,
                                const BracketedWord& replacement);

// Order by (degree, arity, rendered text).
struct CanonicalOrder {
  bool operator()(const BracketedWord& a, const BracketedWord& b) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

BracketedWord parse_word(std::string_view text);
// Adjacent letters are separated by one space; nothing else is emitted
// between factors.
std::string render_word(const BracketedWord& w);

struct LetterRun {
  std::vector<std::string> letters;
  bool operator==(const LetterRun&) const = default;
};
using Block = std::variant<LetterRun, Factor>;

struct WordAnalysis {
  unsigned depth = 0;
  std::size_t breadth = 0;
  unsigned head = 0;
  unsigned tail = 0;
  std::vector<Factor> standard_factors;
  std::vector<Block> block_factors;
};

WordAnalysis analyze(const BracketedWord& w);

enum class Pattern { AdjacentBrackets, BracketHeaded, PowerTail };
std::string pattern_name(Pattern p);

// path[k] indexes a factor at nesting level k; each step except the last
// descends into that bracket's core. AdjacentBrackets addresses the left
// bracket of the pair; the other patterns address the offending bracket.
struct Violation {
  Pattern pattern;
  std::vector<std::size_t> path;
};

class AveragingWord {
 public:
  // Caller guarantees w has no forbidden pattern.
  static AveragingWord unchecked(BracketedWord w) { return AveragingWord(std::move(w)); }
  // Parses and validates; throws ParseError or std::invalid_argument.
  static AveragingWord parse(std::string_view text);
  static AveragingWord letter(std::string symbol);

  const BracketedWord& word() const { return word_; }
  const std::string& text() const { return word_.text(); }
  bool operator==(const AveragingWord& other) const { return word_ == other.word_; }

 private:
  explicit AveragingWord(BracketedWord w) : word_(std::move(w)) {}
  BracketedWord word_;
};

struct AveragingOrder {
  bool operator()(const AveragingWord& a, const AveragingWord& b) const {
    return CanonicalOrder{}(a.word(), b.word());
  }
};

// Leftmost-innermost violation, if any.
std::optional<Violation> find_violation(const BracketedWord& w);
std::variant<AveragingWord, Violation> validate_averaging(const BracketedWord& w);
bool is_averaging(const BracketedWord& w);

// w = ⌊core⌋^(power); throws std::invalid_argument unless breadth 1 and head 1.
std::pair<AveragingWord, unsigned> peel(const AveragingWord& w);

}  // namespace avgalg

template <>
struct std::hash<avgalg::BracketedWord> {
  std::size_t operator()(const avgalg::BracketedWord& w) const noexcept {
    return std::hash<std::string>{}(w.text());
  }
};

template <>
struct std::hash<avgalg::AveragingWord> {
  std::size_t operator()(const avgalg::AveragingWord& w) const noexcept {
    return std::hash<std::string>{}(w.text());
  }
};
