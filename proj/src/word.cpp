#include "avgalg/word.hpp"

#include <cctype>
#include <tuple>
#include <unordered_set>

namespace avgalg {

namespace {

constexpr unsigned kMaxPower = 1000000;

const std::string* intern(std::string symbol) {
  static std::mutex guard;
  static std::unordered_set<std::string> table;
  std::lock_guard<std::mutex> lock(guard);
  return &*table.insert(std::move(symbol)).first;
}

}  // namespace

Factor Factor::letter(std::string symbol) {
  if (symbol.empty()) throw std::invalid_argument("empty letter");
  Factor f;
  f.symbol_ = intern(std::move(symbol));
  return f;
}

Factor Factor::bracket(const BracketedWord& core, unsigned power) {
  if (power == 0) throw std::invalid_argument("bracket power must be positive");
  if (core.breadth() == 1 && core.front().is_bracket()) {
    const Factor& inner = core.front();
    return Factor::bracket(inner.core(), inner.power() + power);
  }
  Factor f;
  f.core_ = core;
  f.power_ = power;
  return f;
}

const std::string& Factor::symbol() const {
  if (!is_letter()) throw std::logic_error("symbol() on a bracket factor");
  return *symbol_;
}

const BracketedWord& Factor::core() const {
  if (!is_bracket()) throw std::logic_error("core() on a letter factor");
  return core_;
}

Factor Factor::with_power(unsigned power) const { return Factor::bracket(core(), power); }

bool Factor::operator==(const Factor& other) const {
  if (power_ != other.power_) return false;
  if (is_letter()) return symbol_ == other.symbol_;
  return core_ == other.core_;
}

BracketedWord::BracketedWord(std::vector<Factor> factors) {
  if (factors.empty()) throw std::invalid_argument("a bracketed word has at least one factor");
  auto d = std::make_shared<Data>();
  d->factors = std::move(factors);
  for (const Factor& f : d->factors) {
    if (f.is_letter()) {
      ++d->arity;
    } else {
      const BracketedWord& c = f.core();
      d->degree += f.power() + c.degree();
      d->arity += c.arity();
      d->depth = std::max(d->depth, f.power() + c.depth());
    }
  }
  data_ = std::move(d);
}

const std::string& BracketedWord::text() const {
  std::call_once(data_->text_once, [this] {
    std::string& out = data_->text;
    bool previous_letter = false;
    for (const Factor& f : data_->factors) {
      if (f.is_letter()) {
        if (previous_letter) out += ' ';
        out += f.symbol();
        previous_letter = true;
        continue;
      }
      out += '[';
      out += f.core().text();
      out += ']';
      if (f.power() > 1) {
        out += '^';
        out += std::to_string(f.power());
      }
      previous_letter = false;
    }
  });
  return data_->text;
}

bool BracketedWord::operator==(const BracketedWord& other) const {
  if (data_ == other.data_) return true;
  if (degree() != other.degree() || arity() != other.arity() || breadth() != other.breadth()) return false;
  return factors() == other.factors();
}

BracketedWord::BracketedWord(Factor factor) : BracketedWord(std::vector<Factor>{std::move(factor)}) {}

BracketedWord BracketedWord::letter(std::string symbol) {
  return BracketedWord(Factor::letter(std::move(symbol)));
}

BracketedWord concat(const BracketedWord& u, const BracketedWord& v) {
  std::vector<Factor> fs = u.factors();
  fs.insert(fs.end(), v.factors().begin(), v.factors().end());
  return BracketedWord(std::move(fs));
}

BracketedWord slice(const BracketedWord& w, std::size_t first, std::size_t last) {
  const auto& fs = w.factors();
  return BracketedWord(std::vector<Factor>(fs.begin() + first, fs.begin() + last));
}

namespace {

BracketedWord substitute_rec(const BracketedWord& w, std::size_t& remaining,
                             const BracketedWord& replacement) {
  std::vector<Factor> out;
  for (const Factor& f : w.factors()) {
    if (remaining == 0) {
      out.push_back(f);
    } else if (f.is_letter()) {
      if (--remaining == 0)
        out.insert(out.end(), replacement.factors().begin(), replacement.factors().end());
      else
        out.push_back(f);
    } else if (remaining > f.core().arity()) {
      remaining -= f.core().arity();
      out.push_back(f);
    } else {
      out.push_back(Factor::bracket(substitute_rec(f.core(), remaining, replacement), f.power()));
    }
  }
  return BracketedWord(std::move(out));
}

}  // namespace

BracketedWord substitute_letter(const BracketedWord& w, std::size_t index,
                                const BracketedWord& replacement) {
  if (index < 1 || index > w.arity())
    throw std::out_of_range("letter index " + std::to_string(index) + " outside 1.." +
                            std::to_string(w.arity()));
  std::size_t remaining = index;
  return substitute_rec(w, remaining, replacement);
}

bool CanonicalOrder::operator()(const BracketedWord& a, const BracketedWord& b) const {
  return std::forward_as_tuple(a.degree(), a.arity(), a.text()) <
         std::forward_as_tuple(b.degree(), b.arity(), b.text());
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      detail_(message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BracketedWord parse_all() {
    skip_space();
    if (at_end()) throw ParseError("empty word", pos_);
    BracketedWord w = parse_sequence();
    skip_space();
    if (!at_end()) {
      if (peek() == ']') throw ParseError("unmatched ']'", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  BracketedWord parse_sequence() {
    std::vector<Factor> fs;
    for (;;) {
      skip_space();
      if (at_end() || peek() == ']') break;
      fs.push_back(parse_factor());
    }
    return BracketedWord(std::move(fs));
  }

  Factor parse_factor() {
    char c = peek();
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (!at_end() && ident_char(peek())) ++pos_;
      return Factor::letter(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '[') {
      std::size_t open = pos_++;
      skip_space();
      if (at_end()) throw ParseError("unclosed '['", open);
      if (peek() == ']') throw ParseError("empty bracket content", open);
      BracketedWord core = parse_sequence();
      if (at_end()) throw ParseError("unclosed '['", open);
      ++pos_;
      unsigned power = 1;
      std::size_t save = pos_;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        power = parse_power();
      } else {
        pos_ = save;
      }
      return Factor::bracket(core, power);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  unsigned parse_power() {
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > kMaxPower) throw ParseError("power too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a positive integer after '^'", start);
    if (value == 0) throw ParseError("zero power", start);
    return static_cast<unsigned>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BracketedWord parse_word(std::string_view text) { return Parser(text).parse_all(); }

std::string render_word(const BracketedWord& w) { return w.text(); }

WordAnalysis analyze(const BracketedWord& w) {
  WordAnalysis a;
  a.depth = w.depth();
  a.breadth = w.breadth();
  a.head = w.head();
  a.tail = w.tail();
  a.standard_factors = w.factors();
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      if (a.block_factors.empty() || !std::holds_alternative<LetterRun>(a.block_factors.back()))
        a.block_factors.emplace_back(LetterRun{});
      std::get<LetterRun>(a.block_factors.back()).letters.push_back(f.symbol());
    } else {
      a.block_factors.emplace_back(f);
    }
  }
  return a;
}

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::AdjacentBrackets: return "AdjacentBrackets";
    case Pattern::BracketHeaded: return "BracketHeaded";
    case Pattern::PowerTail: return "PowerTail";
  }
  return "?";
}

namespace {

std::optional<Violation> scan(const BracketedWord& w, std::vector<std::size_t>& path) {
  const auto& fs = w.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_bracket()) continue;
    path.push_back(i);
    if (auto inner = scan(fs[i].core(), path)) return inner;
    const BracketedWord& core = fs[i].core();
    if (core.breadth() >= 2 && core.front().is_bracket()) return Violation{Pattern::BracketHeaded, path};
    if (core.breadth() >= 2 && core.back().is_bracket() && core.back().power() >= 2)
      return Violation{Pattern::PowerTail, path};
    if (i + 1 < fs.size() && fs[i + 1].is_bracket()) return Violation{Pattern::AdjacentBrackets, path};
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> find_violation(const BracketedWord& w) {
  std::vector<std::size_t> path;
  return scan(w, path);
}

std::variant<AveragingWord, Violation> validate_averaging(const BracketedWord& w) {
  if (auto v = find_violation(w)) return *v;
  return AveragingWord::unchecked(w);
}

bool is_averaging(const BracketedWord& w) { return !find_violation(w).has_value(); }

AveragingWord AveragingWord::parse(std::string_view text) {
  BracketedWord w = parse_word(text);
  if (auto v = find_violation(w))
    throw std::invalid_argument("not an averaging word (" + pattern_name(v->pattern) + "): " + w.text());
  return AveragingWord(std::move(w));
}

AveragingWord AveragingWord::letter(std::string symbol) {
  return AveragingWord(BracketedWord::letter(std::move(symbol)));
}

std::pair<AveragingWord, unsigned> peel(const AveragingWord& w) {
  const BracketedWord& b = w.word();
  if (b.breadth() != 1) throw std::invalid_argument("peel requires breadth 1: " + b.text());
  if (b.head() != 1) throw std::invalid_argument("peel requires a bracket: " + b.text());
  return {AveragingWord::unchecked(b.front().core()), b.front().power()};
}

}  // namespace avgalg
