#include "avgalg/lincomb.hpp"

#include <cctype>

#include "avgalg/algebra.hpp"

namespace avgalg {

LinearCombination LinearCombination::monomial(const AveragingWord& w, const Rational& c) {
  LinearCombination r;
  r.add_term(w, c);
  return r;
}

Rational LinearCombination::coefficient(const AveragingWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinearCombination::add_term(const AveragingWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

LinearCombination scale(const Rational& c, const LinearCombination& a) {
  LinearCombination r;
  if (c == 0) return r;
  for (const auto& [w, k] : a.terms()) r.add_term(w, c * k);
  return r;
}

LinearCombination product(const LinearCombination& a, const LinearCombination& b) {
  LinearCombination r;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r.add_term(diamond(u, v), cu * cv);
  return r;
}

LinearCombination apply_p(const LinearCombination& a) {
  LinearCombination r;
  for (const auto& [w, c] : a.terms()) r.add_term(apply_p(w), c);
  return r;
}

std::string format_lincomb(const LinearCombination& a) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    if (first) {
      out += format_rational(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += format_rational(abs(c));
    }
    out += "*" + w.text();
    first = false;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LinearCombination parse_lincomb(std::string_view text) {
  std::string_view body = trim(text);
  if (body == "0") return {};
  if (body.empty()) throw ParseError("empty linear combination", 0);

  LinearCombination result;
  std::size_t pos = 0;
  int depth = 0;
  bool negative = false;
  std::size_t term_start = 0;
  auto finish_term = [&](std::size_t end) {
    std::string_view term = trim(body.substr(term_start, end - term_start));
    if (term.empty()) throw ParseError("empty term", term_start);
    Rational coeff = 1;
    auto star = term.find('*');
    if (star != std::string_view::npos) {
      try {
        coeff = parse_rational(trim(term.substr(0, star)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), term_start);
      }
      term = trim(term.substr(star + 1));
    }
    std::size_t offset = static_cast<std::size_t>(term.data() - body.data());
    BracketedWord w = [&] {
      try {
        return parse_word(term);
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), offset + e.position());
      }
    }();
    result.add_term(reduce(w), negative ? Rational(-coeff) : coeff);
  };

  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    term_start = 1;
    pos = 1;
  }
  for (; pos < body.size(); ++pos) {
    char c = body[pos];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      finish_term(pos);
      negative = c == '-';
      term_start = pos + 1;
    }
  }
  finish_term(body.size());
  return result;
}

}  // namespace avgalg
