#include "avgalg/enumeration.hpp"

#include <algorithm>
#include <functional>

namespace avgalg {

RunCap RunCap::at_most(unsigned v) {
  if (v == 0) throw std::invalid_argument("run cap must be positive");
  return RunCap{v};
}

std::string RunCap::to_string() const { return limit ? std::to_string(*limit) : "inf"; }

RunCap RunCap::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return unbounded();
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("run cap must be a positive integer or 'inf': '" + text + "'");
  }
  if (used != text.size() || v == 0 || v > 1000000)
    throw std::invalid_argument("run cap must be a positive integer or 'inf': '" + text + "'");
  return at_most(static_cast<unsigned>(v));
}

unsigned Composition::total() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

std::vector<Composition> compositions(unsigned m, unsigned k, RunCap v) {
  std::vector<Composition> out;
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned slots) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(Composition{parts, v});
      return;
    }
    for (unsigned p = 1; p + (slots - 1) <= remaining; ++p) {
      if (!v.allows(p)) break;
      parts.push_back(p);
      rec(remaining - p, slots - 1);
      parts.pop_back();
    }
  };
  rec(m, k);
  return out;
}

BudgetExceeded::BudgetExceeded(const std::string& what, std::size_t budget)
    : std::runtime_error(what + " exceeded the budget of " + std::to_string(budget)), budget_(budget) {}

CountTable::CountTable(unsigned max_degree, unsigned max_arity, RunCap run_cap, bool include_one)
    : max_degree_(max_degree),
      max_arity_(max_arity),
      run_cap_(run_cap),
      include_one_(include_one),
      cells_(static_cast<std::size_t>(max_degree + 1) * (max_arity + 1)) {}

const Integer& CountTable::at(unsigned n, unsigned m) const {
  if (n > max_degree_ || m > max_arity_) throw std::out_of_range("count table index out of range");
  return cells_[static_cast<std::size_t>(n) * (max_arity_ + 1) + m];
}

Integer& CountTable::at(unsigned n, unsigned m) {
  if (n > max_degree_ || m > max_arity_) throw std::out_of_range("count table index out of range");
  return cells_[static_cast<std::size_t>(n) * (max_arity_ + 1) + m];
}

Integer CountTable::degree_total(unsigned n) const {
  Integer s = 0;
  for (unsigned m = 0; m <= max_arity_; ++m) s += at(n, m);
  return s;
}

std::vector<Integer> CountTable::degree_totals() const {
  std::vector<Integer> out;
  for (unsigned n = 0; n <= max_degree_; ++n) out.push_back(degree_total(n));
  return out;
}

bool CountTable::operator==(const CountTable& other) const {
  return max_degree_ == other.max_degree_ && max_arity_ == other.max_arity_ && run_cap_ == other.run_cap_ &&
         include_one_ == other.include_one_ && cells_ == other.cells_;
}

std::string word_class_name(WordClass c) {
  switch (c) {
    case WordClass::All: return "all";
    case WordClass::Bracketed: return "bracketed";
    case WordClass::Indecomposable: return "indecomposable";
    case WordClass::Decomposable: return "decomposable";
    case WordClass::Associate: return "associate";
  }
  return "?";
}

const CountTable& CensusResult::table(WordClass c) const {
  switch (c) {
    case WordClass::All: return all;
    case WordClass::Bracketed: return bracketed;
    case WordClass::Indecomposable: return indecomposable;
    case WordClass::Decomposable: return decomposable;
    case WordClass::Associate: return associate;
  }
  return all;
}

namespace {

using Words = std::vector<BracketedWord>;
using Factors = std::vector<Factor>;
using Key = std::pair<unsigned, unsigned>;

// Production rules, with every x standing for a run x^r:
//   A -> 1 | B | C
//   C -> x | x B | B x | x B x
//   B -> I | D
//   I -> [x] | [x B] | [x B x]
//   D -> I x B
class Generator {
 public:
  explicit Generator(const CensusOptions& options) : opt_(options), x_(Factor::letter("x")) {}

  const Words& indecomposable(unsigned n, unsigned m) {
    auto it = memo_i_.find({n, m});
    if (it != memo_i_.end()) return it->second;
    Words out;
    if (n >= 1) {
      const unsigned inner = n - 1;
      if (inner == 0 && m >= 1 && opt_.run_cap.allows(m)) emit(out, Factor::bracket(BracketedWord(run(m)), 1));
      if (inner >= 1) {
        for (unsigned r = 1; r < m && opt_.run_cap.allows(r); ++r) {
          for (const auto& b : bracketed(inner, m - r)) emit(out, Factor::bracket(BracketedWord(join(run(r), b)), 1));
          for (unsigned r2 = 1; r + r2 < m && opt_.run_cap.allows(r2); ++r2)
            for (const auto& b : bracketed(inner, m - r - r2))
              emit(out, Factor::bracket(BracketedWord(join(join(run(r), b), run(r2))), 1));
        }
      }
    }
    return memo_i_.emplace(Key{n, m}, std::move(out)).first->second;
  }

  const Words& decomposable(unsigned n, unsigned m) {
    auto it = memo_d_.find({n, m});
    if (it != memo_d_.end()) return it->second;
    Words out;
    for (unsigned n1 = 1; n1 < n; ++n1)
      for (unsigned m1 = 1; m1 < m; ++m1)
        for (unsigned r = 1; m1 + r < m && opt_.run_cap.allows(r); ++r) {
          const Words& heads = indecomposable(n1, m1);
          if (heads.empty()) continue;
          const Words& tails = bracketed(n - n1, m - m1 - r);
          for (const auto& h : heads)
            for (const auto& t : tails) emit(out, BracketedWord(join(join(h.factors(), run(r)), t)));
        }
    return memo_d_.emplace(Key{n, m}, std::move(out)).first->second;
  }

  const Words& bracketed(unsigned n, unsigned m) {
    auto it = memo_b_.find({n, m});
    if (it != memo_b_.end()) return it->second;
    Words out = indecomposable(n, m);
    const Words& d = decomposable(n, m);
    out.insert(out.end(), d.begin(), d.end());
    return memo_b_.emplace(Key{n, m}, std::move(out)).first->second;
  }

  const Words& associate(unsigned n, unsigned m) {
    auto it = memo_c_.find({n, m});
    if (it != memo_c_.end()) return it->second;
    Words out;
    if (n == 0) {
      if (m >= 1 && opt_.run_cap.allows(m)) emit(out, BracketedWord(run(m)));
    } else {
      for (unsigned r = 1; r < m && opt_.run_cap.allows(r); ++r) {
        for (const auto& b : bracketed(n, m - r)) emit(out, BracketedWord(join(run(r), b)));
        for (const auto& b : bracketed(n, m - r)) emit(out, BracketedWord(join(b.factors(), run(r))));
        for (unsigned r2 = 1; r + r2 < m && opt_.run_cap.allows(r2); ++r2)
          for (const auto& b : bracketed(n, m - r - r2)) emit(out, BracketedWord(join(join(run(r), b), run(r2))));
      }
    }
    return memo_c_.emplace(Key{n, m}, std::move(out)).first->second;
  }

 private:
  Factors run(unsigned r) const { return Factors(r, x_); }

  static Factors join(Factors a, const Factors& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  static Factors join(Factors a, const BracketedWord& b) { return join(std::move(a), b.factors()); }

  void emit(Words& out, BracketedWord w) {
    if (++generated_ > opt_.budget) throw BudgetExceeded("census word generation", opt_.budget);
    out.push_back(std::move(w));
  }
  void emit(Words& out, Factor f) { emit(out, BracketedWord(std::move(f))); }

  CensusOptions opt_;
  Factor x_;
  std::size_t generated_ = 0;
  std::map<Key, Words> memo_i_, memo_d_, memo_b_, memo_c_;
};

}  // namespace

CensusResult census(const CensusOptions& options) {
  const unsigned N = options.max_degree;
  const unsigned M = options.max_arity;
  CensusResult r;
  r.options = options;
  for (CountTable* t : {&r.all, &r.bracketed, &r.indecomposable, &r.decomposable, &r.associate})
    *t = CountTable(N, M, options.run_cap, options.include_one);
  Generator g(options);
  for (unsigned n = 0; n <= N; ++n)
    for (unsigned m = 0; m <= M; ++m) {
      const std::size_t i = g.indecomposable(n, m).size();
      const std::size_t d = g.decomposable(n, m).size();
      const std::size_t c = g.associate(n, m).size();
      r.indecomposable.at(n, m) = static_cast<unsigned long>(i);
      r.decomposable.at(n, m) = static_cast<unsigned long>(d);
      r.bracketed.at(n, m) = static_cast<unsigned long>(i + d);
      r.associate.at(n, m) = static_cast<unsigned long>(c);
      r.all.at(n, m) = static_cast<unsigned long>(i + d + c);
      if (options.keep_words && i + d + c > 0) {
        Words listed = g.bracketed(n, m);
        const Words& cs = g.associate(n, m);
        listed.insert(listed.end(), cs.begin(), cs.end());
        std::sort(listed.begin(), listed.end(), CanonicalOrder{});
        r.words.emplace(Key{n, m}, std::move(listed));
      }
    }
  if (options.include_one) r.all.at(0, 0) += 1;
  return r;
}

namespace {

Factors collapse_rec(const BracketedWord& w, std::vector<unsigned>& runs) {
  Factors out;
  bool in_run = false;
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      if (in_run) {
        ++runs.back();
      } else {
        out.push_back(f);
        runs.push_back(1);
        in_run = true;
      }
    } else {
      in_run = false;
      out.push_back(Factor::bracket(BracketedWord(collapse_rec(f.core(), runs)), f.power()));
    }
  }
  return out;
}

Factors expand_rec(const BracketedWord& w, const std::vector<unsigned>& parts, std::size_t& next) {
  Factors out;
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      if (next >= parts.size()) throw std::invalid_argument("composition has too few parts for the word");
      out.insert(out.end(), parts[next++], f);
    } else {
      out.push_back(Factor::bracket(BracketedWord(expand_rec(f.core(), parts, next)), f.power()));
    }
  }
  return out;
}

}  // namespace

std::pair<BracketedWord, Composition> collapse_runs(const BracketedWord& w, RunCap cap) {
  std::vector<unsigned> runs;
  BracketedWord collapsed(collapse_rec(w, runs));
  for (unsigned r : runs)
    if (!cap.allows(r)) throw std::invalid_argument("run of length " + std::to_string(r) + " exceeds the cap");
  return {collapsed, Composition{runs, cap}};
}

BracketedWord expand_runs(const BracketedWord& collapsed, const Composition& runs) {
  for (unsigned p : runs.parts)
    if (p == 0) throw std::invalid_argument("composition parts must be positive");
  std::size_t next = 0;
  BracketedWord w(expand_rec(collapsed, runs.parts, next));
  if (next != runs.parts.size()) throw std::invalid_argument("composition has too many parts for the word");
  return w;
}

}  // namespace avgalg
