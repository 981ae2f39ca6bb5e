#include "avgalg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "avgalg/algebra.hpp"
#include "avgalg/binary_tree.hpp"
#include "avgalg/enumeration.hpp"
#include "avgalg/instances.hpp"
#include "avgalg/lincomb.hpp"
#include "avgalg/operad.hpp"
#include "avgalg/rewrite.hpp"
#include "avgalg/schroeder_tree.hpp"
#include "avgalg/series.hpp"

namespace avgalg::cli {

std::string CommandResult::stdout_text() const {
  if (!text.empty()) return text;
  if (payload.is_null()) return "";
  return payload.dump(2) + "\n";
}

unsigned thread_count() {
  const char* env = std::getenv("AVGALG_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const long v = std::stol(env);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  return 1;
}

namespace {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json lincomb_payload(const LinearCombination& a) {
  Json out = lincomb_to_json(a);
  out["result"] = format_lincomb(a);
  if (a.size() == 1 && a.terms().begin()->second == 1) out["word"] = a.terms().begin()->first.text();
  return out;
}

// A tree term is tried first; anything that does not parse as one is read
// as an averaging word over {x}.
AveragingTree read_tree_or_word(const std::string& text) {
  try {
    return AveragingTree(parse_binary_tree(text));
  } catch (const ParseError&) {
  }
  return phi(AveragingWord::parse(text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

WordClass parse_word_class(const std::string& text) {
  for (WordClass c : {WordClass::All, WordClass::Bracketed, WordClass::Indecomposable, WordClass::Decomposable,
                      WordClass::Associate})
    if (word_class_name(c) == text) return c;
  throw std::invalid_argument("unknown word class '" + text + "'");
}

struct Options {
  std::string word;
  std::string word2;
  std::string oracle = "fold";
  std::string strategy = "innermost";
  std::optional<std::size_t> step_budget;
  std::string run_cap = "1";
  unsigned max_degree = 3;
  std::optional<unsigned> max_arity;
  bool include_one = false;
  bool list_words = false;
  std::string format = "json";
  std::string word_class = "all";
  std::size_t budget = 10'000'000;
  std::string kind = "A";
  unsigned series_n = 6;
  std::optional<unsigned> series_m;
  unsigned n = 1;
  bool schroeder = false;
  unsigned index = 1;
  std::string file;
  unsigned max_leaves = 4;
  unsigned max_unis = 3;
};

CommandResult dispatch(const std::string& command, const Options& o) {
  CommandResult r;
  if (command == "normalize") {
    const BracketedWord w = parse_word(o.word);
    Json p = {{"input", w.text()}, {"oracle", o.oracle}};
    if (o.oracle == "fold") {
      p["word"] = reduce(w).text();
    } else if (o.oracle == "rewrite") {
      const Strategy s = o.strategy == "outermost" ? Strategy::LeftmostOutermost : Strategy::LeftmostInnermost;
      const RewriteResult rr = rewrite_normalize(w, s, o.step_budget);
      p["strategy"] = o.strategy;
      p["word"] = rr.word.text();
      p["steps"] = rr.steps;
    }
    r.payload = p;
  } else if (command == "product") {
    r.payload = lincomb_payload(product(parse_lincomb(o.word), parse_lincomb(o.word2)));
  } else if (command == "apply-p") {
    r.payload = lincomb_payload(apply_p(parse_lincomb(o.word)));
  } else if (command == "analyze") {
    const BracketedWord w = parse_word(o.word);
    Json p = {{"word", w.text()}, {"degree", w.degree()}, {"arity", w.arity()}};
    p["analysis"] = analysis_to_json(analyze(w));
    const auto v = find_violation(w);
    p["averaging"] = !v.has_value();
    if (v) p["violation"] = violation_to_json(*v);
    r.payload = p;
  } else if (command == "census") {
    CensusOptions c;
    c.run_cap = RunCap::parse(o.run_cap);
    c.max_degree = o.max_degree;
    if (o.max_arity) {
      c.max_arity = *o.max_arity;
    } else if (c.run_cap.is_unbounded()) {
      throw std::invalid_argument("--max-arity is required with --run-cap inf");
    } else {
      c.max_arity = (2 * o.max_degree + 1) * *c.run_cap.limit;
    }
    c.include_one = o.include_one;
    c.keep_words = o.list_words;
    c.budget = o.budget;
    const WordClass cls = parse_word_class(o.word_class);
    const CensusResult res = census(c);
    const CountTable& table = res.table(cls);
    if (o.format == "csv") {
      r.text = count_table_to_csv(table);
    } else if (o.format == "text") {
      r.text = count_table_to_text(table);
    } else {
      Json p = {{"class", word_class_name(cls)}};
      const Json counts = count_table_to_json(table);
      for (const auto& [k, v] : counts.items()) p[k] = v;
      if (o.list_words) {
        Json words = Json::array();
        for (const auto& [key, list] : res.words)
          for (const auto& w : list) words.push_back({key.first, key.second, w.text()});
        p["words"] = words;
      }
      r.payload = p;
    }
  } else if (command == "series") {
    const SeriesKind k = parse_series_kind(o.kind);
    const unsigned M = o.series_m.value_or(2 * o.series_n + 1);
    const BivariateSeries s = series(k, o.series_n, M);
    if (o.format == "csv") {
      r.text = series_to_csv(s);
    } else if (o.format == "text") {
      r.text = series_to_text(s);
    } else {
      Json p = series_to_json(s, k);
      Json totals = Json::array();
      for (const auto& v : univariate(k, o.series_n)) totals.push_back(integer_to_json(v));
      p["univariate"] = totals;
      r.payload = p;
    }
  } else if (command == "schroeder") {
    r.payload = {{"n", o.n}, {"schroeder", integer_to_json(schroeder(o.n))}};
  } else if (command == "word2tree") {
    const BracketedWord w = parse_word(o.word);
    if (o.schroeder) {
      r.payload = {{"word", w.text()}, {"tree", psi(w).text()}};
    } else {
      const AveragingWord aw = AveragingWord::parse(o.word);
      r.payload = {{"word", aw.text()}, {"tree", phi(aw).text()}};
    }
  } else if (command == "tree2word") {
    if (o.schroeder) {
      const SchroederTree t = parse_schroeder_tree(o.word);
      r.payload = {{"tree", t.text()}, {"word", psi_inverse(t).text()}};
    } else {
      const AveragingTree t(parse_binary_tree(o.word));
      r.payload = {{"tree", t.text()}, {"word", phi_inverse(t).text()}};
    }
  } else if (command == "schroeder-trees") {
    const auto trees = enumerate_schroeder(o.n, o.budget);
    Json list = Json::array();
    for (const auto& t : trees) list.push_back(t.text());
    r.payload = {{"n", o.n}, {"count", trees.size()}, {"trees", list}};
  } else if (command == "compose") {
    const AveragingTree tau = read_tree_or_word(o.word);
    const AveragingTree sigma = read_tree_or_word(o.word2);
    const AveragingTree res = compose(tau, o.index, sigma);
    r.payload = {{"tree", res.text()}, {"word", phi_inverse(res).text()}, {"arity", res.arity()}};
  } else if (command == "check-instance") {
    const FiniteAlgebra alg = algebra_from_json(Json::parse(read_file(o.file)));
    r.payload = {{"dim", alg.dim()},
                 {"averaging", check_report_to_json(check_averaging(alg), alg)},
                 {"reynolds", check_report_to_json(check_reynolds(alg), alg)},
                 {"idempotent", is_idempotent(alg)}};
  } else if (command == "operad-axioms") {
    const AxiomReport rep = check_operad_axioms(averaging_trees(o.max_leaves, o.max_unis), thread_count());
    r.payload = axiom_report_to_json(rep);
    if (!rep.passed()) {
      r.exit_code = InvariantFailure;
      r.diagnostics = "operad axioms failed";
    }
  }
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations in free averaging algebras", "avgalg"};
  app.require_subcommand(1);
  Options o;

  auto* normalize = app.add_subcommand("normalize", "Normal form of a bracketed word");
  normalize->add_option("word", o.word, "Bracketed word")->required();
  normalize->add_option("--oracle", o.oracle, "fold (evaluation) or rewrite (rule system)")
      ->check(CLI::IsMember({"fold", "rewrite"}));
  normalize->add_option("--strategy", o.strategy, "Rewrite strategy")->check(CLI::IsMember({"innermost", "outermost"}));
  normalize->add_option("--step-budget", o.step_budget, "Maximum rewrite steps");

  auto* prod = app.add_subcommand("product", "Product of two words or linear combinations");
  prod->add_option("left", o.word)->required();
  prod->add_option("right", o.word2)->required();

  auto* ap = app.add_subcommand("apply-p", "The averaging operator on a word or linear combination");
  ap->add_option("word", o.word)->required();

  auto* an = app.add_subcommand("analyze", "Depth, breadth, head, tail, decompositions and validity");
  an->add_option("word", o.word)->required();

  auto* cen = app.add_subcommand("census", "Exhaustive count of averaging words over {x}");
  cen->add_option("--run-cap", o.run_cap, "Longest allowed x-run: a positive integer or inf");
  cen->add_option("--max-degree", o.max_degree, "Largest number of bracket pairs");
  cen->add_option("--max-arity", o.max_arity, "Largest number of x's (default (2N+1)v)");
  cen->add_flag("--include-one", o.include_one, "Count the empty word at (0,0)");
  cen->add_flag("--list-words", o.list_words, "Include the generated words (json only)");
  cen->add_option("--class", o.word_class, "all, bracketed, indecomposable, decomposable or associate");
  cen->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  cen->add_option("--budget", o.budget, "Maximum number of generated words");

  auto* ser = app.add_subcommand("series", "Coefficients of a bivariate generating series");
  ser->add_option("--kind", o.kind, "I, B, D, C or A")->check(CLI::IsMember({"I", "B", "D", "C", "A"}));
  ser->add_option("--N", o.series_n, "Largest degree");
  ser->add_option("--M", o.series_m, "Largest arity (default 2N+1)");
  ser->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));

  auto* sch = app.add_subcommand("schroeder", "Large Schröder number");
  sch->add_option("--n", o.n)->required();

  auto* w2t = app.add_subcommand("word2tree", "Averaging word to averaging tree");
  w2t->add_option("word", o.word)->required();
  w2t->add_flag("--schroeder", o.schroeder, "Indecomposable word to Schröder tree");

  auto* t2w = app.add_subcommand("tree2word", "Averaging tree to averaging word");
  t2w->add_option("tree", o.word)->required();
  t2w->add_flag("--schroeder", o.schroeder, "Schröder tree to indecomposable word");

  auto* st = app.add_subcommand("schroeder-trees", "All Schröder trees with n decorations");
  st->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  st->add_option("--budget", o.budget, "Maximum number of generated trees");

  auto* comp = app.add_subcommand("compose", "Partial composition of averaging trees");
  comp->add_option("tau", o.word, "Tree term or word")->required();
  comp->add_option("i", o.index, "Leaf index, 1-based")->required();
  comp->add_option("sigma", o.word2, "Tree term or word")->required();

  auto* ci = app.add_subcommand("check-instance", "Check an operator on a finite algebra");
  ci->add_option("file", o.file, "JSON algebra {dim, basis, mul, op}")->required();

  auto* oa = app.add_subcommand("operad-axioms", "Exhaustive operad axiom sweep");
  oa->add_option("--max-leaves", o.max_leaves);
  oa->add_option("--max-unis", o.max_unis);

  std::vector<const char*> argv{"avgalg"};
  for (const auto& a : args) argv.push_back(a.c_str());

  CommandResult r;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    if (code == 0) {
      r.text = out.str();
      return r;
    }
    r.exit_code = Usage;
    r.diagnostics = err.str();
    return r;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, o);
  } catch (const ParseError& e) {
    r.exit_code = InputError;
    r.diagnostics = std::string("parse error: ") + e.what();
  } catch (const Json::exception& e) {
    r.exit_code = InputError;
    r.diagnostics = std::string("invalid JSON: ") + e.what();
  } catch (const BudgetExceeded& e) {
    r.exit_code = BudgetError;
    r.diagnostics = e.what();
  } catch (const StepBudgetExceeded& e) {
    r.exit_code = BudgetError;
    r.diagnostics = e.what();
  } catch (const std::invalid_argument& e) {
    r.exit_code = InputError;
    r.diagnostics = e.what();
  } catch (const std::out_of_range& e) {
    r.exit_code = InputError;
    r.diagnostics = e.what();
  } catch (const std::exception& e) {
    r.exit_code = InvariantFailure;
    r.diagnostics = std::string("internal error: ") + e.what();
  }
  r.payload = nullptr;
  return r;
}

}  // namespace avgalg::cli
