#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ita/entailment.hpp"
#include "ita/error.hpp"
#include "ita/harness.hpp"
#include "ita/modifiers.hpp"
#include "ita/repairs.hpp"
#include "ita/semantics.hpp"
#include "ita/text.hpp"

namespace ita::cli {

namespace {

using nlohmann::json;

json ternary_json(Ternary t) {
  if (t == Ternary::Unknown) return nullptr;
  return t == Ternary::True;
}

int ternary_code(Ternary t) {
  switch (t) {
    case Ternary::True: return kOk;
    case Ternary::False: return kNegative;
    case Ternary::Unknown: return kUnknown;
  }
  return kUnknown;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_kb(buf.str());
  } catch (const ParseError& e) {
    throw Error(e.kind(), path + ":" + e.what());
  }
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::optional<std::size_t> depth_flag;
  std::size_t depth() const { return depth_flag ? *depth_flag : default_chase_depth(); }
  void emit(const nlohmann::json& j) { out << j.dump(2) << "\n"; }
};

int cmd_check(Context& ctx, const std::string& file, bool conflicts) {
  KnowledgeBase kb = load_kb(file);
  Ternary verdict = is_consistent(kb.tbox, kb.abox(), ctx.depth());
  std::vector<Conflict> found;
  if (conflicts && verdict == Ternary::False)
    found = minimal_conflicts(kb.tbox, kb.abox(), ctx.depth());
  std::string word = verdict == Ternary::True    ? "consistent"
                     : verdict == Ternary::False ? "inconsistent"
                                                 : "unknown";
  if (ctx.json) {
    json j{{"verdict", word}, {"consistent", ternary_json(verdict)}};
    if (conflicts) {
      json list = json::array();
      for (const Conflict& c : found) list.push_back(abox_to_json(c.assertions));
      j["conflicts"] = list;
    }
    ctx.emit(j);
  } else {
    ctx.out << word << "\n";
    for (const Conflict& c : found) ctx.out << "conflict " << c.to_string() << "\n";
  }
  // consistent = success, inconsistent = negative
  return ternary_code(verdict);
}

int cmd_modify(Context& ctx, const std::string& file, const std::string& spec) {
  ModifierId id;
  if (auto named = modifier_from_name(spec)) {
    id = *named;
  } else {
    id = normalize_word(ModifierWord(spec));
  }
  KnowledgeBase kb = load_kb(file);
  MBox m = apply_composite(id, kb.tbox, kb.mbox, ctx.depth());
  if (ctx.json) {
    json j = mbox_to_json(m, std::string(to_string(id)));
    if (spec != to_string(id)) j["word"] = spec;
    ctx.emit(j);
  } else {
    ctx.out << to_string(id) << "\n";
    for (const ABox& a : m) ctx.out << a.to_string() << "\n";
  }
  return kOk;
}

int cmd_ask(Context& ctx, const std::string& file, const std::string& query,
            const std::string& spec) {
  SemanticsId sem = parse_semantics(spec);
  Query q = parse_query(query);
  KnowledgeBase kb = load_kb(file);
  Ternary t = answer(kb, sem, q, ctx.depth());
  if (ctx.json)
    ctx.emit({{"semantics", to_string(sem)}, {"query", q.to_string()},
              {"answer", to_string(t)}});
  else
    ctx.out << to_string(t) << "\n";
  return ternary_code(t);
}

int cmd_matrix(Context& ctx, const std::string& file, const std::string& query) {
  Query q = parse_query(query);
  KnowledgeBase kb = load_kb(file);
  Grid g = evaluate_grid(kb, q, ctx.depth());
  bool unknown = false;
  for (const auto& row : g)
    for (Ternary t : row) unknown = unknown || t == Ternary::Unknown;
  if (ctx.json) {
    json rows = json::array();
    for (std::size_t i = 0; i < 8; ++i) {
      json row{{"modifier", to_string(kAllModifiers[i])}};
      for (std::size_t s = 0; s < 4; ++s)
        row[std::string(to_string(kAllStrategies[s]))] = to_string(g[i][s]);
      rows.push_back(row);
    }
    ctx.emit({{"query", q.to_string()}, {"rows", rows}});
  } else {
    ctx.out << std::left << std::setw(6) << "";
    for (Strategy s : kAllStrategies) ctx.out << std::setw(9) << to_string(s);
    ctx.out << "\n";
    for (std::size_t i = 0; i < 8; ++i) {
      ctx.out << std::setw(6) << to_string(kAllModifiers[i]);
      for (std::size_t s = 0; s < 4; ++s) ctx.out << std::setw(9) << to_string(g[i][s]);
      ctx.out << "\n";
    }
  }
  return unknown ? kUnknown : kOk;
}

int cmd_compare(Context& ctx, const std::string& a, const std::string& b,
                const std::string& graph, bool published) {
  ProductivityRelation rel = published ? published_productivity() : ProductivityRelation();
  if (!graph.empty()) {
    if (graph == "dot")
      ctx.out << rel.to_dot();
    else
      ctx.emit(rel.to_json());
    return kOk;
  }
  if (a.empty() || b.empty()) throw InputError("compare needs --sem1 and --sem2, or --graph");
  SemanticsId s1 = parse_semantics(a), s2 = parse_semantics(b);
  ProductivityVerdict v = rel.compare(s1, s2);
  if (ctx.json)
    ctx.emit({{"sem1", to_string(s1)}, {"sem2", to_string(s2)}, {"verdict", to_string(v)}});
  else
    ctx.out << to_string(v) << "\n";
  return kOk;
}

int cmd_fuzz(Context& ctx, std::uint64_t seed, std::size_t trials, bool existential,
             bool drop_self_conflicts, bool published) {
  GenParams p;
  p.seed = seed;
  p.allow_existential_heads = existential;
  p.allow_self_conflicts = !drop_self_conflicts;
  ProductivityRelation rel = published ? published_productivity() : ProductivityRelation();
  LatticeReport r = verify_lattice(trials, p, ctx.depth(), rel);
  if (ctx.json) {
    json vs = json::array();
    for (const Violation& v : r.violations)
      vs.push_back({{"seed", v.seed},
                    {"from", to_string(v.pair.first)},
                    {"to", to_string(v.pair.second)},
                    {"query", v.query.to_string()},
                    {"observed", {to_string(v.observed.first), to_string(v.observed.second)}},
                    {"kb", serialize_kb(v.kb)}});
    ctx.emit({{"trials", r.trials},
              {"skipped_unknown", r.skipped_unknown},
              {"checks", r.checks},
              {"violations", vs}});
  } else {
    ctx.out << "trials " << r.trials << ", skipped " << r.skipped_unknown << ", checks "
            << r.checks << ", violations " << r.violations.size() << "\n";
    for (const Violation& v : r.violations)
      ctx.out << "seed " << v.seed << ": " << to_string(v.pair.first) << " <= "
              << to_string(v.pair.second) << " fails on " << v.query.to_string() << " ("
              << to_string(v.observed.first) << " vs " << to_string(v.observed.second)
              << ")\n";
  }
  return r.violations.empty() ? kOk : kNegative;
}

int cmd_paper_examples(Context& ctx, const std::string& only, bool corrupt) {
  std::optional<std::string> filter;
  if (!only.empty()) filter = only;
  auto outcomes = run_paper_examples(filter, corrupt, ctx.depth());
  if (outcomes.empty()) throw InputError("no fixture named '" + only + "'");
  std::size_t passed = 0;
  for (const auto& o : outcomes) passed += o.passed;
  if (ctx.json) {
    json list = json::array();
    for (const auto& o : outcomes)
      list.push_back({{"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
    ctx.emit({{"fixtures", list}, {"passed", passed}, {"total", outcomes.size()}});
  } else {
    for (const auto& o : outcomes) {
      ctx.out << (o.passed ? "PASS " : "FAIL ") << o.name;
      if (!o.passed) ctx.out << ": " << o.detail;
      ctx.out << "\n";
    }
    ctx.out << passed << "/" << outcomes.size() << " passed\n";
  }
  return passed == outcomes.size() ? kOk : kNegative;
}

int cmd_normalize(Context& ctx, const std::string& word) {
  ModifierId id = normalize_word(ModifierWord(word));
  if (ctx.json)
    ctx.emit({{"word", word}, {"modifier", to_string(id)}, {"ordinal", ordinal(id)}});
  else
    ctx.out << to_string(id) << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inconsistency-tolerant query answering over MBox knowledge bases", "ita"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{out, err};
  std::size_t depth = 0;
  app.add_flag("--json", ctx.json, "Machine-readable output");
  auto* depth_opt = app.add_option("--depth", depth, "Chase round bound (default ITA_CHASE_DEPTH or 8)")
                        ->check(CLI::NonNegativeNumber);

  std::string file, query, semantics, modifier, sem1, sem2, graph, only, word;
  bool conflicts = false, corrupt = false, existential = false, published = false;
  bool drop_self_conflicts = false;
  std::uint64_t seed = 0;
  std::size_t trials = 200;

  auto* check = app.add_subcommand("check", "Consistency of a KB file");
  check->add_option("file", file)->required();
  check->add_flag("--conflicts", conflicts, "Also list the minimal conflicts");

  auto* modify = app.add_subcommand("modify", "Apply a composite modifier or word");
  modify->add_option("file", file)->required();
  modify->add_option("--modifier,-m", modifier, "R, MR, CMR, MCMR, CR, MCR, RC, MRC or a C/R/M word")
      ->required();

  auto* ask = app.add_subcommand("ask", "Answer a query under one semantics");
  ask->add_option("file", file)->required();
  ask->add_option("--query,-q", query)->required();
  ask->add_option("--semantics,-s", semantics, "MOD:safe|univ|maj|exist or AR/IAR/CAR/ICAR/ICR")
      ->required();

  auto* matrix = app.add_subcommand("matrix", "Answer a query under all 32 semantics");
  matrix->add_option("file", file)->required();
  matrix->add_option("--query,-q", query)->required();

  auto* compare = app.add_subcommand("compare", "Compare two semantics by productivity");
  compare->add_option("--sem1", sem1);
  compare->add_option("--sem2", sem2);
  compare->add_option("--graph", graph, "Print the whole relation")
      ->check(CLI::IsMember({"dot", "json"}));
  compare->add_flag("--published", published, "Include the published majority CR->RC edge");

  auto* fuzz = app.add_subcommand("fuzz", "Check the productivity relation on random KBs");
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--trials", trials);
  fuzz->add_flag("--existential", existential, "Allow existential rule heads");
  fuzz->add_flag("--no-self-conflicts", drop_self_conflicts,
                 "Drop assertions that are inconsistent on their own");
  fuzz->add_flag("--published", published, "Check the published relation instead");

  auto* examples = app.add_subcommand("paper-examples", "Replay the embedded fixtures");
  examples->add_option("--only", only, "Run one fixture (or one group before '/')");
  examples->add_flag("--corrupt", corrupt, "Flip expectations (self-test, must fail)");

  auto* normalize = app.add_subcommand("normalize", "Reduce a modifier word to its canonical name");
  normalize->add_option("word", word)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (depth_opt->count() > 0) ctx.depth_flag = depth;

  try {
    if (check->parsed()) return cmd_check(ctx, file, conflicts);
    if (modify->parsed()) return cmd_modify(ctx, file, modifier);
    if (ask->parsed()) return cmd_ask(ctx, file, query, semantics);
    if (matrix->parsed()) return cmd_matrix(ctx, file, query);
    if (compare->parsed()) return cmd_compare(ctx, sem1, sem2, graph, published);
    if (fuzz->parsed()) return cmd_fuzz(ctx, seed, trials, existential, drop_self_conflicts, published);
    if (examples->parsed()) return cmd_paper_examples(ctx, only, corrupt);
    if (normalize->parsed()) return cmd_normalize(ctx, word);
  } catch (const NotSaturatedError& e) {
    err << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ita::cli
