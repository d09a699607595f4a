// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "ita/entailment.hpp"
#include "ita/harness.hpp"
#include "ita/modifiers.hpp"
#include "ita/repairs.hpp"
#include "ita/semantics.hpp"
#include "ita/text.hpp"

using namespace ita;

namespace {

constexpr std::size_t kDepth = 8;

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<Query> ground_probes(const KnowledgeBase& kb, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Query> out;
  for (Query& q : probe_queries(kb, rng))
    if (q.atoms.size() == 1 && q.is_ground()) out.push_back(std::move(q));
  return out;
}

std::string random_word(Rng& rng, std::size_t max_len, bool need_r) {
  static const char letters[] = {'C', 'R', 'M'};
  while (true) {
    std::string w;
    std::size_t n = 1 + rng.below(max_len);
    for (std::size_t i = 0; i < n; ++i) w += letters[rng.below(3)];
    if (!need_r || w.find('R') != std::string::npos) return w;
  }
}

Outcome ac1() {
  KnowledgeBase kb = running_example();
  struct Want {
    ModifierId id;
    const char* mbox;
  } wants[] = {
      {ModifierId::R, "[{A(a), A(b)}, {B(a), A(b)}, {C(a), A(b)}]"},
      {ModifierId::CR,
       "[{A(a), D(a), A(b), D(b)}, {B(a), D(a), E(a), A(b), D(b)},"
       " {C(a), D(a), E(a), A(b), D(b)}]"},
      {ModifierId::MCR, "[{B(a), D(a), E(a), A(b), D(b)}, {C(a), D(a), E(a), A(b), D(b)}]"},
  };
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  for (const Want& w : wants) {
    MBox got = apply_composite(w.id, kb.tbox, kb.mbox, kDepth);
    if (got != parse_mbox(w.mbox)) {
      o.ok = false;
      o.detail += std::string(to_string(w.id)) + " gave " + got.to_string() + "; ";
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) o.ok = false;
  o.detail += "R, CR, MCR exact in " + std::to_string(secs) + " s";
  return o;
}

Outcome ac2() {
  KnowledgeBase kb = running_example();
  Reasoner r(kb.tbox, kDepth);
  MBox m1 = split_rep(r, kb.mbox);
  struct Case {
    Strategy s;
    const char* q;
    Ternary want;
  } cases[] = {
      {Strategy::Safe, "D(b)", Ternary::True},        {Strategy::Universal, "D(a)", Ternary::True},
      {Strategy::Majority, "E(a)", Ternary::True},    {Strategy::Existential, "A(a)", Ternary::True},
      {Strategy::Safe, "D(a)", Ternary::False},       {Strategy::Universal, "E(a)", Ternary::False},
      {Strategy::Majority, "A(a)", Ternary::False},
  };
  Outcome o;
  for (const Case& c : cases) {
    Ternary got = strategy_entails(c.s, r, m1, parse_query(c.q));
    if (got != c.want) {
      o.ok = false;
      o.detail += std::string(to_string(c.s)) + " " + c.q + " = " + to_string(got) + "; ";
    }
  }
  o.detail += "7 verdicts checked";
  return o;
}

Outcome ac3() {
  std::size_t checks = 0, mismatches = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams p;
    p.seed = seed;
    KnowledgeBase kb = random_kb(p);
    for (const Query& q : ground_probes(kb, seed))
      for (std::string_view name : kNamedSemantics) {
        ++checks;
        if (answer_named_direct(kb, name, q, kDepth) != answer(kb, named_semantics(name), q, kDepth))
          ++mismatches;
      }
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " mismatches in " + std::to_string(checks) + " checks"};
}

Outcome ac4() {
  auto start = std::chrono::steady_clock::now();
  std::size_t mismatches = 0, largest = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenParams p;
    p.seed = seed;
    p.n_assertions = 4 + seed % 9;  // 4..12
    p.n_constants = 1 + seed % 3;
    p.n_constraints = 1 + seed % 4;
    KnowledgeBase kb = random_kb(p);
    largest = std::max(largest, kb.abox().size());
    if (repairs(kb.tbox, kb.abox(), kDepth) != repairs_bruteforce(kb.tbox, kb.abox(), kDepth))
      ++mismatches;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && secs < 60.0 && largest <= 12,
          std::to_string(mismatches) + " mismatches on 500 KBs (|A| <= " +
              std::to_string(largest) + ") in " + std::to_string(secs) + " s"};
}

Outcome ac5() {
  std::size_t algebra_fail = 0, norm_fail = 0;
  Rng words(17);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenParams p;
    p.seed = seed;
    KnowledgeBase kb = random_kb(p);
    Reasoner r(kb.tbox, kDepth);
    Rng rng(seed);
    std::vector<ABox> members;
    std::size_t n = 1 + rng.below(3);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Atom> keep;
      for (const Atom& f : kb.abox())
        if (rng.chance(60)) keep.push_back(f);
      members.emplace_back(std::move(keep));
    }
    MBox m(members);
    MBox cl = expand_cl(r, m), rep = split_rep(r, m), card = select_card(m);
    bool ok = expand_cl(r, cl) == cl && split_rep(r, rep) == rep && select_card(card) == card;
    ModifierWord d(random_word(words, 4, false));
    MBox d_cl = apply_word(r, d, cl);
    MBox d_rep = apply_word(r, d, rep);
    ok = ok && expand_cl(r, d_cl) == d_cl && split_rep(r, d_rep) == d_rep;
    algebra_fail += !ok;
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenParams p;
    p.seed = 10000 + seed;
    p.n_assertions = 3 + seed % 6;  // <= 8
    KnowledgeBase kb = random_kb(p);
    Reasoner r(kb.tbox, kDepth);
    ModifierWord w(random_word(words, 8, true));
    if (apply_word(r, w, kb.mbox) != apply_composite(normalize_word(w), r, kb.mbox)) ++norm_fail;
  }
  return {algebra_fail == 0 && norm_fail == 0,
          std::to_string(algebra_fail) + "/200 algebra failures, " + std::to_string(norm_fail) +
              "/300 normalizer mismatches"};
}

Outcome ac6() {
  std::size_t edge_checks = 0, edge_fail = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams p;
    p.seed = seed;
    KnowledgeBase kb = random_kb(p);
    Reasoner r(kb.tbox, kDepth);
    auto all = all_composites(r, kb.mbox);
    for (ModifierId x : kAllModifiers)
      for (ModifierId y : kAllModifiers) {
        InclusionKind k = inclusion_between(x, y);
        if (k == InclusionKind::None || x == y) continue;
        ++edge_checks;
        InclusionReport rep = inspect_inclusion(r, all[ordinal(x) - 1], all[ordinal(y) - 1]);
        bool ok = rep.subset_r && rep.injective;
        if (k == InclusionKind::Subset) ok = ok && rep.plain_subset;
        if (k == InclusionKind::SubsetCl) ok = ok && rep.closure_subset;
        edge_fail += !ok;
      }
  }
  std::size_t fixtures = 0, fixture_fail = 0;
  for (const ModifierWitness& w : modifier_witnesses()) {
    ++fixtures;
    bool xy = check_inclusion_empirically(w.x, w.y, w.kb.tbox, w.kb.abox(), kDepth);
    bool yx = check_inclusion_empirically(w.y, w.x, w.kb.tbox, w.kb.abox(), kDepth);
    fixture_fail += xy != w.x_in_y || yx != w.y_in_x;
  }
  return {edge_fail == 0 && fixture_fail == 0 && fixtures > 0,
          std::to_string(edge_fail) + "/" + std::to_string(edge_checks) + " edge failures, " +
              std::to_string(fixture_fail) + "/" + std::to_string(fixtures) +
              " Example 3/4 fixture failures"};
}

Outcome ac7() {
  GenParams p;
  LatticeReport rep = verify_lattice(200, p, kDepth);
  std::size_t witness_fail = 0;
  for (const SemanticsWitness& w : regression_witnesses()) {
    Ternary a = answer(w.kb, w.pair.first, w.query, kDepth);
    Ternary b = answer(w.kb, w.pair.second, w.query, kDepth);
    witness_fail += a != w.expected.first || b != w.expected.second;
  }
  return {rep.violations.empty() && rep.skipped_unknown == 0 && witness_fail == 0,
          std::to_string(rep.violations.size()) + " violations over 200 seeds (" +
              std::to_string(rep.checks) + " checks), " + std::to_string(witness_fail) + "/" +
              std::to_string(regression_witnesses().size()) + " witness failures"};
}

Outcome ac8() {
  std::size_t kbs = 0, checks = 0, mismatches = 0;
  for (std::uint64_t seed = 0; kbs < 100; ++seed) {
    GenParams p;
    p.seed = seed;
    KnowledgeBase kb = random_kb(p);
    if (is_consistent(kb.tbox, kb.abox(), kDepth) != Ternary::True) continue;
    ++kbs;
    GridEvaluator ev(kb, kDepth);
    for (const Query& q : ground_probes(kb, seed)) {
      Ternary plain = entails(kb.tbox, kb.abox(), q, kDepth);
      for (const auto& row : ev.evaluate(q))
        for (Ternary t : row) {
          ++checks;
          mismatches += t != plain;
        }
    }
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " mismatches in " + std::to_string(checks) +
              " checks on 100 consistent KBs"};
}

Outcome ac9() {
  std::vector<std::pair<std::string, std::string>> files;  // path, query
  std::size_t n = 0;
  auto add = [&](const KnowledgeBase& kb, const std::string& q) {
    std::string path = "ita_acceptance_" + std::to_string(n++) + ".kb";
    std::ofstream(path) << serialize_kb(kb);
    files.emplace_back(path, q);
  };
  add(running_example(), "A(a)");
  for (const SemanticsWitness& w : regression_witnesses()) add(w.kb, w.query.to_string());

  auto capture = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  std::size_t runs = 0, diffs = 0;
  for (const auto& [path, q] : files) {
    std::vector<std::vector<std::string>> commands = {{"matrix", path, "--query", q},
                                                      {"--json", "matrix", path, "--query", q}};
    for (ModifierId id : kAllModifiers) {
      commands.push_back({"modify", path, "--modifier", std::string(to_string(id))});
      commands.push_back({"--json", "modify", path, "--modifier", std::string(to_string(id))});
    }
    for (const auto& c : commands) {
      ++runs;
      diffs += capture(c) != capture(c);
    }
  }
  for (const auto& f : files) std::remove(f.first.c_str());
  return {diffs == 0,
          std::to_string(diffs) + " differing outputs over " + std::to_string(runs) +
              " repeated matrix/modify runs"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 running example modifiers", ac1}, {"AC2 running example strategies", ac2},
      {"AC3 named semantics cross-check", ac3}, {"AC4 repair oracle equivalence", ac4},
      {"AC5 modifier algebra", ac5},           {"AC6 inclusion structure", ac6},
      {"AC7 lattice soundness", ac7},          {"AC8 collapse on consistent KBs", ac8},
      {"AC9 deterministic output", ac9},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
