#include "ita/harness.hpp"

#include <algorithm>
#include <set>

#include "ita/error.hpp"

namespace ita {

namespace {

std::string unary_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "U" + std::to_string(i);
}

std::string binary_name(std::size_t i) {
  static const char* names[] = {"p", "r", "s", "t", "u", "v", "w"};
  if (i < std::size(names)) return names[i];
  return "p" + std::to_string(i);
}

std::string constant_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "c" + std::to_string(i);
}

Atom un(const std::string& p, const Term& t) { return Atom(p, {t}); }
Atom bin(const std::string& p, const Term& a, const Term& b) { return Atom(p, {a, b}); }

}  // namespace

KnowledgeBase random_kb(const GenParams& params) {
  Rng rng(params.seed);
  const std::size_t n_bin = params.n_predicates / 4;
  const std::size_t n_un = params.n_predicates - n_bin;
  if (n_un == 0) return singleton_kb(TBox(), ABox());

  const Term x = Term::variable("X"), y = Term::variable("Y"), z = Term::variable("Z");
  auto pick_un = [&] { return unary_name(rng.below(n_un)); };
  auto pick_bin = [&] { return binary_name(rng.below(n_bin)); };
  auto other_un = [&](const std::string& avoid) {
    if (n_un == 1) return avoid;
    std::string s;
    do s = pick_un();
    while (s == avoid);
    return s;
  };

  std::vector<PositiveAxiom> pos;
  for (std::size_t k = 0; k < params.n_pos_axioms; ++k) {
    std::size_t shapes = n_bin == 0 ? 1 : (params.allow_existential_heads ? 7 : 5);
    std::size_t shape = rng.below(shapes + 3);  // extra weight on concept inclusion
    if (shape >= shapes) shape = 0;
    switch (shape) {
      case 0: {
        std::string a = pick_un();
        pos.emplace_back(std::vector{un(a, x)}, std::vector{un(other_un(a), x)});
        break;
      }
      case 1:
        pos.emplace_back(std::vector{bin(pick_bin(), x, y)}, std::vector{un(pick_un(), x)});
        break;
      case 2:
        pos.emplace_back(std::vector{bin(pick_bin(), x, y)}, std::vector{un(pick_un(), y)});
        break;
      case 3:
        pos.emplace_back(std::vector{bin(pick_bin(), x, y)},
                         std::vector{bin(pick_bin(), x, y)});
        break;
      case 4:
        pos.emplace_back(std::vector{bin(pick_bin(), x, y)},
                         std::vector{bin(pick_bin(), y, x)});
        break;
      case 5:
        pos.emplace_back(std::vector{un(pick_un(), x)}, std::vector{bin(pick_bin(), x, z)});
        break;
      case 6:
        pos.emplace_back(std::vector{un(pick_un(), x)}, std::vector{bin(pick_bin(), z, x)});
        break;
    }
  }

  std::vector<NegativeConstraint> neg;
  for (std::size_t k = 0; k < params.n_constraints; ++k) {
    std::size_t shape = n_bin == 0 ? 0 : rng.below(5);
    if (shape >= 3) shape = 0;
    switch (shape) {
      case 0: {
        std::string a = pick_un();
        neg.emplace_back(std::vector{un(a, x), un(other_un(a), x)});
        break;
      }
      case 1:
        neg.emplace_back(std::vector{bin(pick_bin(), x, y), un(pick_un(), rng.chance(50) ? x : y)});
        break;
      case 2: {
        std::string p = pick_bin(), r = pick_bin();
        if (p == r) {
          // a duplicated body atom is a unary constraint in disguise
          neg.emplace_back(std::vector{bin(p, x, y), un(pick_un(), x)});
          break;
        }
        neg.emplace_back(std::vector{bin(p, x, y), bin(r, x, y)});
        break;
      }
    }
  }

  std::vector<Atom> facts;
  if (params.n_constants > 0) {
    auto c = [&] { return Term::constant(constant_name(rng.below(params.n_constants))); };
    for (std::size_t k = 0; k < params.n_assertions; ++k) {
      if (n_bin > 0 && rng.chance(25))
        facts.push_back(bin(pick_bin(), c(), c()));
      else
        facts.push_back(un(pick_un(), c()));
    }
  }
  TBox tbox(std::move(pos), std::move(neg));
  if (!params.allow_self_conflicts) {
    std::erase_if(facts, [&](const Atom& f) {
      return is_consistent(tbox, ABox({f}), default_chase_depth()) == Ternary::False;
    });
  }
  return singleton_kb(std::move(tbox), ABox(std::move(facts)));
}

std::vector<Query> probe_queries(const KnowledgeBase& kb, Rng& rng, std::size_t extra) {
  Signature sig = signature_of(kb);
  std::vector<std::string> consts;
  for (const ABox& a : kb.mbox)
    for (const std::string& c : a.constants()) consts.push_back(c);
  std::sort(consts.begin(), consts.end());
  consts.erase(std::unique(consts.begin(), consts.end()), consts.end());
  if (consts.empty()) consts.push_back("a");

  std::vector<Atom> ground;
  for (const auto& [pred, arity] : sig) {
    if (arity == 1) {
      for (const auto& c : consts) ground.push_back(Atom(pred, {Term::constant(c)}));
    } else if (arity == 2) {
      for (const auto& c1 : consts)
        for (const auto& c2 : consts)
          ground.push_back(Atom(pred, {Term::constant(c1), Term::constant(c2)}));
    }
  }
  std::set<Query> out;
  for (const Atom& g : ground) out.insert(Query({g}));
  if (ground.empty()) return {out.begin(), out.end()};

  std::vector<std::pair<std::string, std::size_t>> preds;
  for (const auto& [pred, arity] : sig)
    if (arity <= 2) preds.emplace_back(pred, arity);
  const Term x = Term::variable("X"), y = Term::variable("Y"), z = Term::variable("Z");
  auto make = [&](const std::pair<std::string, std::size_t>& p, const Term& a,
                  const Term& b) {
    return p.second == 1 ? Atom(p.first, {a}) : Atom(p.first, {a, b});
  };
  for (std::size_t k = 0; k < extra; ++k) {
    const auto& p1 = preds[rng.below(preds.size())];
    const auto& p2 = preds[rng.below(preds.size())];
    // Join on X; the second atom may use X in either position.
    Atom first = make(p1, x, y);
    Atom second = rng.chance(50) ? make(p2, x, z) : make(p2, z, x);
    if (p2.second == 1) second = make(p2, rng.chance(50) ? x : y, z);
    out.insert(Query({first, second}));
  }
  for (std::size_t k = 0; k < extra; ++k) {
    Atom a = ground[rng.below(ground.size())];
    Atom b = ground[rng.below(ground.size())];
    if (a != b) out.insert(Query({a, b}));
  }
  return {out.begin(), out.end()};
}

namespace {

// nullopt when some verdict was Unknown or a closure could not be computed.
std::optional<std::vector<Violation>> check_kb(const KnowledgeBase& kb,
                                               const std::vector<Query>& probes,
                                               std::size_t depth_bound,
                                               const ProductivityRelation& relation,
                                               std::size_t* checks) {
  std::vector<Violation> out;
  try {
    GridEvaluator ev(kb, depth_bound);
    auto edges = relation.closed_edges();
    for (const Query& q : probes) {
      Grid g = ev.evaluate(q);
      auto at = [&](SemanticsId s) {
        return g[static_cast<std::size_t>(s.modifier)][static_cast<std::size_t>(s.strategy)];
      };
      for (const auto& row : g)
        for (Ternary t : row)
          if (t == Ternary::Unknown) return std::nullopt;
      for (const auto& [a, b] : edges) {
        if (checks) ++*checks;
        if (at(a) == Ternary::True && at(b) != Ternary::True)
          out.push_back(Violation{{a, b}, kb, q, {at(a), at(b)}, 0});
      }
    }
  } catch (const NotSaturatedError&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

std::vector<Violation> check_kb_against(const KnowledgeBase& kb,
                                        const std::vector<Query>& probes,
                                        std::size_t depth_bound,
                                        const ProductivityRelation& relation) {
  auto r = check_kb(kb, probes, depth_bound, relation, nullptr);
  if (!r) throw NotSaturatedError("KB could not be decided within the chase bound");
  return *r;
}

LatticeReport verify_lattice(std::size_t trials, const GenParams& params,
                             std::size_t depth_bound,
                             const ProductivityRelation& relation) {
  LatticeReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    GenParams p = params;
    p.seed = params.seed + t;
    KnowledgeBase kb = random_kb(p);
    Rng rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
    auto probes = probe_queries(kb, rng);
    auto found = check_kb(kb, probes, depth_bound, relation, &report.checks);
    if (!found) {
      ++report.skipped_unknown;
      continue;
    }
    for (Violation& v : *found) {
      v.seed = p.seed;
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace ita
