#include "ita/semantics.hpp"

#include <algorithm>

#include "ita/error.hpp"
#include "ita/repairs.hpp"

namespace ita {

namespace {

constexpr std::array<std::string_view, 4> kStrategyNames = {"safe", "univ", "maj",
                                                            "exist"};

}  // namespace

std::string_view to_string(Strategy s) { return kStrategyNames[static_cast<int>(s)]; }

std::optional<Strategy> strategy_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kStrategyNames.size(); ++i)
    if (kStrategyNames[i] == name) return static_cast<Strategy>(i);
  return std::nullopt;
}

SemanticsId SemanticsId::from_index(std::size_t i) {
  if (i >= kSemanticsCount)
    throw Error(ErrorKind::InvalidArgument, "semantics index out of range");
  return {static_cast<ModifierId>(i / 4), static_cast<Strategy>(i % 4)};
}

std::string to_string(SemanticsId s) {
  return std::string(to_string(s.modifier)) + ":" + std::string(to_string(s.strategy));
}

SemanticsId named_semantics(std::string_view name) {
  if (name == "AR") return {ModifierId::R, Strategy::Universal};
  if (name == "IAR") return {ModifierId::R, Strategy::Safe};
  if (name == "CAR") return {ModifierId::RC, Strategy::Universal};
  if (name == "ICAR") return {ModifierId::RC, Strategy::Safe};
  if (name == "ICR") return {ModifierId::CR, Strategy::Safe};
  throw Error(ErrorKind::UnknownName, "unknown semantics name '" + std::string(name) + "'");
}

SemanticsId parse_semantics(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return named_semantics(spec);
  auto mod = modifier_from_name(spec.substr(0, colon));
  auto strat = strategy_from_name(spec.substr(colon + 1));
  if (!mod || !strat)
    throw Error(ErrorKind::UnknownName,
                "unknown semantics '" + std::string(spec) +
                    "' (expected MOD:safe|univ|maj|exist or AR/IAR/CAR/ICAR/ICR)");
  return {*mod, *strat};
}

Ternary aggregate(Strategy s, const std::vector<Ternary>& members) {
  if (members.empty()) throw Error(ErrorKind::EmptyMBox, "strategy over an empty MBox");
  std::size_t yes = 0, unknown = 0;
  for (Ternary t : members) {
    if (t == Ternary::True) ++yes;
    if (t == Ternary::Unknown) ++unknown;
  }
  const std::size_t n = members.size();
  const std::size_t no = n - yes - unknown;
  switch (s) {
    case Strategy::Universal:
      if (no > 0) return Ternary::False;
      return unknown > 0 ? Ternary::Unknown : Ternary::True;
    case Strategy::Existential:
      if (yes > 0) return Ternary::True;
      return unknown > 0 ? Ternary::Unknown : Ternary::False;
    case Strategy::Majority:
      if (2 * yes > n) return Ternary::True;
      if (2 * (yes + unknown) <= n) return Ternary::False;
      return Ternary::Unknown;
    case Strategy::Safe:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "safe strategy needs the intersection");
}

Ternary strategy_entails(Strategy s, Reasoner& r, const MBox& m, const Query& q) {
  if (m.empty()) throw Error(ErrorKind::EmptyMBox, "strategy over an empty MBox");
  if (s == Strategy::Safe) return r.entails(mbox_intersection(m), q);
  std::vector<Ternary> verdicts;
  for (const ABox& a : m) verdicts.push_back(r.entails(a, q));
  return aggregate(s, verdicts);
}

Ternary strategy_entails(Strategy s, const TBox& tbox, const MBox& m, const Query& q,
                         std::size_t depth_bound) {
  Reasoner r(tbox, depth_bound);
  return strategy_entails(s, r, m, q);
}

Ternary answer(const KnowledgeBase& kb, SemanticsId sem, const Query& q,
               std::size_t depth_bound) {
  Reasoner r(kb.tbox, depth_bound);
  return strategy_entails(sem.strategy, r, apply_composite(sem.modifier, r, kb.mbox), q);
}

namespace {

ABox intersect_all(const MBox& m) {
  ABox acc = m.members().front();
  for (const ABox& a : m) acc = intersect(acc, a);
  return acc;
}

Ternary all_of_members(const TBox& t, const MBox& m, const Query& q, std::size_t depth) {
  bool unknown = false;
  for (const ABox& a : m) {
    Ternary v = entails(t, a, q, depth);
    if (v == Ternary::False) return Ternary::False;
    if (v == Ternary::Unknown) unknown = true;
  }
  return unknown ? Ternary::Unknown : Ternary::True;
}

}  // namespace

Ternary answer_named_direct(const KnowledgeBase& kb, std::string_view name,
                            const Query& q, std::size_t depth_bound) {
  const TBox& t = kb.tbox;
  const ABox& a = kb.abox();
  if (name == "AR") return all_of_members(t, repairs(t, a, depth_bound), q, depth_bound);
  if (name == "IAR")
    return entails(t, intersect_all(repairs(t, a, depth_bound)), q, depth_bound);
  if (name == "CAR" || name == "ICAR") {
    MBox closed_repairs = repairs(t, positive_closure(t, a, depth_bound), depth_bound);
    if (name == "CAR") return all_of_members(t, closed_repairs, q, depth_bound);
    return entails(t, intersect_all(closed_repairs), q, depth_bound);
  }
  if (name == "ICR") {
    std::vector<ABox> closed;
    for (const ABox& rep : repairs(t, a, depth_bound))
      closed.push_back(positive_closure(t, rep, depth_bound));
    return entails(t, intersect_all(MBox(std::move(closed))), q, depth_bound);
  }
  throw Error(ErrorKind::UnknownName, "unknown semantics name '" + std::string(name) + "'");
}

GridEvaluator::GridEvaluator(const KnowledgeBase& kb, std::size_t depth_bound)
    : reasoner_(kb.tbox, depth_bound) {
  mboxes_ = all_composites(reasoner_, kb.mbox);
  for (std::size_t i = 0; i < 8; ++i) intersections_[i] = mbox_intersection(mboxes_[i]);
}

Ternary GridEvaluator::evaluate(SemanticsId s, const Query& q) {
  std::size_t i = static_cast<std::size_t>(s.modifier);
  if (s.strategy == Strategy::Safe) return reasoner_.entails(intersections_[i], q);
  std::vector<Ternary> verdicts;
  for (const ABox& a : mboxes_[i]) verdicts.push_back(reasoner_.entails(a, q));
  return aggregate(s.strategy, verdicts);
}

Grid GridEvaluator::evaluate(const Query& q) {
  Grid g;
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<Ternary> verdicts;
    for (const ABox& a : mboxes_[i]) verdicts.push_back(reasoner_.entails(a, q));
    g[i][0] = reasoner_.entails(intersections_[i], q);
    g[i][1] = aggregate(Strategy::Universal, verdicts);
    g[i][2] = aggregate(Strategy::Majority, verdicts);
    g[i][3] = aggregate(Strategy::Existential, verdicts);
  }
  return g;
}

Grid evaluate_grid(const KnowledgeBase& kb, const Query& q, std::size_t depth_bound) {
  GridEvaluator ev(kb, depth_bound);
  return ev.evaluate(q);
}

std::string_view to_string(ProductivityVerdict v) {
  switch (v) {
    case ProductivityVerdict::Equivalent: return "equivalent";
    case ProductivityVerdict::StrictlyLessProductive: return "strictly less productive";
    case ProductivityVerdict::StrictlyMoreProductive: return "strictly more productive";
    case ProductivityVerdict::Incomparable: return "incomparable";
  }
  return "incomparable";
}

namespace {

std::vector<ProductivityRelation::Edge> standard_edges() {
  using M = ModifierId;
  using S = Strategy;
  std::vector<ProductivityRelation::Edge> out;
  auto edge = [&](S s, M a, M b) { out.push_back({{a, s}, {b, s}}); };
  auto same = [&](S s, M a, M b) {
    edge(s, a, b);
    edge(s, b, a);
  };

  edge(S::Safe, M::R, M::MR);
  edge(S::Safe, M::R, M::CR);
  edge(S::Safe, M::MR, M::CMR);
  edge(S::Safe, M::CMR, M::MCMR);
  edge(S::Safe, M::CR, M::CMR);
  edge(S::Safe, M::CR, M::MCR);
  edge(S::Safe, M::RC, M::MRC);

  same(S::Universal, M::R, M::CR);
  same(S::Universal, M::MR, M::CMR);
  edge(S::Universal, M::R, M::MR);
  edge(S::Universal, M::CMR, M::MCMR);
  edge(S::Universal, M::R, M::MCR);
  edge(S::Universal, M::RC, M::MRC);

  same(S::Majority, M::R, M::CR);
  same(S::Majority, M::MR, M::CMR);
  // No CR -> RC under safe, univ or maj. A repair of Cl(A) need not contain
  // any closed repair of A: it can keep a consequence of a dropped assertion
  // (see the *_counterexample fixtures). For maj, RC can also hold more
  // members than CR, which shifts the threshold.

  edge(S::Existential, M::MCMR, M::CMR);
  same(S::Existential, M::CMR, M::MR);
  edge(S::Existential, M::MR, M::R);
  same(S::Existential, M::R, M::CR);
  edge(S::Existential, M::MCR, M::CR);
  edge(S::Existential, M::MRC, M::RC);
  edge(S::Existential, M::CR, M::RC);

  for (M m : kAllModifiers)
    for (std::size_t s = 0; s + 1 < kAllStrategies.size(); ++s)
      out.push_back({{m, kAllStrategies[s]}, {m, kAllStrategies[s + 1]}});
  return out;
}

}  // namespace

ProductivityRelation::ProductivityRelation() : base_(standard_edges()) { close(); }

ProductivityRelation::ProductivityRelation(const std::vector<Edge>& extra)
    : base_(standard_edges()) {
  base_.insert(base_.end(), extra.begin(), extra.end());
  close();
}

void ProductivityRelation::close() {
  for (auto& row : reach_) row.fill(false);
  for (std::size_t i = 0; i < kSemanticsCount; ++i) reach_[i][i] = true;
  for (const auto& [a, b] : base_) reach_[a.index()][b.index()] = true;
  for (std::size_t k = 0; k < kSemanticsCount; ++k)
    for (std::size_t i = 0; i < kSemanticsCount; ++i)
      if (reach_[i][k])
        for (std::size_t j = 0; j < kSemanticsCount; ++j)
          if (reach_[k][j]) reach_[i][j] = true;
}

ProductivityVerdict ProductivityRelation::compare(SemanticsId a, SemanticsId b) const {
  bool ab = leq(a, b), ba = leq(b, a);
  if (ab && ba) return ProductivityVerdict::Equivalent;
  if (ab) return ProductivityVerdict::StrictlyLessProductive;
  if (ba) return ProductivityVerdict::StrictlyMoreProductive;
  return ProductivityVerdict::Incomparable;
}

std::vector<ProductivityRelation::Edge> ProductivityRelation::closed_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < kSemanticsCount; ++i)
    for (std::size_t j = 0; j < kSemanticsCount; ++j)
      if (i != j && reach_[i][j])
        out.push_back({SemanticsId::from_index(i), SemanticsId::from_index(j)});
  return out;
}

std::string ProductivityRelation::to_dot() const {
  std::string out = "digraph productivity {\n";
  for (std::size_t i = 0; i < kSemanticsCount; ++i)
    out += "  \"" + to_string(SemanticsId::from_index(i)) + "\";\n";
  for (const auto& [a, b] : closed_edges())
    out += "  \"" + to_string(a) + "\" -> \"" + to_string(b) + "\";\n";
  return out + "}\n";
}

nlohmann::json ProductivityRelation::to_json() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < kSemanticsCount; ++i)
    nodes.push_back(to_string(SemanticsId::from_index(i)));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : closed_edges())
    edges.push_back(nlohmann::json::array({to_string(a), to_string(b)}));
  return {{"nodes", nodes}, {"edges", edges}};
}

const ProductivityRelation& standard_productivity() {
  static const ProductivityRelation rel;
  return rel;
}

ProductivityVerdict productivity_compare(SemanticsId a, SemanticsId b) {
  return standard_productivity().compare(a, b);
}

}  // namespace ita
