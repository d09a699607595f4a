#include "ita/modifiers.hpp"

#include <algorithm>
#include <vector>

#include "ita/error.hpp"
#include "ita/repairs.hpp"

namespace ita {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"R",  "MR",  "CMR", "MCMR",
                                                     "CR", "MCR", "RC",  "MRC"};

}  // namespace

std::string_view to_string(ModifierId id) { return kNames[static_cast<int>(id)]; }

int ordinal(ModifierId id) { return static_cast<int>(id) + 1; }

std::optional<ModifierId> modifier_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<ModifierId>(i);
  return std::nullopt;
}

ModifierWord::ModifierWord(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw Error(ErrorKind::Syntax, "empty modifier word");
  for (char c : letters_)
    if (c != 'C' && c != 'R' && c != 'M')
      throw Error(ErrorKind::Syntax,
                  std::string("modifier word letter must be C, R or M, got '") + c +
                      "'");
}

bool ModifierWord::has_repair_step() const noexcept {
  return letters_.find('R') != std::string::npos;
}

MBox expand_cl(Reasoner& r, const MBox& m) {
  std::vector<ABox> out;
  for (const ABox& a : m) out.push_back(r.closure(a));
  return MBox(std::move(out));
}

MBox split_rep(Reasoner& r, const MBox& m) {
  std::vector<ABox> out;
  for (const ABox& a : m)
    for (const ABox& rep : repairs(r, a)) out.push_back(rep);
  return MBox(std::move(out));
}

MBox select_card(const MBox& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyMBox, "cardinality selection on an empty MBox");
  std::size_t best = 0;
  for (const ABox& a : m) best = std::max(best, a.size());
  std::vector<ABox> out;
  for (const ABox& a : m)
    if (a.size() == best) out.push_back(a);
  return MBox(std::move(out));
}

MBox expand_cl(const TBox& tbox, const MBox& m, std::size_t depth_bound) {
  Reasoner r(tbox, depth_bound);
  return expand_cl(r, m);
}

MBox split_rep(const TBox& tbox, const MBox& m, std::size_t depth_bound) {
  Reasoner r(tbox, depth_bound);
  return split_rep(r, m);
}

MBox apply_word(Reasoner& r, const ModifierWord& w, const MBox& m) {
  MBox cur = m;
  const std::string& s = w.letters();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    switch (*it) {
      case 'C': cur = expand_cl(r, cur); break;
      case 'R': cur = split_rep(r, cur); break;
      case 'M': cur = select_card(cur); break;
    }
  }
  return cur;
}

MBox apply_composite(ModifierId id, Reasoner& r, const MBox& m) {
  return apply_word(r, ModifierWord(to_string(id)), m);
}

MBox apply_composite(ModifierId id, const TBox& tbox, const MBox& m,
                     std::size_t depth_bound) {
  Reasoner r(tbox, depth_bound);
  return apply_composite(id, r, m);
}

std::array<MBox, 8> all_composites(Reasoner& r, const MBox& m) {
  std::array<MBox, 8> out;
  out[0] = split_rep(r, m);
  out[1] = select_card(out[0]);
  out[2] = expand_cl(r, out[1]);
  out[3] = select_card(out[2]);
  out[4] = expand_cl(r, out[0]);
  out[5] = select_card(out[4]);
  out[6] = split_rep(r, expand_cl(r, m));
  out[7] = select_card(out[6]);
  return out;
}

namespace {

// One rewrite step; returns false at the fixpoint.
bool rewrite_once(std::string& w) {
  // 1
  std::size_t last_r = w.rfind('R');
  if (last_r != std::string::npos) {
    std::size_t m = w.find('M', last_r + 1);
    if (m != std::string::npos) {
      w.erase(m, 1);
      return true;
    }
  }
  // 2
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) {
      w.erase(i, 1);
      return true;
    }
  // 3 and 4
  for (char letter : {'C', 'R'}) {
    std::size_t first = w.find(letter);
    if (first != std::string::npos && w.find(letter, first + 1) != std::string::npos) {
      w.erase(first, 1);
      return true;
    }
  }
  return false;
}

}  // namespace

std::string reduce_word(std::string_view letters) {
  std::string w(letters);
  while (rewrite_once(w)) {
  }
  return w;
}

ModifierId normalize_word(const ModifierWord& w) {
  if (!w.has_repair_step())
    throw Error(ErrorKind::NoRepairStep,
                "word contains no R: '" + w.letters() + "' does not yield a consistent MBox");
  std::string reduced = reduce_word(w.letters());
  auto id = modifier_from_name(reduced);
  if (!id)
    throw Error(ErrorKind::InvalidArgument,
                "word '" + w.letters() + "' reduced to non-canonical '" + reduced + "'");
  return *id;
}

std::string_view to_string(InclusionKind k) {
  switch (k) {
    case InclusionKind::Subset: return "subset";
    case InclusionKind::SubsetCl: return "subset-cl";
    case InclusionKind::SubsetR: return "subset-r";
    case InclusionKind::None: return "none";
  }
  return "none";
}

namespace {

using Table = std::array<std::array<InclusionKind, 8>, 8>;

InclusionKind compose(InclusionKind a, InclusionKind b) {
  if (a == InclusionKind::None || b == InclusionKind::None) return InclusionKind::None;
  if (a == InclusionKind::Subset && b == InclusionKind::Subset) return InclusionKind::Subset;
  return InclusionKind::SubsetR;
}

Table build_table() {
  using M = ModifierId;
  using K = InclusionKind;
  Table t{};
  for (auto& row : t) row.fill(K::None);
  auto set = [&](M x, M y, K k) { t[static_cast<int>(x)][static_cast<int>(y)] = k; };
  for (M m : kAllModifiers) set(m, m, K::Subset);
  set(M::MR, M::R, K::Subset);
  set(M::MCMR, M::CMR, K::Subset);
  set(M::MCR, M::CR, K::Subset);
  set(M::MRC, M::RC, K::Subset);
  set(M::CMR, M::CR, K::Subset);
  set(M::R, M::CR, K::SubsetCl);
  set(M::MR, M::CMR, K::SubsetCl);
  set(M::CR, M::RC, K::SubsetR);
  // Floyd-Warshall keeping the most specific kind per pair.
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        K via = compose(t[i][k], t[k][j]);
        if (via > t[i][j]) t[i][j] = via;
      }
  return t;
}

// Kuhn's augmenting paths over the "member of X inside member of Y" graph.
bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<bool>& seen, std::vector<std::size_t>& match_y) {
  for (std::size_t v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = true;
    if (match_y[v] == SIZE_MAX || augment(match_y[v], adj, seen, match_y)) {
      match_y[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

InclusionKind inclusion_between(ModifierId x, ModifierId y) {
  static const Table table = build_table();
  return table[static_cast<int>(x)][static_cast<int>(y)];
}

InclusionReport inspect_inclusion(Reasoner& r, const MBox& x, const MBox& y) {
  InclusionReport rep;
  const auto& xs = x.members();
  const auto& ys = y.members();
  std::vector<std::vector<std::size_t>> adj(xs.size());
  rep.subset_r = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (xs[i].is_subset_of(ys[j])) adj[i].push_back(j);
    if (adj[i].empty()) rep.subset_r = false;
  }
  if (rep.subset_r) {
    std::vector<std::size_t> match_y(ys.size(), SIZE_MAX);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<bool> seen(ys.size(), false);
      if (augment(i, adj, seen, match_y)) ++matched;
    }
    rep.injective = matched == xs.size();
    rep.bijective = rep.injective && xs.size() == ys.size();
  }
  rep.plain_subset = std::all_of(xs.begin(), xs.end(),
                                 [&](const ABox& a) { return y.contains(a); });
  MBox closed = expand_cl(r, x);
  rep.closure_subset = std::all_of(closed.begin(), closed.end(),
                                   [&](const ABox& a) { return y.contains(a); });
  return rep;
}

bool check_inclusion_empirically(ModifierId x, ModifierId y, const TBox& tbox,
                                 const ABox& abox, std::size_t depth_bound) {
  Reasoner r(tbox, depth_bound);
  auto all = all_composites(r, MBox({abox}));
  auto rep = inspect_inclusion(r, all[ordinal(x) - 1], all[ordinal(y) - 1]);
  return rep.subset_r && rep.injective;
}

}  // namespace ita
