#pragma once
// Shared generators and helpers for the unit tests.

#include <string>
#include <vector>

#include "ita/harness.hpp"
#include "ita/kb.hpp"
#include "ita/logic.hpp"
#include "ita/text.hpp"

namespace ita::test {

inline KnowledgeBase kb(std::string_view text) { return parse_kb(text); }
inline Query q(std::string_view text) { return parse_query(text); }
inline MBox mb(std::string_view text) { return parse_mbox(text); }

inline Atom ground(const std::string& pred, std::initializer_list<const char*> args) {
  std::vector<Term> ts;
  for (const char* a : args) ts.push_back(Term::constant(a));
  return Atom(pred, std::move(ts));
}

inline const char* kExample1 =
    "@tbox\n"
    "A(X), B(X) -> !.\n"
    "A(X), C(X) -> !.\n"
    "B(X), C(X) -> !.\n"
    "A(X) -> D(X).\n"
    "B(X) -> D(X).\n"
    "C(X) -> D(X).\n"
    "B(X) -> E(X).\n"
    "C(X) -> E(X).\n"
    "@abox\n"
    "A(a). B(a). C(a). A(b).\n";

/// Random ground atoms over `preds` (name, arity) and `consts`.
inline std::vector<Atom> random_facts(Rng& rng, std::size_t n,
                                      const std::vector<std::pair<std::string, std::size_t>>& preds,
                                      const std::vector<std::string>& consts) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [p, k] = preds[rng.below(preds.size())];
    std::vector<Term> args;
    for (std::size_t j = 0; j < k; ++j) args.push_back(Term::constant(consts[rng.below(consts.size())]));
    out.emplace_back(p, std::move(args));
  }
  return out;
}

/// Random non-empty MBox whose members are subsets of the KB's ABox.
inline MBox random_sub_mbox(Rng& rng, const ABox& a, std::size_t max_members = 3) {
  std::vector<ABox> members;
  std::size_t n = 1 + rng.below(max_members);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Atom> keep;
    for (const Atom& f : a)
      if (rng.chance(60)) keep.push_back(f);
    members.emplace_back(std::move(keep));
  }
  return MBox(std::move(members));
}

/// Default generator params for the property suites.
inline GenParams params(std::uint64_t seed) {
  GenParams p;
  p.seed = seed;
  return p;
}

}  // namespace ita::test
