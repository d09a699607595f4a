#pragma once

// Bounded restricted chase, positive closure, BCQ entailment, consistency.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ita/kb.hpp"
#include "ita/logic.hpp"

namespace ita {

enum class Ternary { False, True, Unknown };

std::string to_string(Ternary t);
inline Ternary from_bool(bool b) { return b ? Ternary::True : Ternary::False; }

struct ChaseResult {
  std::vector<Atom> atoms;  // canonical order, may contain nulls
  bool saturated = false;
  std::size_t depth_used = 0;
};

/// ITA_CHASE_DEPTH if set to a positive integer, else 8.
std::size_t default_chase_depth();

/// Breadth-first restricted chase. Each round fires every trigger active at
/// the start of the round (re-checked just before firing), inventing fresh
/// nulls for head-only variables. Stops at a fixpoint or after `depth_bound`
/// rounds; `saturated` tells which.
ChaseResult chase(const TBox& tbox, const ABox& abox, std::size_t depth_bound);

/// Cl(A): chase atoms whose terms are all constants of `abox`.
/// Throws NotSaturatedError if the chase did not reach a fixpoint.
ABox positive_closure(const TBox& tbox, const ABox& abox, std::size_t depth_bound);

Ternary entails(const TBox& tbox, const ABox& abox, const Query& q,
                std::size_t depth_bound);

/// False when some constraint body matches the chase.
Ternary is_consistent(const TBox& tbox, const ABox& abox, std::size_t depth_bound);

/// Caches one chase per ABox so repeated queries against the same members
/// (grids, probes, repair search) do not re-saturate. Not thread-safe.
class Reasoner {
 public:
  Reasoner(TBox tbox, std::size_t depth_bound);

  const TBox& tbox() const noexcept { return tbox_; }
  std::size_t depth_bound() const noexcept { return depth_; }

  const ChaseResult& chase_of(const ABox& abox);
  Ternary entails(const ABox& abox, const Query& q);
  Ternary is_consistent(const ABox& abox);
  ABox closure(const ABox& abox);

  /// Number of distinct ABoxes chased so far.
  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  struct Entry {
    ChaseResult result;
    AtomIndex index;
    int consistent = -1;  // -1 not computed, else Ternary
  };
  Entry& entry(const ABox& abox);

  TBox tbox_;
  std::size_t depth_;
  std::map<ABox, std::unique_ptr<Entry>> cache_;
};

}  // namespace ita
