#pragma once

// Chase state shared by entailment and repair computation. Not part of the
// public interface.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "ita/entailment.hpp"

namespace ita::detail {

/// Sorted indices into the input ABox.
using Support = std::vector<std::size_t>;

class ChaseEngine {
 public:
  /// With `track_support`, every derived atom remembers the input assertions
  /// used by its first derivation.
  ChaseEngine(const TBox& tbox, const ABox& abox, bool track_support);

  void run(std::size_t depth_bound);

  bool saturated() const noexcept { return saturated_; }
  const AtomIndex& index() const noexcept { return index_; }
  AtomIndex take_index() { return std::move(index_); }
  ChaseResult result() const;

  bool violated() const;
  /// Input supports of every constraint match (requires support tracking).
  std::vector<Support> violation_supports() const;

 private:
  bool active(const PositiveAxiom& ax, const Substitution& sub) const;
  void fire(const PositiveAxiom& ax, const Substitution& match);

  const TBox& tbox_;
  bool track_;
  AtomIndex index_;
  std::map<Atom, Support> support_;
  std::uint64_t next_null_ = 0;
  std::size_t rounds_ = 0;
  bool saturated_ = false;
};

}  // namespace ita::detail
