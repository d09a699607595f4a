#pragma once

// Minimal conflicts and repairs (inclusion-maximal consistent subsets).

#include <cstddef>
#include <string>
#include <vector>

#include "ita/entailment.hpp"
#include "ita/kb.hpp"

namespace ita {

/// Minimal subset of an ABox inconsistent with the TBox.
struct Conflict {
  ABox assertions;

  std::string to_string() const { return assertions.to_string(); }
  friend bool operator==(const Conflict&, const Conflict&) = default;
  friend auto operator<=>(const Conflict& a, const Conflict& b) {
    return a.assertions <=> b.assertions;
  }
};

/// All minimal conflicts, canonically sorted. Throws NotSaturatedError when a
/// consistency test needed along the way is Unknown.
std::vector<Conflict> minimal_conflicts(const TBox& tbox, const ABox& abox,
                                        std::size_t depth_bound);

/// R(A). Throws NotSaturatedError like minimal_conflicts.
MBox repairs(const TBox& tbox, const ABox& abox, std::size_t depth_bound);
MBox repairs(Reasoner& reasoner, const ABox& abox);

inline constexpr std::size_t kBruteforceLimit = 15;

/// Power-set oracle for repairs. Throws TooLarge above kBruteforceLimit.
MBox repairs_bruteforce(const TBox& tbox, const ABox& abox, std::size_t depth_bound);

/// Power-set oracle for minimal conflicts, same guard.
std::vector<Conflict> minimal_conflicts_bruteforce(const TBox& tbox, const ABox& abox,
                                                   std::size_t depth_bound);

}  // namespace ita
