#pragma once

// Elementary modifiers (closure, repair split, cardinality selection), the
// eight composite modifiers, word normalization and inclusion relations.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ita/entailment.hpp"
#include "ita/kb.hpp"

namespace ita {

// Letter order is last-applied first, so MCR = card(cl(rep(.))).
enum class ModifierId : std::uint8_t { R, MR, CMR, MCMR, CR, MCR, RC, MRC };

inline constexpr std::array<ModifierId, 8> kAllModifiers = {
    ModifierId::R,  ModifierId::MR,  ModifierId::CMR, ModifierId::MCMR,
    ModifierId::CR, ModifierId::MCR, ModifierId::RC,  ModifierId::MRC};

std::string_view to_string(ModifierId id);
/// 1..8
int ordinal(ModifierId id);
std::optional<ModifierId> modifier_from_name(std::string_view name);

/// Non-empty string over {C, R, M}; the rightmost letter is applied first.
class ModifierWord {
 public:
  /// Throws Syntax on an empty word or a foreign letter.
  explicit ModifierWord(std::string_view letters);

  const std::string& letters() const noexcept { return letters_; }
  bool has_repair_step() const noexcept;

 private:
  std::string letters_;
};

MBox expand_cl(Reasoner& r, const MBox& m);
MBox split_rep(Reasoner& r, const MBox& m);
/// Throws EmptyMBox on an empty input.
MBox select_card(const MBox& m);

MBox expand_cl(const TBox& tbox, const MBox& m, std::size_t depth_bound);
MBox split_rep(const TBox& tbox, const MBox& m, std::size_t depth_bound);

/// Letter-by-letter application, right to left.
MBox apply_word(Reasoner& r, const ModifierWord& w, const MBox& m);
MBox apply_composite(ModifierId id, Reasoner& r, const MBox& m);
MBox apply_composite(ModifierId id, const TBox& tbox, const MBox& m,
                     std::size_t depth_bound);

/// All eight composites of `m`, indexed by ordinal - 1, sharing intermediate
/// results.
std::array<MBox, 8> all_composites(Reasoner& r, const MBox& m);

/// Rewrites to a fixpoint with the lowest-numbered applicable rule at the
/// leftmost position:
///   1. drop an M right of the rightmost R
///   2. collapse adjacent equal letters
///   3. drop a C that has another C to its right
///   4. drop an R that has another R to its right
std::string reduce_word(std::string_view letters);

/// Throws NoRepairStep for words without R.
ModifierId normalize_word(const ModifierWord& w);

// Ordered from weakest to most specific.
enum class InclusionKind : std::uint8_t { None, SubsetR, SubsetCl, Subset };

std::string_view to_string(InclusionKind k);

/// Most specific relation X(M) rel Y(M) guaranteed for every M.
InclusionKind inclusion_between(ModifierId x, ModifierId y);

struct InclusionReport {
  bool subset_r = false;        // every member of X is inside some member of Y
  bool injective = false;       // ...and the assignment can be chosen injective
  bool bijective = false;       // ...and it covers Y
  bool plain_subset = false;    // X is a subset of Y as sets of ABoxes
  bool closure_subset = false;  // cl(X) is a subset of Y
};

InclusionReport inspect_inclusion(Reasoner& r, const MBox& x, const MBox& y);

/// subset_r and injective for X(A) against Y(A).
bool check_inclusion_empirically(ModifierId x, ModifierId y, const TBox& tbox,
                                 const ABox& abox, std::size_t depth_bound);

}  // namespace ita
