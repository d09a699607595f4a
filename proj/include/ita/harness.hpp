#pragma once

// Random KB generation, lattice soundness checking and the embedded
// regression fixtures.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ita/kb.hpp"
#include "ita/modifiers.hpp"
#include "ita/semantics.hpp"

namespace ita {

/// Portable RNG wrapper: raw mt19937_64 output reduced by modulo, so draws
/// are identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::uint64_t seed = 0;
  std::size_t n_predicates = 6;  // a quarter of them (rounded down) binary
  std::size_t n_constants = 2;
  std::size_t n_assertions = 6;
  std::size_t n_pos_axioms = 4;
  std::size_t n_constraints = 2;
  bool allow_existential_heads = false;
  // Keep assertions that are inconsistent on their own.
  bool allow_self_conflicts = true;
};

/// Deterministic in `params`. Unary predicates are named A, B, ..., binary
/// ones p, r, s, ...; constants a, b, ... Axioms are DL-Lite-shaped:
/// concept and role inclusions, domain/range, inverse roles, and (when
/// enabled) existential heads; constraints have two-atom bodies.
KnowledgeBase random_kb(const GenParams& params);

/// Every ground atom over the KB's constants and predicates, then
/// `extra` random two-atom BCQs and `extra` random two-atom ground
/// conjunctions.
std::vector<Query> probe_queries(const KnowledgeBase& kb, Rng& rng, std::size_t extra = 8);

struct Violation {
  std::pair<SemanticsId, SemanticsId> pair;
  KnowledgeBase kb;
  Query query;
  std::pair<Ternary, Ternary> observed;
  std::uint64_t seed = 0;
};

struct LatticeReport {
  std::vector<Violation> violations;
  std::size_t trials = 0;
  std::size_t skipped_unknown = 0;  // KBs dropped because a verdict was Unknown
  std::size_t checks = 0;           // (pair, query) implications evaluated
};

/// Checks every leq claim of `relation` on `trials` KBs generated with
/// seeds params.seed, params.seed + 1, ...
LatticeReport verify_lattice(std::size_t trials, const GenParams& params,
                             std::size_t depth_bound,
                             const ProductivityRelation& relation = standard_productivity());

/// Checks one KB against `relation` with the given probes; returns the
/// violations (empty when consistent with the relation).
std::vector<Violation> check_kb_against(const KnowledgeBase& kb,
                                        const std::vector<Query>& probes,
                                        std::size_t depth_bound,
                                        const ProductivityRelation& relation);

struct SemanticsWitness {
  std::string name;
  KnowledgeBase kb;
  Query query;
  std::pair<SemanticsId, SemanticsId> pair;
  std::pair<Ternary, Ternary> expected;
};

/// Separating fixtures for the productivity lattice: safe, universal,
/// majority and existential counterexamples, plus the strategy-tier KB.
const std::vector<SemanticsWitness>& regression_witnesses();

struct ModifierWitness {
  std::string name;
  KnowledgeBase kb;
  ModifierId x;
  ModifierId y;
  bool x_in_y;  // expected subset_r of x(M) in y(M)
  bool y_in_x;
};

/// Converse failures of the inclusion edges and modifier incomparabilities.
const std::vector<ModifierWitness>& modifier_witnesses();

/// The running example: four assertions over a and b, eight axioms.
KnowledgeBase running_example();

/// Witness for ⟨CR,maj⟩ not below ⟨RC,maj⟩ and for CR to RC not being onto.
KnowledgeBase majority_cr_rc_counterexample();

/// Witness for ⟨R,safe⟩ not below ⟨RC,safe⟩ once an assertion conflicts with
/// itself.
KnowledgeBase self_conflict_counterexample();

/// Witness for ⟨CR,univ⟩ not below ⟨RC,univ⟩ on a non-ground query.
KnowledgeBase universal_cr_rc_counterexample();

/// The published relation, which also has CR below RC under safe, univ and
/// maj.
ProductivityRelation published_productivity();

struct FixtureOutcome {
  std::string name;
  bool passed;
  std::string detail;
};

/// Replays every embedded fixture. `only` filters by name (exact, or the
/// part before '/'); `corrupt` flips the expectation of each selected
/// fixture (harness self-test).
std::vector<FixtureOutcome> run_paper_examples(std::optional<std::string> only,
                                               bool corrupt, std::size_t depth_bound);

}  // namespace ita
