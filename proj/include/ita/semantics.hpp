#pragma once

// Inference strategies, <modifier, strategy> semantics and the productivity
// order between them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ita/entailment.hpp"
#include "ita/kb.hpp"
#include "ita/modifiers.hpp"

namespace ita {

// Declared from most to least cautious.
enum class Strategy : std::uint8_t { Safe, Universal, Majority, Existential };

inline constexpr std::array<Strategy, 4> kAllStrategies = {
    Strategy::Safe, Strategy::Universal, Strategy::Majority, Strategy::Existential};

/// safe, univ, maj, exist
std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

struct SemanticsId {
  ModifierId modifier = ModifierId::R;
  Strategy strategy = Strategy::Safe;

  /// modifier * 4 + strategy, 0..31
  std::size_t index() const noexcept {
    return static_cast<std::size_t>(modifier) * 4 + static_cast<std::size_t>(strategy);
  }
  static SemanticsId from_index(std::size_t i);

  friend bool operator==(const SemanticsId&, const SemanticsId&) = default;
  friend auto operator<=>(const SemanticsId& a, const SemanticsId& b) {
    return a.index() <=> b.index();
  }
};

inline constexpr std::size_t kSemanticsCount = 32;

/// "MCR:maj"
std::string to_string(SemanticsId s);

/// Accepts "<MOD>:<strat>" or AR, IAR, CAR, ICAR, ICR. Throws UnknownName.
SemanticsId parse_semantics(std::string_view spec);

inline constexpr std::array<std::string_view, 5> kNamedSemantics = {"AR", "IAR", "CAR",
                                                                    "ICAR", "ICR"};

/// Throws UnknownName.
SemanticsId named_semantics(std::string_view name);

/// Aggregates member verdicts. Throws EmptyMBox.
Ternary strategy_entails(Strategy s, Reasoner& r, const MBox& m, const Query& q);
Ternary strategy_entails(Strategy s, const TBox& tbox, const MBox& m, const Query& q,
                         std::size_t depth_bound);

/// Verdict from member-level verdicts alone (Safe excluded: it needs the
/// intersection, not the members).
Ternary aggregate(Strategy s, const std::vector<Ternary>& members);

Ternary answer(const KnowledgeBase& kb, SemanticsId sem, const Query& q,
               std::size_t depth_bound);

/// The classical definitions evaluated from repairs and closures directly.
Ternary answer_named_direct(const KnowledgeBase& kb, std::string_view name,
                            const Query& q, std::size_t depth_bound);

/// 8 x 4 verdicts for one KB and query, [modifier ordinal - 1][strategy].
using Grid = std::array<std::array<Ternary, 4>, 8>;

/// Evaluates every semantics at once, reusing one MBox per modifier.
class GridEvaluator {
 public:
  GridEvaluator(const KnowledgeBase& kb, std::size_t depth_bound);

  const std::array<MBox, 8>& mboxes() const noexcept { return mboxes_; }
  Grid evaluate(const Query& q);
  Ternary evaluate(SemanticsId s, const Query& q);

 private:
  Reasoner reasoner_;
  std::array<MBox, 8> mboxes_;
  std::array<ABox, 8> intersections_;
};

Grid evaluate_grid(const KnowledgeBase& kb, const Query& q, std::size_t depth_bound);

enum class ProductivityVerdict {
  Equivalent,
  StrictlyLessProductive,
  StrictlyMoreProductive,
  Incomparable,
};

std::string_view to_string(ProductivityVerdict v);

/// Reflexive-transitive closure of the base inclusions: a is at most as
/// productive as b when leq(a, b).
class ProductivityRelation {
 public:
  using Edge = std::pair<SemanticsId, SemanticsId>;

  /// The standard relation.
  ProductivityRelation();
  /// Standard base edges plus `extra` (used to mutate the relation in tests).
  explicit ProductivityRelation(const std::vector<Edge>& extra);

  bool leq(SemanticsId a, SemanticsId b) const { return reach_[a.index()][b.index()]; }
  ProductivityVerdict compare(SemanticsId a, SemanticsId b) const;

  /// Base edges before closure, deterministic order.
  const std::vector<Edge>& base_edges() const noexcept { return base_; }
  /// Every pair (a, b), a != b, with leq(a, b), in index order.
  std::vector<Edge> closed_edges() const;

  std::string to_dot() const;
  nlohmann::json to_json() const;

 private:
  void close();

  std::vector<Edge> base_;
  std::array<std::array<bool, kSemanticsCount>, kSemanticsCount> reach_{};
};

const ProductivityRelation& standard_productivity();

ProductivityVerdict productivity_compare(SemanticsId a, SemanticsId b);

}  // namespace ita
