#pragma once

// TBoxes, ABoxes, MBoxes, knowledge bases and Boolean conjunctive queries.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ita/logic.hpp"

namespace ita {

/// Positive existential rule `body -> head`. Head-only variables are
/// existentially quantified.
struct PositiveAxiom {
  std::vector<Atom> body;
  std::vector<Atom> head;

  PositiveAxiom(std::vector<Atom> body, std::vector<Atom> head);

  std::vector<std::string> existential_variables() const;
  std::string to_string() const;

  friend bool operator==(const PositiveAxiom&, const PositiveAxiom&) = default;
  friend std::strong_ordering operator<=>(const PositiveAxiom& a,
                                          const PositiveAxiom& b);
};

/// Negative constraint `body -> !`.
struct NegativeConstraint {
  std::vector<Atom> body;

  explicit NegativeConstraint(std::vector<Atom> body);

  std::string to_string() const;

  friend bool operator==(const NegativeConstraint&,
                         const NegativeConstraint&) = default;
  friend std::strong_ordering operator<=>(const NegativeConstraint& a,
                                          const NegativeConstraint& b);
};

class TBox {
 public:
  TBox() = default;
  TBox(std::vector<PositiveAxiom> positives,
       std::vector<NegativeConstraint> negatives);

  const std::vector<PositiveAxiom>& positives() const noexcept { return positives_; }
  const std::vector<NegativeConstraint>& negatives() const noexcept { return negatives_; }
  bool empty() const noexcept { return positives_.empty() && negatives_.empty(); }

  /// Same TBox without its negative constraints.
  TBox positive_part() const;

  friend bool operator==(const TBox&, const TBox&) = default;

 private:
  std::vector<PositiveAxiom> positives_;
  std::vector<NegativeConstraint> negatives_;
};

/// Canonically ordered set of ground assertions.
class ABox {
 public:
  ABox() = default;
  explicit ABox(std::vector<Atom> assertions);

  const std::vector<Atom>& assertions() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  bool contains(const Atom& a) const;
  bool is_subset_of(const ABox& other) const;

  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  /// Sorted constant names occurring in the ABox.
  std::vector<std::string> constants() const;

  std::string to_string() const;

  friend bool operator==(const ABox&, const ABox&) = default;
  friend std::strong_ordering operator<=>(const ABox& a, const ABox& b) {
    return std::lexicographical_compare_three_way(
        a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
  }

 private:
  std::vector<Atom> atoms_;
};

ABox intersect(const ABox& a, const ABox& b);
ABox unite(const ABox& a, const ABox& b);

/// Set of ABoxes, canonically ordered, without duplicates.
class MBox {
 public:
  MBox() = default;
  explicit MBox(std::vector<ABox> members);

  const std::vector<ABox>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const ABox& a) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string() const;

  friend bool operator==(const MBox&, const MBox&) = default;

 private:
  std::vector<ABox> members_;
};

struct KnowledgeBase {
  TBox tbox;
  MBox mbox;

  KnowledgeBase(TBox t, MBox m);

  bool is_standard() const noexcept { return mbox.size() == 1; }
  /// The single ABox of a standard KB; throws otherwise.
  const ABox& abox() const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

/// Boolean conjunctive query; all variables are existential.
struct Query {
  std::vector<Atom> atoms;

  explicit Query(std::vector<Atom> atoms);

  bool is_ground() const;
  std::string to_string() const;

  friend bool operator==(const Query&, const Query&) = default;
  friend std::strong_ordering operator<=>(const Query& a, const Query& b) {
    return std::lexicographical_compare_three_way(
        a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end());
  }
};

/// Predicate name -> arity.
using Signature = std::map<std::string, std::size_t, std::less<>>;

/// Records the arities in `atoms` into `sig`; throws ArityClash on mismatch.
void record_arities(std::span<const Atom> atoms, Signature& sig);
Signature signature_of(const TBox& tbox);
Signature signature_of(const KnowledgeBase& kb);

KnowledgeBase singleton_kb(TBox tbox, ABox abox);

/// Intersection of every member; throws EmptyMBox on an empty MBox.
ABox mbox_intersection(const MBox& m);

}  // namespace ita
