#pragma once

// First-order terms, atoms, substitutions and one-sided homomorphism search.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ita {

// Declaration order fixes the canonical order: Constants < Nulls < Variables.
enum class TermKind : std::uint8_t { Constant, Null, Variable };

class Term {
 public:
  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term null(std::uint64_t id);

  TermKind kind() const noexcept { return kind_; }
  bool is_constant() const noexcept { return kind_ == TermKind::Constant; }
  bool is_variable() const noexcept { return kind_ == TermKind::Variable; }
  bool is_null() const noexcept { return kind_ == TermKind::Null; }

  /// Name of a constant or variable; empty for nulls.
  const std::string& name() const noexcept { return name_; }
  std::uint64_t null_id() const noexcept { return null_id_; }

  /// Constants and variables print as their name, nulls as `_:n<id>`.
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string name, std::uint64_t id)
      : kind_(kind), name_(std::move(name)), null_id_(id) {}

  TermKind kind_;
  std::string name_;
  std::uint64_t null_id_;
};

class Atom {
 public:
  Atom(std::string predicate, std::vector<Term> args);

  const std::string& predicate() const noexcept { return predicate_; }
  const std::vector<Term>& args() const noexcept { return args_; }
  std::size_t arity() const noexcept { return args_.size(); }

  /// No variables and no nulls.
  bool is_ground() const noexcept;
  bool has_variables() const noexcept;
  bool has_nulls() const noexcept;

  /// `pred(t1,...,tk)` without spaces.
  std::string to_string() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end());
  }

 private:
  std::string predicate_;
  std::vector<Term> args_;
};

/// Finite map from variable names to terms.
class Substitution {
 public:
  using Map = std::map<std::string, Term, std::less<>>;

  Substitution() = default;
  explicit Substitution(Map bindings);

  /// Binds `variable` (which must be a Variable term) to `value`.
  void bind(const Term& variable, Term value);
  const Term* lookup(std::string_view variable) const;
  bool empty() const noexcept { return bindings_.empty(); }
  std::size_t size() const noexcept { return bindings_.size(); }
  const Map& bindings() const noexcept { return bindings_; }

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
  std::vector<Atom> apply(std::span<const Atom> atoms) const;

  /// Returns s such that s.apply(x) == second.apply(this->apply(x)).
  Substitution then(const Substitution& second) const;

  std::string to_string() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend std::strong_ordering operator<=>(const Substitution& a,
                                          const Substitution& b) {
    return std::lexicographical_compare_three_way(
        a.bindings_.begin(), a.bindings_.end(), b.bindings_.begin(),
        b.bindings_.end());
  }

 private:
  Map bindings_;
};

/// Set of atoms indexed by predicate. Node-based, so stored atoms never move;
/// the index is move-only for that reason.
class AtomIndex {
 public:
  AtomIndex() = default;
  explicit AtomIndex(std::span<const Atom> atoms);
  AtomIndex(AtomIndex&&) noexcept = default;
  AtomIndex& operator=(AtomIndex&&) noexcept = default;
  AtomIndex(const AtomIndex&) = delete;
  AtomIndex& operator=(const AtomIndex&) = delete;

  /// Returns true if the atom was not present before.
  bool insert(const Atom& atom);
  bool contains(const Atom& atom) const;
  std::size_t size() const noexcept { return atoms_.size(); }

  std::span<const Atom* const> with_predicate(std::string_view predicate) const;

  /// Canonically sorted copy of the contents.
  std::vector<Atom> atoms() const;

 private:
  std::set<Atom> atoms_;
  std::map<std::string, std::vector<const Atom*>, std::less<>> by_predicate_;
};

/// Visitor over complete matches; return false to stop the search.
using MatchVisitor = std::function<bool(const Substitution&)>;

/// Backtracking one-sided matching of `pattern` into `target`, starting from
/// `seed`. Constants and nulls in the pattern must match exactly; variables
/// may map to any term of the target. Visits every match (duplicates are
/// possible only when the pattern repeats atoms).
void for_each_match(std::span<const Atom> pattern, const AtomIndex& target,
                    const Substitution& seed, const MatchVisitor& visit);

bool has_homomorphism(std::span<const Atom> pattern, const AtomIndex& target,
                      const Substitution& seed = {});

/// All distinct homomorphisms restricted to the pattern's variables, sorted
/// canonically.
std::vector<Substitution> enumerate_homomorphisms(std::span<const Atom> pattern,
                                                  const AtomIndex& target);
std::vector<Substitution> enumerate_homomorphisms(std::span<const Atom> pattern,
                                                  std::span<const Atom> target);

/// The canonically first homomorphism, if any.
std::optional<Substitution> find_homomorphism(std::span<const Atom> pattern,
                                              const AtomIndex& target);
std::optional<Substitution> find_homomorphism(std::span<const Atom> pattern,
                                              std::span<const Atom> target);

Atom apply_substitution(const Atom& atom, const Substitution& sub);

/// Sorted, de-duplicated names of variables occurring in `atoms`.
std::vector<std::string> variables_of(std::span<const Atom> atoms);

}  // namespace ita
