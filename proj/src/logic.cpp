#include "ita/logic.hpp"

#include <algorithm>
#include <limits>

#include "ita/error.hpp"

namespace ita {

Term Term::constant(std::string name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "empty constant name");
  return Term(TermKind::Constant, std::move(name), 0);
}

Term Term::variable(std::string name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
  return Term(TermKind::Variable, std::move(name), 0);
}

Term Term::null(std::uint64_t id) { return Term(TermKind::Null, {}, id); }

std::string Term::to_string() const {
  if (kind_ == TermKind::Null) return "_:n" + std::to_string(null_id_);
  return name_;
}

Atom::Atom(std::string predicate, std::vector<Term> args)
    : predicate_(std::move(predicate)), args_(std::move(args)) {
  if (predicate_.empty())
    throw Error(ErrorKind::InvalidArgument, "empty predicate name");
  if (args_.empty())
    throw Error(ErrorKind::InvalidArgument,
                "atom '" + predicate_ + "' has no arguments");
}

bool Atom::is_ground() const noexcept {
  return std::all_of(args_.begin(), args_.end(),
                     [](const Term& t) { return t.is_constant(); });
}

bool Atom::has_variables() const noexcept {
  return std::any_of(args_.begin(), args_.end(),
                     [](const Term& t) { return t.is_variable(); });
}

bool Atom::has_nulls() const noexcept {
  return std::any_of(args_.begin(), args_.end(),
                     [](const Term& t) { return t.is_null(); });
}

std::string Atom::to_string() const {
  std::string out = predicate_;
  out += '(';
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ',';
    out += args_[i].to_string();
  }
  out += ')';
  return out;
}

Substitution::Substitution(Map bindings) : bindings_(std::move(bindings)) {}

void Substitution::bind(const Term& variable, Term value) {
  if (!variable.is_variable())
    throw Error(ErrorKind::InvalidArgument,
                "cannot bind non-variable term " + variable.to_string());
  bindings_.insert_or_assign(variable.name(), std::move(value));
}

const Term* Substitution::lookup(std::string_view variable) const {
  auto it = bindings_.find(variable);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (!t.is_variable()) return t;
  const Term* bound = lookup(t.name());
  return bound ? *bound : t;
}

Atom Substitution::apply(const Atom& a) const {
  std::vector<Term> args;
  args.reserve(a.arity());
  for (const Term& t : a.args()) args.push_back(apply(t));
  return Atom(a.predicate(), std::move(args));
}

std::vector<Atom> Substitution::apply(std::span<const Atom> atoms) const {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(apply(a));
  return out;
}

Substitution Substitution::then(const Substitution& second) const {
  Map out;
  for (const auto& [var, term] : bindings_) out.emplace(var, second.apply(term));
  for (const auto& [var, term] : second.bindings_) out.emplace(var, term);
  return Substitution(std::move(out));
}

std::string Substitution::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, term] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += var + "->" + term.to_string();
  }
  return out + "}";
}

AtomIndex::AtomIndex(std::span<const Atom> atoms) {
  for (const Atom& a : atoms) insert(a);
}

bool AtomIndex::insert(const Atom& atom) {
  auto [it, inserted] = atoms_.insert(atom);
  if (inserted) {
    auto slot = by_predicate_.find(atom.predicate());
    if (slot == by_predicate_.end())
      slot = by_predicate_.emplace(atom.predicate(), std::vector<const Atom*>{}).first;
    slot->second.push_back(&*it);
  }
  return inserted;
}

bool AtomIndex::contains(const Atom& atom) const { return atoms_.count(atom) != 0; }

std::span<const Atom* const> AtomIndex::with_predicate(std::string_view predicate) const {
  auto it = by_predicate_.find(predicate);
  if (it == by_predicate_.end()) return {};
  return it->second;
}

std::vector<Atom> AtomIndex::atoms() const { return {atoms_.begin(), atoms_.end()}; }

namespace {

class Matcher {
 public:
  Matcher(std::span<const Atom> pattern, const AtomIndex& target,
          const MatchVisitor& visit)
      : pattern_(pattern), target_(target), visit_(visit),
        used_(pattern.size(), false) {}

  // Returns false once the visitor asked to stop.
  bool search(Substitution& sub, std::size_t matched) {
    if (matched == pattern_.size()) return visit_(sub);
    std::size_t next = pick(sub);
    const Atom& p = pattern_[next];
    used_[next] = true;
    for (const Atom* candidate : target_.with_predicate(p.predicate())) {
      if (candidate->arity() != p.arity()) continue;
      Substitution extended = sub;
      if (!extend(p, *candidate, extended)) continue;
      if (!search(extended, matched + 1)) {
        used_[next] = false;
        return false;
      }
    }
    used_[next] = false;
    return true;
  }

 private:
  // Most-constrained-first: most bound arguments, then smallest bucket.
  std::size_t pick(const Substitution& sub) const {
    std::size_t best = pattern_.size();
    std::size_t best_bound = 0;
    std::size_t best_bucket = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
      if (used_[i]) continue;
      std::size_t bound = 0;
      for (const Term& t : pattern_[i].args())
        if (!t.is_variable() || sub.lookup(t.name())) ++bound;
      std::size_t bucket = target_.with_predicate(pattern_[i].predicate()).size();
      if (best == pattern_.size() || bound > best_bound ||
          (bound == best_bound && bucket < best_bucket)) {
        best = i;
        best_bound = bound;
        best_bucket = bucket;
      }
    }
    return best;
  }

  static bool extend(const Atom& p, const Atom& fact, Substitution& sub) {
    for (std::size_t i = 0; i < p.arity(); ++i) {
      const Term& pt = p.args()[i];
      const Term& ft = fact.args()[i];
      if (pt.is_variable()) {
        if (const Term* bound = sub.lookup(pt.name())) {
          if (*bound != ft) return false;
        } else {
          sub.bind(pt, ft);
        }
      } else if (pt != ft) {
        return false;
      }
    }
    return true;
  }

  std::span<const Atom> pattern_;
  const AtomIndex& target_;
  const MatchVisitor& visit_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_match(std::span<const Atom> pattern, const AtomIndex& target,
                    const Substitution& seed, const MatchVisitor& visit) {
  Matcher matcher(pattern, target, visit);
  Substitution start = seed;
  matcher.search(start, 0);
}

bool has_homomorphism(std::span<const Atom> pattern, const AtomIndex& target,
                      const Substitution& seed) {
  bool found = false;
  for_each_match(pattern, target, seed, [&](const Substitution&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Substitution> enumerate_homomorphisms(std::span<const Atom> pattern,
                                                  const AtomIndex& target) {
  std::vector<Substitution> out;
  for_each_match(pattern, target, {}, [&](const Substitution& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Substitution> enumerate_homomorphisms(std::span<const Atom> pattern,
                                                  std::span<const Atom> target) {
  return enumerate_homomorphisms(pattern, AtomIndex(target));
}

std::optional<Substitution> find_homomorphism(std::span<const Atom> pattern,
                                              const AtomIndex& target) {
  // Canonical-first needs the full enumeration; callers that only need
  // existence use has_homomorphism.
  auto all = enumerate_homomorphisms(pattern, target);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<Substitution> find_homomorphism(std::span<const Atom> pattern,
                                              std::span<const Atom> target) {
  return find_homomorphism(pattern, AtomIndex(target));
}

Atom apply_substitution(const Atom& atom, const Substitution& sub) {
  return sub.apply(atom);
}

std::vector<std::string> variables_of(std::span<const Atom> atoms) {
  std::vector<std::string> out;
  for (const Atom& a : atoms)
    for (const Term& t : a.args())
      if (t.is_variable()) out.push_back(t.name());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ita
