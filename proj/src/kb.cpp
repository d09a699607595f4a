#include "ita/kb.hpp"

#include <algorithm>
#include <iterator>

#include "ita/error.hpp"

namespace ita {

namespace {

template <class T>
void canonicalize(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join_atoms(std::span<const Atom> atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i].to_string();
  }
  return out;
}

std::strong_ordering compare_atom_lists(const std::vector<Atom>& a,
                                        const std::vector<Atom>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

void require_no_nulls(std::span<const Atom> atoms, const char* where) {
  for (const Atom& a : atoms)
    if (a.has_nulls())
      throw Error(ErrorKind::InvalidArgument,
                  std::string("null term in ") + where + ": " + a.to_string());
}

}  // namespace

PositiveAxiom::PositiveAxiom(std::vector<Atom> b, std::vector<Atom> h)
    : body(std::move(b)), head(std::move(h)) {
  if (body.empty() || head.empty())
    throw Error(ErrorKind::InvalidArgument, "axiom needs a body and a head");
  require_no_nulls(body, "axiom");
  require_no_nulls(head, "axiom");
}

std::vector<std::string> PositiveAxiom::existential_variables() const {
  auto in_body = variables_of(body);
  auto in_head = variables_of(head);
  std::vector<std::string> out;
  std::set_difference(in_head.begin(), in_head.end(), in_body.begin(),
                      in_body.end(), std::back_inserter(out));
  return out;
}

std::string PositiveAxiom::to_string() const {
  return join_atoms(body) + " -> " + join_atoms(head) + ".";
}

std::strong_ordering operator<=>(const PositiveAxiom& a, const PositiveAxiom& b) {
  if (auto c = compare_atom_lists(a.body, b.body); c != 0) return c;
  return compare_atom_lists(a.head, b.head);
}

NegativeConstraint::NegativeConstraint(std::vector<Atom> b) : body(std::move(b)) {
  if (body.empty())
    throw Error(ErrorKind::InvalidArgument, "constraint needs a body");
  require_no_nulls(body, "constraint");
}

std::string NegativeConstraint::to_string() const {
  return join_atoms(body) + " -> !.";
}

std::strong_ordering operator<=>(const NegativeConstraint& a,
                                 const NegativeConstraint& b) {
  return compare_atom_lists(a.body, b.body);
}

TBox::TBox(std::vector<PositiveAxiom> positives,
           std::vector<NegativeConstraint> negatives)
    : positives_(std::move(positives)), negatives_(std::move(negatives)) {
  canonicalize(positives_);
  canonicalize(negatives_);
  signature_of(*this);  // arity check
}

TBox TBox::positive_part() const { return TBox(positives_, {}); }

ABox::ABox(std::vector<Atom> assertions) : atoms_(std::move(assertions)) {
  for (const Atom& a : atoms_)
    if (!a.is_ground())
      throw Error(ErrorKind::InvalidArgument,
                  "ABox assertion is not ground: " + a.to_string());
  canonicalize(atoms_);
}

bool ABox::contains(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool ABox::is_subset_of(const ABox& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(),
                       atoms_.end());
}

std::vector<std::string> ABox::constants() const {
  std::vector<std::string> out;
  for (const Atom& a : atoms_)
    for (const Term& t : a.args()) out.push_back(t.name());
  canonicalize(out);
  return out;
}

std::string ABox::to_string() const { return "{" + join_atoms(atoms_) + "}"; }

ABox intersect(const ABox& a, const ABox& b) {
  std::vector<Atom> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ABox(std::move(out));
}

ABox unite(const ABox& a, const ABox& b) {
  std::vector<Atom> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ABox(std::move(out));
}

MBox::MBox(std::vector<ABox> members) : members_(std::move(members)) {
  canonicalize(members_);
}

bool MBox::contains(const ABox& a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::string MBox::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i].to_string();
  }
  return out + "]";
}

KnowledgeBase::KnowledgeBase(TBox t, MBox m) : tbox(std::move(t)), mbox(std::move(m)) {
  signature_of(*this);
}

const ABox& KnowledgeBase::abox() const {
  if (!is_standard())
    throw Error(ErrorKind::InvalidArgument,
                "expected a single-ABox knowledge base, MBox has " +
                    std::to_string(mbox.size()) + " members");
  return mbox.members().front();
}

Query::Query(std::vector<Atom> a) : atoms(std::move(a)) {
  if (atoms.empty()) throw Error(ErrorKind::InvalidArgument, "empty query");
  require_no_nulls(atoms, "query");
}

bool Query::is_ground() const {
  return std::all_of(atoms.begin(), atoms.end(),
                     [](const Atom& a) { return a.is_ground(); });
}

std::string Query::to_string() const { return join_atoms(atoms); }

void record_arities(std::span<const Atom> atoms, Signature& sig) {
  for (const Atom& a : atoms) {
    auto [it, inserted] = sig.emplace(a.predicate(), a.arity());
    if (!inserted && it->second != a.arity())
      throw Error(ErrorKind::ArityClash,
                  "arity clash for predicate '" + a.predicate() + "': " +
                      std::to_string(it->second) + " vs " +
                      std::to_string(a.arity()));
  }
}

Signature signature_of(const TBox& tbox) {
  Signature sig;
  for (const PositiveAxiom& ax : tbox.positives()) {
    record_arities(ax.body, sig);
    record_arities(ax.head, sig);
  }
  for (const NegativeConstraint& nc : tbox.negatives()) record_arities(nc.body, sig);
  return sig;
}

Signature signature_of(const KnowledgeBase& kb) {
  Signature sig = signature_of(kb.tbox);
  for (const ABox& a : kb.mbox) record_arities(a.assertions(), sig);
  return sig;
}

KnowledgeBase singleton_kb(TBox tbox, ABox abox) {
  return KnowledgeBase(std::move(tbox), MBox({std::move(abox)}));
}

ABox mbox_intersection(const MBox& m) {
  if (m.empty())
    throw Error(ErrorKind::EmptyMBox, "intersection of an empty MBox is undefined");
  ABox acc = m.members().front();
  for (std::size_t i = 1; i < m.size(); ++i) acc = intersect(acc, m.members()[i]);
  return acc;
}

}  // namespace ita
