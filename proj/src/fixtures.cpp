#include <functional>
#include <sstream>

#include "ita/error.hpp"
#include "ita/harness.hpp"
#include "ita/text.hpp"

namespace ita {

namespace {

// Single-individual KB from concept inclusions "X<Y" and disjointness
// "X!Y", with the listed concepts asserted of `a`.
KnowledgeBase concepts(std::string_view axioms, std::string_view facts) {
  std::string text = "@tbox\n";
  std::istringstream ax{std::string(axioms)};
  for (std::string item; ax >> item;) {
    auto cut = item.find_first_of("<!");
    std::string lhs = item.substr(0, cut), rhs = item.substr(cut + 1);
    if (item[cut] == '<')
      text += lhs + "(X) -> " + rhs + "(X).\n";
    else
      text += lhs + "(X), " + rhs + "(X) -> !.\n";
  }
  text += "@abox\n";
  std::istringstream fs{std::string(facts)};
  for (std::string c; fs >> c;) text += c + "(a).\n";
  return parse_kb(text);
}

constexpr ModifierId R = ModifierId::R, MR = ModifierId::MR, CMR = ModifierId::CMR,
                     MCMR = ModifierId::MCMR, CR = ModifierId::CR, MCR = ModifierId::MCR,
                     RC = ModifierId::RC, MRC = ModifierId::MRC;
constexpr Strategy Safe = Strategy::Safe, Univ = Strategy::Universal,
                   Maj = Strategy::Majority, Exist = Strategy::Existential;

KnowledgeBase kb6_1() { return concepts("A<B B!C", "C A B"); }
KnowledgeBase kb7_1() { return concepts("C<F F<A A!B B<D", "C B"); }
KnowledgeBase kb7_2() { return concepts("B!C B<A C<A A!D D<E E<F", "A B C D"); }
KnowledgeBase kb7_3() { return concepts("A!B C<A B<D D<F", "A C B"); }
KnowledgeBase kb7_4() { return concepts("A<B C<B A!C D<C", "A C D"); }
// In kb7_4 the single MR member {C(a), D(a)} still entails B(a) through C<B.
// Two equal-size repairs that derive B(a) from different facts do separate them.
KnowledgeBase kb7_4_q2() { return concepts("A<B C<B A!C", "A C"); }
// The printed incomparability KB for MR/CMR/MCMR against MRC makes CMR and
// MRC coincide; this one separates them.
KnowledgeBase kb_mr_vs_mrc() {
  return concepts("A<B A<C A<G B!D C!D G!D A!D E<D", "A D E");
}
KnowledgeBase kb11_1() { return concepts("B!C B<A C<A A!D E<D F<E", "A B C D E F"); }
KnowledgeBase kb11_2() { return concepts("B!C B<A C<A A!D F<D D<E", "A B C F D"); }
KnowledgeBase kb11_4() { return concepts("B!C B<A C<A A!D F<D E<D", "A F E B C"); }
KnowledgeBase kb12_1(std::string_view facts) { return concepts("A<B B<C C!D D<F", facts); }

KnowledgeBase lemma4(bool with_roles) {
  std::string text = R"(@tbox
p_a(Z,X), p_b(Z,Y) -> !.
p_b(Z,X), p_c(Z,Y) -> !.
p_b(Z,X), p_d(Z,Y) -> !.
p_c(Z,X), p_d(Z,Y) -> !.
p_a(Z,X), p_e(Z,Y) -> !.
)";
  if (with_roles)
    for (char c : std::string("abcde"))
      text += std::string("p_") + c + "(X,Y) -> p(X,Z).\n";
  text += "@abox\np_a(f,a). p_b(f,b). p_c(f,c). p_d(f,d). p_e(f,e).\n";
  return parse_kb(text);
}

SemanticsWitness w(std::string name, KnowledgeBase kb, std::string_view q, ModifierId m1,
                   Strategy s1, ModifierId m2, Strategy s2) {
  return SemanticsWitness{std::move(name), std::move(kb), parse_query(q),
                          {{m1, s1}, {m2, s2}}, {Ternary::True, Ternary::False}};
}

std::vector<SemanticsWitness> build_witnesses() {
  std::vector<SemanticsWitness> v;
  // safe
  v.push_back(w("Ex6.1", kb6_1(), "A(a)", MR, Safe, R, Safe));
  v.push_back(w("Ex6.2", concepts("B<D B!C C<D", "C B"), "D(a)", CR, Safe, R, Safe));
  v.push_back(w("Ex6.3", concepts("B!C C<A B<A", "C B"), "A(a)", CMR, Safe, MR, Safe));
  v.push_back(w("Ex6.4", concepts("A<B B!D", "A D"), "A(a)", MCMR, Safe, CMR, Safe));
  v.push_back(w("Ex6.5", concepts("A<B B!D", "A D B"), "A(a)", CMR, Safe, CR, Safe));
  v.push_back(w("Ex6.6", concepts("B<C C!D", "B D"), "B(a)", MCR, Safe, CR, Safe));
  v.push_back(w("Ex6.7", concepts("A!B B<D", "A B"), "D(a)", RC, Safe, CR, Safe));
  v.push_back(w("Ex6.8", concepts("A<B B!C C<D", "A C"), "A(a)", MRC, Safe, RC, Safe));
  v.push_back(w("Ex7.1/q1", kb7_1(), "F(a)", MCR, Safe, RC, Safe));
  v.push_back(w("Ex7.1/q2", kb7_1(), "D(a)", RC, Safe, MCR, Safe));
  v.push_back(w("Ex7.2/q1", kb7_2(), "D(a)", MCR, Safe, MRC, Safe));
  v.push_back(w("Ex7.2/q2", kb7_2(), "A(a)", MRC, Safe, MCR, Safe));
  v.push_back(w("Ex7.3/q1", kb7_3(), "A(a)", MR, Safe, MCR, Safe));
  v.push_back(w("Ex7.3/q2", kb7_3(), "B(a)", MCR, Safe, MR, Safe));
  v.push_back(w("Ex7.4/q1", kb7_4(), "D(a)", MR, Safe, CR, Safe));
  v.push_back(w("Ex7.4/q2", kb7_4_q2(), "B(a)", CR, Safe, MR, Safe));
  // universal
  v.push_back(w("Ex8.1", kb6_1(), "A(a)", MR, Univ, R, Univ));
  v.push_back(w("Ex8.2", concepts("A!B A<F", "A B"), "F(a)", MCMR, Univ, CMR, Univ));
  v.push_back(w("Ex8.3", concepts("B<C C!D", "B D"), "C(a)", MCR, Univ, CR, Univ));
  v.push_back(w("Ex8.4", concepts("A<B B!C C<D D<F", "A C"), "A(a)", MRC, Univ, RC, Univ));
  v.push_back(w("Ex8.5", concepts("A!B B<D", "A B"), "D(a)", RC, Univ, R, Univ));
  v.push_back(w("Ex9.1/q1", kb7_1(), "F(a)", MCR, Univ, RC, Univ));
  v.push_back(w("Ex9.1/q2", kb7_1(), "D(a)", RC, Univ, MCR, Univ));
  v.push_back(w("Ex9.2/q1", kb7_2(), "D(a)", MCR, Univ, MRC, Univ));
  v.push_back(w("Ex9.2/q2", kb7_2(), "A(a)", MRC, Univ, MCR, Univ));
  v.push_back(w("Ex9.3/q1", kb7_3(), "A(a)", MR, Univ, MCR, Univ));
  v.push_back(w("Ex9.3/q2", kb7_3(), "B(a)", MCR, Univ, MR, Univ));
  v.push_back(w("Ex9.4/q1", kb7_3(), "A(a)", MR, Univ, RC, Univ));
  v.push_back(w("Ex9.4/q2", kb7_3(), "D(a)", RC, Univ, MR, Univ));
  v.push_back(w("Ex9.5/q1", kb_mr_vs_mrc(), "D(a)", MR, Univ, MRC, Univ));
  v.push_back(w("Ex9.5/q2", kb_mr_vs_mrc(), "A(a)", MRC, Univ, MR, Univ));
  // majority
  v.push_back(w("Ex10.1", concepts("A!B B<D", "A B"), "D(a)", RC, Maj, CR, Maj));
  v.push_back(w("Ex11.1/q1", kb11_1(), "D(a)", MR, Maj, R, Maj));
  v.push_back(w("Ex11.1/q2", kb11_1(), "A(a)", R, Maj, MR, Maj));
  v.push_back(w("Ex11.2/q1", kb11_2(), "D(a)", MCMR, Maj, CMR, Maj));
  v.push_back(w("Ex11.2/q2", kb11_2(), "A(a)", CMR, Maj, MCMR, Maj));
  v.push_back(w("Ex11.3/q1", kb11_2(), "D(a)", MCR, Maj, CR, Maj));
  v.push_back(w("Ex11.3/q2", kb11_2(), "A(a)", CR, Maj, MCR, Maj));
  v.push_back(w("Ex11.4/q1", kb11_4(), "D(a)", MRC, Maj, RC, Maj));
  v.push_back(w("Ex11.4/q2", kb11_4(), "A(a)", RC, Maj, MRC, Maj));
  v.push_back(w("MajCRRC", majority_cr_rc_counterexample(), "D(a)", CR, Maj, RC, Maj));
  v.push_back(w("SelfConflict/rc", self_conflict_counterexample(), "E(a)", R, Safe, RC, Safe));
  v.push_back(w("SelfConflict/mrc", self_conflict_counterexample(), "E(a)", CR, Univ, MRC,
                Exist));
  v.push_back(w("UnivCRRC", universal_cr_rc_counterexample(), "D(X)", CR, Univ, RC, Univ));
  // existential
  v.push_back(w("Ex12.1", kb12_1("A D"), "D(a), F(a)", CMR, Exist, MCMR, Exist));
  v.push_back(w("Ex12.2", concepts("A<B B!C C<D", "A B C D"), "C(a), D(a)", R, Exist, MR,
                Exist));
  v.push_back(w("Ex12.3", kb12_1("A B D"), "D(a), F(a)", CR, Exist, MR, Exist));
  v.push_back(w("Ex12.4", kb12_1("A D"), "D(a), F(a)", CR, Exist, MCR, Exist));
  v.push_back(w("Ex12.5", concepts("A<B B!C C<D D<F", "A C"), "C(a), D(a)", RC, Exist, MRC,
                Exist));
  // strategy tiers
  v.push_back(w("Lemma4/q1", lemma4(false), "p_a(f,a)", R, Exist, R, Maj));
  v.push_back(w("Lemma4/q2", lemma4(false), "p_e(f,e)", R, Maj, R, Univ));
  v.push_back(w("Lemma4/q3", lemma4(true), "p(X,Y)", R, Univ, R, Safe));
  return v;
}

std::vector<ModifierWitness> build_modifier_witnesses() {
  std::vector<ModifierWitness> v;
  auto add = [&](std::string name, KnowledgeBase kb, ModifierId x, ModifierId y,
                 bool xy, bool yx) {
    v.push_back(ModifierWitness{std::move(name), std::move(kb), x, y, xy, yx});
  };
  add("Ex3.1", concepts("B<C C!D", "B C D"), R, MR, false, true);
  add("Ex3.2", concepts("A<B B!C", "A C"), CMR, MCMR, false, true);
  add("Ex3.3", concepts("B<C C!D", "B D"), CR, MCR, false, true);
  add("Ex3.4", concepts("A<B B!D", "A D"), RC, MRC, false, true);
  add("Ex3.5", concepts("A<B B<C C!D", "A B D"), CR, CMR, false, true);
  add("Ex3.6", concepts("A!B B<D", "A B"), RC, CR, false, true);
  add("Ex4.1", kb7_2(), MCR, MRC, false, false);
  add("Ex4.2/MR", kb7_3(), MR, MCR, false, false);
  add("Ex4.2/CMR", kb7_3(), CMR, MCR, false, false);
  add("Ex4.2/MCMR", kb7_3(), MCMR, MCR, false, false);
  add("Ex4.3/MR", kb_mr_vs_mrc(), MR, MRC, false, false);
  add("Ex4.3/CMR", kb_mr_vs_mrc(), CMR, MRC, false, false);
  add("Ex4.3/MCMR", kb_mr_vs_mrc(), MCMR, MRC, false, false);
  return v;
}

struct Fixture {
  std::string name;
  // Returns an empty string on success, else a diagnostic.
  std::function<std::string(bool corrupt, std::size_t depth)> run;
};

std::string expect_mbox(const MBox& got, const MBox& want, bool corrupt) {
  bool equal = got == want;
  if (equal != corrupt) return {};
  return "got " + got.to_string() + ", expected " + (corrupt ? "anything but " : "") +
         want.to_string();
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;
  auto mbox_fixture = [&](std::string name, ModifierId id, std::string want) {
    out.push_back({std::move(name), [id, want](bool corrupt, std::size_t depth) {
                     KnowledgeBase kb = running_example();
                     MBox got = apply_composite(id, kb.tbox, kb.mbox, depth);
                     return expect_mbox(got, parse_mbox(want), corrupt);
                   }});
  };
  mbox_fixture("Ex1.R", R, "[{A(a), A(b)}, {B(a), A(b)}, {C(a), A(b)}]");
  mbox_fixture("Ex1.CR", CR,
               "[{A(a), D(a), A(b), D(b)}, {B(a), D(a), E(a), A(b), D(b)},"
               " {C(a), D(a), E(a), A(b), D(b)}]");
  mbox_fixture("Ex1.MCR", MCR,
               "[{B(a), D(a), E(a), A(b), D(b)}, {C(a), D(a), E(a), A(b), D(b)}]");

  auto strategy_fixture = [&](std::string name, Strategy s, std::string q, bool want) {
    out.push_back({std::move(name), [s, q, want](bool corrupt, std::size_t depth) {
                     KnowledgeBase kb = running_example();
                     Reasoner r(kb.tbox, depth);
                     MBox m1 = split_rep(r, kb.mbox);
                     Ternary got = strategy_entails(s, r, m1, parse_query(q));
                     Ternary expected = from_bool(want != corrupt);
                     if (got == expected) return std::string();
                     return std::string(to_string(s)) + " " + q + ": got " + to_string(got) +
                            ", expected " + to_string(expected);
                   }});
  };
  strategy_fixture("Ex2.safe", Safe, "D(b)", true);
  strategy_fixture("Ex2.univ", Univ, "D(a)", true);
  strategy_fixture("Ex2.maj", Maj, "E(a)", true);
  strategy_fixture("Ex2.exist", Exist, "A(a)", true);
  strategy_fixture("Ex2.safe-neg", Safe, "D(a)", false);
  strategy_fixture("Ex2.univ-neg", Univ, "E(a)", false);
  strategy_fixture("Ex2.maj-neg", Maj, "A(a)", false);

  for (const ModifierWitness& mw : modifier_witnesses()) {
    out.push_back({mw.name, [mw](bool corrupt, std::size_t depth) {
                     bool xy = check_inclusion_empirically(mw.x, mw.y, mw.kb.tbox,
                                                           mw.kb.abox(), depth);
                     bool yx = check_inclusion_empirically(mw.y, mw.x, mw.kb.tbox,
                                                           mw.kb.abox(), depth);
                     bool want_xy = mw.x_in_y != corrupt;
                     if (xy == want_xy && yx == mw.y_in_x) return std::string();
                     auto yn = [](bool b) { return b ? "yes" : "no"; };
                     return std::string(to_string(mw.x)) + " in " +
                            std::string(to_string(mw.y)) + ": " + yn(xy) + " (want " +
                            yn(want_xy) + "), reverse: " + yn(yx) + " (want " +
                            yn(mw.y_in_x) + ")";
                   }});
  }

  for (const SemanticsWitness& sw : regression_witnesses()) {
    out.push_back({sw.name, [sw](bool corrupt, std::size_t depth) {
                     GridEvaluator ev(sw.kb, depth);
                     Ternary a = ev.evaluate(sw.pair.first, sw.query);
                     Ternary b = ev.evaluate(sw.pair.second, sw.query);
                     Ternary want_a = sw.expected.first;
                     if (corrupt) want_a = want_a == Ternary::True ? Ternary::False : Ternary::True;
                     if (a == want_a && b == sw.expected.second) return std::string();
                     return to_string(sw.pair.first) + "=" + to_string(a) + " (want " +
                            to_string(want_a) + "), " + to_string(sw.pair.second) + "=" +
                            to_string(b) + " (want " + to_string(sw.expected.second) +
                            ") on " + sw.query.to_string();
                   }});
  }
  return out;
}

bool selected(const std::string& name, const std::optional<std::string>& only) {
  if (!only) return true;
  if (name == *only) return true;
  auto slash = name.find('/');
  return slash != std::string::npos && name.substr(0, slash) == *only;
}

}  // namespace

KnowledgeBase running_example() {
  return parse_kb(R"(@tbox
A(X), B(X) -> !.
A(X), C(X) -> !.
B(X), C(X) -> !.
A(X) -> D(X).
B(X) -> D(X).
C(X) -> D(X).
B(X) -> E(X).
C(X) -> E(X).
@abox
A(a). B(a). C(a). A(b).
)");
}

KnowledgeBase majority_cr_rc_counterexample() {
  return concepts("A<D C<D B<E D!E A<F C<H F!H", "A B C");
}

// S(a) is inconsistent on its own, so no repair of A keeps it, yet its
// consequences D(a), K(a) survive in Cl(A) and form the larger RC member
// {D(a), G(a), K(a)}, which excludes E(a).
KnowledgeBase self_conflict_counterexample() {
  return concepts("S<D S<K S<G S!G D!E K!E", "S E");
}

// RC keeps E(b), a consequence of p(b,a), while dropping p(b,a) itself, so the
// member {A(a), B(a), C(a), E(a), E(b)} has no D at all.
KnowledgeBase universal_cr_rc_counterexample() {
  return parse_kb(
      "@tbox C(X) -> A(X). p(X,Y) -> D(Y). p(X,Y) -> E(X). D(X), B(X) -> !. "
      "E(X), D(X) -> !. @abox B(a). C(a). D(a). p(a,b). p(b,a).");
}

ProductivityRelation published_productivity() {
  using M = ModifierId;
  using S = Strategy;
  return ProductivityRelation({{{M::CR, S::Safe}, {M::RC, S::Safe}},
                               {{M::R, S::Universal}, {M::RC, S::Universal}},
                               {{M::CR, S::Majority}, {M::RC, S::Majority}}});
}

const std::vector<SemanticsWitness>& regression_witnesses() {
  static const std::vector<SemanticsWitness> v = build_witnesses();
  return v;
}

const std::vector<ModifierWitness>& modifier_witnesses() {
  static const std::vector<ModifierWitness> v = build_modifier_witnesses();
  return v;
}

std::vector<FixtureOutcome> run_paper_examples(std::optional<std::string> only,
                                               bool corrupt, std::size_t depth_bound) {
  std::vector<FixtureOutcome> out;
  for (const Fixture& f : build_fixtures()) {
    if (!selected(f.name, only)) continue;
    std::string detail;
    try {
      detail = f.run(corrupt, depth_bound);
    } catch (const Error& e) {
      detail = std::string("error: ") + e.what();
    }
    out.push_back({f.name, detail.empty(), detail});
  }
  return out;
}

}  // namespace ita
