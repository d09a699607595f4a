#include "doctest.h"
#include "ita/entailment.hpp"
#include "ita/error.hpp"
#include "ita/modifiers.hpp"
#include "ita/repairs.hpp"
#include "support.hpp"

using namespace ita;
using namespace ita::test;

namespace {

using M = ModifierId;

MBox closure_of(Reasoner& r, const MBox& m) { return expand_cl(r, m); }

std::string random_word(Rng& rng, std::size_t max_len, bool need_r) {
  static const char letters[] = {'C', 'R', 'M'};
  while (true) {
    std::string w;
    std::size_t n = 1 + rng.below(max_len);
    for (std::size_t i = 0; i < n; ++i) w += letters[rng.below(3)];
    if (!need_r || w.find('R') != std::string::npos) return w;
  }
}

bool is_fact2_counterexample(const std::string& name) {
  return name.starts_with("MajCRRC") || name.starts_with("UnivCRRC") ||
         name.starts_with("SelfConflict");
}

}  // namespace

TEST_CASE("modifier names and ordinals") {
  int i = 1;
  for (M id : kAllModifiers) {
    CHECK(ordinal(id) == i++);
    CHECK(modifier_from_name(to_string(id)) == id);
  }
  CHECK_FALSE(modifier_from_name("RR"));
  CHECK(to_string(M::MCMR) == "MCMR");
}

TEST_CASE("modifier words") {
  CHECK(ModifierWord("CMR").has_repair_step());
  CHECK_FALSE(ModifierWord("CCM").has_repair_step());
  CHECK_THROWS_AS(ModifierWord(""), Error);
  CHECK_THROWS_AS(ModifierWord("RX"), Error);
  CHECK_THROWS_AS(ModifierWord("rc"), Error);
}

TEST_CASE("expand_cl") {
  KnowledgeBase k = running_example();
  Reasoner r(k.tbox, 8);
  MBox m1 = split_rep(r, k.mbox);
  CHECK(expand_cl(r, m1) ==
        mb("[{A(a), D(a), A(b), D(b)}, {B(a), D(a), E(a), A(b), D(b)},"
           " {C(a), D(a), E(a), A(b), D(b)}]"));
  CHECK(expand_cl(TBox(), m1, 8) == m1);
  // two members with the same closure merge
  TBox t = kb("@tbox A(X) -> B(X).").tbox;
  CHECK(expand_cl(t, mb("[{A(a)}, {A(a), B(a)}]"), 8).size() == 1);
}

TEST_CASE("split_rep") {
  KnowledgeBase k = running_example();
  CHECK(split_rep(k.tbox, k.mbox, 8) == mb("[{A(a), A(b)}, {B(a), A(b)}, {C(a), A(b)}]"));
  MBox consistent = mb("[{A(a)}, {B(a), A(b)}]");
  CHECK(split_rep(k.tbox, consistent, 8) == consistent);
  TBox t = kb("@tbox A(X), B(X) -> !.").tbox;
  CHECK(split_rep(t, mb("[{A(a)}, {A(a), B(a)}]"), 8) == mb("[{A(a)}, {B(a)}]"));
}

TEST_CASE("select_card") {
  KnowledgeBase k = running_example();
  MBox m5 = apply_composite(M::CR, k.tbox, k.mbox, 8);
  CHECK(select_card(m5) == apply_composite(M::MCR, k.tbox, k.mbox, 8));
  CHECK(select_card(m5).size() == 2);
  MBox same = mb("[{A(a)}, {B(a)}]");
  CHECK(select_card(same) == same);
  CHECK(select_card(mb("[{A(a)}, {A(a), B(a)}, {C(a), D(a)}]")) ==
        mb("[{A(a), B(a)}, {C(a), D(a)}]"));
  CHECK_THROWS_AS(select_card(MBox()), Error);
}

TEST_CASE("the eight composites on the running example") {
  KnowledgeBase k = running_example();
  Reasoner r(k.tbox, 8);
  auto all = all_composites(r, k.mbox);
  CHECK(all[0] == mb("[{A(a), A(b)}, {B(a), A(b)}, {C(a), A(b)}]"));
  CHECK(all[4] == mb("[{A(a), D(a), A(b), D(b)}, {B(a), D(a), E(a), A(b), D(b)},"
                     " {C(a), D(a), E(a), A(b), D(b)}]"));
  CHECK(all[5] == mb("[{B(a), D(a), E(a), A(b), D(b)}, {C(a), D(a), E(a), A(b), D(b)}]"));
  for (M id : kAllModifiers) {
    CHECK(all[ordinal(id) - 1] == apply_composite(id, k.tbox, k.mbox, 8));
    CHECK(all[ordinal(id) - 1] == apply_word(r, ModifierWord(to_string(id)), k.mbox));
  }
}

TEST_CASE("RC equals R without positive axioms") {
  KnowledgeBase k = kb(R"(@tbox
p_a(Z,X), p_b(Z,Y) -> !.
p_b(Z,X), p_c(Z,Y) -> !.
p_c(Z,X), p_d(Z,Y) -> !.
@abox p_a(f,a). p_b(f,b). p_c(f,c). p_d(f,d).)");
  CHECK(apply_composite(M::RC, k.tbox, k.mbox, 8) == apply_composite(M::R, k.tbox, k.mbox, 8));
}

TEST_CASE("reduce and normalize words") {
  CHECK(normalize_word(ModifierWord("RR")) == M::R);
  CHECK(normalize_word(ModifierWord("CMCR")) == M::MCR);
  CHECK(normalize_word(ModifierWord("RMC")) == M::RC);
  CHECK(normalize_word(ModifierWord("MCMR")) == M::MCMR);
  CHECK(normalize_word(ModifierWord("MRMC")) == M::MRC);
  CHECK(reduce_word("RRM") == "R");
  CHECK(reduce_word("CCMR") == "CMR");
  CHECK(reduce_word("RCRC") == "RC");
  try {
    normalize_word(ModifierWord("CCM"));
    FAIL("expected NoRepairStep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRepairStep);
    CHECK(std::string(e.what()).find("word contains no R") != std::string::npos);
  }
  for (M id : kAllModifiers) CHECK(normalize_word(ModifierWord(to_string(id))) == id);
}

TEST_CASE("every word with an R reduces to a canonical name") {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    std::string w = random_word(rng, 10, true);
    std::string red = reduce_word(w);
    CHECK(modifier_from_name(red).has_value());
    CHECK(reduce_word(red) == red);
  }
}

TEST_CASE("normalizer agrees with letter-by-letter application") {
  Rng words(11);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenParams p = params(seed);
    p.n_assertions = 3 + seed % 6;
    KnowledgeBase k = random_kb(p);
    Reasoner r(k.tbox, 8);
    std::string w = random_word(words, 8, true);
    ModifierWord word(w);
    CAPTURE(w);
    CHECK(apply_word(r, word, k.mbox) == apply_composite(normalize_word(word), r, k.mbox));
  }
}

TEST_CASE("elementary modifiers are idempotent and absorb") {
  Rng words(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    KnowledgeBase k = random_kb(params(seed));
    Reasoner r(k.tbox, 8);
    Rng rng(seed);
    MBox m = random_sub_mbox(rng, k.abox());
    MBox cl = expand_cl(r, m), rep = split_rep(r, m);
    CHECK(expand_cl(r, cl) == cl);
    CHECK(split_rep(r, rep) == rep);
    CHECK(select_card(select_card(m)) == select_card(m));
    for (const ABox& a : rep) CHECK(r.is_consistent(a) == Ternary::True);

    ModifierWord d(random_word(words, 4, false));
    CAPTURE(d.letters());
    MBox d_cl = apply_word(r, d, cl);
    CHECK(expand_cl(r, d_cl) == d_cl);
    MBox d_rep = apply_word(r, d, rep);
    CHECK(split_rep(r, d_rep) == d_rep);
  }
}

TEST_CASE("inclusion table") {
  CHECK(inclusion_between(M::MCR, M::CR) == InclusionKind::Subset);
  CHECK(inclusion_between(M::R, M::CR) == InclusionKind::SubsetCl);
  CHECK(inclusion_between(M::MCR, M::MRC) == InclusionKind::None);
  CHECK(inclusion_between(M::CR, M::RC) == InclusionKind::SubsetR);
  CHECK(inclusion_between(M::R, M::RC) == InclusionKind::SubsetR);
  CHECK(inclusion_between(M::MR, M::CR) == InclusionKind::SubsetR);
  CHECK(inclusion_between(M::R, M::MR) == InclusionKind::None);
  CHECK(inclusion_between(M::RC, M::CR) == InclusionKind::None);
  CHECK(to_string(InclusionKind::SubsetCl) == "subset-cl");
  for (M x : kAllModifiers) {
    CHECK(inclusion_between(x, x) == InclusionKind::Subset);
    for (M y : kAllModifiers)
      for (M z : kAllModifiers)
        if (inclusion_between(x, y) != InclusionKind::None &&
            inclusion_between(y, z) != InclusionKind::None)
          CHECK(inclusion_between(x, z) != InclusionKind::None);
  }
}

TEST_CASE("inclusion edges hold on random KBs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    KnowledgeBase k = random_kb(params(seed));
    Reasoner r(k.tbox, 8);
    auto all = all_composites(r, k.mbox);
    for (M x : kAllModifiers)
      for (M y : kAllModifiers) {
        InclusionKind kind = inclusion_between(x, y);
        if (kind == InclusionKind::None) continue;
        const MBox& mx = all[ordinal(x) - 1];
        const MBox& my = all[ordinal(y) - 1];
        InclusionReport rep = inspect_inclusion(r, mx, my);
        CAPTURE(to_string(x));
        CAPTURE(to_string(y));
        CHECK(rep.subset_r);
        CHECK(rep.injective);
        if (kind == InclusionKind::Subset) CHECK(rep.plain_subset);
        if (kind == InclusionKind::SubsetCl) {
          CHECK(rep.closure_subset);
          CHECK(closure_of(r, mx) == my);
        }
      }
  }
}

TEST_CASE("check_inclusion_empirically") {
  for (const ModifierWitness& w : modifier_witnesses())
    if (w.name == "Ex3.6") {
      CHECK(check_inclusion_empirically(M::CR, M::RC, w.kb.tbox, w.kb.abox(), 8));
      CHECK_FALSE(check_inclusion_empirically(M::RC, M::CR, w.kb.tbox, w.kb.abox(), 8));
    } else if (w.name == "Ex3.1") {
      CHECK_FALSE(check_inclusion_empirically(M::R, M::MR, w.kb.tbox, w.kb.abox(), 8));
    }
  KnowledgeBase k = running_example();
  for (M x : kAllModifiers) CHECK(check_inclusion_empirically(x, x, k.tbox, k.abox(), 8));
}

TEST_CASE("modifier witnesses replay") {
  CHECK(modifier_witnesses().size() >= 13);
  for (const ModifierWitness& w : modifier_witnesses()) {
    CAPTURE(w.name);
    CHECK(check_inclusion_empirically(w.x, w.y, w.kb.tbox, w.kb.abox(), 8) == w.x_in_y);
    CHECK(check_inclusion_empirically(w.y, w.x, w.kb.tbox, w.kb.abox(), 8) == w.y_in_x);
  }
}

TEST_CASE("closure and CR-to-RC mappings are bijective on the fixture KBs") {
  std::vector<std::pair<std::string, KnowledgeBase>> kbs = {{"Ex1", running_example()}};
  for (const ModifierWitness& w : modifier_witnesses()) kbs.emplace_back(w.name, w.kb);
  for (const SemanticsWitness& w : regression_witnesses())
    if (!is_fact2_counterexample(w.name)) kbs.emplace_back(w.name, w.kb);
  for (const auto& [name, k] : kbs) {
    CAPTURE(name);
    Reasoner r(k.tbox, 8);
    auto all = all_composites(r, k.mbox);
    CHECK(inspect_inclusion(r, all[0], all[4]).bijective);  // R -> CR
    CHECK(inspect_inclusion(r, all[1], all[2]).bijective);  // MR -> CMR
    CHECK(inspect_inclusion(r, all[4], all[6]).bijective);  // CR -> RC
  }
}

TEST_CASE("CR to RC is not onto in general") {
  KnowledgeBase k = majority_cr_rc_counterexample();
  Reasoner r(k.tbox, 8);
  auto all = all_composites(r, k.mbox);
  CHECK(all[4].size() == 3);
  CHECK(all[6].size() == 4);
  InclusionReport rep = inspect_inclusion(r, all[4], all[6]);
  CHECK(rep.subset_r);
  CHECK(rep.injective);
  CHECK_FALSE(rep.bijective);
}
