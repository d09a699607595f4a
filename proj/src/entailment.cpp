#include "ita/entailment.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "ita/error.hpp"
#include "ita/internal/chase_engine.hpp"

namespace ita {

std::string to_string(Ternary t) {
  switch (t) {
    case Ternary::True: return "true";
    case Ternary::False: return "false";
    case Ternary::Unknown: return "unknown";
  }
  return "unknown";
}

std::size_t default_chase_depth() {
  if (const char* env = std::getenv("ITA_CHASE_DEPTH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 8;
}

namespace detail {

ChaseEngine::ChaseEngine(const TBox& tbox, const ABox& abox, bool track_support)
    : tbox_(tbox), track_(track_support) {
  for (std::size_t i = 0; i < abox.size(); ++i) {
    const Atom& a = abox.assertions()[i];
    index_.insert(a);
    if (track_) support_.emplace(a, Support{i});
  }
}

bool ChaseEngine::active(const PositiveAxiom& ax, const Substitution& sub) const {
  return !has_homomorphism(ax.head, index_, sub);
}

void ChaseEngine::fire(const PositiveAxiom& ax, const Substitution& match) {
  Substitution sub = match;
  for (const std::string& v : ax.existential_variables())
    sub.bind(Term::variable(v), Term::null(next_null_++));
  Support from;
  if (track_) {
    for (const Atom& b : ax.body) {
      const Support& s = support_.at(match.apply(b));
      from.insert(from.end(), s.begin(), s.end());
    }
    std::sort(from.begin(), from.end());
    from.erase(std::unique(from.begin(), from.end()), from.end());
  }
  for (const Atom& h : ax.head) {
    Atom fact = sub.apply(h);
    if (index_.insert(fact) && track_) support_.emplace(std::move(fact), from);
  }
}

void ChaseEngine::run(std::size_t depth_bound) {
  for (;;) {
    std::vector<std::pair<const PositiveAxiom*, Substitution>> triggers;
    for (const PositiveAxiom& ax : tbox_.positives()) {
      for_each_match(ax.body, index_, {}, [&](const Substitution& s) {
        if (active(ax, s)) triggers.emplace_back(&ax, s);
        return true;
      });
    }
    if (triggers.empty()) {
      saturated_ = true;
      return;
    }
    if (rounds_ == depth_bound) {
      saturated_ = false;
      return;
    }
    for (const auto& [ax, s] : triggers)
      if (active(*ax, s)) fire(*ax, s);
    ++rounds_;
  }
}

bool ChaseEngine::violated() const {
  for (const NegativeConstraint& nc : tbox_.negatives())
    if (has_homomorphism(nc.body, index_)) return true;
  return false;
}

std::vector<Support> ChaseEngine::violation_supports() const {
  std::set<Support> out;
  for (const NegativeConstraint& nc : tbox_.negatives()) {
    for_each_match(nc.body, index_, {}, [&](const Substitution& s) {
      Support u;
      for (const Atom& b : nc.body) {
        const Support& part = support_.at(s.apply(b));
        u.insert(u.end(), part.begin(), part.end());
      }
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      out.insert(std::move(u));
      return true;
    });
  }
  return {out.begin(), out.end()};
}

ChaseResult ChaseEngine::result() const {
  return ChaseResult{index_.atoms(), saturated_, rounds_};
}

}  // namespace detail

ChaseResult chase(const TBox& tbox, const ABox& abox, std::size_t depth_bound) {
  detail::ChaseEngine engine(tbox, abox, false);
  engine.run(depth_bound);
  return engine.result();
}

namespace {

ABox restrict_to_constants(const std::vector<Atom>& atoms, const ABox& abox) {
  auto consts = abox.constants();
  std::vector<Atom> out;
  for (const Atom& a : atoms) {
    bool keep = std::all_of(a.args().begin(), a.args().end(), [&](const Term& t) {
      return t.is_constant() &&
             std::binary_search(consts.begin(), consts.end(), t.name());
    });
    if (keep) out.push_back(a);
  }
  return ABox(std::move(out));
}

Ternary decide(bool found, bool saturated) {
  if (found) return Ternary::True;
  return saturated ? Ternary::False : Ternary::Unknown;
}

}  // namespace

ABox positive_closure(const TBox& tbox, const ABox& abox, std::size_t depth_bound) {
  ChaseResult r = chase(tbox, abox, depth_bound);
  if (!r.saturated)
    throw NotSaturatedError("closure undefined: chase did not saturate within " +
                            std::to_string(depth_bound) + " rounds");
  return restrict_to_constants(r.atoms, abox);
}

Ternary entails(const TBox& tbox, const ABox& abox, const Query& q,
                std::size_t depth_bound) {
  detail::ChaseEngine engine(tbox, abox, false);
  engine.run(depth_bound);
  return decide(has_homomorphism(q.atoms, engine.index()), engine.saturated());
}

Ternary is_consistent(const TBox& tbox, const ABox& abox, std::size_t depth_bound) {
  detail::ChaseEngine engine(tbox, abox, false);
  engine.run(depth_bound);
  if (engine.violated()) return Ternary::False;
  return engine.saturated() ? Ternary::True : Ternary::Unknown;
}

Reasoner::Reasoner(TBox tbox, std::size_t depth_bound)
    : tbox_(std::move(tbox)), depth_(depth_bound) {}

Reasoner::Entry& Reasoner::entry(const ABox& abox) {
  auto it = cache_.find(abox);
  if (it != cache_.end()) return *it->second;
  detail::ChaseEngine engine(tbox_, abox, false);
  engine.run(depth_);
  auto e = std::make_unique<Entry>();
  e->result = engine.result();
  e->index = engine.take_index();
  return *cache_.emplace(abox, std::move(e)).first->second;
}

const ChaseResult& Reasoner::chase_of(const ABox& abox) { return entry(abox).result; }

Ternary Reasoner::entails(const ABox& abox, const Query& q) {
  Entry& e = entry(abox);
  return decide(has_homomorphism(q.atoms, e.index), e.result.saturated);
}

Ternary Reasoner::is_consistent(const ABox& abox) {
  Entry& e = entry(abox);
  if (e.consistent < 0) {
    bool bad = false;
    for (const NegativeConstraint& nc : tbox_.negatives())
      if (has_homomorphism(nc.body, e.index)) {
        bad = true;
        break;
      }
    Ternary t = bad ? Ternary::False
                    : (e.result.saturated ? Ternary::True : Ternary::Unknown);
    e.consistent = static_cast<int>(t);
  }
  return static_cast<Ternary>(e.consistent);
}

ABox Reasoner::closure(const ABox& abox) {
  Entry& e = entry(abox);
  if (!e.result.saturated)
    throw NotSaturatedError("closure undefined: chase did not saturate within " +
                            std::to_string(depth_) + " rounds");
  return restrict_to_constants(e.result.atoms, abox);
}

}  // namespace ita
