#include "ita/repairs.hpp"

#include <algorithm>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "ita/error.hpp"
#include "ita/internal/chase_engine.hpp"

namespace ita {

namespace {

using Bits = boost::dynamic_bitset<>;

ABox subset_of(const ABox& abox, const Bits& b) {
  std::vector<Atom> out;
  for (std::size_t i = b.find_first(); i != Bits::npos; i = b.find_next(i))
    out.push_back(abox.assertions()[i]);
  return ABox(std::move(out));
}

bool consistent(Reasoner& r, const ABox& abox, const Bits& b) {
  Ternary t = r.is_consistent(subset_of(abox, b));
  if (t == Ternary::Unknown)
    throw NotSaturatedError("consistency of " + subset_of(abox, b).to_string() +
                            " undecided within " + std::to_string(r.depth_bound()) +
                            " chase rounds");
  return t == Ternary::True;
}

class RepairSearch {
 public:
  RepairSearch(Reasoner& r, const ABox& abox)
      : r_(r), abox_(abox), n_(abox.size()), touching_(n_) {}

  void run() {
    seed();
    for (;;) {
      candidates_.clear();
      Bits in(n_);
      enumerate(0, in);
      bool grew = false;
      for (const Bits& c : candidates_) {
        if (consistent(r_, abox_, c)) continue;
        // c contains no known conflict, so its shrunk core is new.
        add_conflict(shrink(c));
        grew = true;
      }
      if (!grew) return;
    }
  }

  MBox repairs() const {
    std::vector<ABox> out;
    for (const Bits& c : candidates_) out.push_back(subset_of(abox_, c));
    return MBox(std::move(out));
  }

  /// Minimal transversals of the repair complements (Berge).
  std::vector<Conflict> all_conflicts() const {
    std::vector<Bits> hyper;
    for (const Bits& c : candidates_) {
      Bits comp = ~c;
      if (comp.none()) return {};
      hyper.push_back(comp);
    }
    std::vector<Bits> trans{Bits(n_)};
    for (const Bits& e : hyper) {
      std::vector<Bits> next;
      for (const Bits& t : trans) {
        if (t.intersects(e)) {
          next.push_back(t);
          continue;
        }
        for (std::size_t i = e.find_first(); i != Bits::npos; i = e.find_next(i)) {
          Bits u = t;
          u.set(i);
          next.push_back(u);
        }
      }
      trans = minimize(std::move(next));
    }
    std::vector<Conflict> out;
    for (const Bits& t : trans) out.push_back(Conflict{subset_of(abox_, t)});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static std::vector<Bits> minimize(std::vector<Bits> sets) {
    std::sort(sets.begin(), sets.end(), [](const Bits& a, const Bits& b) {
      if (a.count() != b.count()) return a.count() < b.count();
      return a < b;
    });
    std::vector<Bits> out;
    for (const Bits& s : sets) {
      bool dominated = std::any_of(out.begin(), out.end(),
                                   [&](const Bits& k) { return k.is_subset_of(s); });
      if (!dominated) out.push_back(s);
    }
    return out;
  }

  void seed() {
    detail::ChaseEngine engine(r_.tbox(), abox_, true);
    engine.run(r_.depth_bound());
    for (const detail::Support& s : engine.violation_supports()) {
      Bits b(n_);
      for (std::size_t i : s) b.set(i);
      if (covers_known(b)) continue;
      add_conflict(shrink(b));
    }
  }

  bool covers_known(const Bits& b) const {
    return std::any_of(conflicts_.begin(), conflicts_.end(),
                       [&](const Bits& k) { return k.is_subset_of(b); });
  }

  // Deletion in canonical atom order.
  Bits shrink(Bits s) {
    for (std::size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
      s.reset(i);
      if (consistent(r_, abox_, s)) s.set(i);
    }
    return s;
  }

  void add_conflict(Bits k) {
    std::size_t id = conflicts_.size();
    for (std::size_t i = k.find_first(); i != Bits::npos; i = k.find_next(i))
      touching_[i].push_back(id);
    conflicts_.push_back(std::move(k));
  }

  // Would adding i to `in` complete a known conflict?
  bool blocked(std::size_t i, const Bits& in) const {
    for (std::size_t id : touching_[i]) {
      Bits rest = conflicts_[id];
      rest.reset(i);
      if (rest.is_subset_of(in)) return true;
    }
    return false;
  }

  // Excluding i only pays off if some conflict through i can still be
  // completed by the included prefix plus undecided atoms.
  bool can_block_later(std::size_t i, const Bits& in) const {
    for (std::size_t id : touching_[i]) {
      const Bits& k = conflicts_[id];
      bool ok = true;
      for (std::size_t j = k.find_first(); j != Bits::npos && j < i; j = k.find_next(j))
        if (!in.test(j)) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }

  void enumerate(std::size_t i, Bits& in) {
    if (i == n_) {
      for (std::size_t x = 0; x < n_; ++x)
        if (!in.test(x) && !blocked(x, in)) return;
      candidates_.push_back(in);
      return;
    }
    if (!blocked(i, in)) {
      in.set(i);
      enumerate(i + 1, in);
      in.reset(i);
    }
    if (can_block_later(i, in)) enumerate(i + 1, in);
  }

  Reasoner& r_;
  const ABox& abox_;
  std::size_t n_;
  std::vector<Bits> conflicts_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<Bits> candidates_;
};

void guard_size(const ABox& abox) {
  if (abox.size() > kBruteforceLimit)
    throw Error(ErrorKind::TooLarge,
                "brute-force oracle limited to " + std::to_string(kBruteforceLimit) +
                    " assertions, got " + std::to_string(abox.size()));
}

std::vector<bool> consistent_masks(const TBox& tbox, const ABox& abox,
                                   std::size_t depth_bound) {
  const std::size_t n = abox.size();
  std::vector<bool> ok(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < ok.size(); ++mask) {
    std::vector<Atom> part;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) part.push_back(abox.assertions()[i]);
    ABox sub(std::move(part));
    Ternary t = is_consistent(tbox, sub, depth_bound);
    if (t == Ternary::Unknown)
      throw NotSaturatedError("consistency of " + sub.to_string() + " undecided");
    ok[mask] = t == Ternary::True;
  }
  return ok;
}

ABox from_mask(const ABox& abox, std::size_t mask) {
  std::vector<Atom> part;
  for (std::size_t i = 0; i < abox.size(); ++i)
    if (mask >> i & 1) part.push_back(abox.assertions()[i]);
  return ABox(std::move(part));
}

}  // namespace

MBox repairs(Reasoner& reasoner, const ABox& abox) {
  RepairSearch search(reasoner, abox);
  search.run();
  return search.repairs();
}

MBox repairs(const TBox& tbox, const ABox& abox, std::size_t depth_bound) {
  Reasoner r(tbox, depth_bound);
  return repairs(r, abox);
}

std::vector<Conflict> minimal_conflicts(const TBox& tbox, const ABox& abox,
                                        std::size_t depth_bound) {
  Reasoner r(tbox, depth_bound);
  RepairSearch search(r, abox);
  search.run();
  return search.all_conflicts();
}

MBox repairs_bruteforce(const TBox& tbox, const ABox& abox, std::size_t depth_bound) {
  guard_size(abox);
  const std::size_t n = abox.size();
  auto ok = consistent_masks(tbox, abox, depth_bound);
  std::vector<ABox> out;
  for (std::size_t mask = 0; mask < ok.size(); ++mask) {
    if (!ok[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!(mask >> i & 1) && ok[mask | std::size_t{1} << i]) maximal = false;
    if (maximal) out.push_back(from_mask(abox, mask));
  }
  return MBox(std::move(out));
}

std::vector<Conflict> minimal_conflicts_bruteforce(const TBox& tbox, const ABox& abox,
                                                   std::size_t depth_bound) {
  guard_size(abox);
  const std::size_t n = abox.size();
  auto ok = consistent_masks(tbox, abox, depth_bound);
  std::vector<Conflict> out;
  for (std::size_t mask = 0; mask < ok.size(); ++mask) {
    if (ok[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((mask >> i & 1) && !ok[mask & ~(std::size_t{1} << i)]) minimal = false;
    if (minimal) out.push_back(Conflict{from_mask(abox, mask)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ita
