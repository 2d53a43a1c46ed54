#include "hitting_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "matrixrepet/errors.hpp"

namespace matrixrepet::detail {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  bool intersects(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  std::size_t count_without(const Bits& mask) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & ~mask.words_[w]);
    return c;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  void merge(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }

  template <class F>
  void for_each_without(const Bits& mask, F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w] & ~mask.words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// Drops constraints implied by another (a superset of a kept constraint) and
// positions that are never needed (empty, duplicate or dominated signature).
// Repeats until stable.
void reduce(std::vector<Bits>& constraints, std::vector<bool>& alive_pos, std::size_t universe) {
  bool changed = true;
  while (changed) {
    changed = false;

    std::vector<std::size_t> by_size(constraints.size());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::size_t a, std::size_t b) { return constraints[a].count() < constraints[b].count(); });
    std::vector<bool> keep(constraints.size(), true);
    std::vector<std::size_t> kept;
    for (std::size_t idx : by_size) {
      for (std::size_t other : kept) {
        if (constraints[other].subset_of(constraints[idx])) {
          keep[idx] = false;
          break;
        }
      }
      if (keep[idx]) kept.push_back(idx);
    }
    if (kept.size() != constraints.size()) {
      std::vector<Bits> next;
      for (std::size_t i = 0; i < constraints.size(); ++i)
        if (keep[i]) next.push_back(std::move(constraints[i]));
      constraints = std::move(next);
      changed = true;
    }

    std::vector<Bits> signature(universe, Bits(constraints.size()));
    for (std::size_t c = 0; c < constraints.size(); ++c)
      for (std::size_t p = 0; p < universe; ++p)
        if (constraints[c].test(p)) signature[p].set(c);

    for (std::size_t p = 0; p < universe; ++p) {
      if (!alive_pos[p]) continue;
      bool drop = signature[p].none();
      for (std::size_t q = 0; q < universe && !drop; ++q) {
        if (q == p || !alive_pos[q]) continue;
        if (signature[p].subset_of(signature[q]) && (signature[p] != signature[q] || q < p)) drop = true;
      }
      if (drop) {
        alive_pos[p] = false;
        for (auto& c : constraints) c.reset(p);
        changed = true;
      }
    }
  }
}

class Search {
 public:
  Search(const std::vector<Bits>& constraints, std::size_t universe, std::uint64_t budget)
      : constraints_(constraints), universe_(universe), budget_(budget) {}

  bool run(std::size_t size, Bits& chosen) {
    Bits forbidden(universe_);
    return dfs(chosen, forbidden, size);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(Bits& chosen, Bits forbidden, std::size_t remaining) {
    if (++nodes_ > budget_) {
      throw Inconclusive("exact attractor search exceeded its budget of " + std::to_string(budget_) + " nodes");
    }

    struct Open {
      std::size_t index;
      std::size_t available;
    };
    std::vector<Open> open;
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      if (constraints_[c].intersects(chosen)) continue;
      const std::size_t avail = constraints_[c].count_without(forbidden);
      if (avail == 0) return false;
      open.push_back({c, avail});
    }
    if (open.empty()) return true;
    if (remaining == 0) return false;

    std::stable_sort(open.begin(), open.end(), [](const Open& a, const Open& b) { return a.available < b.available; });

    // Pairwise disjoint open constraints each need their own position.
    Bits packed(universe_);
    std::size_t disjoint = 0;
    for (const Open& o : open) {
      if (constraints_[o.index].intersects(packed)) continue;
      packed.merge(constraints_[o.index]);
      if (++disjoint > remaining) return false;
    }

    const Bits& branch = constraints_[open.front().index];
    std::vector<std::size_t> candidates;
    branch.for_each_without(forbidden, [&](std::size_t p) { candidates.push_back(p); });
    for (std::size_t p : candidates) {
      chosen.set(p);
      if (dfs(chosen, forbidden, remaining - 1)) return true;
      chosen.reset(p);
      forbidden.set(p);
    }
    return false;
  }

  const std::vector<Bits>& constraints_;
  std::size_t universe_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

HittingSetResult solve_min_hitting_set(const HittingSetInstance& instance, std::size_t min_size,
                                       std::uint64_t node_budget) {
  const std::size_t universe = instance.universe;
  std::vector<Bits> constraints;
  constraints.reserve(instance.constraints.size());
  for (const auto& c : instance.constraints) {
    if (c.empty()) throw std::invalid_argument("constraint without any hitting position");
    Bits b(universe);
    for (auto p : c) {
      if (p >= universe) throw std::out_of_range("hitting position outside universe");
      b.set(p);
    }
    constraints.push_back(std::move(b));
  }

  std::vector<bool> alive(universe, true);
  reduce(constraints, alive, universe);

  HittingSetResult result;
  if (constraints.empty()) return result;

  Search search(constraints, universe, node_budget);
  for (std::size_t size = std::max<std::size_t>(min_size, 1); size <= universe; ++size) {
    Bits chosen(universe);
    if (search.run(size, chosen)) {
      for (std::size_t p = 0; p < universe; ++p)
        if (chosen.test(p)) result.chosen.push_back(static_cast<std::uint32_t>(p));
      result.nodes = search.nodes();
      return result;
    }
  }
  throw std::logic_error("hitting set search exhausted every size");
}

}  // namespace matrixrepet::detail
