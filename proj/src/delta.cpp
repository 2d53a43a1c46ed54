#include "matrixrepet/delta.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <parallel/algorithm>
#include <stdexcept>

#include "matrixrepet/istring.hpp"

namespace matrixrepet {

namespace {

struct Keyed {
  Fingerprint fp;
  std::uint32_t row;
  std::uint32_t col;
};

std::vector<Keyed> anchor_fingerprints(const HashIndex& index, std::size_t k) {
  const std::size_t span = index.matrix().rows() - k + 1;
  std::vector<Keyed> keys;
  keys.reserve(span * span);
  for (std::size_t i = 0; i < span; ++i)
    for (std::size_t j = 0; j < span; ++j)
      keys.push_back({index.square({i, j}, k), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  return keys;
}

// Within a run of equal fingerprints, counts distinct contents by cell
// comparison against one representative per content seen so far.
std::uint64_t count_distinct_in_run(const Matrix& m, std::size_t k, const Keyed* first, const Keyed* last) {
  std::vector<Cell> reps;
  for (const Keyed* it = first; it != last; ++it) {
    const Cell c{it->row, it->col};
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](Cell r) { return equal_squares(m, r, c, k); });
    if (!seen) reps.push_back(c);
  }
  return reps.size();
}

void check_k(const Matrix& m, std::size_t k) {
  const std::size_t n = m.side();
  if (k < 1 || k > n) throw std::out_of_range("k must lie in [1, n]");
}

}  // namespace

DeltaProfile make_profile(std::vector<std::uint64_t> counts) {
  DeltaProfile p;
  p.n = counts.size();
  p.d = std::move(counts);
  p.delta2d = Rational{0, 1};
  for (std::size_t k = 1; k <= p.n; ++k) {
    const Rational r{p.d[k - 1], k * k};
    if (r > p.delta2d) {
      p.delta2d = r;
      p.argmax_k = k;
    }
  }
  return p;
}

std::uint64_t count_distinct_k(const HashIndex& index, std::size_t k, bool paranoid) {
  check_k(index.matrix(), k);
  auto keys = anchor_fingerprints(index, k);
  std::sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) { return a.fp < b.fp; });
  std::uint64_t distinct = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i + 1;
    while (j < keys.size() && keys[j].fp == keys[i].fp) ++j;
    distinct += paranoid ? count_distinct_in_run(index.matrix(), k, &keys[i], keys.data() + j) : 1;
    i = j;
  }
  return distinct;
}

std::uint64_t count_distinct_k(const Matrix& m, std::size_t k, const DeltaOptions& opts) {
  const HashIndex index(m, opts.seed);
  return count_distinct_k(index, k, opts.paranoid);
}

DeltaProfile delta_profile_naive(const Matrix& m, const DeltaOptions& opts) {
  const std::size_t n = m.side();
  const HashIndex index(m, opts.seed);
  std::vector<std::uint64_t> counts(n);
  const long long last = static_cast<long long>(n);
  // Small k carry the most anchors; hand them out first.
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, opts.threads))
  for (long long k = 1; k <= last; ++k) {
    counts[static_cast<std::size_t>(k - 1)] = count_distinct_k(index, static_cast<std::size_t>(k), opts.paranoid);
  }
  return make_profile(std::move(counts));
}

namespace serial {

DeltaProfile delta_profile_naive(const Matrix& m, const DeltaOptions& opts) {
  const std::size_t n = m.side();
  const HashIndex index(m, opts.seed);
  std::vector<std::uint64_t> counts(n);
  for (std::size_t k = 1; k <= n; ++k) counts[k - 1] = count_distinct_k(index, k, opts.paranoid);
  return make_profile(std::move(counts));
}

}  // namespace serial

std::optional<SideRange> side_range(std::size_t first, std::size_t last) {
  if (first == 0 || last < first) return std::nullopt;
  const std::size_t s = first / 2 + 1;  // ceil((first-1)/2) + 1
  const std::size_t t = (last + 1) / 2;  // ceil(last/2)
  if (s > t) return std::nullopt;
  return SideRange{s, t};
}

void apply_side_range(std::vector<std::int64_t>& diff, SideRange r) {
  diff.at(r.s) += 1;
  diff.at(r.t + 1) -= 1;
}

DeltaProfile delta_profile_fast(const Matrix& m, const DeltaOptions& opts) {
  const std::size_t n = m.side();
  const IsuffixIndex index(m, opts.seed, opts.paranoid);

  std::vector<Cell> order;
  order.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) order.push_back({i, j});

  // First symbols settle most comparisons without touching the fingerprints.
  const Matrix& a = index.padded().inner;
  auto less = [&](Cell p, Cell q) {
    const Symbol x = a.at(p), y = a.at(q);
    if (x != y) return x < y;
    if (p == q) return false;
    return index.compare(p, q).order < 0;
  };
  if (opts.threads > 1) {
    omp_set_num_threads(opts.threads);
    __gnu_parallel::sort(order.begin(), order.end(), less);
  } else {
    std::sort(order.begin(), order.end(), less);
  }

  std::vector<std::int64_t> diff(n + 2, 0);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Cell cur = order[r];
    std::size_t lcp = 0;
    if (r > 0 && a.at(order[r - 1]) == a.at(cur)) lcp = index.lcp(order[r - 1], cur);
    if (auto range = side_range(lcp + 1, index.last_well_formed(cur))) apply_side_range(diff, *range);
  }

  std::vector<std::uint64_t> counts(n);
  std::int64_t running = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    running += diff[k];
    if (running < 0) throw std::logic_error("negative distinct-submatrix count");
    counts[k - 1] = static_cast<std::uint64_t>(running);
  }
  return make_profile(std::move(counts));
}

Rational delta2d(const Matrix& m, DeltaMethod method, const DeltaOptions& opts) {
  return (method == DeltaMethod::Naive ? delta_profile_naive(m, opts) : delta_profile_fast(m, opts)).delta2d;
}

}  // namespace matrixrepet
