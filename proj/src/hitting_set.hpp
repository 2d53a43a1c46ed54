#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace matrixrepet::detail {

/// Each constraint lists the positions that hit it. Constraints are given in
/// priority order: ties in the branching rule go to the earlier one.
struct HittingSetInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::uint32_t>> constraints;
};

struct HittingSetResult {
  std::vector<std::uint32_t> chosen;  // sorted
  std::uint64_t nodes = 0;
};

/// Smallest set of positions hitting every constraint. Sizes are tried from
/// `min_size` upward; branch and bound picks the uncovered constraint with
/// the fewest candidate positions. Throws Inconclusive once more than
/// `node_budget` search nodes have been expanded.
HittingSetResult solve_min_hitting_set(const HittingSetInstance& instance, std::size_t min_size,
                                       std::uint64_t node_budget);

}  // namespace matrixrepet::detail
