#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matrixrepet/attractor.hpp"
#include "matrixrepet/matrix.hpp"

namespace matrixrepet {

struct NonMonotoneStrings {
  std::string w;   // a b b b a^n a b
  std::string wb;  // w followed by b
};

/// Pair of strings where appending one symbol lowers the minimum attractor
/// size from 3 to 2.
NonMonotoneStrings gen_nonmono(std::size_t n);

/// n x n matrix over {'0','1','#'}: the first row is S_1 S_2 ... S_{r/2}
/// with r = sqrt(n) and S_i = 1^i 0^(2r-i); all other rows are '#'.
/// Requires n to be a perfect square with an even root.
Matrix gen_separation(std::size_t n);

/// Same family with the first-row blocks reordered: block b holds
/// S_{perm[b]} (perm is 1-based).
Matrix gen_permuted(std::size_t n, std::span<const std::size_t> perm);

/// The sqrt(n)/2 first-row windows of side 2*sqrt(n), each starting with one
/// block S_i; every one of them occurs once and they are pairwise disjoint.
std::vector<Window> separation_unique_windows(std::size_t n);

/// Reproducible uniform matrix over {0..sigma-1} from a counter-based
/// generator. When n*n >= sigma the draw is repeated with the next attempt
/// counter until every symbol is present (at most 1000 draws).
Matrix gen_random(std::size_t n, std::size_t sigma, std::uint64_t seed);

/// Integer square root of a perfect square, or 0 otherwise.
std::size_t exact_sqrt(std::size_t n);

}  // namespace matrixrepet
