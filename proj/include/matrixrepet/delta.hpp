#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matrixrepet/hash_index.hpp"
#include "matrixrepet/matrix.hpp"

namespace matrixrepet {

__extension__ using u128 = unsigned __int128;

/// Non-negative exact fraction; compared by cross-multiplication.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::uint64_t ceil() const noexcept { return (num + den - 1) / den; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return static_cast<u128>(a.num) * b.den <=> static_cast<u128>(b.num) * a.den;
  }
  friend bool operator==(const Rational& a, const Rational& b) noexcept { return (a <=> b) == 0; }
};

inline std::strong_ordering operator<=>(const Rational& a, std::uint64_t b) noexcept {
  return a <=> Rational{b, 1};
}

/// Distinct k x k submatrix counts of an n x n matrix.
struct DeltaProfile {
  std::size_t n = 0;
  std::vector<std::uint64_t> d;  // d[k-1] = number of distinct k x k submatrices
  Rational delta2d;
  std::size_t argmax_k = 1;  // smallest k attaining delta2d

  std::uint64_t count(std::size_t k) const { return d.at(k - 1); }

  friend bool operator==(const DeltaProfile&, const DeltaProfile&) = default;
};

/// Fills delta2d and argmax_k from the counts; ties go to the smallest k.
DeltaProfile make_profile(std::vector<std::uint64_t> counts);

struct DeltaOptions {
  HashSeed seed;
  /// Confirm fingerprint equalities cell by cell.
  bool paranoid = false;
  int threads = 1;
};

std::uint64_t count_distinct_k(const HashIndex& index, std::size_t k, bool paranoid = false);
std::uint64_t count_distinct_k(const Matrix& m, std::size_t k, const DeltaOptions& opts = {});

/// d[k] for every k by fingerprinting all anchors; k values are processed in
/// parallel when opts.threads > 1.
DeltaProfile delta_profile_naive(const Matrix& m, const DeltaOptions& opts = {});

/// d[k] from one pass over the Isuffixes of the sentinel-padded matrix in
/// lexicographic order: each Isuffix adds the square sides of its odd
/// well-formed Iprefixes longer than the lcp with its predecessor, as a
/// +1/-1 pair on a difference array.
DeltaProfile delta_profile_fast(const Matrix& m, const DeltaOptions& opts = {});

enum class DeltaMethod { Naive, Fast };
Rational delta2d(const Matrix& m, DeltaMethod method = DeltaMethod::Fast, const DeltaOptions& opts = {});

/// Difference-array update for an Icharacter range [first, last] of an
/// Isuffix: square sides s..t get +1, where s = ceil((first-1)/2)+1 and
/// t = ceil(last/2). Empty when the range holds no odd position.
struct SideRange {
  std::size_t s;
  std::size_t t;
  friend bool operator==(const SideRange&, const SideRange&) = default;
};
std::optional<SideRange> side_range(std::size_t first, std::size_t last);

/// Applies d[s] += 1, d[t+1] -= 1 on a 1-based difference array of size n+2.
void apply_side_range(std::vector<std::int64_t>& diff, SideRange r);

namespace serial {
/// Single-threaded reference for the parallel kernel above.
DeltaProfile delta_profile_naive(const Matrix& m, const DeltaOptions& opts = {});
}  // namespace serial

}  // namespace matrixrepet
