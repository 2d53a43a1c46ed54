#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "matrixrepet/matrix.hpp"

namespace matrixrepet {

/// Seed from which all hash bases are derived.
struct HashSeed {
  std::uint64_t value = 0x2d358dccaa6c78a5ULL;
};

/// Pair of independent Karp-Rabin fingerprints modulo 2^61-1.
struct Fingerprint {
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const noexcept {
    return static_cast<std::size_t>(f.h1 ^ (f.h2 * 0x9e3779b97f4a7c15ULL));
  }
};

/// 2D prefix tables giving the fingerprint of any a x b submatrix in O(1).
/// Equal submatrices always get equal fingerprints. The indexed matrix must
/// outlive the index.
class HashIndex {
 public:
  explicit HashIndex(const Matrix& m, HashSeed seed = {});

  const Matrix& matrix() const noexcept { return *matrix_; }
  HashSeed seed() const noexcept { return seed_; }

  /// Fingerprint of the rows x cols submatrix with top-left cell `origin`.
  Fingerprint fingerprint(Cell origin, std::size_t rows, std::size_t cols) const;
  Fingerprint square(Cell origin, std::size_t side) const { return fingerprint(origin, side, side); }

 private:
  struct Table {
    std::uint64_t base_row = 0;
    std::uint64_t base_col = 0;
    std::vector<std::uint64_t> prefix;  // (rows+1) x (cols+1)
    std::vector<std::uint64_t> inv_row_pow;
    std::vector<std::uint64_t> inv_col_pow;
  };

  void build(Table& t) const;
  std::uint64_t eval(const Table& t, Cell origin, std::size_t rows, std::size_t cols) const;

  const Matrix* matrix_;
  HashSeed seed_;
  std::size_t stride_;
  Table first_;
  Table second_;
};

/// splitmix64 step; also the counter-based generator behind gen_random.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace matrixrepet
