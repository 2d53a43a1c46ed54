#pragma once

// Linearization of square matrices into Istrings.
//
// The Istring of a q x q matrix C has 2q-1 Icharacters. Icharacter 2i+1
// (i in [0,q)) is the column-type C[1..i+1][i+1], read top to bottom;
// Icharacter 2i (i in [1,q)) is the row-type C[i+1][1..i], read left to
// right. The first t Icharacters of C cover the top-left rectangle of
// ceil((t+1)/2) rows and ceil(t/2) columns, so an Iprefix comparison is a
// rectangle comparison and can be answered with fingerprints.

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "matrixrepet/hash_index.hpp"
#include "matrixrepet/matrix.hpp"

namespace matrixrepet {

enum class IcharKind { Column, Row };

struct Icharacter {
  IcharKind kind = IcharKind::Column;
  std::vector<Symbol> content;

  friend bool operator==(const Icharacter&, const Icharacter&) = default;
};

/// Rows and columns of the top-left rectangle spanned by the first t
/// Icharacters.
struct IprefixShape {
  std::size_t rows;
  std::size_t cols;
};
constexpr IprefixShape iprefix_shape(std::size_t t) noexcept { return {(t + 2) / 2, (t + 1) / 2}; }

/// Side of the largest square submatrix anchored at `anchor`.
std::size_t largest_square_side(const Matrix& m, Cell anchor);

/// t-th (1-based) Icharacter of the Istring of the largest square anchored
/// at `anchor`. Throws std::out_of_range when t exceeds 2q-1.
Icharacter icharacter_at(const Matrix& m, Cell anchor, std::size_t t);

/// Istring of the side x side square anchored at `anchor`.
std::vector<Icharacter> istring(const Matrix& m, Cell anchor, std::size_t side);

/// Inverse of istring(): rebuilds a q x q matrix from 2q-1 Icharacters.
Matrix matrix_from_istring(std::span<const Icharacter> icharacters);

struct IsuffixComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  /// Number of leading Icharacters the two Isuffixes share.
  std::size_t lcp = 0;
};

/// Isuffixes of a sentinel-padded square matrix. Owns the padded matrix and
/// its fingerprint tables; immutable after construction.
class IsuffixIndex {
 public:
  /// `paranoid` confirms every fingerprint-derived lcp cell by cell.
  explicit IsuffixIndex(const Matrix& square, HashSeed seed = {}, bool paranoid = false);

  const PaddedMatrix& padded() const noexcept { return *padded_; }
  const HashIndex& hashes() const noexcept { return *hashes_; }
  std::size_t n() const noexcept { return padded_->original_n; }

  /// Number of Icharacters of the Isuffix at `anchor` (2q-1).
  std::size_t length(Cell anchor) const;

  /// Index of the last Icharacter whose Iprefix is free of sentinels,
  /// found by reading one symbol of each of the two trailing Icharacters.
  std::size_t last_well_formed(Cell anchor) const;
  /// Same value derived from the anchor's distance to the border.
  std::size_t last_well_formed_geometric(Cell anchor) const;

  /// Lexicographic order over Icharacters plus the Icharacter lcp. Both
  /// anchors must lie in the original n x n region and differ.
  IsuffixComparison compare(Cell p, Cell q) const;
  std::size_t lcp(Cell p, Cell q) const { return compare(p, q).lcp; }

 private:
  bool iprefix_equal(Cell p, Cell q, std::size_t t) const;
  bool iprefix_equal_cells(Cell p, Cell q, std::size_t t) const;
  IsuffixComparison compare_cells(Cell p, Cell q) const;
  void check_anchor(Cell a) const;

  std::unique_ptr<const PaddedMatrix> padded_;
  std::unique_ptr<const HashIndex> hashes_;
  bool paranoid_;
};

}  // namespace matrixrepet
