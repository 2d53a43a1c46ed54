#include "matrixrepet/istring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace matrixrepet {

namespace {

// Cells of Icharacter t (1-based) relative to the anchor: a column segment
// for odd t, a row segment for even t.
struct Segment {
  Cell offset;
  std::size_t length;
  bool vertical;
};

Segment segment_of(std::size_t t) {
  if (t % 2 == 1) {
    const std::size_t i = (t - 1) / 2;
    return {{0, i}, i + 1, true};
  }
  const std::size_t i = t / 2;
  return {{i, 0}, i, false};
}

Cell shift(Cell a, Cell d, std::size_t along, bool vertical) {
  return vertical ? Cell{a.row + d.row + along, a.col + d.col} : Cell{a.row + d.row, a.col + d.col + along};
}

}  // namespace

std::size_t largest_square_side(const Matrix& m, Cell anchor) {
  if (anchor.row >= m.rows() || anchor.col >= m.cols()) throw std::out_of_range("anchor out of range");
  return std::min(m.rows() - anchor.row, m.cols() - anchor.col);
}

Icharacter icharacter_at(const Matrix& m, Cell anchor, std::size_t t) {
  const std::size_t q = largest_square_side(m, anchor);
  if (t == 0 || t > 2 * q - 1) {
    throw std::out_of_range("Icharacter index " + std::to_string(t) + " outside [1, " +
                            std::to_string(2 * q - 1) + "]");
  }
  const Segment seg = segment_of(t);
  Icharacter ic{seg.vertical ? IcharKind::Column : IcharKind::Row, {}};
  ic.content.reserve(seg.length);
  for (std::size_t x = 0; x < seg.length; ++x) ic.content.push_back(m.at(shift(anchor, seg.offset, x, seg.vertical)));
  return ic;
}

std::vector<Icharacter> istring(const Matrix& m, Cell anchor, std::size_t side) {
  if (side == 0 || side > largest_square_side(m, anchor)) throw std::out_of_range("square exceeds matrix");
  std::vector<Icharacter> out;
  out.reserve(2 * side - 1);
  for (std::size_t t = 1; t <= 2 * side - 1; ++t) out.push_back(icharacter_at(m, anchor, t));
  return out;
}

Matrix matrix_from_istring(std::span<const Icharacter> ics) {
  if (ics.empty() || ics.size() % 2 == 0) throw std::invalid_argument("Istring length must be odd");
  const std::size_t q = (ics.size() + 1) / 2;
  std::vector<Symbol> cells(q * q);
  for (std::size_t t = 1; t <= ics.size(); ++t) {
    const Segment seg = segment_of(t);
    const Icharacter& ic = ics[t - 1];
    const IcharKind expected = seg.vertical ? IcharKind::Column : IcharKind::Row;
    if (ic.kind != expected || ic.content.size() != seg.length) {
      throw std::invalid_argument("Icharacter " + std::to_string(t) + " has wrong kind or length");
    }
    for (std::size_t x = 0; x < seg.length; ++x) {
      const Cell c = shift(Cell{}, seg.offset, x, seg.vertical);
      cells[c.row * q + c.col] = ic.content[x];
    }
  }
  return Matrix(q, q, std::move(cells));
}

IsuffixIndex::IsuffixIndex(const Matrix& square, HashSeed seed, bool paranoid)
    : padded_(std::make_unique<const PaddedMatrix>(pad_with_sentinels(square))),
      hashes_(std::make_unique<const HashIndex>(padded_->inner, seed)),
      paranoid_(paranoid) {}

void IsuffixIndex::check_anchor(Cell a) const {
  if (a.row >= n() || a.col >= n()) throw std::out_of_range("anchor outside the original matrix");
}

std::size_t IsuffixIndex::length(Cell anchor) const {
  check_anchor(anchor);
  return 2 * largest_square_side(padded_->inner, anchor) - 1;
}

std::size_t IsuffixIndex::last_well_formed(Cell anchor) const {
  const std::size_t len = length(anchor);
  const std::size_t q = (len + 1) / 2;
  const Matrix& m = padded_->inner;
  // Trailing row-type Icharacter C[q][1..q-1], then column-type C[1..q][q].
  const Symbol row_probe = m(anchor.row + q - 1, anchor.col);
  const Symbol col_probe = m(anchor.row, anchor.col + q - 1);
  if (padded_->is_sentinel(row_probe)) return len - 2;
  if (padded_->is_sentinel(col_probe)) return len - 1;
  throw std::logic_error("Isuffix does not end on the sentinel border");
}

std::size_t IsuffixIndex::last_well_formed_geometric(Cell anchor) const {
  const std::size_t len = length(anchor);
  return anchor.row >= anchor.col ? len - 2 : len - 1;
}

bool IsuffixIndex::iprefix_equal(Cell p, Cell q, std::size_t t) const {
  if (t == 0) return true;
  const IprefixShape s = iprefix_shape(t);
  return hashes_->fingerprint(p, s.rows, s.cols) == hashes_->fingerprint(q, s.rows, s.cols);
}

bool IsuffixIndex::iprefix_equal_cells(Cell p, Cell q, std::size_t t) const {
  const IprefixShape s = iprefix_shape(t);
  const Matrix& m = padded_->inner;
  for (std::size_t r = 0; r < s.rows; ++r) {
    auto a = m.row(p.row + r).subspan(p.col, s.cols);
    auto b = m.row(q.row + r).subspan(q.col, s.cols);
    if (!std::equal(a.begin(), a.end(), b.begin())) return false;
  }
  return true;
}

IsuffixComparison IsuffixIndex::compare_cells(Cell p, Cell q) const {
  const Matrix& m = padded_->inner;
  const std::size_t common = std::min(length(p), length(q));
  for (std::size_t t = 1; t <= common; ++t) {
    const Segment seg = segment_of(t);
    for (std::size_t x = 0; x < seg.length; ++x) {
      const Symbol a = m.at(shift(p, seg.offset, x, seg.vertical));
      const Symbol b = m.at(shift(q, seg.offset, x, seg.vertical));
      if (a != b) return {a <=> b, t - 1};
    }
  }
  // Unreachable on a padded matrix: sentinels keep Isuffixes prefix-free.
  throw std::logic_error("Isuffix is a prefix of another Isuffix");
}

IsuffixComparison IsuffixIndex::compare(Cell p, Cell q) const {
  check_anchor(p);
  check_anchor(q);
  if (p == q) throw std::invalid_argument("compare_isuffixes needs distinct anchors");

  const std::size_t common = std::min(length(p), length(q));
  std::size_t lo = 0, hi = common;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (iprefix_equal(p, q, mid)) lo = mid;
    else hi = mid - 1;
  }
  if (lo == common) return compare_cells(p, q);
  if (paranoid_ && !iprefix_equal_cells(p, q, lo)) return compare_cells(p, q);

  // First mismatching symbol inside Icharacter lo+1.
  const Segment seg = segment_of(lo + 1);
  const Cell sp = shift(p, seg.offset, 0, seg.vertical);
  const Cell sq = shift(q, seg.offset, 0, seg.vertical);
  std::size_t a = 0, b = seg.length;
  while (a < b) {
    const std::size_t mid = (a + b + 1) / 2;
    const std::size_t rows = seg.vertical ? mid : 1;
    const std::size_t cols = seg.vertical ? 1 : mid;
    if (hashes_->fingerprint(sp, rows, cols) == hashes_->fingerprint(sq, rows, cols)) a = mid;
    else b = mid - 1;
  }
  if (a == seg.length) return compare_cells(p, q);
  const Symbol x = padded_->inner.at(shift(p, seg.offset, a, seg.vertical));
  const Symbol y = padded_->inner.at(shift(q, seg.offset, a, seg.vertical));
  if (x == y) return compare_cells(p, q);
  return {x <=> y, lo};
}

}  // namespace matrixrepet
