#pragma once

// Two-dimensional block trees.
//
// The (padded) matrix is cut into a grid of square blocks; at every level
// the marked blocks are split into k x k children and the unmarked ones
// become leaves that point into a marked block of the same level. Two
// marking rules are provided:
//
//  - first occurrence: a block is marked when it intersects the row-major
//    first occurrence of some submatrix of the block's size; an unmarked
//    block points to the first occurrence of its own content.
//  - attractor: a block is marked when it or one of its (up to 8) neighbours
//    holds an attractor position; an unmarked block points to the first
//    occurrence of its content that contains an attractor position.
//
// An unmarked node stores one pointer, to the marked block holding the top
// left cell of the chosen occurrence, plus the offset of the occurrence
// inside that block. Marked blocks at the deepest level store their symbols.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matrixrepet/attractor.hpp"
#include "matrixrepet/delta.hpp"
#include "matrixrepet/hash_index.hpp"
#include "matrixrepet/matrix.hpp"

namespace matrixrepet {

enum class TreeOrigin : std::uint8_t { FirstOccurrence = 0, Attractor = 1 };

enum class NodeKind : std::uint8_t {
  Internal = 0,  // marked, split at the next level
  Pointer = 1,   // unmarked leaf
  Explicit = 2,  // marked, deepest level, symbols stored
  Padding = 3,   // attractor variant only: block entirely outside the matrix
};

struct BlockNode {
  NodeKind kind = NodeKind::Internal;
  /// Internal: index of the first of k*k children in the next level.
  /// Pointer: index of the target node in this level.
  /// Explicit: index of the payload slot in this level.
  std::uint32_t ref = 0;
  std::uint32_t off_row = 0;
  std::uint32_t off_col = 0;

  bool marked() const noexcept { return kind == NodeKind::Internal || kind == NodeKind::Explicit; }
  friend bool operator==(const BlockNode&, const BlockNode&) = default;
};

struct BlockLevel {
  std::size_t side = 0;
  std::vector<BlockNode> nodes;
  std::vector<Cell> origins;     // top-left cell of each node's block
  std::vector<Symbol> payload;   // side*side symbols per explicit leaf

  /// Node whose block starts at `origin`, if that block exists at this level.
  std::optional<std::uint32_t> find(Cell origin) const;
  std::span<const Symbol> leaf_symbols(const BlockNode& leaf) const {
    return std::span<const Symbol>(payload).subspan(std::size_t{leaf.ref} * side * side, side * side);
  }

  void index_origins();

 private:
  std::vector<std::uint32_t> by_origin_;
};

/// Per-level counts of node visits made by one access.
struct AccessTrace {
  std::vector<std::size_t> visits;
  std::size_t max_visits() const;
};

class BlockTree {
 public:
  BlockTree() = default;
  BlockTree(std::size_t n, std::size_t padded_side, std::size_t k, std::size_t leaf_side, TreeOrigin origin,
            Symbol fill, std::vector<BlockLevel> levels);

  std::size_t n() const noexcept { return n_; }
  std::size_t padded_side() const noexcept { return padded_side_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t leaf_side() const noexcept { return leaf_side_; }
  TreeOrigin origin() const noexcept { return origin_; }
  /// Symbol filling the cells added by padding.
  Symbol fill() const noexcept { return fill_; }
  std::size_t first_side() const noexcept { return levels_.front().side; }
  std::size_t height() const noexcept { return levels_.size(); }
  const std::vector<BlockLevel>& levels() const noexcept { return levels_; }

  /// M[row][col], zero-based; throws std::out_of_range outside n x n.
  Symbol access(std::size_t row, std::size_t col, AccessTrace* trace = nullptr) const;

 private:
  std::size_t n_ = 0;
  std::size_t padded_side_ = 0;
  std::size_t k_ = 2;
  std::size_t leaf_side_ = 2;
  TreeOrigin origin_ = TreeOrigin::FirstOccurrence;
  Symbol fill_ = 0;
  std::vector<BlockLevel> levels_;
};

struct BuildOptions {
  std::size_t k = 2;
  /// Blocks of this side or smaller are stored explicitly; 0 means k.
  std::size_t leaf_side = 0;
  /// Start from a grid of about delta (or |attractor|) blocks instead of k*k.
  bool shallow = false;
  /// delta2d used by the shallow grid; computed when absent.
  std::optional<Rational> delta;
  HashSeed seed;
};

BlockTree build_bt(const Matrix& m, const BuildOptions& opts = {});

/// Throws InvalidAttractor unless `g` passes verify_attractor.
BlockTree build_gamma_bt(const Matrix& m, const Attractor& g, const BuildOptions& opts = {});

inline Symbol access(const BlockTree& t, std::size_t row, std::size_t col, AccessTrace* trace = nullptr) {
  return t.access(row, col, trace);
}

struct LevelStats {
  std::size_t side = 0;
  std::size_t marked = 0;
  std::size_t unmarked = 0;  // pointer leaves
  std::size_t padding = 0;
  std::size_t explicit_leaves = 0;
  /// Marked blocks that intersect the original n x n region.
  std::size_t marked_logical = 0;

  friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

struct BTStats {
  std::size_t n = 0;
  std::size_t padded_side = 0;
  std::size_t k = 0;
  std::size_t leaf_side = 0;
  TreeOrigin origin = TreeOrigin::FirstOccurrence;
  std::vector<LevelStats> levels;
  std::size_t nodes = 0;
  std::size_t pointers = 0;
  std::size_t explicit_symbols = 0;
  std::size_t max_marked_per_level = 0;
  /// nodes + pointers + explicit symbols.
  std::size_t space_units = 0;
  /// Reporting convention: 2 bits per node kind, log2 of the level size plus
  /// two offsets per pointer, log2(sigma) per explicit symbol.
  std::size_t estimated_bits = 0;

  friend bool operator==(const BTStats&, const BTStats&) = default;
};

BTStats bt_stats(const BlockTree& t);

/// Smallest power of k that is >= n and >= k.
std::size_t padded_side_for(std::size_t n, std::size_t k);

/// `m` enlarged to side x side with `fill` in the added cells.
Matrix pad_to_side(const Matrix& m, std::size_t side, Symbol fill);

/// Versioned little-endian encoding, magic "2DBT".
std::vector<std::byte> serialize(const BlockTree& t);
/// Throws SerializationError on bad magic, version, truncation or
/// inconsistent node arrays.
BlockTree deserialize(std::span<const std::byte> bytes);

}  // namespace matrixrepet
