#include "matrixrepet/blocktree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "coverage_grid.hpp"
#include "matrixrepet/errors.hpp"

namespace matrixrepet {

namespace {

using OccurrenceMap = std::unordered_map<Fingerprint, Cell, FingerprintHash>;

struct Resolution {
  bool padding = false;
  Cell occurrence;  // top-left cell of the occurrence to point at
};

// Marking rule: blocks intersecting the row-major first occurrence of any
// side x side submatrix of the padded matrix.
class FirstOccurrenceRule {
 public:
  FirstOccurrenceRule(const Matrix& padded, HashSeed seed) : padded_(padded), index_(padded, seed) {}

  void begin_level(std::size_t side) {
    side_ = side;
    grid_ = padded_.rows() / side;
    marks_.assign(grid_ * grid_, false);
    first_.clear();
    const std::size_t span = padded_.rows() - side + 1;
    first_.reserve(span * span);
    for (std::size_t i = 0; i < span; ++i) {
      for (std::size_t j = 0; j < span; ++j) {
        if (!first_.try_emplace(index_.square({i, j}, side), Cell{i, j}).second) continue;
        for (std::size_t br = i / side; br <= (i + side - 1) / side; ++br)
          for (std::size_t bc = j / side; bc <= (j + side - 1) / side; ++bc) marks_[br * grid_ + bc] = true;
      }
    }
  }

  bool marked(Cell origin) const { return marks_[(origin.row / side_) * grid_ + origin.col / side_]; }

  Resolution resolve(Cell origin) const { return {false, first_.at(index_.square(origin, side_))}; }

 private:
  const Matrix& padded_;
  HashIndex index_;
  std::size_t side_ = 0;
  std::size_t grid_ = 0;
  std::vector<bool> marks_;
  OccurrenceMap first_;
};

// Marking rule: blocks holding an attractor position and their neighbours.
class AttractorRule {
 public:
  AttractorRule(const Matrix& m, std::size_t padded_side, std::vector<Cell> points, HashSeed seed)
      : n_(m.rows()), padded_side_(padded_side), points_(std::move(points)), index_(m, seed), grid_cov_(n_, n_) {
    grid_cov_.rebuild(n_, points_);
  }

  void begin_level(std::size_t side) {
    side_ = side;
    grid_ = padded_side_ / side;
    marks_.assign(grid_ * grid_, false);
    for (Cell p : points_) {
      const std::size_t br = p.row / side, bc = p.col / side;
      for (std::size_t r = br == 0 ? 0 : br - 1; r <= std::min(grid_ - 1, br + 1); ++r)
        for (std::size_t c = bc == 0 ? 0 : bc - 1; c <= std::min(grid_ - 1, bc + 1); ++c) marks_[r * grid_ + c] = true;
    }
    covering_.clear();
  }

  bool marked(Cell origin) const { return marks_[(origin.row / side_) * grid_ + origin.col / side_]; }

  // Blocks cut by the matrix border are handled through the square c x c
  // window of the matrix that ends at the block's in-matrix part: that
  // window has a covered occurrence, and so has the part inside it.
  Resolution resolve(Cell origin) {
    if (origin.row >= n_ || origin.col >= n_) return {true, {}};
    const std::size_t a = std::min(side_, n_ - origin.row);
    const std::size_t b = std::min(side_, n_ - origin.col);
    const std::size_t c = std::max(a, b);
    const Cell window{origin.row - (c - a), origin.col - (c - b)};
    const OccurrenceMap& table = covering_table(c);
    auto it = table.find(index_.square(window, c));
    if (it == table.end()) throw InvalidAttractor("no occurrence of a block crosses an attractor position");
    return {false, Cell{it->second.row + (c - a), it->second.col + (c - b)}};
  }

 private:
  const OccurrenceMap& covering_table(std::size_t c) {
    auto [it, fresh] = covering_.try_emplace(c);
    if (fresh) {
      const std::size_t span = n_ - c + 1;
      for (std::size_t i = 0; i < span; ++i)
        for (std::size_t j = 0; j < span; ++j)
          if (grid_cov_.any({i, j}, c)) it->second.try_emplace(index_.square({i, j}, c), Cell{i, j});
    }
    return it->second;
  }

  std::size_t n_;
  std::size_t padded_side_;
  std::vector<Cell> points_;
  HashIndex index_;
  detail::CoverageGrid grid_cov_;
  std::size_t side_ = 0;
  std::size_t grid_ = 0;
  std::vector<bool> marks_;
  std::map<std::size_t, OccurrenceMap> covering_;
};

std::size_t largest_power_at_most(std::size_t k, std::size_t limit) {
  std::size_t p = 1;
  while (p * k <= limit) p *= k;
  return p;
}

std::size_t isqrt_ceil(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return static_cast<std::size_t>(r);
}

std::size_t first_level_side(std::size_t padded_side, std::size_t k, bool shallow, std::uint64_t blocks_wanted) {
  const std::size_t plain = padded_side / k;
  if (!shallow) return plain;
  const std::size_t per_axis = std::max<std::size_t>(1, isqrt_ceil(std::max<std::uint64_t>(1, blocks_wanted)));
  return std::min(plain, largest_power_at_most(k, std::max<std::size_t>(1, padded_side / per_axis)));
}

Symbol fill_symbol(const Matrix& m, std::size_t padded_side) {
  if (m.max_symbol() == std::numeric_limits<Symbol>::max()) {
    if (padded_side > m.rows()) throw UnsupportedAlphabet("no free symbol left for padding");
    return 0;
  }
  return static_cast<Symbol>(m.max_symbol() + 1);
}

template <class Rule>
BlockTree build_with(const Matrix& m, const Matrix& padded, std::size_t k, std::size_t leaf_side,
                     std::size_t first_side, TreeOrigin origin, Symbol fill, Rule& rule) {
  std::vector<std::size_t> sides;
  for (std::size_t s = first_side;; s /= k) {
    sides.push_back(s);
    if (s <= leaf_side) break;
  }

  std::vector<BlockLevel> levels(sides.size());
  std::vector<Cell> live;
  const std::size_t grid = padded.rows() / first_side;
  for (std::size_t r = 0; r < grid; ++r)
    for (std::size_t c = 0; c < grid; ++c) live.push_back({r * first_side, c * first_side});

  for (std::size_t L = 0; L < sides.size(); ++L) {
    const std::size_t s = sides[L];
    const bool deepest = L + 1 == sides.size();
    BlockLevel& level = levels[L];
    level.side = s;
    level.origins = live;
    level.nodes.resize(live.size());
    rule.begin_level(s);

    std::vector<Cell> targets(live.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
      BlockNode& node = level.nodes[i];
      if (rule.marked(live[i])) {
        node.kind = deepest ? NodeKind::Explicit : NodeKind::Internal;
        if (deepest) {
          node.ref = static_cast<std::uint32_t>(level.payload.size() / (s * s));
          for (std::size_t r = 0; r < s; ++r) {
            auto row = padded.row(live[i].row + r).subspan(live[i].col, s);
            level.payload.insert(level.payload.end(), row.begin(), row.end());
          }
        }
        continue;
      }
      const Resolution res = rule.resolve(live[i]);
      node.kind = res.padding ? NodeKind::Padding : NodeKind::Pointer;
      targets[i] = res.occurrence;
    }
    level.index_origins();

    for (std::size_t i = 0; i < live.size(); ++i) {
      BlockNode& node = level.nodes[i];
      if (node.kind != NodeKind::Pointer) continue;
      const Cell occ = targets[i];
      const Cell block{occ.row / s * s, occ.col / s * s};
      const auto target = level.find(block);
      if (!target || !level.nodes[*target].marked()) {
        throw std::logic_error("pointer would target a block that is not marked at this level");
      }
      node.ref = *target;
      node.off_row = static_cast<std::uint32_t>(occ.row - block.row);
      node.off_col = static_cast<std::uint32_t>(occ.col - block.col);
    }

    std::vector<Cell> next;
    if (!deepest) {
      const std::size_t child = s / k;
      for (std::size_t i = 0; i < live.size(); ++i) {
        BlockNode& node = level.nodes[i];
        if (node.kind != NodeKind::Internal) continue;
        node.ref = static_cast<std::uint32_t>(next.size());
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) next.push_back({live[i].row + r * child, live[i].col + c * child});
      }
    }
    live = std::move(next);
  }
  return BlockTree(m.rows(), padded.rows(), k, leaf_side, origin, fill, std::move(levels));
}

void check_params(const Matrix& m, std::size_t k, std::size_t leaf_side) {
  m.side();
  if (k < 2) throw std::invalid_argument("block tree arity k must be at least 2");
  if (leaf_side < 1) throw std::invalid_argument("leaf side must be at least 1");
}

std::size_t bits_for(std::size_t values) {
  std::size_t b = 1;
  while ((std::size_t{1} << b) < values) ++b;
  return b;
}

}  // namespace

std::optional<std::uint32_t> BlockLevel::find(Cell origin) const {
  auto it = std::lower_bound(by_origin_.begin(), by_origin_.end(), origin,
                             [&](std::uint32_t id, Cell o) { return origins[id] < o; });
  if (it == by_origin_.end() || origins[*it] != origin) return std::nullopt;
  return *it;
}

void BlockLevel::index_origins() {
  by_origin_.resize(origins.size());
  for (std::uint32_t i = 0; i < by_origin_.size(); ++i) by_origin_[i] = i;
  std::sort(by_origin_.begin(), by_origin_.end(), [&](std::uint32_t a, std::uint32_t b) { return origins[a] < origins[b]; });
}

std::size_t AccessTrace::max_visits() const {
  return visits.empty() ? 0 : *std::max_element(visits.begin(), visits.end());
}

BlockTree::BlockTree(std::size_t n, std::size_t padded_side, std::size_t k, std::size_t leaf_side, TreeOrigin origin,
                     Symbol fill, std::vector<BlockLevel> levels)
    : n_(n), padded_side_(padded_side), k_(k), leaf_side_(leaf_side), origin_(origin), fill_(fill),
      levels_(std::move(levels)) {
  if (levels_.empty()) throw std::invalid_argument("block tree needs at least one level");
}

Symbol BlockTree::access(std::size_t row, std::size_t col, AccessTrace* trace) const {
  if (row >= n_ || col >= n_) throw std::out_of_range("access outside the matrix");
  if (trace) trace->visits.assign(levels_.size(), 0);

  const std::size_t first = levels_.front().side;
  std::size_t id = (row / first) * (padded_side_ / first) + col / first;
  std::size_t r = row, c = col;
  for (std::size_t L = 0; L < levels_.size(); ++L) {
    const BlockLevel& level = levels_[L];
    const std::size_t s = level.side;
    const BlockNode* node = &level.nodes[id];
    Cell origin = level.origins[id];
    std::size_t visits = 1;

    if (node->kind == NodeKind::Pointer) {
      const Cell target = level.origins[node->ref];
      r = target.row + node->off_row + (r - origin.row);
      c = target.col + node->off_col + (c - origin.col);
      const auto hop = level.find({r / s * s, c / s * s});
      if (!hop || !level.nodes[*hop].marked()) throw std::logic_error("pointer leads outside the marked blocks");
      id = *hop;
      node = &level.nodes[id];
      origin = level.origins[id];
      ++visits;
    }
    if (trace) trace->visits[L] = visits;

    switch (node->kind) {
      case NodeKind::Explicit:
        return level.leaf_symbols(*node)[(r - origin.row) * s + (c - origin.col)];
      case NodeKind::Internal: {
        const std::size_t child = s / k_;
        id = node->ref + ((r - origin.row) / child) * k_ + (c - origin.col) / child;
        break;
      }
      default:
        throw std::logic_error("access reached a block without content");
    }
  }
  throw std::logic_error("access fell off the deepest level");
}

std::size_t padded_side_for(std::size_t n, std::size_t k) {
  if (k < 2) throw std::invalid_argument("block tree arity k must be at least 2");
  std::size_t side = k;
  while (side < n) side *= k;
  return side;
}

Matrix pad_to_side(const Matrix& m, std::size_t side, Symbol fill) {
  if (side < m.rows() || side < m.cols()) throw std::invalid_argument("padding cannot shrink a matrix");
  std::vector<Symbol> cells(side * side, fill);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    std::copy(row.begin(), row.end(), cells.begin() + static_cast<std::ptrdiff_t>(r * side));
  }
  return Matrix(side, side, std::move(cells));
}

BlockTree build_bt(const Matrix& m, const BuildOptions& opts) {
  const std::size_t n = m.side();
  const std::size_t padded_side = padded_side_for(n, opts.k);
  const std::size_t leaf = opts.leaf_side == 0 ? opts.k : opts.leaf_side;
  check_params(m, opts.k, leaf);
  const Symbol fill = fill_symbol(m, padded_side);
  const Matrix padded = padded_side == n ? m : pad_to_side(m, padded_side, fill);

  std::uint64_t blocks_wanted = 1;
  if (opts.shallow) blocks_wanted = (opts.delta ? *opts.delta : delta_profile_fast(m, {opts.seed}).delta2d).ceil();
  const std::size_t first = first_level_side(padded_side, opts.k, opts.shallow, blocks_wanted);

  FirstOccurrenceRule rule(padded, opts.seed);
  return build_with(m, padded, opts.k, leaf, first, TreeOrigin::FirstOccurrence, fill, rule);
}

BlockTree build_gamma_bt(const Matrix& m, const Attractor& g, const BuildOptions& opts) {
  const std::size_t n = m.side();
  const std::size_t padded_side = padded_side_for(n, opts.k);
  const std::size_t leaf = opts.leaf_side == 0 ? opts.k : opts.leaf_side;
  check_params(m, opts.k, leaf);
  const Verdict verdict = verify_attractor(m, g, {opts.seed, 1});
  if (!verdict) {
    throw InvalidAttractor("attractor leaves the " + std::to_string(verdict.witness->k) + "x" +
                           std::to_string(verdict.witness->k) + " submatrix at (" +
                           std::to_string(verdict.witness->anchor.row) + "," +
                           std::to_string(verdict.witness->anchor.col) + ") uncovered");
  }
  const Symbol fill = fill_symbol(m, padded_side);
  const Matrix padded = padded_side == n ? m : pad_to_side(m, padded_side, fill);
  const std::size_t first = first_level_side(padded_side, opts.k, opts.shallow, g.size());

  std::vector<Cell> points;
  for (Position p : g.positions) points.push_back(p.cell());
  AttractorRule rule(m, padded_side, std::move(points), opts.seed);
  return build_with(m, padded, opts.k, leaf, first, TreeOrigin::Attractor, fill, rule);
}

BTStats bt_stats(const BlockTree& t) {
  BTStats st;
  st.n = t.n();
  st.padded_side = t.padded_side();
  st.k = t.k();
  st.leaf_side = t.leaf_side();
  st.origin = t.origin();

  std::vector<bool> seen(std::size_t{std::numeric_limits<Symbol>::max()} + 1, false);
  std::size_t sigma = 0;
  for (const BlockLevel& level : t.levels())
    for (Symbol s : level.payload)
      if (!seen[s]) {
        seen[s] = true;
        ++sigma;
      }

  for (const BlockLevel& level : t.levels()) {
    LevelStats ls;
    ls.side = level.side;
    for (std::size_t i = 0; i < level.nodes.size(); ++i) {
      const BlockNode& node = level.nodes[i];
      switch (node.kind) {
        case NodeKind::Internal:
        case NodeKind::Explicit:
          ++ls.marked;
          if (level.origins[i].row < t.n() && level.origins[i].col < t.n()) ++ls.marked_logical;
          if (node.kind == NodeKind::Explicit) ++ls.explicit_leaves;
          break;
        case NodeKind::Pointer:
          ++ls.unmarked;
          break;
        case NodeKind::Padding:
          ++ls.padding;
          break;
      }
    }
    st.nodes += level.nodes.size();
    st.pointers += ls.unmarked;
    st.explicit_symbols += ls.explicit_leaves * level.side * level.side;
    st.max_marked_per_level = std::max(st.max_marked_per_level, ls.marked);
    st.estimated_bits += 2 * level.nodes.size() +
                         ls.unmarked * (bits_for(level.nodes.size()) + 2 * bits_for(level.side)) +
                         ls.explicit_leaves * level.side * level.side * bits_for(std::max<std::size_t>(sigma, 2));
    st.levels.push_back(ls);
  }
  st.space_units = st.nodes + st.pointers + st.explicit_symbols;
  return st;
}

}  // namespace matrixrepet
