#include "matrixrepet/attractor.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "coverage_grid.hpp"
#include "hitting_set.hpp"
#include "matrixrepet/errors.hpp"

namespace matrixrepet {

using detail::CoverageGrid;

namespace {

struct Keyed {
  Fingerprint fp;
  std::uint32_t row;
  std::uint32_t col;
};

// All occurrences of one distinct k x k submatrix, first occurrence first.
struct Group {
  std::size_t begin;
  std::size_t end;
};

struct Grouping {
  std::vector<Keyed> keys;     // sorted by (fingerprint, row, col)
  std::vector<Group> groups;   // ordered by first occurrence, row-major
};

Grouping group_squares(const HashIndex& index, std::size_t k) {
  const std::size_t span = index.matrix().rows() - k + 1;
  Grouping g;
  g.keys.reserve(span * span);
  for (std::size_t i = 0; i < span; ++i)
    for (std::size_t j = 0; j < span; ++j)
      g.keys.push_back({index.square({i, j}, k), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  std::sort(g.keys.begin(), g.keys.end(), [](const Keyed& a, const Keyed& b) {
    if (a.fp != b.fp) return a.fp < b.fp;
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  for (std::size_t i = 0; i < g.keys.size();) {
    std::size_t j = i + 1;
    while (j < g.keys.size() && g.keys[j].fp == g.keys[i].fp) ++j;
    g.groups.push_back({i, j});
    i = j;
  }
  std::sort(g.groups.begin(), g.groups.end(), [&](const Group& a, const Group& b) {
    return std::tie(g.keys[a.begin].row, g.keys[a.begin].col) < std::tie(g.keys[b.begin].row, g.keys[b.begin].col);
  });
  return g;
}

std::vector<Cell> checked_cells(const Matrix& m, const Attractor& g) {
  std::vector<Cell> cells;
  cells.reserve(g.size());
  for (Position p : g.positions) {
    if (p.row < 1 || p.col < 1 || p.row > m.rows() || p.col > m.cols()) {
      throw InvalidAttractor("attractor position (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                             ") outside the matrix");
    }
    cells.push_back(p.cell());
  }
  return cells;
}

bool group_covered(const Grouping& g, const Group& grp, std::size_t k, const CoverageGrid& grid) {
  for (std::size_t i = grp.begin; i < grp.end; ++i)
    if (grid.any({g.keys[i].row, g.keys[i].col}, k)) return true;
  return false;
}

// Distinct positions inside the union of a group's occurrences. `stamp` is
// scratch space of n*n entries shared across calls.
std::vector<std::uint32_t> covering_positions(const Grouping& g, const Group& grp, std::size_t k, std::size_t n,
                                              std::vector<std::uint64_t>& stamp, std::uint64_t tag) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = grp.begin; i < grp.end; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        const std::size_t p = (g.keys[i].row + r) * n + g.keys[i].col + c;
        if (stamp[p] != tag) {
          stamp[p] = tag;
          out.push_back(static_cast<std::uint32_t>(p));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Attractor::Attractor(std::vector<Position> ps) : positions(std::move(ps)) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
}

bool Attractor::contains(Position p) const { return std::binary_search(positions.begin(), positions.end(), p); }

void Attractor::insert(Position p) {
  auto it = std::lower_bound(positions.begin(), positions.end(), p);
  if (it == positions.end() || *it != p) positions.insert(it, p);
}

StringAttractor::StringAttractor(std::vector<std::size_t> ps) : positions(std::move(ps)) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
}

Verdict verify_attractor(const Matrix& m, const Attractor& g, const VerifyOptions& opts) {
  const std::size_t n = m.side();
  const std::vector<Cell> cells = checked_cells(m, g);
  if (cells.empty()) return {false, Witness{1, Position{1, 1}}};

  CoverageGrid grid(n, n);
  grid.rebuild(n, cells);
  const HashIndex index(m, opts.seed);

  std::vector<std::optional<Cell>> uncovered(n);
  const long long last = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, opts.threads))
  for (long long kk = 1; kk <= last; ++kk) {
    const std::size_t k = static_cast<std::size_t>(kk);
    const Grouping grouping = group_squares(index, k);
    for (const Group& grp : grouping.groups) {
      if (!group_covered(grouping, grp, k, grid)) {
        uncovered[k - 1] = Cell{grouping.keys[grp.begin].row, grouping.keys[grp.begin].col};
        break;
      }
    }
  }
  for (std::size_t k = 1; k <= n; ++k)
    if (uncovered[k - 1]) return {false, Witness{k, Position::of(*uncovered[k - 1])}};
  return {true, std::nullopt};
}

StringVerdict verify_string_attractor(std::string_view s, const StringAttractor& g) {
  const std::size_t n = s.size();
  for (std::size_t p : g.positions)
    if (p < 1 || p > n) throw InvalidAttractor("string attractor position out of range");
  std::vector<int> prefix(n + 1, 0);
  for (std::size_t p : g.positions) prefix[p] = 1;
  for (std::size_t i = 1; i <= n; ++i) prefix[i] += prefix[i - 1];
  auto hit = [&](std::size_t start0, std::size_t len) { return prefix[start0 + len] - prefix[start0] > 0; };

  for (std::size_t len = 1; len <= n; ++len) {
    std::map<std::string_view, bool> covered;
    std::vector<std::pair<std::string_view, std::size_t>> order;
    for (std::size_t st = 0; st + len <= n; ++st) {
      auto sub = s.substr(st, len);
      auto [it, fresh] = covered.emplace(sub, false);
      if (fresh) order.emplace_back(sub, st);
      it->second = it->second || hit(st, len);
    }
    for (const auto& [sub, st] : order)
      if (!covered[sub]) return {false, len, st + 1};
  }
  return {true, 0, 0};
}

Attractor gamma_exact(const Matrix& m, const ExactOptions& opts) {
  const std::size_t n = m.side();
  if (n > opts.max_side) {
    throw Inconclusive("exact search refused for n=" + std::to_string(n) + " (limit " +
                       std::to_string(opts.max_side) + ")");
  }
  const HashIndex index(m, opts.seed);
  detail::HittingSetInstance instance;
  instance.universe = n * n;
  std::vector<std::uint64_t> stamp(n * n, 0);
  std::uint64_t tag = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Grouping grouping = group_squares(index, k);
    for (const Group& grp : grouping.groups)
      instance.constraints.push_back(covering_positions(grouping, grp, k, n, stamp, ++tag));
  }
  const auto result = detail::solve_min_hitting_set(instance, m.sigma(), opts.node_budget);
  Attractor g;
  for (auto p : result.chosen) g.positions.push_back(Position::of({p / n, p % n}));
  return Attractor(std::move(g.positions));
}

StringAttractor gamma_exact_string(std::string_view s, const ExactOptions& opts) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  if (n > opts.max_length) {
    throw Inconclusive("exact string search refused for length " + std::to_string(n) + " (limit " +
                       std::to_string(opts.max_length) + ")");
  }
  detail::HittingSetInstance instance;
  instance.universe = n;
  for (std::size_t len = 1; len <= n; ++len) {
    std::map<std::string_view, std::size_t> slot;
    std::vector<std::set<std::uint32_t>> cover;
    for (std::size_t st = 0; st + len <= n; ++st) {
      auto [it, fresh] = slot.emplace(s.substr(st, len), cover.size());
      if (fresh) cover.emplace_back();
      for (std::size_t p = st; p < st + len; ++p) cover[it->second].insert(static_cast<std::uint32_t>(p));
    }
    for (auto& c : cover) instance.constraints.emplace_back(c.begin(), c.end());
  }
  const std::size_t sigma = std::set<char>(s.begin(), s.end()).size();
  const auto result = detail::solve_min_hitting_set(instance, sigma, opts.node_budget);
  std::vector<std::size_t> ps;
  for (auto p : result.chosen) ps.push_back(p + 1);
  return StringAttractor(std::move(ps));
}

Attractor gamma_greedy(const Matrix& m, const GreedyOptions& opts) {
  const std::size_t n = m.side();
  const std::size_t k_cap = std::min(n, opts.k_cap == 0 ? std::size_t{8} : opts.k_cap);
  const HashIndex index(m, opts.seed);

  // Set-cover phase over sides 1..k_cap.
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint64_t> stamp(n * n, 0);
  std::uint64_t tag = 0;
  for (std::size_t k = 1; k <= k_cap; ++k) {
    const Grouping grouping = group_squares(index, k);
    for (const Group& grp : grouping.groups) classes.push_back(covering_positions(grouping, grp, k, n, stamp, ++tag));
  }
  std::vector<std::uint32_t> offsets(n * n + 1, 0);
  for (const auto& c : classes)
    for (auto p : c) ++offsets[p + 1];
  for (std::size_t p = 0; p < n * n; ++p) offsets[p + 1] += offsets[p];
  std::vector<std::uint32_t> members(offsets.back());
  {
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::uint32_t c = 0; c < classes.size(); ++c)
      for (auto p : classes[c]) members[fill[p]++] = c;
  }
  std::vector<std::uint32_t> gain(n * n);
  for (std::size_t p = 0; p < n * n; ++p) gain[p] = offsets[p + 1] - offsets[p];

  // Max gain first, smallest position on ties; stale entries are re-pushed.
  using Entry = std::pair<std::uint32_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (std::size_t p = 0; p < n * n; ++p)
    if (gain[p] > 0) heap.push({gain[p], -static_cast<std::int64_t>(p)});
  std::vector<bool> covered(classes.size(), false);
  std::size_t remaining = classes.size();
  std::vector<Cell> chosen;
  while (remaining > 0 && !heap.empty()) {
    auto [g, negp] = heap.top();
    heap.pop();
    const std::size_t p = static_cast<std::size_t>(-negp);
    if (g != gain[p]) {
      if (gain[p] > 0) heap.push({gain[p], negp});
      continue;
    }
    chosen.push_back({p / n, p % n});
    for (std::uint32_t i = offsets[p]; i < offsets[p + 1]; ++i) {
      const std::uint32_t c = members[i];
      if (covered[c]) continue;
      covered[c] = true;
      --remaining;
      for (auto q : classes[c]) --gain[q];
    }
  }

  // Patch phase: one ascending pass over every side.
  CoverageGrid grid(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    grid.rebuild(n, chosen);
    const Grouping grouping = group_squares(index, k);
    std::vector<Cell> added;
    for (const Group& grp : grouping.groups) {
      if (group_covered(grouping, grp, k, grid)) continue;
      bool hit_new = false;
      for (std::size_t i = grp.begin; i < grp.end && !hit_new; ++i) {
        const Cell o{grouping.keys[i].row, grouping.keys[i].col};
        for (Cell a : added)
          if (a.row >= o.row && a.row < o.row + k && a.col >= o.col && a.col < o.col + k) {
            hit_new = true;
            break;
          }
      }
      if (!hit_new) added.push_back({grouping.keys[grp.begin].row, grouping.keys[grp.begin].col});
    }
    chosen.insert(chosen.end(), added.begin(), added.end());
  }

  std::vector<Position> ps;
  for (Cell c : chosen) ps.push_back(Position::of(c));
  Attractor result(std::move(ps));
  const Verdict check = verify_attractor(m, result, {opts.seed, opts.threads});
  if (!check) throw std::logic_error("greedy attractor failed verification");
  return result;
}

Matrix reduce_string_to_matrix(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("reduction needs a non-empty string");
  const std::size_t n = s.size();
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (char ch : s) cells.push_back(static_cast<unsigned char>(ch));
  return Matrix(n, n, std::move(cells));
}

Attractor lift_attractor(const StringAttractor& g) {
  std::vector<Position> ps;
  for (std::size_t j : g.positions) ps.push_back({1, j});
  return Attractor(std::move(ps));
}

StringAttractor project_attractor(const Attractor& g, std::size_t target_size) {
  std::set<std::size_t> cols;
  for (Position p : g.positions) cols.insert(p.col);
  for (std::size_t j = 1; cols.size() < target_size; ++j) cols.insert(j);
  return StringAttractor(std::vector<std::size_t>(cols.begin(), cols.end()));
}

std::size_t UniqueWindowReport::lower_bound() const {
  const auto unique = static_cast<std::size_t>(std::count(occurrences.begin(), occurrences.end(), std::size_t{1}));
  if (pairwise_disjoint) return unique;
  return unique > 0 ? 1 : 0;
}

UniqueWindowReport unique_window_report(const Matrix& m, std::span<const Window> windows, HashSeed seed) {
  const HashIndex index(m, seed);
  UniqueWindowReport report;
  for (const Window& w : windows) {
    if (w.side == 0 || w.origin.row + w.side > m.rows() || w.origin.col + w.side > m.cols()) {
      throw std::out_of_range("window outside the matrix");
    }
    const Fingerprint target = index.square(w.origin, w.side);
    std::size_t count = 0;
    for (std::size_t i = 0; i + w.side <= m.rows(); ++i)
      for (std::size_t j = 0; j + w.side <= m.cols(); ++j)
        if (index.square({i, j}, w.side) == target && equal_squares(m, {i, j}, w.origin, w.side)) ++count;
    report.occurrences.push_back(count);
  }
  report.pairwise_disjoint = true;
  for (std::size_t a = 0; a < windows.size(); ++a) {
    for (std::size_t b = a + 1; b < windows.size(); ++b) {
      const Window& x = windows[a];
      const Window& y = windows[b];
      const bool rows_overlap = x.origin.row < y.origin.row + y.side && y.origin.row < x.origin.row + x.side;
      const bool cols_overlap = x.origin.col < y.origin.col + y.side && y.origin.col < x.origin.col + x.side;
      if (rows_overlap && cols_overlap) report.pairwise_disjoint = false;
    }
  }
  return report;
}

Attractor parse_attractor_text(std::string_view text) {
  std::vector<Position> ps;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t values[2];
    int found = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      if (found == 2) throw FormatError("attractor line " + std::to_string(line_no) + ": expected 'i j'");
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), values[found]);
      if (ec != std::errc{} || values[found] == 0) {
        throw FormatError("attractor line " + std::to_string(line_no) + ": bad coordinate");
      }
      i = static_cast<std::size_t>(ptr - line.data());
      ++found;
    }
    if (found == 1) throw FormatError("attractor line " + std::to_string(line_no) + ": expected 'i j'");
    if (found == 2) ps.push_back({values[0], values[1]});
    if (end == text.size()) break;
  }
  return Attractor(std::move(ps));
}

Attractor load_attractor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_attractor_text(data);
}

std::string to_text(const Attractor& g) {
  std::string out;
  for (Position p : g.positions) out += std::to_string(p.row) + " " + std::to_string(p.col) + "\n";
  return out;
}

}  // namespace matrixrepet
