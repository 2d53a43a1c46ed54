#pragma once

// Brute-force reference implementations. Everything here materializes
// submatrices and enumerates; nothing uses fingerprints or the library's
// search code.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "matrixrepet/attractor.hpp"
#include "matrixrepet/matrix.hpp"

namespace oracle {

using matrixrepet::Cell;
using matrixrepet::Matrix;
using matrixrepet::Symbol;

inline std::vector<Symbol> square_at(const Matrix& m, Cell o, std::size_t k) {
  std::vector<Symbol> out;
  out.reserve(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out.push_back(m(o.row + r, o.col + c));
  return out;
}

inline std::uint64_t distinct_k(const Matrix& m, std::size_t k) {
  std::set<std::vector<Symbol>> seen;
  for (std::size_t i = 0; i + k <= m.rows(); ++i)
    for (std::size_t j = 0; j + k <= m.cols(); ++j) seen.insert(square_at(m, {i, j}, k));
  return seen.size();
}

inline std::vector<std::uint64_t> counts(const Matrix& m) {
  std::vector<std::uint64_t> d;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) d.push_back(distinct_k(m, k));
  return d;
}

// max_k d_k / k^2 as (num, den), smallest k on ties.
struct Frac {
  std::uint64_t num;
  std::uint64_t den;
  std::size_t k;
};

inline Frac delta(const Matrix& m) {
  const auto d = counts(m);
  Frac best{d[0], 1, 1};
  for (std::size_t k = 2; k <= d.size(); ++k) {
    if (d[k - 1] * best.den > best.num * k * k) best = {d[k - 1], k * k, k};
  }
  return best;
}

// Each distinct square mapped to its occurrences.
inline std::map<std::vector<Symbol>, std::vector<Cell>> occurrences(const Matrix& m, std::size_t k) {
  std::map<std::vector<Symbol>, std::vector<Cell>> occ;
  for (std::size_t i = 0; i + k <= m.rows(); ++i)
    for (std::size_t j = 0; j + k <= m.cols(); ++j) occ[square_at(m, {i, j}, k)].push_back({i, j});
  return occ;
}

inline bool contains(Cell o, std::size_t k, Cell p) {
  return p.row >= o.row && p.row < o.row + k && p.col >= o.col && p.col < o.col + k;
}

inline bool is_attractor(const Matrix& m, const std::vector<Cell>& g) {
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    for (const auto& [content, occ] : occurrences(m, k)) {
      bool hit = false;
      for (Cell o : occ)
        for (Cell p : g) hit = hit || contains(o, k, p);
      if (!hit) return false;
    }
  }
  return true;
}

// Smallest uncovered (k, first occurrence) pair, or k == 0 when valid.
inline std::pair<std::size_t, Cell> first_uncovered(const Matrix& m, const std::vector<Cell>& g) {
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Cell best{m.rows(), 0};
    for (const auto& [content, occ] : occurrences(m, k)) {
      bool hit = false;
      for (Cell o : occ)
        for (Cell p : g) hit = hit || contains(o, k, p);
      if (!hit) best = std::min(best, occ.front());
    }
    if (best.row < m.rows()) return {k, best};
  }
  return {0, {}};
}

// Size of a minimum attractor by subset enumeration in order of size.
inline std::size_t gamma(const Matrix& m) {
  const std::size_t cells = m.rows() * m.cols();
  for (std::size_t size = 1; size <= cells; ++size) {
    std::vector<bool> pick(cells, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      std::vector<Cell> g;
      for (std::size_t i = 0; i < cells; ++i)
        if (pick[i]) g.push_back({i / m.cols(), i % m.cols()});
      if (is_attractor(m, g)) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return cells;
}

inline bool is_string_attractor(const std::string& s, const std::vector<std::size_t>& g) {
  for (std::size_t len = 1; len <= s.size(); ++len) {
    std::map<std::string, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i + len <= s.size(); ++i) occ[s.substr(i, len)].push_back(i + 1);
    for (const auto& [sub, starts] : occ) {
      bool hit = false;
      for (std::size_t st : starts)
        for (std::size_t p : g) hit = hit || (p >= st && p < st + len);
      if (!hit) return false;
    }
  }
  return true;
}

inline std::size_t gamma_string(const std::string& s) {
  const std::size_t n = s.size();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      std::vector<std::size_t> g;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) g.push_back(i + 1);
      if (is_string_attractor(s, g)) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n;
}

// Istring of the square of side q anchored at `a`, as a list of Icharacters.
inline std::vector<std::vector<Symbol>> icharacters(const Matrix& m, Cell a, std::size_t q) {
  std::vector<std::vector<Symbol>> out;
  for (std::size_t i = 0; i < q; ++i) {
    if (i > 0) {
      std::vector<Symbol> row;
      for (std::size_t c = 0; c < i; ++c) row.push_back(m(a.row + i, a.col + c));
      out.push_back(row);
    }
    std::vector<Symbol> col;
    for (std::size_t r = 0; r <= i; ++r) col.push_back(m(a.row + r, a.col + i));
    out.push_back(col);
  }
  return out;
}

// Padding by hand: bottom row $1..$n, right column $n+1..$2n, corner $2n+1.
inline Matrix pad(const Matrix& m) {
  const std::size_t n = m.rows();
  const Symbol base = static_cast<Symbol>(m.max_symbol() + 1);
  std::vector<Symbol> cells((n + 1) * (n + 1));
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t c = 0; c <= n; ++c) {
      Symbol v;
      if (r < n && c < n) v = m(r, c);
      else if (r == n && c == n) v = static_cast<Symbol>(base + 2 * n);
      else if (r == n) v = static_cast<Symbol>(base + c);
      else v = static_cast<Symbol>(base + n + r);
      cells[r * (n + 1) + c] = v;
    }
  return Matrix(n + 1, n + 1, cells);
}

struct IsuffixOrder {
  std::strong_ordering order;
  std::size_t lcp;
};

// Lexicographic comparison of the Isuffixes at p and q of the padded matrix.
inline IsuffixOrder compare_isuffixes(const Matrix& padded, Cell p, Cell q) {
  const std::size_t side = padded.rows();
  const auto a = icharacters(padded, p, side - std::max(p.row, p.col));
  const auto b = icharacters(padded, q, side - std::max(q.row, q.col));
  std::size_t t = 0;
  while (t < a.size() && t < b.size() && a[t] == b[t]) ++t;
  if (t < a.size() && t < b.size()) return {a[t] <=> b[t], t};
  return {a.size() <=> b.size(), t};
}

}  // namespace oracle
