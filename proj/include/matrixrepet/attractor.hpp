#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matrixrepet/hash_index.hpp"
#include "matrixrepet/matrix.hpp"

namespace matrixrepet {

/// One-based matrix position, as used in attractor files.
struct Position {
  std::size_t row = 1;
  std::size_t col = 1;

  Cell cell() const noexcept { return {row - 1, col - 1}; }
  static Position of(Cell c) noexcept { return {c.row + 1, c.col + 1}; }

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Set of matrix positions; kept sorted and free of duplicates.
struct Attractor {
  std::vector<Position> positions;

  Attractor() = default;
  explicit Attractor(std::vector<Position> ps);

  std::size_t size() const noexcept { return positions.size(); }
  bool contains(Position p) const;
  void insert(Position p);

  friend bool operator==(const Attractor&, const Attractor&) = default;
};

/// Set of one-based string positions; sorted, no duplicates.
struct StringAttractor {
  std::vector<std::size_t> positions;

  StringAttractor() = default;
  explicit StringAttractor(std::vector<std::size_t> ps);

  std::size_t size() const noexcept { return positions.size(); }
  friend bool operator==(const StringAttractor&, const StringAttractor&) = default;
};

/// A distinct k x k submatrix none of whose occurrences contains an
/// attractor position; `anchor` is its first occurrence in row-major order.
struct Witness {
  std::size_t k = 0;
  Position anchor;
};

struct Verdict {
  bool valid = false;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return valid; }
};

struct VerifyOptions {
  HashSeed seed;
  int threads = 1;
};

/// Checks that every distinct square submatrix has an occurrence whose cell
/// range contains a position of `g`. On failure the witness has the smallest
/// k, then the row-major smallest anchor. Throws InvalidAttractor for
/// positions outside the matrix.
Verdict verify_attractor(const Matrix& m, const Attractor& g, const VerifyOptions& opts = {});

struct StringVerdict {
  bool valid = false;
  std::size_t length = 0;  // uncovered substring, when invalid
  std::size_t start = 0;   // 1-based

  explicit operator bool() const noexcept { return valid; }
};

StringVerdict verify_string_attractor(std::string_view s, const StringAttractor& g);

struct ExactOptions {
  std::size_t max_side = 10;
  std::size_t max_length = 16;
  std::uint64_t node_budget = 20'000'000;
  HashSeed seed;
};

/// Minimum attractor by branch and bound over sizes sigma, sigma+1, ...
/// Throws Inconclusive when the size guard or the node budget is exceeded.
Attractor gamma_exact(const Matrix& m, const ExactOptions& opts = {});

/// Minimum string attractor, same search over distinct substrings.
StringAttractor gamma_exact_string(std::string_view s, const ExactOptions& opts = {});

struct GreedyOptions {
  /// Largest side handled by the set-cover phase; 0 means min(n, 8).
  std::size_t k_cap = 0;
  HashSeed seed;
  int threads = 1;
};

/// Valid, not necessarily minimum, attractor: greedy set cover over the
/// submatrices of side <= k_cap, then one pass over every side adding the
/// first occurrence of each submatrix still uncovered.
Attractor gamma_greedy(const Matrix& m, const GreedyOptions& opts = {});

/// |s| x |s| matrix whose rows all equal s (one symbol per character).
Matrix reduce_string_to_matrix(std::string_view s);

/// {(1, j) : j in g}.
Attractor lift_attractor(const StringAttractor& g);

/// Column projection of `g`. Collisions shrink the set; it is then completed
/// with the smallest unused indices until it has `target_size` elements.
StringAttractor project_attractor(const Attractor& g, std::size_t target_size);

/// Square window given by its top-left cell.
struct Window {
  Cell origin;
  std::size_t side = 0;
};

struct UniqueWindowReport {
  std::vector<std::size_t> occurrences;  // per window, over the whole matrix
  bool pairwise_disjoint = false;

  /// Number of attractor positions these windows force: each window that
  /// occurs exactly once needs a position inside it, and disjoint windows
  /// cannot share one.
  std::size_t lower_bound() const;
};

UniqueWindowReport unique_window_report(const Matrix& m, std::span<const Window> windows, HashSeed seed = {});

Attractor parse_attractor_text(std::string_view text);
Attractor load_attractor(const std::string& path);
std::string to_text(const Attractor& g);

}  // namespace matrixrepet
