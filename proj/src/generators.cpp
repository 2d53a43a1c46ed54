#include "matrixrepet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "matrixrepet/hash_index.hpp"

namespace matrixrepet {

namespace {

std::size_t checked_root(std::size_t n) {
  const std::size_t r = exact_sqrt(n);
  if (r == 0 || r % 2 != 0) {
    throw std::invalid_argument("separation family needs n = r^2 with r even (got n=" + std::to_string(n) + ")");
  }
  return r;
}

std::string separation_block(std::size_t i, std::size_t root) {
  return std::string(i, '1') + std::string(2 * root - i, '0');
}

Matrix separation_with_row(std::size_t n, const std::string& first) {
  std::vector<Symbol> cells(n * n, static_cast<Symbol>('#'));
  for (std::size_t c = 0; c < n; ++c) cells[c] = static_cast<unsigned char>(first[c]);
  return Matrix(n, n, std::move(cells));
}

}  // namespace

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

NonMonotoneStrings gen_nonmono(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gen_nonmono needs n >= 1");
  std::string w = "abbb" + std::string(n, 'a') + "ab";
  return {w, w + "b"};
}

Matrix gen_separation(std::size_t n) {
  const std::size_t root = checked_root(n);
  std::string row;
  for (std::size_t i = 1; i <= root / 2; ++i) row += separation_block(i, root);
  return separation_with_row(n, row);
}

Matrix gen_permuted(std::size_t n, std::span<const std::size_t> perm) {
  const std::size_t root = checked_root(n);
  const std::size_t blocks = root / 2;
  if (perm.size() != blocks) {
    throw std::invalid_argument("permutation must have " + std::to_string(blocks) + " entries");
  }
  std::vector<bool> seen(blocks + 1, false);
  for (std::size_t v : perm) {
    if (v < 1 || v > blocks || seen[v]) throw std::invalid_argument("invalid permutation");
    seen[v] = true;
  }
  std::string row;
  for (std::size_t v : perm) row += separation_block(v, root);
  return separation_with_row(n, row);
}

std::vector<Window> separation_unique_windows(std::size_t n) {
  const std::size_t root = checked_root(n);
  std::vector<Window> windows;
  for (std::size_t i = 0; i < root / 2; ++i) windows.push_back({{0, i * 2 * root}, 2 * root});
  return windows;
}

Matrix gen_random(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  if (sigma < 1 || sigma > 65536) throw std::invalid_argument("sigma must lie in [1, 65536]");
  if (n < 1) throw std::invalid_argument("n must be positive");
  const bool need_all = n * n >= sigma;
  constexpr std::uint64_t kMaxAttempts = 1000;
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::vector<Symbol> cells(n * n);
    const std::uint64_t key = mix64(seed ^ mix64(attempt + 0x51ed27));
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<Symbol>(mix64(key + i) % sigma);
    Matrix m(n, n, std::move(cells));
    if (!need_all || m.sigma() == sigma || attempt + 1 == kMaxAttempts) return m;
  }
}

}  // namespace matrixrepet
