#include "matrixrepet/hash_index.hpp"

#include <stdexcept>

namespace matrixrepet {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
__extension__ using u128 = unsigned __int128;

inline std::uint64_t reduce(u128 x) noexcept {
  std::uint64_t lo = static_cast<std::uint64_t>(x & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kMod) r -= kMod;
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
  return reduce(static_cast<u128>(a) * b);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = a + b;
  return r >= kMod ? r - kMod : r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept {
  return a >= b ? a - b : a + kMod - b;
}

std::uint64_t power(std::uint64_t b, std::uint64_t e) noexcept {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t derive_base(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t b = mix64(seed ^ mix64(salt)) % kMod;
  return b < (std::uint64_t{1} << 20) ? b + (std::uint64_t{1} << 20) : b;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

HashIndex::HashIndex(const Matrix& m, HashSeed seed)
    : matrix_(&m), seed_(seed), stride_(m.cols() + 1) {
  first_.base_row = derive_base(seed.value, 1);
  first_.base_col = derive_base(seed.value, 2);
  second_.base_row = derive_base(seed.value, 3);
  second_.base_col = derive_base(seed.value, 4);
  build(first_);
  build(second_);
}

void HashIndex::build(Table& t) const {
  const Matrix& m = *matrix_;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::vector<std::uint64_t> row_pow(rows), col_pow(cols);
  t.inv_row_pow.resize(rows);
  t.inv_col_pow.resize(cols);
  const std::uint64_t inv_row = power(t.base_row, kMod - 2);
  const std::uint64_t inv_col = power(t.base_col, kMod - 2);
  for (std::size_t i = 0; i < rows; ++i) {
    row_pow[i] = i == 0 ? 1 : mul(row_pow[i - 1], t.base_row);
    t.inv_row_pow[i] = i == 0 ? 1 : mul(t.inv_row_pow[i - 1], inv_row);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    col_pow[j] = j == 0 ? 1 : mul(col_pow[j - 1], t.base_col);
    t.inv_col_pow[j] = j == 0 ? 1 : mul(t.inv_col_pow[j - 1], inv_col);
  }

  t.prefix.assign((rows + 1) * stride_, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t running = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      const std::uint64_t v = std::uint64_t{m(i, j)} + 1;
      running = add(running, mul(mul(v, row_pow[i]), col_pow[j]));
      t.prefix[(i + 1) * stride_ + j + 1] = add(t.prefix[i * stride_ + j + 1], running);
    }
  }
}

std::uint64_t HashIndex::eval(const Table& t, Cell o, std::size_t rows, std::size_t cols) const {
  const std::size_t r0 = o.row, c0 = o.col, r1 = o.row + rows, c1 = o.col + cols;
  std::uint64_t v = add(t.prefix[r1 * stride_ + c1], t.prefix[r0 * stride_ + c0]);
  v = sub(v, add(t.prefix[r0 * stride_ + c1], t.prefix[r1 * stride_ + c0]));
  return mul(mul(v, t.inv_row_pow[r0]), t.inv_col_pow[c0]);
}

Fingerprint HashIndex::fingerprint(Cell origin, std::size_t rows, std::size_t cols) const {
  if (origin.row + rows > matrix_->rows() || origin.col + cols > matrix_->cols()) {
    throw std::out_of_range("fingerprint window exceeds matrix");
  }
  return Fingerprint{eval(first_, origin, rows, cols), eval(second_, origin, rows, cols)};
}

}  // namespace matrixrepet
