#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace matrixrepet {

using Symbol = std::uint16_t;

/// Zero-based cell coordinate.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Dense row-major symbol grid. The alphabet is always the sorted set of
/// symbols that actually occur.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::vector<Symbol> cells);

  /// Builds a matrix from wider integers; throws UnsupportedAlphabet when a
  /// value does not fit in a Symbol.
  static Matrix from_values(std::size_t rows, std::size_t cols,
                            std::span<const std::uint32_t> values);
  static Matrix filled(std::size_t rows, std::size_t cols, Symbol value);
  /// One row per string; all strings must have equal length.
  static Matrix from_rows(std::span<const std::string> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Side of a square matrix; throws std::invalid_argument otherwise.
  std::size_t side() const;

  Symbol operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  Symbol at(Cell cell) const { return (*this)(cell.row, cell.col); }

  std::span<const Symbol> cells() const noexcept { return cells_; }
  std::span<const Symbol> row(std::size_t r) const {
    return std::span<const Symbol>(cells_).subspan(r * cols_, cols_);
  }

  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  std::size_t sigma() const noexcept { return alphabet_.size(); }
  Symbol max_symbol() const { return alphabet_.back(); }

  Matrix submatrix(Cell origin, std::size_t rows, std::size_t cols) const;
  Matrix with_cell(Cell cell, Symbol value) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> cells_;
  std::vector<Symbol> alphabet_;
};

enum class MatrixFormat { Text, RawBytes };

Matrix parse_matrix_text(std::string_view text);
Matrix parse_matrix_raw(std::span<const std::byte> bytes);
Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format = MatrixFormat::Text);

/// Text form; every symbol must be a printable, non-space ASCII character.
std::string to_text(const Matrix& m);
std::vector<std::byte> to_raw_bytes(const Matrix& m);
void save_matrix(const Matrix& m, const std::filesystem::path& path,
                 MatrixFormat format = MatrixFormat::Text);

/// Renames symbols in alphabet order onto "0-9a-zA-Z..." so the result can
/// be written in text form.
Matrix to_printable(const Matrix& m);

Matrix transpose(const Matrix& m);

bool equal_squares(const Matrix& m, Cell a, Cell b, std::size_t side);

/// Square matrix bordered by one extra row and column of 2n+1 distinct
/// sentinels: bottom row holds $1..$n, right column $n+1..$2n (top to
/// bottom), and the corner $2n+1.
struct PaddedMatrix {
  Matrix inner;
  Symbol sentinel_base = 0;
  std::size_t original_n = 0;

  bool is_sentinel(Symbol s) const noexcept { return s >= sentinel_base; }
  /// 1-based sentinel index of a border symbol.
  std::size_t sentinel_index(Symbol s) const noexcept { return s - sentinel_base + 1; }
};

PaddedMatrix pad_with_sentinels(const Matrix& m);

}  // namespace matrixrepet
