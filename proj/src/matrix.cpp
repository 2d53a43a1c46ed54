#include "matrixrepet/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "matrixrepet/errors.hpp"

namespace matrixrepet {

namespace {

std::vector<Symbol> collect_alphabet(std::span<const Symbol> cells) {
  std::vector<bool> seen(std::size_t{std::numeric_limits<Symbol>::max()} + 1, false);
  std::vector<Symbol> alphabet;
  for (Symbol s : cells) {
    if (!seen[s]) {
      seen[s] = true;
      alphabet.push_back(s);
    }
  }
  std::sort(alphabet.begin(), alphabet.end());
  return alphabet;
}

std::size_t parse_count(std::string_view token, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError(std::string("matrix header: bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::uint64_t read_le64(std::span<const std::byte> bytes) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<std::uint64_t>(bytes[i]);
  return v;
}

void write_le64(std::vector<std::byte>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xff));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix must have at least one cell");
  if (cells_.size() != rows_ * cols_) throw std::invalid_argument("cell count does not match shape");
  alphabet_ = collect_alphabet(cells_);
}

Matrix Matrix::from_values(std::size_t rows, std::size_t cols, std::span<const std::uint32_t> values) {
  std::vector<Symbol> cells;
  cells.reserve(values.size());
  for (std::uint32_t v : values) {
    if (v > std::numeric_limits<Symbol>::max()) {
      throw UnsupportedAlphabet("symbol " + std::to_string(v) + " exceeds 16 bits");
    }
    cells.push_back(static_cast<Symbol>(v));
  }
  return Matrix(rows, cols, std::move(cells));
}

Matrix Matrix::filled(std::size_t rows, std::size_t cols, Symbol value) {
  return Matrix(rows, cols, std::vector<Symbol>(rows * cols, value));
}

Matrix Matrix::from_rows(std::span<const std::string> rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<Symbol> cells;
  cells.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged rows");
    for (char ch : r) cells.push_back(static_cast<unsigned char>(ch));
  }
  return Matrix(rows.size(), cols, std::move(cells));
}

std::size_t Matrix::side() const {
  if (!is_square()) throw std::invalid_argument("square matrix required");
  return rows_;
}

Matrix Matrix::submatrix(Cell origin, std::size_t rows, std::size_t cols) const {
  if (origin.row + rows > rows_ || origin.col + cols > cols_) {
    throw std::out_of_range("submatrix exceeds matrix bounds");
  }
  std::vector<Symbol> cells;
  cells.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto src = row(origin.row + r).subspan(origin.col, cols);
    cells.insert(cells.end(), src.begin(), src.end());
  }
  return Matrix(rows, cols, std::move(cells));
}

Matrix Matrix::with_cell(Cell cell, Symbol value) const {
  if (cell.row >= rows_ || cell.col >= cols_) throw std::out_of_range("cell out of range");
  std::vector<Symbol> cells = cells_;
  cells[cell.row * cols_ + cell.col] = value;
  return Matrix(rows_, cols_, std::move(cells));
}

Matrix parse_matrix_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw FormatError("empty matrix file");

  std::string_view header = lines.front();
  const std::size_t sep = header.find(' ');
  if (sep == std::string_view::npos) throw FormatError("matrix header must be 'rows cols'");
  std::string_view rows_tok = header.substr(0, sep);
  std::string_view cols_tok = header.substr(sep + 1);
  while (!cols_tok.empty() && cols_tok.front() == ' ') cols_tok.remove_prefix(1);
  while (!cols_tok.empty() && cols_tok.back() == ' ') cols_tok.remove_suffix(1);
  const std::size_t rows = parse_count(rows_tok, "row count");
  const std::size_t cols = parse_count(cols_tok, "column count");
  if (rows == 0 || cols == 0) throw FormatError("matrix dimensions must be positive");
  if (lines.size() - 1 != rows) {
    throw FormatError("expected " + std::to_string(rows) + " rows, found " +
                      std::to_string(lines.size() - 1));
  }

  std::vector<Symbol> cells;
  cells.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string_view line = lines[r + 1];
    if (line.size() != cols) {
      throw FormatError("ragged rows: row " + std::to_string(r + 1) + " has " +
                        std::to_string(line.size()) + " cells, expected " + std::to_string(cols));
    }
    for (char ch : line) cells.push_back(static_cast<unsigned char>(ch));
  }
  return Matrix(rows, cols, std::move(cells));
}

Matrix parse_matrix_raw(std::span<const std::byte> bytes) {
  if (bytes.empty()) throw FormatError("empty matrix file");
  if (bytes.size() < 16) throw FormatError("raw matrix header truncated");
  const std::uint64_t rows = read_le64(bytes.first(8));
  const std::uint64_t cols = read_le64(bytes.subspan(8, 8));
  if (rows == 0 || cols == 0) throw FormatError("matrix dimensions must be positive");
  if (cols != 0 && rows > (bytes.size() - 16) / cols) throw FormatError("raw matrix body truncated");
  if (bytes.size() - 16 != rows * cols) throw FormatError("raw matrix body length mismatch");
  std::vector<Symbol> cells;
  cells.reserve(rows * cols);
  for (std::byte b : bytes.subspan(16)) cells.push_back(static_cast<Symbol>(b));
  return Matrix(rows, cols, std::move(cells));
}

Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (format == MatrixFormat::Text) return parse_matrix_text(data);
  return parse_matrix_raw(std::as_bytes(std::span(data.data(), data.size())));
}

std::string to_text(const Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  out.reserve(out.size() + m.rows() * (m.cols() + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (Symbol s : m.row(r)) {
      if (s <= 0x20 || s >= 0x7f) {
        throw FormatError("symbol " + std::to_string(s) + " has no text representation");
      }
      out.push_back(static_cast<char>(s));
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::byte> to_raw_bytes(const Matrix& m) {
  std::vector<std::byte> out;
  out.reserve(16 + m.rows() * m.cols());
  write_le64(out, m.rows());
  write_le64(out, m.cols());
  for (Symbol s : m.cells()) {
    if (s > 0xff) throw FormatError("symbol " + std::to_string(s) + " does not fit in a byte");
    out.push_back(static_cast<std::byte>(s));
  }
  return out;
}

void save_matrix(const Matrix& m, const std::filesystem::path& path, MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  if (format == MatrixFormat::Text) {
    out << to_text(m);
  } else {
    auto bytes = to_raw_bytes(m);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
}

Matrix to_printable(const Matrix& m) {
  static constexpr std::string_view kDigits =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ!\"$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
  const auto& alphabet = m.alphabet();
  if (alphabet.size() > kDigits.size()) throw FormatError("alphabet too large for text form");
  std::vector<Symbol> cells;
  cells.reserve(m.cells().size());
  for (Symbol s : m.cells()) {
    auto idx = std::lower_bound(alphabet.begin(), alphabet.end(), s) - alphabet.begin();
    cells.push_back(static_cast<unsigned char>(kDigits[static_cast<std::size_t>(idx)]));
  }
  return Matrix(m.rows(), m.cols(), std::move(cells));
}

Matrix transpose(const Matrix& m) {
  std::vector<Symbol> cells(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cells[c * m.rows() + r] = m(r, c);
  return Matrix(m.cols(), m.rows(), std::move(cells));
}

bool equal_squares(const Matrix& m, Cell a, Cell b, std::size_t side) {
  for (std::size_t r = 0; r < side; ++r) {
    auto ra = m.row(a.row + r).subspan(a.col, side);
    auto rb = m.row(b.row + r).subspan(b.col, side);
    if (!std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

PaddedMatrix pad_with_sentinels(const Matrix& m) {
  const std::size_t n = m.side();
  const std::size_t base = std::size_t{m.max_symbol()} + 1;
  if (base + 2 * n > std::numeric_limits<Symbol>::max()) {
    throw UnsupportedAlphabet("not enough symbol space for " + std::to_string(2 * n + 1) + " sentinels");
  }
  const std::size_t side = n + 1;
  std::vector<Symbol> cells(side * side);
  for (std::size_t r = 0; r < n; ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), cells.begin() + static_cast<std::ptrdiff_t>(r * side));
    cells[r * side + n] = static_cast<Symbol>(base + n + r);
  }
  for (std::size_t c = 0; c < n; ++c) cells[n * side + c] = static_cast<Symbol>(base + c);
  cells[n * side + n] = static_cast<Symbol>(base + 2 * n);
  return PaddedMatrix{Matrix(side, side, std::move(cells)), static_cast<Symbol>(base), n};
}

}  // namespace matrixrepet
