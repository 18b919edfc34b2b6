#pragma once

// Bit-packed vectors and matrices over GF(2).
//
// Bit i of a vector lives in word i / 64 at bit position i % 64. Storage past
// length() is always zero, so word-wise popcount and comparison are exact.
//
// Column-integer convention: for a matrix with at most 64 rows, column j is
// identified with the integer whose bit r is the entry in row r. The nonzero
// vectors of F_2^k are therefore the integers 1 .. 2^k - 1 and row 0 of a
// generator contributes the least significant bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sogc {

class GF2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  GF2Vector() = default;
  explicit GF2Vector(std::size_t length);

  /// Parses a string of '0' / '1' characters.
  static GF2Vector from_string(std::string_view bits);
  static GF2Vector ones(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

  /// Indices of the set bits, ascending.
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  GF2Vector& operator^=(const GF2Vector& other);
  friend GF2Vector operator^(GF2Vector lhs, const GF2Vector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Number of set coordinates.
inline std::size_t weight(const GF2Vector& v) noexcept { return v.weight(); }

/// |supp(u) ∩ supp(v)|. Throws DimensionError on length mismatch.
std::size_t intersection_size(const GF2Vector& u, const GF2Vector& v);

/// Standard inner product over GF(2). Throws DimensionError on length mismatch.
bool inner_product(const GF2Vector& u, const GF2Vector& v);

class GF2Matrix {
 public:
  GF2Matrix() = default;
  /// Zero matrix.
  GF2Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of rows; every row must have length `cols`.
  GF2Matrix(std::vector<GF2Vector> rows, std::size_t cols);

  /// One string of '0'/'1' per row; all rows must have equal length.
  static GF2Matrix from_strings(std::span<const std::string> rows);
  /// Builds a rows x columns.size() matrix from column integers.
  static GF2Matrix from_columns(std::size_t rows, std::span<const std::uint64_t> columns);
  static GF2Matrix identity(std::size_t k);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const GF2Vector& row(std::size_t i) const noexcept { return rows_[i]; }
  std::span<const GF2Vector> row_vectors() const noexcept { return rows_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) noexcept { rows_[r].set(c, value); }

  /// Column j as an integer (requires rows() <= 64).
  std::uint64_t column(std::size_t j) const;
  std::vector<std::uint64_t> columns() const;

  /// Copy with the columns whose flag is set removed.
  GF2Matrix without_columns(const std::vector<bool>& drop) const;
  /// Copy keeping only the listed rows, in the given order.
  GF2Matrix select_rows(std::span<const std::size_t> indices) const;

  bool is_zero() const noexcept;
  bool is_symmetric() const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::vector<GF2Vector> rows_;
  std::size_t cols_ = 0;
};

/// Dimension of the row space. Works on a scratch copy.
std::size_t rank(const GF2Matrix& m);

/// k x k matrix of pairwise row inner products.
GF2Matrix gram(const GF2Matrix& m);

/// [A | B]. Throws DimensionError if the row counts differ.
GF2Matrix horizontal_concat(const GF2Matrix& a, const GF2Matrix& b);

/// Indices of a maximal set of linearly independent rows, chosen greedily in
/// row order (a row is kept iff it is independent of the rows kept before it).
std::vector<std::size_t> independent_rows(const GF2Matrix& m);

/// Returns x with x * M = target, or nullopt if target is not in the row
/// space. Requires rows() <= 64. Throws DimensionError on length mismatch.
std::optional<std::uint64_t> solve_row_combination(const GF2Matrix& m, const GF2Vector& target);

/// x * M for a message given as a bit mask over the rows (rows() <= 64).
GF2Vector combine_rows(const GF2Matrix& m, std::uint64_t message);

}  // namespace sogc
