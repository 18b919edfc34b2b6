#include "sogc/gf2.hpp"

#include <bit>

#include "sogc/error.hpp"

namespace sogc {

namespace {

std::size_t word_count(std::size_t length) { return (length + GF2Vector::kWordBits - 1) / GF2Vector::kWordBits; }

void require_same_length(const GF2Vector& u, const GF2Vector& v) {
  if (u.length() != v.length()) {
    throw DimensionError("vector length mismatch: " + std::to_string(u.length()) + " vs " +
                         std::to_string(v.length()));
  }
}

}  // namespace

GF2Vector::GF2Vector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

GF2Vector GF2Vector::from_string(std::string_view bits) {
  GF2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw ValidationError("invalid bit character '" + std::string(1, bits[i]) + "' at position " +
                            std::to_string(i + 1));
    }
  }
  return v;
}

GF2Vector GF2Vector::ones(std::size_t length) {
  GF2Vector v(length);
  for (auto& w : v.words_) w = ~Word{0};
  if (const std::size_t tail = length % kWordBits; tail != 0) {
    v.words_.back() = (Word{1} << tail) - 1;
  }
  return v;
}

std::size_t GF2Vector::weight() const noexcept {
  std::size_t total = 0;
  for (const Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool GF2Vector::is_zero() const noexcept {
  for (const Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::size_t> GF2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    Word w = words_[wi];
    while (w != 0) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string GF2Vector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t intersection_size(const GF2Vector& u, const GF2Vector& v) {
  require_same_length(u, v);
  const auto a = u.words();
  const auto b = v.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool inner_product(const GF2Vector& u, const GF2Vector& v) { return (intersection_size(u, v) & 1U) != 0; }

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, GF2Vector(cols)), cols_(cols) {}

GF2Matrix::GF2Matrix(std::vector<GF2Vector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_) {
    if (r.length() != cols_) {
      throw DimensionError("matrix row has length " + std::to_string(r.length()) + ", expected " +
                           std::to_string(cols_));
    }
  }
}

GF2Matrix GF2Matrix::from_strings(std::span<const std::string> rows) {
  std::vector<GF2Vector> parsed;
  parsed.reserve(rows.size());
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) parsed.push_back(GF2Vector::from_string(r));
  return GF2Matrix(std::move(parsed), cols);
}

GF2Matrix GF2Matrix::from_columns(std::size_t rows, std::span<const std::uint64_t> columns) {
  if (rows > 64) throw DimensionError("column-integer form supports at most 64 rows");
  GF2Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (rows < 64 && (columns[j] >> rows) != 0) {
      throw DimensionError("column integer " + std::to_string(columns[j]) + " does not fit in " +
                           std::to_string(rows) + " rows");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if ((columns[j] >> r) & 1U) m.rows_[r].set(j, true);
    }
  }
  return m;
}

GF2Matrix GF2Matrix::identity(std::size_t k) {
  GF2Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.rows_[i].set(i, true);
  return m;
}

std::uint64_t GF2Matrix::column(std::size_t j) const {
  if (rows_.size() > 64) throw DimensionError("column-integer form supports at most 64 rows");
  std::uint64_t value = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(j)) value |= std::uint64_t{1} << r;
  }
  return value;
}

std::vector<std::uint64_t> GF2Matrix::columns() const {
  std::vector<std::uint64_t> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = column(j);
  return out;
}

GF2Matrix GF2Matrix::without_columns(const std::vector<bool>& drop) const {
  if (drop.size() != cols_) throw DimensionError("column mask has wrong length");
  std::size_t kept = 0;
  for (bool d : drop) kept += d ? 0 : 1;
  GF2Matrix out(rows_.size(), kept);
  std::size_t dst = 0;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (drop[j]) continue;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].get(j)) out.rows_[r].set(dst, true);
    }
    ++dst;
  }
  return out;
}

GF2Matrix GF2Matrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<GF2Vector> picked;
  picked.reserve(indices.size());
  for (const std::size_t i : indices) {
    if (i >= rows_.size()) throw IndexError("row index out of range");
    picked.push_back(rows_[i]);
  }
  return GF2Matrix(std::move(picked), cols_);
}

bool GF2Matrix::is_zero() const noexcept {
  for (const auto& r : rows_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

bool GF2Matrix::is_symmetric() const {
  if (rows_.size() != cols_) return false;
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (get(i, j) != get(j, i)) return false;
    }
  }
  return true;
}

std::vector<std::string> GF2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

namespace {

// Reduces `basis` in place to echelon form; returns the rank. Pivot columns
// are stored alongside so later vectors can be reduced against the basis.
struct Echelon {
  std::vector<GF2Vector> rows;
  std::vector<std::size_t> pivots;

  // Reduces v against the current basis; returns true if v was independent
  // (and then appends it).
  bool insert(GF2Vector v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v.get(pivots[i])) v ^= rows[i];
    }
    if (v.is_zero()) return false;
    const auto words = v.words();
    std::size_t pivot = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] != 0) {
        pivot = w * GF2Vector::kWordBits + static_cast<std::size_t>(std::countr_zero(words[w]));
        break;
      }
    }
    // Keep the basis fully reduced on pivot columns.
    for (auto& r : rows) {
      if (r.get(pivot)) r ^= v;
    }
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    return true;
  }
};

}  // namespace

std::size_t rank(const GF2Matrix& m) {
  Echelon e;
  for (const auto& r : m.row_vectors()) e.insert(r);
  return e.rows.size();
}

GF2Matrix gram(const GF2Matrix& m) {
  const std::size_t k = m.rows();
  GF2Matrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const bool bit = inner_product(m.row(i), m.row(j));
      g.set(i, j, bit);
      g.set(j, i, bit);
    }
  }
  return g;
}

GF2Matrix horizontal_concat(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("cannot concatenate matrices with " + std::to_string(a.rows()) + " and " +
                         std::to_string(b.rows()) + " rows");
  }
  GF2Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const std::size_t j : a.row(r).support()) out.set(r, j, true);
    for (const std::size_t j : b.row(r).support()) out.set(r, a.cols() + j, true);
  }
  return out;
}

std::vector<std::size_t> independent_rows(const GF2Matrix& m) {
  Echelon e;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (e.insert(m.row(i))) kept.push_back(i);
  }
  return kept;
}

std::optional<std::uint64_t> solve_row_combination(const GF2Matrix& m, const GF2Vector& target) {
  if (m.rows() > 64) throw DimensionError("row-combination solver supports at most 64 rows");
  if (target.length() != m.cols()) {
    throw DimensionError("target length " + std::to_string(target.length()) + " does not match " +
                         std::to_string(m.cols()) + " columns");
  }
  // Echelon form tracking which original rows make up each basis vector.
  std::vector<GF2Vector> rows;
  std::vector<std::uint64_t> combos;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    GF2Vector v = m.row(i);
    std::uint64_t combo = std::uint64_t{1} << i;
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (v.get(pivots[b])) {
        v ^= rows[b];
        combo ^= combos[b];
      }
    }
    if (v.is_zero()) continue;
    const std::size_t pivot = v.support().front();
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (rows[b].get(pivot)) {
        rows[b] ^= v;
        combos[b] ^= combo;
      }
    }
    rows.push_back(std::move(v));
    combos.push_back(combo);
    pivots.push_back(pivot);
  }
  GF2Vector residue = target;
  std::uint64_t message = 0;
  for (std::size_t b = 0; b < rows.size(); ++b) {
    if (residue.get(pivots[b])) {
      residue ^= rows[b];
      message ^= combos[b];
    }
  }
  if (!residue.is_zero()) return std::nullopt;
  return message;
}

GF2Vector combine_rows(const GF2Matrix& m, std::uint64_t message) {
  GF2Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows() && r < 64; ++r) {
    if ((message >> r) & 1U) out ^= m.row(r);
  }
  return out;
}

}  // namespace sogc
