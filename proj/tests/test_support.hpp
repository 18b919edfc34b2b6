#pragma once

// Helpers shared by the unit tests: a fixed-seed generator and naive oracles
// that work on plain int matrices, independent of the bit-packed code paths.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sogc/gf2.hpp"

namespace sogc::test {

inline constexpr std::uint64_t kSeed = 20240917;

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_ints(const GF2Matrix& m) {
  IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  }
  return out;
}

inline GF2Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  GF2Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, (rng() & 1U) != 0);
  return v;
}

inline GF2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  GF2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rng() & 1U) != 0);
  }
  return m;
}

/// Codeword x*G computed entry by entry.
inline std::vector<int> naive_encode(const IntMatrix& g, std::uint64_t message) {
  const std::size_t n = g.empty() ? 0 : g[0].size();
  std::vector<int> word(n, 0);
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (((message >> r) & 1U) == 0) continue;
    for (std::size_t c = 0; c < n; ++c) word[c] ^= g[r][c];
  }
  return word;
}

/// counts[w] over all 2^k messages (rows assumed independent).
inline std::vector<std::uint64_t> naive_weight_counts(const GF2Matrix& m) {
  const IntMatrix g = to_ints(m);
  std::vector<std::uint64_t> counts(m.cols() + 1, 0);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.rows()); ++x) {
    std::size_t w = 0;
    for (const int b : naive_encode(g, x)) w += static_cast<std::size_t>(b);
    ++counts[w];
  }
  return counts;
}

inline std::size_t naive_min_distance(const GF2Matrix& m) {
  const auto counts = naive_weight_counts(m);
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) return w;
  }
  return 0;
}

/// Rank by elimination over int rows.
inline std::size_t naive_rank(const GF2Matrix& m) {
  IntMatrix g = to_ints(m);
  std::size_t rank = 0;
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < g.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < g.size() && g[pivot][c] == 0) ++pivot;
    if (pivot == g.size()) continue;
    std::swap(g[pivot], g[rank]);
    for (std::size_t r = 0; r < g.size(); ++r) {
      if (r != rank && g[r][c] != 0) {
        for (std::size_t j = 0; j < cols; ++j) g[r][j] ^= g[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

/// True iff every pair of rows (including a row with itself) has even overlap.
inline bool naive_self_orthogonal(const GF2Matrix& m) {
  const IntMatrix g = to_ints(m);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      int acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc ^= g[i][c] & g[j][c];
      if (acc != 0) return false;
    }
  }
  return true;
}

/// Direct summation of ceil(d / 2^i).
inline std::size_t naive_griesmer(std::size_t k, std::size_t d) {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += (d + (std::size_t{1} << i) - 1) >> i;
  return sum;
}

struct Triple {
  std::size_t n, k, d;
};

// The triples of the dimension-7 and dimension-8 nonexistence lists that
// follow from residual arithmetic and the bundled table.
const std::vector<Triple> kListed = {
    {45, 6, 22},   {53, 6, 26},   {60, 6, 30},   {47, 7, 22},   {71, 7, 34},   {79, 7, 38},   {93, 7, 46},
    {102, 7, 50},  {109, 7, 54},  {117, 7, 58},  {124, 7, 62},  {48, 8, 22},   {105, 8, 50},  {112, 8, 54},
    {136, 8, 66},  {144, 8, 70},  {152, 8, 74},  {159, 8, 78},  {168, 8, 82},  {175, 8, 86},  {189, 8, 94},
    {199, 8, 98},  {214, 8, 106}, {221, 8, 110}, {230, 8, 114}, {237, 8, 118}, {245, 8, 122}, {252, 8, 126}};

// Largest d of an SO [n,k] code, found by trying every set of k independent
// pairwise-orthogonal even-weight rows given as integers. 0 if none exists.
inline std::size_t brute_force_dso(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> even;
  for (std::uint32_t v = 1; v < (1U << n); ++v) {
    if (std::popcount(v) % 2 == 0) even.push_back(v);
  }
  auto orth = [](std::uint32_t a, std::uint32_t b) { return std::popcount(a & b) % 2 == 0; };
  auto wt = [](std::uint32_t a) { return static_cast<std::size_t>(std::popcount(a)); };
  std::size_t best = 0;
  const std::size_t m = even.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto a = even[i];
    if (k == 1) {
      best = std::max(best, wt(a));
      continue;
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto b = even[j];
      if (!orth(a, b)) continue;
      const std::size_t d2 = std::min({wt(a), wt(b), wt(a ^ b)});
      if (k == 2) {
        best = std::max(best, d2);
        continue;
      }
      for (std::size_t l = j + 1; l < m; ++l) {
        const auto c = even[l];
        if (c == (a ^ b) || !orth(a, c) || !orth(b, c)) continue;
        best = std::max(best, std::min({d2, wt(c), wt(a ^ c), wt(b ^ c), wt(a ^ b ^ c)}));
      }
    }
  }
  return best;
}

}  // namespace sogc::test
