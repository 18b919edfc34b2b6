#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sogc/gf2.hpp"

namespace sogc {

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct WeightCount {
  std::size_t weight = 0;
  std::uint64_t count = 0;
  friend bool operator==(const WeightCount&, const WeightCount&) = default;
};

using WeightDistribution = std::vector<WeightCount>;

/// Number of worker threads used by weight enumeration, table generation and
/// search when the caller does not say otherwise. 0 restores the default
/// (hardware concurrency).
void set_default_threads(unsigned threads);
unsigned default_threads();

/// A binary linear code given by a full-rank generator matrix.
///
/// Parameters and the weight distribution are computed on first use and
/// shared between copies. Dimensions up to 30 are supported by enumeration.
class LinearCode {
 public:
  /// Throws RankError if the rows are dependent, ParameterError if the
  /// matrix has no rows.
  explicit LinearCode(GF2Matrix generator);

  const GF2Matrix& generator() const noexcept { return generator_; }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }

  std::size_t min_distance() const;
  CodeParams params() const { return {length(), dimension(), min_distance()}; }

  /// Nonzero entries only, ascending by weight; includes (0, 1).
  WeightDistribution weight_distribution() const;
  /// counts[w] = number of codewords of weight w, for w in 0..n.
  const std::vector<std::uint64_t>& weight_counts() const;

  /// A codeword of minimum weight: the one whose message has the smallest
  /// integer value among all minimum-weight codewords.
  GF2Vector min_weight_codeword() const;
  /// xG for the message whose bit i selects row i.
  GF2Vector encode(std::uint64_t message) const { return combine_rows(generator_, message); }

  bool is_self_orthogonal() const;
  bool is_doubly_even() const;

 private:
  struct Cache;
  const Cache& cache() const;

  GF2Matrix generator_;
  std::shared_ptr<Cache> cache_;
};

/// Generator of the simplex code S_k: columns 1 .. 2^k - 1 in increasing order.
GF2Matrix simplex_generator(std::size_t k);

/// [[1, 1..1], [0, S_k]], the generator of R(1,k).
GF2Matrix reed_muller_1_generator(std::size_t k);

/// Res(C, c): C punctured on supp(c), with a full-rank generator re-derived
/// by keeping the independent punctured rows. Throws MembershipError if c is
/// not a codeword, PreconditionError if c is zero, covers every coordinate,
/// or leaves a trivial code.
LinearCode residual(const LinearCode& code, const GF2Vector& c);

/// Deletes the given 1-based coordinates. The result may have smaller
/// dimension; its generator keeps the original rows that stay independent.
LinearCode puncture(const LinearCode& code, std::span<const std::size_t> positions);

/// The code generated by [G0 | G] where C0 is SO and G has C0.k rows.
LinearCode juxtapose(const LinearCode& c0, const GF2Matrix& g);

/// m copies of R(1,k) followed by [0; G]: an SO [m 2^k + n, k + 1, m 2^(k-1) + d]
/// code. Requires m >= 1, k >= 3, C SO and d <= m 2^(k-1).
LinearCode extend_rm(const LinearCode& code, std::size_t m);

/// [S_k | ... | S_k | G] with m simplex copies. Requires k >= 3.
LinearCode add_simplex_copies(const LinearCode& code, std::size_t m);

/// Deletes one pair of equal columns (the smallest repeated column integer,
/// first two occurrences). Requires C SO, n > 2^k and d > 2.
LinearCode shrink_by_duplicate(const LinearCode& code);

}  // namespace sogc
