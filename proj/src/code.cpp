#include "sogc/code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>

#include "parallel.hpp"
#include "sogc/error.hpp"

namespace sogc {

namespace {

std::atomic<unsigned> g_threads{0};

constexpr std::size_t kMaxEnumerationDimension = 30;
// Below this dimension one thread enumerates faster than a pool can start.
constexpr std::size_t kParallelEnumerationDimension = 16;

struct EnumerationResult {
  std::vector<std::uint64_t> counts;
  std::size_t min_weight = 0;
  std::uint64_t min_message = 0;
};

// Enumerates messages base ^ gray(j) for j in [0, 2^low) and accumulates
// weight counts; tracks the minimum nonzero weight and its smallest message.
void enumerate_block(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t n, std::size_t low,
                     std::uint64_t base, EnumerationResult& out) {
  const std::size_t words = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint64_t> acc(words, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if ((base >> r) & 1U) {
      for (std::size_t w = 0; w < words; ++w) acc[w] ^= rows[r][w];
    }
  }
  out.counts.assign(n + 1, 0);
  out.min_weight = n + 1;
  out.min_message = 0;
  auto visit = [&](std::uint64_t message) {
    std::size_t wt = 0;
    for (const std::uint64_t w : acc) wt += static_cast<std::size_t>(std::popcount(w));
    ++out.counts[wt];
    if (message != 0 && (wt < out.min_weight || (wt == out.min_weight && message < out.min_message))) {
      out.min_weight = wt;
      out.min_message = message;
    }
  };
  std::uint64_t message = base;
  visit(message);
  const std::uint64_t steps = std::uint64_t{1} << low;
  for (std::uint64_t j = 1; j < steps; ++j) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(j));
    for (std::size_t w = 0; w < words; ++w) acc[w] ^= rows[flip][w];
    message ^= std::uint64_t{1} << flip;
    visit(message);
  }
}

EnumerationResult enumerate(const GF2Matrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(k);
  for (const auto& r : g.row_vectors()) rows.emplace_back(r.words().begin(), r.words().end());

  const unsigned threads = default_threads();
  std::size_t high = 0;
  if (threads > 1 && k >= kParallelEnumerationDimension) high = 6;
  const std::size_t low = k - high;
  const std::size_t blocks = std::size_t{1} << high;

  std::vector<EnumerationResult> parts(blocks);
  detail::parallel_for(blocks, threads, [&](std::size_t b) {
    enumerate_block(rows, n, low, static_cast<std::uint64_t>(b) << low, parts[b]);
  });

  EnumerationResult total;
  total.counts.assign(n + 1, 0);
  total.min_weight = n + 1;
  for (const auto& p : parts) {
    for (std::size_t w = 0; w <= n; ++w) total.counts[w] += p.counts[w];
    if (p.min_weight < total.min_weight ||
        (p.min_weight == total.min_weight && p.min_message < total.min_message)) {
      total.min_weight = p.min_weight;
      total.min_message = p.min_message;
    }
  }
  return total;
}

std::string params_string(const LinearCode& c) {
  return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "," +
         std::to_string(c.min_distance()) + "]";
}

}  // namespace

void set_default_threads(unsigned threads) { g_threads.store(threads); }

unsigned default_threads() {
  const unsigned t = g_threads.load();
  if (t != 0) return t;
  return std::max(1U, std::thread::hardware_concurrency());
}

struct LinearCode::Cache {
  std::once_flag once;
  EnumerationResult result;
};

LinearCode::LinearCode(GF2Matrix generator)
    : generator_(std::move(generator)), cache_(std::make_shared<Cache>()) {
  if (generator_.rows() == 0) throw ParameterError("a code needs at least one generator row");
  if (generator_.rows() > kMaxEnumerationDimension) {
    throw ParameterError("dimension " + std::to_string(generator_.rows()) + " exceeds the supported maximum of " +
                         std::to_string(kMaxEnumerationDimension));
  }
  const std::size_t r = rank(generator_);
  if (r != generator_.rows()) throw RankError(r, generator_.rows());
}

const LinearCode::Cache& LinearCode::cache() const {
  std::call_once(cache_->once, [this] { cache_->result = enumerate(generator_); });
  return *cache_;
}

std::size_t LinearCode::min_distance() const { return cache().result.min_weight; }

const std::vector<std::uint64_t>& LinearCode::weight_counts() const { return cache().result.counts; }

WeightDistribution LinearCode::weight_distribution() const {
  WeightDistribution out;
  const auto& counts = weight_counts();
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] != 0) out.push_back({w, counts[w]});
  }
  return out;
}

GF2Vector LinearCode::min_weight_codeword() const { return encode(cache().result.min_message); }

bool LinearCode::is_self_orthogonal() const { return gram(generator_).is_zero(); }

bool LinearCode::is_doubly_even() const {
  for (const auto& r : generator_.row_vectors()) {
    if (r.weight() % 4 != 0) return false;
  }
  return is_self_orthogonal();
}

GF2Matrix simplex_generator(std::size_t k) {
  if (k == 0 || k > 20) throw ParameterError("simplex dimension must be in 1..20");
  std::vector<std::uint64_t> cols((std::uint64_t{1} << k) - 1);
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i + 1;
  return GF2Matrix::from_columns(k, cols);
}

GF2Matrix reed_muller_1_generator(std::size_t k) {
  if (k == 0 || k > 20) throw ParameterError("Reed-Muller dimension must be in 1..20");
  // Column j is (1, j) for j = 0 .. 2^k - 1, i.e. integer 1 + 2j.
  std::vector<std::uint64_t> cols(std::uint64_t{1} << k);
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = 1 + 2 * static_cast<std::uint64_t>(j);
  return GF2Matrix::from_columns(k + 1, cols);
}

LinearCode residual(const LinearCode& code, const GF2Vector& c) {
  if (c.length() != code.length()) {
    throw DimensionError("codeword length " + std::to_string(c.length()) + " does not match code length " +
                         std::to_string(code.length()));
  }
  if (c.is_zero()) throw PreconditionError("residual needs a nonzero codeword");
  if (!solve_row_combination(code.generator(), c)) throw MembershipError("vector is not a codeword of the code");
  if (c.weight() == code.length()) throw PreconditionError("codeword covers every coordinate; residual is empty");

  std::vector<bool> drop(code.length(), false);
  for (const std::size_t i : c.support()) drop[i] = true;
  const GF2Matrix punctured = code.generator().without_columns(drop);
  const auto keep = independent_rows(punctured);
  if (keep.empty()) throw PreconditionError("residual code is trivial");
  return LinearCode(punctured.select_rows(keep));
}

LinearCode puncture(const LinearCode& code, std::span<const std::size_t> positions) {
  std::vector<bool> drop(code.length(), false);
  for (const std::size_t p : positions) {
    if (p < 1 || p > code.length()) {
      throw IndexError("coordinate " + std::to_string(p) + " outside 1.." + std::to_string(code.length()));
    }
    drop[p - 1] = true;
  }
  const GF2Matrix punctured = code.generator().without_columns(drop);
  const auto keep = independent_rows(punctured);
  if (keep.empty()) throw PreconditionError("puncturing leaves the zero code");
  if (keep.size() == punctured.rows()) return LinearCode(punctured);
  return LinearCode(punctured.select_rows(keep));
}

LinearCode juxtapose(const LinearCode& c0, const GF2Matrix& g) {
  if (c0.dimension() != g.rows()) {
    throw DimensionError("juxtaposition needs " + std::to_string(c0.dimension()) + " rows, got " +
                         std::to_string(g.rows()));
  }
  if (!c0.is_self_orthogonal()) throw PreconditionError("juxtaposition needs a self-orthogonal left code");
  return LinearCode(horizontal_concat(c0.generator(), g));
}

LinearCode extend_rm(const LinearCode& code, std::size_t m) {
  const std::size_t k = code.dimension();
  if (m < 1) throw ConstructionError("extend_rm needs m >= 1");
  if (k < 3) throw ConstructionError("extend_rm needs k >= 3");
  if (!code.is_self_orthogonal()) throw ConstructionError("extend_rm needs a self-orthogonal code");
  const std::size_t d = code.min_distance();
  const std::size_t half = std::size_t{1} << (k - 1);
  if (d > m * half) {
    throw ConstructionError("extend_rm needs d <= m 2^(k-1): d=" + std::to_string(d) +
                            ", m 2^(k-1)=" + std::to_string(m * half));
  }
  const GF2Matrix rm = reed_muller_1_generator(k);
  GF2Matrix below(k + 1, code.length());
  for (std::size_t r = 0; r < k; ++r) {
    for (const std::size_t j : code.generator().row(r).support()) below.set(r + 1, j, true);
  }
  GF2Matrix g = rm;
  for (std::size_t i = 1; i < m; ++i) g = horizontal_concat(g, rm);
  LinearCode out(horizontal_concat(g, below));

  const CodeParams expected{m * 2 * half + code.length(), k + 1, m * half + d};
  if (out.params() != expected || !out.is_self_orthogonal()) {
    throw ConstructionError("extend_rm produced " + params_string(out) + " instead of the predicted [" +
                            std::to_string(expected.n) + "," + std::to_string(expected.k) + "," +
                            std::to_string(expected.d) + "] SO code");
  }
  return out;
}

LinearCode add_simplex_copies(const LinearCode& code, std::size_t m) {
  const std::size_t k = code.dimension();
  if (k < 3) throw PreconditionError("simplex copies need k >= 3");
  if (m == 0) return code;
  const GF2Matrix s = simplex_generator(k);
  GF2Matrix g = s;
  for (std::size_t i = 1; i < m; ++i) g = horizontal_concat(g, s);
  return LinearCode(horizontal_concat(g, code.generator()));
}

LinearCode shrink_by_duplicate(const LinearCode& code) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  if (!code.is_self_orthogonal()) throw PreconditionError("shrink_by_duplicate needs a self-orthogonal code");
  if (k >= 64 || n <= (std::size_t{1} << k)) {
    throw PreconditionError("shrink_by_duplicate needs n > 2^k");
  }
  if (code.min_distance() <= 2) throw PreconditionError("shrink_by_duplicate needs d > 2");

  const auto cols = code.generator().columns();
  std::map<std::uint64_t, std::vector<std::size_t>> where;
  for (std::size_t j = 0; j < n; ++j) where[cols[j]].push_back(j);
  for (const auto& [value, idx] : where) {
    if (idx.size() < 2) continue;
    std::vector<bool> drop(n, false);
    drop[idx[0]] = true;
    drop[idx[1]] = true;
    return LinearCode(code.generator().without_columns(drop));
  }
  throw Error("internal error: no repeated column although n > 2^k");
}

}  // namespace sogc
