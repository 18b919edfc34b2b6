// Randomized local search for SO [n,k,>=d] codes. Used offline to produce the
// bundled code files under data/codes; every result is re-verified exactly.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sogc/code.hpp"
#include "sogc/code_io.hpp"

namespace {

struct Problem {
  std::size_t n, k, d;
  std::size_t q;
  std::vector<std::uint64_t> gram_bits;
};

std::uint64_t gram_bits_of(std::uint64_t c, std::size_t k) {
  std::uint64_t g = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j, ++bit) {
      if (((c >> i) & 1U) && ((c >> j) & 1U)) g |= std::uint64_t{1} << bit;
    }
  }
  return g;
}

// Deficiency below d summed over messages, plus a weighted count of nonzero
// Gram entries.
long cost(const Problem& p, const std::vector<int>& w, std::uint64_t gram) {
  long c = 0;
  for (std::size_t x = 1; x < p.q; ++x) {
    if (w[x] < static_cast<int>(p.d)) c += static_cast<long>(p.d) - w[x];
  }
  return c + 4L * std::popcount(gram);
}

// Starts from copies of the simplex columns cut to length n, which is close to
// optimal for the lengths of interest, then perturbs.
std::optional<std::vector<std::uint64_t>> anneal(const Problem& p, std::mt19937_64& rng, std::uint64_t steps,
                                                 double t0) {
  std::uniform_int_distribution<std::uint64_t> col(0, p.q - 1);
  std::uniform_int_distribution<std::size_t> pos(0, p.n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::uint64_t> cols(p.n);
  std::vector<int> w(p.q, 0);
  std::uint64_t gram = 0;
  auto apply = [&](std::uint64_t c, int delta) {
    for (std::size_t x = 1; x < p.q; ++x) {
      if (std::popcount(x & c) & 1) w[x] += delta;
    }
    gram ^= p.gram_bits[c];
  };
  std::vector<std::uint64_t> start;
  while (start.size() < p.n) {
    for (std::uint64_t c = 1; c < p.q; ++c) start.push_back(c);
  }
  std::shuffle(start.begin(), start.end(), rng);
  for (std::size_t i = 0; i < p.n; ++i) {
    cols[i] = start[i];
    apply(cols[i], 1);
  }
  long cur = cost(p, w, gram);
  for (std::uint64_t step = 0; step < steps; ++step) {
    if (cur == 0) {
      std::vector<std::uint64_t> out = cols;
      std::sort(out.begin(), out.end());
      const auto g = sogc::GF2Matrix::from_columns(p.k, out);
      if (sogc::rank(g) == p.k) return out;
    }
    const double temp = t0 * (1.0 - static_cast<double>(step) / static_cast<double>(steps)) + 0.05;
    const std::size_t i = pos(rng);
    const std::uint64_t old = cols[i];
    const std::uint64_t fresh = col(rng);
    apply(old, -1);
    apply(fresh, 1);
    const long next = cost(p, w, gram);
    if (next <= cur || unit(rng) < std::exp(static_cast<double>(cur - next) / temp)) {
      cols[i] = fresh;
      cur = next;
    } else {
      apply(fresh, -1);
      apply(old, 1);
    }
  }
  return std::nullopt;
}

// Tabu search: every step applies the best single-column replacement whose
// position was not changed in the last `tenure` steps.
std::optional<std::vector<std::uint64_t>> tabu(const Problem& p, std::mt19937_64& rng, std::uint64_t steps) {
  std::vector<std::uint64_t> cols;
  while (cols.size() < p.n) {
    for (std::uint64_t c = 1; c < p.q && cols.size() < p.n; ++c) cols.push_back(c);
  }
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<int> w(p.q, 0);
  std::uint64_t gram = 0;
  std::vector<std::vector<std::uint8_t>> odd(p.q, std::vector<std::uint8_t>(p.q));
  for (std::uint64_t c = 0; c < p.q; ++c) {
    for (std::uint64_t x = 0; x < p.q; ++x) odd[c][x] = std::popcount(x & c) & 1;
  }
  for (const auto c : cols) {
    for (std::size_t x = 1; x < p.q; ++x) w[x] += odd[c][x];
    gram ^= p.gram_bits[c];
  }
  const int d = static_cast<int>(p.d);
  const std::size_t tenure = std::max<std::size_t>(2, p.n / 4);
  std::vector<std::uint64_t> last_changed(p.n, 0);
  std::uniform_int_distribution<int> coin(0, 1 << 20);
  long cur = cost(p, w, gram);
  for (std::uint64_t step = 1; step <= steps; ++step) {
    if (cur == 0) {
      std::vector<std::uint64_t> out = cols;
      std::sort(out.begin(), out.end());
      if (sogc::rank(sogc::GF2Matrix::from_columns(p.k, out)) == p.k) return out;
    }
    long best = std::numeric_limits<long>::max();
    std::size_t best_i = 0;
    std::uint64_t best_c = 0;
    int best_tie = -1;
    for (std::size_t i = 0; i < p.n; ++i) {
      if (last_changed[i] != 0 && step - last_changed[i] < tenure) continue;
      const std::uint64_t a = cols[i];
      for (std::uint64_t b = 0; b < p.q; ++b) {
        if (b == a) continue;
        long c = 4L * std::popcount(gram ^ p.gram_bits[a] ^ p.gram_bits[b]);
        for (std::size_t x = 1; x < p.q && c <= best; ++x) {
          const int nw = w[x] - odd[a][x] + odd[b][x];
          if (nw < d) c += d - nw;
        }
        if (c > best) continue;
        const int tie = coin(rng);
        if (c < best || tie > best_tie) {
          best = c;
          best_i = i;
          best_c = b;
          best_tie = tie;
        }
      }
    }
    const std::uint64_t a = cols[best_i];
    for (std::size_t x = 1; x < p.q; ++x) w[x] += odd[best_c][x] - odd[a][x];
    gram ^= p.gram_bits[a] ^ p.gram_bits[best_c];
    cols[best_i] = best_c;
    last_changed[best_i] = step;
    cur = best;
  }
  return std::nullopt;
}

// Exhaustive search for an anticode A such that s copies of the simplex
// columns minus A, plus z zero columns, is an SO [n,k,>=d] code. Weights
// satisfy wt(xG) = s 2^(k-1) - wt_A(x), and gram(G) = gram(A) for k >= 3.
// Up to a change of basis A contains e_1..e_r, where r = rank(A), and the
// rest of A lies in their span.
class AnticodeSearch {
 public:
  AnticodeSearch(const Problem& p, std::size_t s, std::size_t size, std::size_t r, std::uint64_t budget)
      : p_(p), s_(s), size_(size), r_(r), limit_((p.d <= s * (p.q / 2)) ? s * (p.q / 2) - p.d : 0), budget_(budget),
        w_(p.q, 0), mult_(p.q, 0) {}

  std::optional<std::vector<std::uint64_t>> run() {
    for (std::size_t i = 0; i < r_; ++i) {
      if (!push(std::uint64_t{1} << i)) return std::nullopt;
    }
    if (dfs(1)) return cols_;
    return std::nullopt;
  }

 private:
  // Adds c and reports whether every weight stays within the limit.
  bool push(std::uint64_t c) {
    bool ok = true;
    for (std::size_t x = 1; x < p_.q; ++x) {
      if (std::popcount(x & c) & 1) {
        if (++w_[x] > limit_) ok = false;
      }
    }
    ++mult_[c];
    gram_ ^= p_.gram_bits[c];
    cols_.push_back(c);
    return ok;
  }
  void pop() {
    const std::uint64_t c = cols_.back();
    for (std::size_t x = 1; x < p_.q; ++x) {
      if (std::popcount(x & c) & 1) --w_[x];
    }
    --mult_[c];
    gram_ ^= p_.gram_bits[c];
    cols_.pop_back();
  }
  bool dfs(std::uint64_t start) {
    if (++nodes_ > budget_) return false;
    if (cols_.size() == size_) return gram_ == 0;
    const std::uint64_t span = std::uint64_t{1} << r_;
    for (std::uint64_t c = start; c < span; ++c) {
      if (mult_[c] == s_) continue;
      if (push(c) && dfs(c)) return true;
      pop();
    }
    return false;
  }

  const Problem& p_;
  std::size_t s_, size_, r_, limit_;
  std::uint64_t budget_, nodes_ = 0;
  std::vector<std::size_t> w_, mult_;
  std::uint64_t gram_ = 0;
  std::vector<std::uint64_t> cols_;
};

std::optional<std::vector<std::uint64_t>> anticode_code(const Problem& p, std::size_t max_zeros, std::uint64_t budget,
                                                        std::string& how) {
  const std::size_t period = p.q - 1;
  for (std::size_t s = std::max<std::size_t>(1, (p.n + period - 1) / period); s * (p.q / 2) >= p.d && s <= 4; ++s) {
    for (std::size_t z = 0; z <= max_zeros; ++z) {
      if (s * period + z < p.n) continue;
      const std::size_t size = s * period + z - p.n;
      // A generates an SO code, so its rank is at most half its size.
      for (std::size_t r = 1; r <= std::min(size / 2, p.k); ++r) {
        AnticodeSearch search(p, s, size, r, budget);
        const auto a = search.run();
        if (!a) continue;
        std::vector<std::size_t> mult(p.q, 0);
        for (const auto c : *a) ++mult[c];
        std::vector<std::uint64_t> cols(z, 0);
        for (std::uint64_t c = 1; c < p.q; ++c) {
          for (std::size_t i = mult[c]; i < s; ++i) cols.push_back(c);
        }
        if (sogc::rank(sogc::GF2Matrix::from_columns(p.k, cols)) != p.k) continue;
        how = std::to_string(s) + " simplex copies less an SO anticode of " + std::to_string(size) +
              " columns (rank " + std::to_string(r) + "), plus " + std::to_string(z) + " zero columns";
        return cols;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized search for SO codes"};
  std::size_t n = 0, k = 0, d = 0;
  std::uint64_t seed = 1, steps = 2'000'000;
  unsigned restarts = 50;
  double t0 = 1.0;
  std::string out, method = "anneal";
  std::size_t max_zeros = 4;
  std::uint64_t budget = 20'000'000;
  app.add_option("--n", n)->required();
  app.add_option("--k", k)->required()->check(CLI::Range(2, 10));
  app.add_option("--d", d)->required();
  app.add_option("--seed", seed);
  app.add_option("--steps", steps);
  app.add_option("--restarts", restarts);
  app.add_option("--temperature", t0);
  app.add_option("-o,--output", out);
  app.add_option("--method", method)->check(CLI::IsMember({"anneal", "tabu", "anticode"}));
  app.add_option("--max-zeros", max_zeros);
  app.add_option("--budget", budget, "node budget per anticode search");
  CLI11_PARSE(app, argc, argv);

  Problem p{n, k, d, std::size_t{1} << k, {}};
  for (std::uint64_t c = 0; c < p.q; ++c) p.gram_bits.push_back(gram_bits_of(c, k));

  std::mt19937_64 rng(seed);
  for (unsigned r = 0; r < restarts; ++r) {
    std::string how;
    const auto found = method == "anneal"  ? anneal(p, rng, steps, t0)
                       : method == "tabu" ? tabu(p, rng, steps)
                                          : anticode_code(p, max_zeros, budget, how);
    if (!found) {
      if (method == "anticode") break;
      continue;
    }
    const sogc::LinearCode code(sogc::GF2Matrix::from_columns(k, *found));
    if (!code.is_self_orthogonal() || code.min_distance() < d) continue;
    const auto params = code.params();
    std::cerr << "found [" << params.n << "," << params.k << "," << params.d << "]\n";
    if (how.empty()) how = method + " search with seed " + std::to_string(seed);
    const std::string note = " SO [" + std::to_string(params.n) + "," + std::to_string(params.k) + "," +
                             std::to_string(params.d) + "] found by so_hunt: " + how;
    if (out.empty()) {
      std::cout << sogc::format_code_text(code.generator(), {note});
    } else {
      sogc::write_code_file(out, code.generator(), {note});
    }
    return 0;
  }
  std::cerr << "no code found\n";
  return 1;
}
