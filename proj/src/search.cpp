#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

#include "parallel.hpp"
#include "sogc/error.hpp"
#include "sogc/prover.hpp"

namespace sogc {

namespace {

constexpr std::size_t kMaxSearchDimension = 8;

enum class Outcome { Found, Exhausted, Aborted };

// Search state for one partial column multiset. weights[x] is the weight of
// the codeword for message x restricted to the columns placed so far; gram
// packs the Gram matrix entries (i <= j) of the partial generator.
struct State {
  std::vector<std::uint16_t> weights;
  std::uint64_t gram = 0;
  std::vector<std::uint64_t> cols;
};

class Searcher {
 public:
  Searcher(std::size_t n, std::size_t k, std::size_t d) : n_(n), k_(k), d_(d), q_(std::size_t{1} << k) {
    hits_.resize(q_);
    gram_bits_.resize(q_, 0);
    for (std::uint64_t c = 0; c < q_; ++c) {
      for (std::uint64_t x = 1; x < q_; ++x) {
        if (std::popcount(x & c) % 2 == 1) hits_[c].push_back(static_cast<std::uint16_t>(x));
      }
      std::size_t bit = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j, ++bit) {
          if (((c >> i) & 1U) && ((c >> j) & 1U)) gram_bits_[c] |= std::uint64_t{1} << bit;
        }
      }
    }
  }

  State root() const { return {std::vector<std::uint16_t>(q_, 0), 0, {}}; }

  void place(State& s, std::uint64_t c) const {
    for (const auto x : hits_[c]) ++s.weights[x];
    s.gram ^= gram_bits_[c];
    s.cols.push_back(c);
  }
  void unplace(State& s) const {
    const std::uint64_t c = s.cols.back();
    for (const auto x : hits_[c]) --s.weights[x];
    s.gram ^= gram_bits_[c];
    s.cols.pop_back();
  }

  // Every nonzero message can still reach weight d with the columns left;
  // at a leaf the Gram matrix must vanish as well.
  bool viable(const State& s) const {
    const std::size_t remaining = n_ - s.cols.size();
    for (std::size_t x = 1; x < q_; ++x) {
      if (s.weights[x] + remaining < d_) return false;
    }
    return remaining != 0 || s.gram == 0;
  }

  bool accept(const State& s) const {
    if (s.gram != 0) return false;
    GF2Matrix g = GF2Matrix::from_columns(k_, s.cols);
    return rank(g) == k_;
  }

  // Lexicographic depth-first search below s; nodes counts placements.
  Outcome dfs(State& s, std::uint64_t& nodes, std::uint64_t cap) const {
    if (s.cols.size() == n_) return accept(s) ? Outcome::Found : Outcome::Exhausted;
    const std::uint64_t start = s.cols.empty() ? 0 : s.cols.back();
    for (std::uint64_t c = start; c < q_; ++c) {
      if (++nodes > cap) return Outcome::Aborted;
      place(s, c);
      if (viable(s)) {
        const Outcome o = dfs(s, nodes, cap);
        if (o != Outcome::Exhausted) return o;
      }
      unplace(s);
    }
    return Outcome::Exhausted;
  }

  // All viable prefixes of the given length, in lexicographic order.
  void prefixes(State& s, std::size_t depth, std::uint64_t& nodes, std::vector<State>& out) const {
    if (s.cols.size() == depth) {
      out.push_back(s);
      return;
    }
    const std::uint64_t start = s.cols.empty() ? 0 : s.cols.back();
    for (std::uint64_t c = start; c < q_; ++c) {
      ++nodes;
      place(s, c);
      if (viable(s)) prefixes(s, depth, nodes, out);
      unplace(s);
    }
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t d_;
  std::size_t q_;
  std::vector<std::vector<std::uint16_t>> hits_;
  std::vector<std::uint64_t> gram_bits_;
};

struct TaskResult {
  Outcome outcome = Outcome::Aborted;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> witness;
  bool ran = false;
};

}  // namespace

ProofCertificate search_so_code(const SearchConfig& cfg) {
  if (cfg.k < 1 || cfg.k > kMaxSearchDimension) {
    throw ParameterError("search supports 1 <= k <= " + std::to_string(kMaxSearchDimension));
  }
  if (cfg.n < cfg.k) throw ParameterError("search needs k <= n");
  if (cfg.target_d % 2 != 0) throw ParameterError("search target distance must be even");
  if (cfg.n > 4096) throw ParameterError("search length too large");

  ProofCertificate cert;
  cert.claim = {cfg.n, cfg.k, cfg.target_d};
  cert.tool_version = std::string(tool_version());

  const Searcher searcher(cfg.n, cfg.k, cfg.target_d);
  const std::uint64_t cap = cfg.max_nodes == 0 ? std::numeric_limits<std::uint64_t>::max() - 1 : cfg.max_nodes;
  const std::size_t depth = std::min(cfg.thread_split_depth, cfg.n);

  std::uint64_t prefix_nodes = 0;
  std::vector<State> work;
  {
    State s = searcher.root();
    if (depth == 0) {
      work.push_back(s);
    } else {
      searcher.prefixes(s, depth, prefix_nodes, work);
    }
  }

  std::vector<TaskResult> results(work.size());
  std::atomic<std::size_t> first_found{work.size()};
  const unsigned threads = cfg.threads != 0 ? cfg.threads : default_threads();
  detail::parallel_for(work.size(), threads, [&](std::size_t i) {
    if (i > first_found.load()) return;  // a smaller prefix already has a witness
    TaskResult& r = results[i];
    r.ran = true;
    State s = work[i];
    r.outcome = searcher.dfs(s, r.nodes, cap);
    if (r.outcome == Outcome::Found) {
      r.witness = s.cols;
      std::size_t cur = first_found.load();
      while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
      }
    }
  });

  // Replay the results in prefix order so the node count and the budget
  // cut-off are those of a sequential search.
  ProofStep step;
  step.rule = "exhaustive-search";
  step.input = cert.claim;
  step.max_nodes = cfg.max_nodes;
  step.split_depth = cfg.thread_split_depth;
  std::uint64_t total = prefix_nodes;
  cert.verdict = Verdict::Nonexistent;
  if (total > cap) cert.verdict = Verdict::Inconclusive;
  for (std::size_t i = 0; i < results.size() && cert.verdict == Verdict::Nonexistent; ++i) {
    const TaskResult& r = results[i];
    if (!r.ran) throw Error("internal error: search task skipped before the first witness");
    total += r.nodes;
    if (total > cap || r.outcome == Outcome::Aborted) {
      cert.verdict = Verdict::Inconclusive;
    } else if (r.outcome == Outcome::Found) {
      cert.verdict = Verdict::ExistsWitness;
      cert.witness = GF2Matrix::from_columns(cfg.k, r.witness);
    }
  }
  step.nodes = cert.verdict == Verdict::Inconclusive ? std::min(total, cap) : total;
  step.contradiction = cert.verdict == Verdict::Nonexistent;
  cert.steps.push_back(step);
  return cert;
}

}  // namespace sogc
