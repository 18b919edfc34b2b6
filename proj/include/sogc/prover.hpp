#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sogc/bounds.hpp"
#include "sogc/code.hpp"

namespace sogc {

enum class Verdict { Nonexistent, ExistsWitness, Inconclusive };

std::string_view to_string(Verdict v);

struct ParamTriple {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

/// Rule names used in certificates:
///   "so-residual"     SO [n,k,d], d = 2 mod 4  =>  linear [n-d, k-1, d/2+1]
///   "residual"        [n,k,d]                  =>  linear [n-d, k-1, ceil(d/2)]
///   "griesmer"        contradiction: g(k,d) > n
///   "table"           contradiction: a bounds-table entry caps d(n,k) below d
///   "doubly-even"     contradiction: SO Griesmer code with d = 2 mod 4
///   "exhaustive-search" the search tree result for the claim
struct ProofStep {
  std::string rule;
  ParamTriple input;
  std::optional<ParamTriple> output;  // residual steps
  std::optional<std::size_t> bound;   // g(k,d) for griesmer, the derived d(n,k) cap for table
  std::optional<BoundEntry> entry;    // table steps
  bool contradiction = false;
  // exhaustive-search only
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  std::size_t split_depth = 0;
};

struct ProofCertificate {
  ParamTriple claim;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ProofStep> steps;
  std::optional<GF2Matrix> witness;
  std::string tool_version;
};

/// Residual-chain argument against an SO [n,k,d] code. Never throws for
/// well-formed input; an argument that does not close is "inconclusive".
ProofCertificate residual_refute(std::size_t n, std::size_t k, std::size_t d, const BoundsTable& table);

/// Adapts residual_refute for dso_upper.
Refuter make_residual_refuter(const BoundsTable& table);

struct SearchConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t target_d = 0;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  std::size_t thread_split_depth = 2;
  unsigned threads = 0;  // 0: default_threads()
};

/// Exhaustive search over nondecreasing column multisets from {0, ..., 2^k - 1}
/// for an SO [n,k,>=target_d] code. Returns the lexicographically least
/// witness, or "nonexistent" once the tree is exhausted, or "inconclusive" if
/// the node budget runs out. The result does not depend on the thread count.
ProofCertificate search_so_code(const SearchConfig& cfg);

/// Replays every step. Returns false on an arithmetic or lookup mismatch;
/// throws ValidationError naming the step for structurally malformed input.
bool verify_certificate(const ProofCertificate& cert, const BoundsTable& table);

std::string certificate_to_json(const ProofCertificate& cert, int indent = 2);
/// Throws ValidationError on malformed documents.
ProofCertificate certificate_from_json(std::string_view text);

std::string_view tool_version();

}  // namespace sogc
