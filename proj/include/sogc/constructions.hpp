#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sogc/code.hpp"

namespace sogc {

/// s copies of the simplex columns minus subspaces of dimensions u_1 > ... > u_p.
struct SolomonStifflerSpec {
  std::size_t k = 0;
  std::size_t s = 1;
  std::vector<std::size_t> u;
};

/// Anticode U_1 .. U_t together with S \ T, where S has dimension u + 1 and T
/// is a basis of S plus the sum of that basis.
struct BelovSpec {
  std::size_t k = 0;
  std::size_t s = 1;
  std::vector<std::size_t> u_seq;
  std::size_t u = 3;
};

/// For each chosen subspace, a basis given as column integers.
struct AnticodeAssignment {
  std::vector<std::vector<std::uint64_t>> subspace_bases;
};

/// Throws ParameterError unless k >= 4, s >= 1 and k > u_1 > ... > u_p >= 1.
void validate(const SolomonStifflerSpec& spec);
/// Throws ParameterError unless k > u_1 > ... > u_t > u >= 3 and s >= 1.
void validate(const BelovSpec& spec);

/// Sum of the min(s+1, p) largest u_i is at most s k.
bool is_feasible(const SolomonStifflerSpec& spec);

/// [s(2^k - 1) - sum(2^u_i - 1), k, s 2^(k-1) - sum 2^(u_i - 1)].
CodeParams solomon_stiffler_parameters(const SolomonStifflerSpec& spec);
/// Length counted from the anticode, and d = s 2^(k-1) - (sum 2^(u_i-1) + 2^u - 2).
CodeParams belov_parameters(const BelovSpec& spec);

/// All nonzero vectors of the span of `basis`, ascending.
std::vector<std::uint64_t> span_nonzero(const std::vector<std::uint64_t>& basis);

/// Picks subspaces so that no nonzero vector of F_2^k is used more than s
/// times. Throws InfeasibleError.
AnticodeAssignment choose_anticode(const SolomonStifflerSpec& spec);

LinearCode simplex(std::size_t k);
LinearCode reed_muller_1(std::size_t k);
LinearCode solomon_stiffler(const SolomonStifflerSpec& spec);
LinearCode belov(const BelovSpec& spec);

/// One of "so_18_6_8", "so_82_7_40", "so_95_7_46". Throws LookupError.
LinearCode paper_code(std::string_view name);
std::vector<std::string> paper_code_names();
/// The embedded matrix as code-file text, for comparison with data files.
std::string paper_code_text(std::string_view name);

struct CatalogEntry {
  SolomonStifflerSpec spec;
  CodeParams params;
};

/// Every feasible spec with p = 0 or u_p >= 3, grouped by p ascending and by
/// d descending inside a group.
std::vector<CatalogEntry> griesmer_catalog(std::size_t k, std::size_t s);

}  // namespace sogc
