#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sogc/bounds.hpp"
#include "sogc/code.hpp"

namespace sogc {

// Tab-separated reports with a one-line header. Every line ends in '\n'.

/// "p  code  s  u", one row per catalog entry, e.g. "1\t[119,6,60]\t2\t3".
std::string griesmer_catalog_tsv(std::size_t k, std::size_t s);

enum class AsymptoticFamily { Griesmer, Shrink, Both };

/// Rows of the large-length families. Without m the rows are symbolic
/// ("127m+11\t127m+15\t64m+4"); with m they are numeric. m must be at least
/// the asymptotic threshold.
std::string asymptotic_tsv(std::size_t k, AsymptoticFamily family, std::optional<std::size_t> m = std::nullopt);

/// "N  d_so  status  lower  upper" and, on request, a provenance column.
std::string dso_table_tsv(const std::vector<DsoEntry>& entries, bool provenance);

/// "code  n  k  d  so  doubly_even  griesmer" for one code.
std::string code_summary_tsv(const LinearCode& code);

/// "weight  count" for every weight that occurs.
std::string weight_distribution_tsv(const LinearCode& code);

}  // namespace sogc
