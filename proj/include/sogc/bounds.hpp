#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sogc/code.hpp"

namespace sogc {

/// g(k,d) = sum_{i<k} ceil(d / 2^i); g(k,0) = 0.
std::size_t griesmer_sum(std::size_t k, std::size_t d);

/// Largest d with griesmer_sum(k,d) <= n.
std::size_t griesmer_max_d(std::size_t n, std::size_t k);

bool is_griesmer(const LinearCode& code);

/// Whether g(k, m 2^(k-1) + d) = m (2^k - 1) + g(k,d).
bool griesmer_identity_check(std::size_t k, std::size_t m, std::size_t d);

struct AsymptoticThreshold {
  std::size_t k = 0;
  std::size_t m_min = 0;
};

/// min{ceil((k+2)(k-3)/(2k)), ceil(sqrt(2k + 1/4) - 3/2)} - 1, for k >= 4.
AsymptoticThreshold asymptotic_threshold(std::size_t k);

/// False when an SO Griesmer [g(k,d),k,d] code is ruled out because d = 2 mod 4.
bool so_griesmer_doubly_even_filter(std::size_t k, std::size_t d);

struct BoundEntry {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string source;
};

/// A known upper bound on d(n', k) at some n' used to bound d(n, k).
struct TableBound {
  std::size_t d_upper = 0;
  BoundEntry entry;
};

/// Upper bounds on d(n,k) for binary linear codes.
class BoundsTable {
 public:
  BoundsTable() = default;

  /// TSV: n, k, d_upper, source. '#' comments and blank lines are skipped.
  static BoundsTable parse(std::string_view text, std::string_view origin = "<text>");
  static BoundsTable load(const std::filesystem::path& path);

  /// Validates the entry against Griesmer and against its neighbours.
  void add(BoundEntry entry);

  std::optional<BoundEntry> exact(std::size_t n, std::size_t k) const;
  /// Best bound on d(n,k) derivable from a single entry (n',k,d'): d' when
  /// n' >= n, d' + (n - n') when n' < n.
  std::optional<TableBound> upper_bound(std::size_t n, std::size_t k) const;

  const std::vector<BoundEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<BoundEntry> entries_;
};

/// Curated nonexistence facts: no SO [n', k, d] code. Each applies to every
/// n <= n' with the same k and d.
class RefutationSet {
 public:
  RefutationSet() = default;
  static RefutationSet parse(std::string_view text, std::string_view origin = "<text>");
  static RefutationSet load(const std::filesystem::path& path);

  void add(BoundEntry entry);
  std::optional<BoundEntry> find(std::size_t n, std::size_t k, std::size_t d) const;
  const std::vector<BoundEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<BoundEntry> entries_;
};

/// Returns a description of why no SO [n,k,d] code exists, or nullopt.
using Refuter = std::function<std::optional<std::string>(std::size_t n, std::size_t k, std::size_t d)>;

struct UpperBound {
  std::size_t d = 0;
  std::vector<std::string> rules;  // every rule that set or lowered the bound
};

/// Upper bound on d_so(n,k).
UpperBound dso_upper(std::size_t n, std::size_t k, const BoundsTable& table, const RefutationSet* refutations = nullptr,
                     const Refuter& refuter = {});

enum class DsoStatus { Exact, Interval };

struct DsoEntry {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  DsoStatus status = DsoStatus::Interval;
  std::vector<std::string> provenance;
};

/// "46" for exact entries, "16-18" for intervals.
std::string format_value(const DsoEntry& e);

/// Entries implied by an SO Griesmer [g(k,d),k,d] code (d = 0 mod 4): d_so = d
/// on [g(k,d), g(k,d+2)], and, when an SO Griesmer [g(k,d+4),k,d+4] code is
/// also known with g(k,d+4) > 2^k, d_so = d+2 on [g(k,d+2)+1, g(k,d+4)-1].
std::vector<DsoEntry> dso_interval_from_griesmer_code(std::size_t k, std::size_t d, bool exists,
                                                      bool next_exists = false);

/// One row of the large-length families: d_so(N,k) = value for
/// m(2^k-1) + first_offset <= N <= m(2^k-1) + last_offset, value = m 2^(k-1) + d_offset.
struct AsymptoticRow {
  std::size_t first_offset = 0;
  std::size_t last_offset = 0;
  std::size_t d_offset = 0;
  bool from_shrink = false;  // second family (one duplicate pair removed)
};

/// Rows for d = 0, 4, ..., 2^(k-1) - 4. The shrink family needs k >= 5.
std::vector<AsymptoticRow> asymptotic_rows(std::size_t k, bool shrink_family);

/// Value predicted by the large-length families for N >= m_min (2^k - 1),
/// or nullopt below the threshold.
std::optional<std::size_t> asymptotic_dso(std::size_t n, std::size_t k);

struct DsoTableOptions {
  const BoundsTable* table = nullptr;
  const RefutationSet* refutations = nullptr;
  Refuter refuter;
  unsigned threads = 0;  // 0: default_threads()
};

/// A code together with a short description of where it came from.
struct KnownCode {
  LinearCode code;
  std::string origin;
};

/// d_so bounds for N in [n_first, n_last]. Known codes must be SO with
/// dimension k (ValidationError otherwise); the corpus is closed under
/// Solomon-Stiffler Griesmer codes, simplex copies and one duplicate-pair
/// removal.
std::vector<DsoEntry> dso_table(std::size_t k, std::size_t n_first, std::size_t n_last,
                                const std::vector<KnownCode>& known_codes, const DsoTableOptions& options);

/// Reads code files; directories contribute their *.code files in name order.
/// The origin of each code is its file name.
std::vector<KnownCode> load_known_codes(const std::vector<std::filesystem::path>& paths);

/// Keeps SO codes of dimension k and lifts SO codes of dimension k-1 with
/// d <= 2^(k-2) through extend_rm(., 1). A code of dimension k that is not SO
/// is a ValidationError; other codes are dropped.
std::vector<KnownCode> lift_known_codes(std::size_t k, const std::vector<KnownCode>& codes);

}  // namespace sogc
