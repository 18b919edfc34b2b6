#include "sogc/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sogc/error.hpp"

namespace sogc {

namespace {

std::string triple(std::size_t n, std::size_t k, std::size_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

// Splits "n k d source..." where the first three fields are separated by tabs
// or spaces and the rest of the line is the source.
std::vector<BoundEntry> parse_tsv(std::string_view text, std::string_view origin) {
  std::vector<BoundEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    BoundEntry e;
    long long n = 0;
    long long k = 0;
    long long d = 0;
    if (!(fields >> n >> k >> d) || n <= 0 || k <= 0 || d <= 0) {
      throw ValidationError(std::string(origin) + ":" + std::to_string(line_no) +
                            ": expected positive integers n, k, d followed by a source");
    }
    std::getline(fields, e.source);
    const auto s = e.source.find_first_not_of(" \t");
    e.source = s == std::string::npos ? std::string() : e.source.substr(s);
    if (e.source.empty()) {
      throw ValidationError(std::string(origin) + ":" + std::to_string(line_no) + ": missing source");
    }
    e.n = static_cast<std::size_t>(n);
    e.k = static_cast<std::size_t>(k);
    e.d = static_cast<std::size_t>(d);
    out.push_back(std::move(e));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::size_t griesmer_sum(std::size_t k, std::size_t d) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < k && i < 63; ++i) {
    const std::size_t p = std::size_t{1} << i;
    total += (d + p - 1) / p;
  }
  if (k > 63) total += (k - 63) * (d == 0 ? 0 : 1);
  return total;
}

std::size_t griesmer_max_d(std::size_t n, std::size_t k) {
  if (k == 0) throw ParameterError("griesmer_max_d needs k >= 1");
  // g(k,d) >= d, so d <= n bounds the search.
  std::size_t lo = 0;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (griesmer_sum(k, mid) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_griesmer(const LinearCode& code) {
  return code.length() == griesmer_sum(code.dimension(), code.min_distance());
}

bool griesmer_identity_check(std::size_t k, std::size_t m, std::size_t d) {
  if (k == 0 || k > 62) throw ParameterError("dimension out of range");
  const std::size_t half = std::size_t{1} << (k - 1);
  return griesmer_sum(k, m * half + d) == m * (2 * half - 1) + griesmer_sum(k, d);
}

AsymptoticThreshold asymptotic_threshold(std::size_t k) {
  if (k < 4) throw ParameterError("the asymptotic threshold needs k >= 4");
  const std::size_t a = ((k + 2) * (k - 3) + 2 * k - 1) / (2 * k);
  // ceil(sqrt(2k + 1/4) - 3/2) is the least t with (t+1)(t+2) >= 2k.
  std::size_t b = 0;
  while ((b + 1) * (b + 2) < 2 * k) ++b;
  return {k, std::min(a, b) - 1};
}

bool so_griesmer_doubly_even_filter(std::size_t k, std::size_t d) {
  if (k < 3) throw ParameterError("the doubly-even filter needs k >= 3");
  if (d % 2 != 0) throw ParameterError("self-orthogonal codes have even minimum distance; got d=" + std::to_string(d));
  return d % 4 == 0;
}

// ---------------------------------------------------------------------------

BoundsTable BoundsTable::parse(std::string_view text, std::string_view origin) {
  BoundsTable t;
  for (auto& e : parse_tsv(text, origin)) {
    try {
      t.add(std::move(e));
    } catch (const ValidationError& err) {
      throw ValidationError(std::string(origin) + ": " + err.what());
    }
  }
  return t;
}

BoundsTable BoundsTable::load(const std::filesystem::path& path) { return parse(read_file(path), path.string()); }

void BoundsTable::add(BoundEntry entry) {
  if (entry.k > entry.n) {
    throw ValidationError("bound entry d(" + std::to_string(entry.n) + "," + std::to_string(entry.k) + ") has k > n");
  }
  const std::size_t g = griesmer_max_d(entry.n, entry.k);
  if (entry.d > g) {
    throw ValidationError("bound entry d(" + std::to_string(entry.n) + "," + std::to_string(entry.k) +
                          ") <= " + std::to_string(entry.d) + " is weaker than the Griesmer bound " +
                          std::to_string(g));
  }
  for (const auto& e : entries_) {
    if (e.k != entry.k) continue;
    if (e.n == entry.n) {
      throw ValidationError("duplicate bound entry for d(" + std::to_string(e.n) + "," + std::to_string(e.k) + ")");
    }
    const BoundEntry& lo = e.n < entry.n ? e : entry;
    const BoundEntry& hi = e.n < entry.n ? entry : e;
    if (hi.n == lo.n + 1 && (hi.d > lo.d + 1 || lo.d > hi.d)) {
      throw ValidationError("bound entries d(" + std::to_string(lo.n) + "," + std::to_string(lo.k) + ") <= " +
                            std::to_string(lo.d) + " and d(" + std::to_string(hi.n) + "," + std::to_string(hi.k) +
                            ") <= " + std::to_string(hi.d) + " are not monotone");
    }
  }
  entries_.push_back(std::move(entry));
  std::sort(entries_.begin(), entries_.end(),
            [](const BoundEntry& a, const BoundEntry& b) { return a.k != b.k ? a.k < b.k : a.n < b.n; });
}

std::optional<BoundEntry> BoundsTable::exact(std::size_t n, std::size_t k) const {
  for (const auto& e : entries_) {
    if (e.n == n && e.k == k) return e;
  }
  return std::nullopt;
}

std::optional<TableBound> BoundsTable::upper_bound(std::size_t n, std::size_t k) const {
  std::optional<TableBound> best;
  for (const auto& e : entries_) {
    if (e.k != k) continue;
    const std::size_t value = e.n >= n ? e.d : e.d + (n - e.n);
    if (!best || value < best->d_upper) best = TableBound{value, e};
  }
  return best;
}

RefutationSet RefutationSet::parse(std::string_view text, std::string_view origin) {
  RefutationSet r;
  for (auto& e : parse_tsv(text, origin)) {
    try {
      r.add(std::move(e));
    } catch (const ValidationError& err) {
      throw ValidationError(std::string(origin) + ": " + err.what());
    }
  }
  return r;
}

RefutationSet RefutationSet::load(const std::filesystem::path& path) { return parse(read_file(path), path.string()); }

void RefutationSet::add(BoundEntry entry) {
  if (entry.d % 2 != 0) {
    throw ValidationError("refutation " + triple(entry.n, entry.k, entry.d) + " has odd d; SO codes have even d");
  }
  if (entry.k > entry.n) throw ValidationError("refutation " + triple(entry.n, entry.k, entry.d) + " has k > n");
  entries_.push_back(std::move(entry));
}

std::optional<BoundEntry> RefutationSet::find(std::size_t n, std::size_t k, std::size_t d) const {
  std::optional<BoundEntry> best;
  for (const auto& e : entries_) {
    if (e.k == k && e.d == d && n <= e.n && (!best || e.n < best->n)) best = e;
  }
  return best;
}

// ---------------------------------------------------------------------------

UpperBound dso_upper(std::size_t n, std::size_t k, const BoundsTable& table, const RefutationSet* refutations,
                     const Refuter& refuter) {
  if (k == 0 || n < k) throw ParameterError("dso_upper needs n >= k >= 1");
  UpperBound out;
  std::size_t d_up = griesmer_max_d(n, k);
  out.rules.push_back("griesmer: g(" + std::to_string(k) + "," + std::to_string(d_up + 1) + ")=" +
                      std::to_string(griesmer_sum(k, d_up + 1)) + " > " + std::to_string(n) + " so d(" +
                      std::to_string(n) + "," + std::to_string(k) + ") <= " + std::to_string(d_up));
  if (const auto tb = table.upper_bound(n, k); tb && tb->d_upper < d_up) {
    d_up = tb->d_upper;
    out.rules.push_back("table: d(" + std::to_string(tb->entry.n) + "," + std::to_string(k) + ") <= " +
                        std::to_string(tb->entry.d) + " (" + tb->entry.source + ") so d(" + std::to_string(n) + "," +
                        std::to_string(k) + ") <= " + std::to_string(d_up));
  }
  std::size_t c = d_up - d_up % 2;
  if (c != d_up) out.rules.push_back("even: d_so <= " + std::to_string(c));
  while (c > 0) {
    if (k >= 3 && n == griesmer_sum(k, c) && !so_griesmer_doubly_even_filter(k, c)) {
      out.rules.push_back("doubly-even: no SO Griesmer " + triple(n, k, c) + " since " + std::to_string(c) +
                          " = 2 mod 4");
      c -= 2;
      continue;
    }
    if (refutations != nullptr) {
      if (const auto r = refutations->find(n, k, c)) {
        out.rules.push_back("curated: no SO " + triple(r->n, k, c) + " (" + r->source + ")" +
                            (r->n != n ? " hence none of length " + std::to_string(n) : std::string()));
        c -= 2;
        continue;
      }
    }
    if (refuter) {
      if (const auto why = refuter(n, k, c)) {
        out.rules.push_back("prover: no SO " + triple(n, k, c) + ": " + *why);
        c -= 2;
        continue;
      }
    }
    break;
  }
  out.d = c;
  return out;
}

std::string format_value(const DsoEntry& e) {
  if (e.status == DsoStatus::Exact) return std::to_string(e.lower);
  return std::to_string(e.lower) + "-" + std::to_string(e.upper);
}

std::vector<DsoEntry> dso_interval_from_griesmer_code(std::size_t k, std::size_t d, bool exists, bool next_exists) {
  if (k < 3) throw ParameterError("needs k >= 3");
  if (d == 0 || d % 4 != 0) {
    throw ParameterError("an SO Griesmer code has doubly-even d; got d=" + std::to_string(d));
  }
  std::vector<DsoEntry> out;
  if (!exists) return out;
  const std::string origin = "SO Griesmer " + triple(griesmer_sum(k, d), k, d);
  for (std::size_t n = griesmer_sum(k, d); n <= griesmer_sum(k, d + 2); ++n) {
    out.push_back({n, k, d, d, DsoStatus::Exact,
                   {"lower: " + origin + " padded with zero columns",
                    "upper: no SO Griesmer " + triple(griesmer_sum(k, d + 2), k, d + 2) + " since d+2 = 2 mod 4"}});
  }
  const std::size_t far = griesmer_sum(k, d + 4);
  if (next_exists && k < 63 && far > (std::size_t{1} << k)) {
    const std::string next = triple(far, k, d + 4);
    for (std::size_t n = griesmer_sum(k, d + 2) + 1; n + 1 <= far; ++n) {
      out.push_back({n, k, d + 2, d + 2, DsoStatus::Exact,
                     {"lower: SO Griesmer " + next + " with a duplicate column pair removed",
                      "upper: griesmer d(" + std::to_string(far - 1) + "," + std::to_string(k) + ") <= " +
                          std::to_string(d + 3)}});
    }
  }
  return out;
}

std::vector<AsymptoticRow> asymptotic_rows(std::size_t k, bool shrink_family) {
  if (k < 4 || k > 30) throw ParameterError("asymptotic rows need 4 <= k <= 30");
  if (shrink_family && k < 5) throw ParameterError("the shrink family needs k >= 5");
  std::vector<AsymptoticRow> rows;
  const std::size_t half = std::size_t{1} << (k - 1);
  for (std::size_t d = 0; d + 4 <= half; d += 4) {
    if (shrink_family) {
      rows.push_back({griesmer_sum(k, d + 2) + 1, griesmer_sum(k, d + 4) - 1, d + 2, true});
    } else {
      rows.push_back({griesmer_sum(k, d), griesmer_sum(k, d + 2), d, false});
    }
  }
  return rows;
}

std::optional<std::size_t> asymptotic_dso(std::size_t n, std::size_t k) {
  if (k < 5 || k > 30) return std::nullopt;
  const std::size_t period = (std::size_t{1} << k) - 1;
  const std::size_t half = std::size_t{1} << (k - 1);
  const std::size_t m = n / period;
  if (m < asymptotic_threshold(k).m_min) return std::nullopt;
  const std::size_t offset = n % period;
  for (const bool shrink : {false, true}) {
    for (const auto& row : asymptotic_rows(k, shrink)) {
      if (offset >= row.first_offset && offset <= row.last_offset) return m * half + row.d_offset;
    }
  }
  return std::nullopt;
}

}  // namespace sogc
