#include <algorithm>

#include "parallel.hpp"
#include "sogc/bounds.hpp"
#include "sogc/code_io.hpp"
#include "sogc/constructions.hpp"
#include "sogc/error.hpp"

namespace sogc {

namespace {

std::string triple(std::size_t n, std::size_t k, std::size_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

std::string seq_string(const std::vector<std::size_t>& u) {
  std::string out = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(u[i]);
  }
  return out + ")";
}

struct Witness {
  std::size_t n = 0;
  std::size_t d = 0;
  std::string origin;
};

// Solomon-Stiffler Griesmer codes for every doubly-even D with g(k,D) <= max_n.
std::vector<KnownCode> griesmer_family(std::size_t k, std::size_t max_n) {
  std::vector<KnownCode> out;
  if (k < 4) return out;
  const std::size_t half = std::size_t{1} << (k - 1);
  for (std::size_t big_d = 4; griesmer_sum(k, big_d) <= max_n; big_d += 4) {
    SolomonStifflerSpec spec{k, (big_d + half - 1) / half, {}};
    const std::size_t rest = spec.s * half - big_d;
    for (std::size_t b = k; b-- > 0;) {
      if ((rest >> b) & 1U) spec.u.push_back(b + 1);
    }
    if (!is_feasible(spec)) continue;
    out.push_back({solomon_stiffler(spec), "Solomon-Stiffler s=" + std::to_string(spec.s) + " u=" + seq_string(spec.u)});
  }
  return out;
}

}  // namespace

std::vector<KnownCode> load_known_codes(const std::vector<std::filesystem::path>& paths) {
  std::vector<KnownCode> out;
  for (const auto& p : paths) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(p)) {
      for (const auto& entry : std::filesystem::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".code") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
    } else {
      files.push_back(p);
    }
    for (const auto& f : files) out.push_back({load_code(f), f.filename().string()});
  }
  return out;
}

std::vector<KnownCode> lift_known_codes(std::size_t k, const std::vector<KnownCode>& codes) {
  std::vector<KnownCode> out;
  for (const auto& kc : codes) {
    if (kc.code.dimension() == k && !kc.code.is_self_orthogonal()) {
      throw ValidationError("known code " + kc.origin + " is not self-orthogonal");
    }
    if (!kc.code.is_self_orthogonal()) continue;
    if (kc.code.dimension() == k) {
      out.push_back(kc);
    } else if (k >= 4 && kc.code.dimension() + 1 == k && kc.code.min_distance() <= (std::size_t{1} << (k - 2))) {
      out.push_back({extend_rm(kc.code, 1), kc.origin + " extended by R(1," + std::to_string(k - 1) + ")"});
    }
  }
  return out;
}

std::vector<DsoEntry> dso_table(std::size_t k, std::size_t n_first, std::size_t n_last,
                                const std::vector<KnownCode>& known_codes, const DsoTableOptions& options) {
  if (k < 1 || k > 16) throw ParameterError("dso_table dimension must be in 1..16");
  if (n_first < k || n_first > n_last) throw ParameterError("dso_table needs k <= from <= to");
  const unsigned threads = options.threads != 0 ? options.threads : default_threads();
  const BoundsTable empty_table;
  const BoundsTable& table = options.table != nullptr ? *options.table : empty_table;

  for (const auto& kc : known_codes) {
    if (kc.code.dimension() != k) {
      throw ValidationError("known code " + kc.origin + " has dimension " + std::to_string(kc.code.dimension()) +
                            ", expected " + std::to_string(k));
    }
    if (!kc.code.is_self_orthogonal()) throw ValidationError("known code " + kc.origin + " is not self-orthogonal");
  }

  // Everything that can shrink into the range needs length up to n_last + 2.
  const std::size_t reach = n_last + 2;
  std::vector<KnownCode> corpus = known_codes;
  for (auto& c : griesmer_family(k, reach)) corpus.push_back(std::move(c));
  if (k >= 3) {
    const std::size_t period = (std::size_t{1} << k) - 1;
    for (const auto& kc : known_codes) {
      for (std::size_t m = 1; kc.code.length() + m * period <= reach; ++m) {
        corpus.push_back({add_simplex_copies(kc.code, m), kc.origin + " + " + std::to_string(m) + " simplex copies"});
      }
    }
  }
  detail::parallel_for(corpus.size(), threads, [&](std::size_t i) { (void)corpus[i].code.min_distance(); });

  std::vector<KnownCode> shrunk;
  for (const auto& kc : corpus) {
    const LinearCode& c = kc.code;
    if (k < 63 && c.length() > (std::size_t{1} << k) && c.min_distance() > 2 && c.length() - 2 <= n_last) {
      shrunk.push_back({shrink_by_duplicate(c), kc.origin + " " + triple(c.length(), k, c.min_distance()) +
                                                    " less a duplicate column pair"});
    }
  }
  detail::parallel_for(shrunk.size(), threads, [&](std::size_t i) { (void)shrunk[i].code.min_distance(); });

  std::vector<Witness> witnesses;
  for (const auto* list : {&corpus, &shrunk}) {
    for (const auto& kc : *list) witnesses.push_back({kc.code.length(), kc.code.min_distance(), kc.origin});
  }

  std::vector<DsoEntry> out(n_last - n_first + 1);
  detail::parallel_for(out.size(), threads, [&](std::size_t idx) {
    const std::size_t n = n_first + idx;
    DsoEntry e;
    e.n = n;
    e.k = k;
    const Witness* best = nullptr;
    for (const auto& w : witnesses) {
      if (w.n > n) continue;
      if (best == nullptr || w.d > best->d || (w.d == best->d && w.n < best->n)) best = &w;
    }
    if (best != nullptr) {
      e.lower = best->d;
      std::string line = "lower: " + best->origin + " " + triple(best->n, k, best->d);
      if (best->n < n) line += " padded with " + std::to_string(n - best->n) + " zero columns";
      e.provenance.push_back(std::move(line));
    } else {
      e.provenance.push_back("lower: no SO code of this length in the corpus");
    }
    const UpperBound ub = dso_upper(n, k, table, options.refutations, options.refuter);
    e.upper = ub.d;
    for (const auto& r : ub.rules) e.provenance.push_back("upper: " + r);
    if (e.lower > e.upper) {
      throw Error("inconsistent data at n=" + std::to_string(n) + ": a witness has d=" + std::to_string(e.lower) +
                  " but the upper bound is " + std::to_string(e.upper));
    }
    e.status = e.lower == e.upper ? DsoStatus::Exact : DsoStatus::Interval;
    if (const auto predicted = asymptotic_dso(n, k)) {
      if (e.status != DsoStatus::Exact || e.lower != *predicted) {
        throw Error("internal inconsistency at n=" + std::to_string(n) + ": large-length formula gives " +
                    std::to_string(*predicted) + " but the table gives " + format_value(e));
      }
      e.provenance.push_back("check: agrees with the large-length formula d_so=" + std::to_string(*predicted));
    }
    out[idx] = std::move(e);
  });
  return out;
}

}  // namespace sogc
