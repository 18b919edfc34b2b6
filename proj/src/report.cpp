#include "sogc/report.hpp"

#include <algorithm>

#include "sogc/constructions.hpp"
#include "sogc/error.hpp"

namespace sogc {

namespace {

std::string bracket(const CodeParams& p) {
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]";
}

// "127m", "127m+11".
std::string affine(std::size_t slope, std::size_t offset) {
  std::string out = std::to_string(slope) + "m";
  if (offset != 0) out += "+" + std::to_string(offset);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string griesmer_catalog_tsv(std::size_t k, std::size_t s) {
  std::string out = "p\tcode\ts\tu\n";
  for (const auto& e : griesmer_catalog(k, s)) {
    std::string u;
    for (const auto ui : e.spec.u) u += (u.empty() ? "" : ",") + std::to_string(ui);
    if (u.empty()) u = "-";
    out += std::to_string(e.spec.u.size()) + "\t" + bracket(e.params) + "\t" + std::to_string(s) + "\t" + u + "\n";
  }
  return out;
}

std::string asymptotic_tsv(std::size_t k, AsymptoticFamily family, std::optional<std::size_t> m) {
  const std::size_t period = (std::size_t{1} << k) - 1;
  const std::size_t half = std::size_t{1} << (k - 1);
  if (m && *m < asymptotic_threshold(k).m_min) {
    throw ParameterError("m = " + std::to_string(*m) + " is below the threshold " +
                         std::to_string(asymptotic_threshold(k).m_min) + " for k = " + std::to_string(k));
  }
  std::vector<AsymptoticRow> rows;
  if (family != AsymptoticFamily::Shrink) rows = asymptotic_rows(k, false);
  if (family != AsymptoticFamily::Griesmer && k >= 5) {
    for (const auto& r : asymptotic_rows(k, true)) rows.push_back(r);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const AsymptoticRow& a, const AsymptoticRow& b) { return a.first_offset < b.first_offset; });

  std::string out = "first_N\tlast_N\td_so\tfamily\n";
  for (const auto& r : rows) {
    const char* fam = r.from_shrink ? "shrink" : "griesmer";
    if (m) {
      out += std::to_string(*m * period + r.first_offset) + "\t" + std::to_string(*m * period + r.last_offset) + "\t" +
             std::to_string(*m * half + r.d_offset) + "\t" + fam + "\n";
    } else {
      out += affine(period, r.first_offset) + "\t" + affine(period, r.last_offset) + "\t" + affine(half, r.d_offset) +
             "\t" + fam + "\n";
    }
  }
  return out;
}

std::string dso_table_tsv(const std::vector<DsoEntry>& entries, bool provenance) {
  std::string out = "N\td_so\tstatus\tlower\tupper";
  out += provenance ? "\tprovenance\n" : "\n";
  for (const auto& e : entries) {
    out += std::to_string(e.n) + "\t" + format_value(e) + "\t" + (e.status == DsoStatus::Exact ? "exact" : "interval") +
           "\t" + std::to_string(e.lower) + "\t" + std::to_string(e.upper);
    if (provenance) {
      out += "\t";
      for (std::size_t i = 0; i < e.provenance.size(); ++i) {
        if (i != 0) out += " | ";
        out += e.provenance[i];
      }
    }
    out += "\n";
  }
  return out;
}

std::string code_summary_tsv(const LinearCode& code) {
  const CodeParams p = code.params();
  return "code\tn\tk\td\tso\tdoubly_even\tgriesmer\n" + bracket(p) + "\t" + std::to_string(p.n) + "\t" +
         std::to_string(p.k) + "\t" + std::to_string(p.d) + "\t" + yes_no(code.is_self_orthogonal()) + "\t" +
         yes_no(code.is_doubly_even()) + "\t" + yes_no(is_griesmer(code)) + "\n";
}

std::string weight_distribution_tsv(const LinearCode& code) {
  std::string out = "weight\tcount\n";
  for (const auto& wc : code.weight_distribution()) {
    out += std::to_string(wc.weight) + "\t" + std::to_string(wc.count) + "\n";
  }
  return out;
}

}  // namespace sogc
