// Command-line front end. Talks to the library only through the C interface.
//
// Exit codes: 0 success (or a witness exists), 1 usage error, 2 verdict
// nonexistent, 3 verdict inconclusive, 4 runtime error or failed check.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sogc/sogc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonexistent = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitFailure = 4;

struct Failure {
  std::string message;
};

void check(sogc_status st) {
  if (st != SOGC_OK) throw Failure{sogc_last_error()};
}

struct CodeDeleter {
  void operator()(sogc_code* c) const { sogc_code_free(c); }
};
struct BoundsDeleter {
  void operator()(sogc_bounds* b) const { sogc_bounds_free(b); }
};
struct CertDeleter {
  void operator()(sogc_cert* c) const { sogc_cert_free(c); }
};
using Code = std::unique_ptr<sogc_code, CodeDeleter>;
using Bounds = std::unique_ptr<sogc_bounds, BoundsDeleter>;
using Cert = std::unique_ptr<sogc_cert, CertDeleter>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  sogc_free_string(s);
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{"cannot write " + path};
}

Code load(const std::string& path) {
  sogc_code* c = nullptr;
  check(sogc_code_load(path.c_str(), &c));
  return Code(c);
}

// Writes the code to `output` (or stdout when empty) and prints its summary
// to stdout when a file was written.
void emit_code(const sogc_code* code, const std::string& output, const std::string& comment) {
  if (output.empty()) {
    char* text = nullptr;
    check(sogc_code_to_text(code, &text));
    std::cout << take(text);
    return;
  }
  check(sogc_code_save(code, output.c_str(), comment.c_str()));
  char* summary = nullptr;
  check(sogc_code_summary_tsv(code, &summary));
  std::cout << take(summary);
}

int verdict_exit(const sogc_cert* cert) {
  sogc_verdict v = SOGC_INCONCLUSIVE;
  check(sogc_cert_verdict(cert, &v));
  switch (v) {
    case SOGC_NONEXISTENT:
      return kExitNonexistent;
    case SOGC_EXISTS_WITNESS:
      return kExitOk;
    case SOGC_INCONCLUSIVE:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

void emit_cert(const sogc_cert* cert, const std::string& output) {
  char* json = nullptr;
  check(sogc_cert_to_json(cert, &json));
  std::string text = take(json) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    write_text(output, text);
  }
}

// Aligns TSV columns with spaces for reading in a terminal.
std::string pretty_table(const std::string& tsv) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> widths;
  std::istringstream lines(tsv);
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, '\t');) cells.push_back(cell);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i >= widths.size()) widths.push_back(0);
      widths[i] = std::max(widths[i], cells[i].size());
    }
    rows.push_back(std::move(cells));
  }
  std::string out;
  for (const auto& cells : rows) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      line += cells[i];
      if (i + 1 < cells.size()) line += std::string(widths[i] - cells[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string join_list(const std::vector<std::size_t>& v) {
  std::string out;
  for (const auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

// Default data directory: --data-dir, then $SOGC_DATA_DIR, then the source tree.
struct DataPaths {
  std::string data_dir;
  std::string bounds;
  std::string refutations;

  std::string dir() const {
    if (!data_dir.empty()) return data_dir;
    if (const char* env = std::getenv("SOGC_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return SOGC_DEFAULT_DATA_DIR;
  }
  // "none" disables a file.
  std::optional<std::string> bounds_file() const {
    if (bounds == "none") return std::nullopt;
    return bounds.empty() ? dir() + "/bounds.tsv" : bounds;
  }
  std::optional<std::string> refutations_file() const {
    if (refutations == "none") return std::nullopt;
    return refutations.empty() ? dir() + "/refutations.tsv" : refutations;
  }
  Bounds load() const {
    const auto b = bounds_file();
    const auto r = refutations_file();
    sogc_bounds* out = nullptr;
    check(sogc_bounds_load(b ? b->c_str() : nullptr, r ? r->c_str() : nullptr, &out));
    return Bounds(out);
  }
};

void add_bounds_options(CLI::App* cmd, DataPaths& paths, bool with_refutations) {
  cmd->add_option("--bounds", paths.bounds, "bounds TSV (default: <data>/bounds.tsv; 'none' for Griesmer only)");
  if (with_refutations) {
    cmd->add_option("--refutations", paths.refutations,
                    "curated refutations TSV (default: <data>/refutations.tsv; 'none' to skip)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary self-orthogonal codes: constructions, bounds, proofs and tables"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_version_flag("--version", std::string(sogc_version()));

  unsigned threads = 0;
  DataPaths paths;
  app.add_option("--threads", threads, "worker threads (default: all cores)");
  app.add_option("--data-dir", paths.data_dir, "data directory (default: $SOGC_DATA_DIR or the bundled data)");

  // construct
  auto* construct = app.add_subcommand("construct", "build a code from a known family");
  construct->require_subcommand(1);
  std::string out_path;
  std::size_t k = 0, s = 1, u = 0, m = 1;
  std::vector<std::size_t> useq;
  std::string name;
  auto* c_simplex = construct->add_subcommand("simplex", "simplex code S_k");
  c_simplex->add_option("--k", k)->required();
  auto* c_rm = construct->add_subcommand("rm", "first-order Reed-Muller code R(1,k)");
  c_rm->add_option("--k", k)->required();
  auto* c_ss = construct->add_subcommand("ss", "Solomon-Stiffler code");
  c_ss->add_option("--k", k)->required();
  c_ss->add_option("--s", s);
  c_ss->add_option("--u", useq, "strictly decreasing subspace dimensions")->delimiter(',');
  auto* c_belov = construct->add_subcommand("belov", "Belov code");
  c_belov->add_option("--k", k)->required();
  c_belov->add_option("--s", s);
  c_belov->add_option("--u-seq", useq, "full subspace dimensions u_1 > ... > u_t")->delimiter(',');
  c_belov->add_option("--u", u, "dimension parameter of S \\ T")->required();
  auto* c_paper = construct->add_subcommand("paper", "bundled exemplar matrix");
  c_paper->add_option("--name", name, "so_18_6_8, so_82_7_40 or so_95_7_46")->required();
  for (auto* sub : {c_simplex, c_rm, c_ss, c_belov, c_paper}) sub->add_option("-o,--output", out_path);

  // check
  auto* check_cmd = app.add_subcommand("check", "report parameters and properties of a code file");
  std::string in_path, in_path2;
  bool weights = false;
  check_cmd->add_option("file", in_path)->required();
  check_cmd->add_flag("--weights", weights, "also print the weight distribution");

  // residual
  auto* residual_cmd = app.add_subcommand("residual", "residual code with respect to a codeword");
  std::string codeword;
  residual_cmd->add_option("file", in_path)->required();
  residual_cmd->add_option("--codeword", codeword, "0/1 string (default: a minimum-weight codeword)");
  residual_cmd->add_option("-o,--output", out_path);

  // puncture
  auto* puncture_cmd = app.add_subcommand("puncture", "delete coordinates");
  std::vector<std::size_t> positions;
  puncture_cmd->add_option("file", in_path)->required();
  puncture_cmd->add_option("--positions", positions, "1-based coordinates")->delimiter(',')->required();
  puncture_cmd->add_option("-o,--output", out_path);

  // extend
  auto* extend_cmd = app.add_subcommand("extend", "Reed-Muller extension, simplex copies or duplicate removal");
  std::string mode = "rm";
  extend_cmd->add_option("file", in_path)->required();
  extend_cmd->add_option("--mode", mode)->check(CLI::IsMember({"rm", "simplex", "shrink"}));
  extend_cmd->add_option("--m", m, "number of copies");
  extend_cmd->add_option("-o,--output", out_path);

  // juxtapose
  auto* juxt_cmd = app.add_subcommand("juxtapose", "the code generated by [G0 | G]");
  juxt_cmd->add_option("c0", in_path, "SO code file for G0")->required();
  juxt_cmd->add_option("g", in_path2, "matrix file for G (may be rank-deficient)")->required();
  juxt_cmd->add_option("-o,--output", out_path);

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "upper bounds on d(n,k) and d_so(n,k)");
  std::size_t n = 0, d = 0;
  bound_cmd->add_option("--n", n)->required();
  bound_cmd->add_option("--k", k)->required();
  add_bounds_options(bound_cmd, paths, true);

  // prove
  auto* prove_cmd = app.add_subcommand("prove", "residual-chain nonexistence argument");
  prove_cmd->add_option("--n", n)->required();
  prove_cmd->add_option("--k", k)->required();
  prove_cmd->add_option("--d", d)->required();
  prove_cmd->add_option("-o,--output", out_path, "write the certificate here instead of stdout");
  add_bounds_options(prove_cmd, paths, false);

  // search
  auto* search_cmd = app.add_subcommand("search", "exhaustive search for an SO [n,k,>=d] code");
  std::uint64_t max_nodes = 0;
  std::size_t split_depth = 2;
  search_cmd->add_option("--n", n)->required();
  search_cmd->add_option("--k", k)->required();
  search_cmd->add_option("--d", d)->required();
  search_cmd->add_option("--max-nodes", max_nodes, "node budget (0: unlimited)");
  search_cmd->add_option("--split-depth", split_depth, "tree depth at which work is split between threads");
  search_cmd->add_option("-o,--output", out_path, "write the certificate here instead of stdout");

  // table
  auto* table_cmd = app.add_subcommand("table", "catalogs and d_so tables");
  std::size_t from = 0, to = 0;
  std::vector<std::string> code_paths;
  bool catalog = false, asymptotic = false, provenance = false, pretty = false;
  long table_m = -1;
  std::string family = "both";
  table_cmd->add_option("--k", k)->required();
  table_cmd->add_flag("--catalog", catalog, "SO Solomon-Stiffler Griesmer codes for --s");
  table_cmd->add_option("--s", s);
  table_cmd->add_flag("--asymptotic", asymptotic, "large-length rows, symbolic unless --m is given");
  table_cmd->add_option("--m", table_m, "instantiate the large-length rows at this m");
  table_cmd->add_option("--family", family)->check(CLI::IsMember({"griesmer", "shrink", "both"}));
  table_cmd->add_option("--from", from);
  table_cmd->add_option("--to", to);
  table_cmd->add_option("--codes", code_paths, "code files or directories (default: <data>/paper_codes, <data>/codes)");
  table_cmd->add_flag("--provenance", provenance, "add a provenance column");
  table_cmd->add_flag("--pretty", pretty, "align columns with spaces instead of tabs");
  add_bounds_options(table_cmd, paths, true);

  // verify-cert
  auto* verify_cmd = app.add_subcommand("verify-cert", "replay a certificate");
  verify_cmd->add_option("file", in_path)->required();
  add_bounds_options(verify_cmd, paths, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  sogc_set_threads(threads);
  try {
    if (construct->parsed()) {
      sogc_code* c = nullptr;
      std::string comment;
      if (c_simplex->parsed()) {
        check(sogc_simplex(k, &c));
        comment = "simplex k=" + std::to_string(k);
      } else if (c_rm->parsed()) {
        check(sogc_reed_muller_1(k, &c));
        comment = "R(1," + std::to_string(k) + ")";
      } else if (c_ss->parsed()) {
        check(sogc_solomon_stiffler(k, s, useq.data(), useq.size(), &c));
        comment = "Solomon-Stiffler k=" + std::to_string(k) + " s=" + std::to_string(s) + " u=" + join_list(useq);
      } else if (c_belov->parsed()) {
        check(sogc_belov(k, s, useq.data(), useq.size(), u, &c));
        comment = "Belov k=" + std::to_string(k) + " s=" + std::to_string(s) + " u_seq=" + join_list(useq) +
                  " u=" + std::to_string(u);
      } else {
        check(sogc_paper_code(name.c_str(), &c));
        comment = name;
      }
      const Code code(c);
      emit_code(code.get(), out_path, comment);
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      const Code code = load(in_path);
      char* summary = nullptr;
      check(sogc_code_summary_tsv(code.get(), &summary));
      std::cout << take(summary);
      if (weights) {
        char* dist = nullptr;
        check(sogc_code_weight_distribution_tsv(code.get(), &dist));
        std::cout << take(dist);
      }
      return kExitOk;
    }

    if (residual_cmd->parsed()) {
      const Code code = load(in_path);
      sogc_code* r = nullptr;
      check(sogc_residual(code.get(), codeword.empty() ? nullptr : codeword.c_str(), &r));
      const Code res(r);
      emit_code(res.get(), out_path, "residual of " + std::filesystem::path(in_path).filename().string());
      return kExitOk;
    }

    if (puncture_cmd->parsed()) {
      const Code code = load(in_path);
      sogc_code* r = nullptr;
      check(sogc_puncture(code.get(), positions.data(), positions.size(), &r));
      const Code res(r);
      emit_code(res.get(), out_path,
                std::filesystem::path(in_path).filename().string() + " punctured on " + join_list(positions));
      return kExitOk;
    }

    if (extend_cmd->parsed()) {
      const Code code = load(in_path);
      sogc_code* r = nullptr;
      std::string comment = std::filesystem::path(in_path).filename().string();
      if (mode == "rm") {
        check(sogc_extend_rm(code.get(), m, &r));
        comment += " extended by " + std::to_string(m) + " Reed-Muller blocks";
      } else if (mode == "simplex") {
        check(sogc_add_simplex_copies(code.get(), m, &r));
        comment += " with " + std::to_string(m) + " simplex copies";
      } else {
        check(sogc_shrink_by_duplicate(code.get(), &r));
        comment += " less a duplicate column pair";
      }
      const Code res(r);
      emit_code(res.get(), out_path, comment);
      return kExitOk;
    }

    if (juxt_cmd->parsed()) {
      const Code c0 = load(in_path);
      const std::string g = read_text(in_path2);
      sogc_code* r = nullptr;
      check(sogc_juxtapose(c0.get(), g.c_str(), &r));
      const Code res(r);
      emit_code(res.get(), out_path, "juxtaposition of " + std::filesystem::path(in_path).filename().string() +
                                         " and " + std::filesystem::path(in_path2).filename().string());
      return kExitOk;
    }

    if (bound_cmd->parsed()) {
      const Bounds bounds = paths.load();
      std::size_t dso = 0;
      char* rules = nullptr;
      check(sogc_dso_upper(bounds.get(), n, k, &dso, &rules));
      std::cout << "n\tk\tgriesmer_d\tdso_upper\n"
                << n << "\t" << k << "\t" << sogc_griesmer_max_d(n, k) << "\t" << dso << "\n";
      std::istringstream lines(take(rules));
      for (std::string line; std::getline(lines, line);) std::cout << "# " << line << "\n";
      return kExitOk;
    }

    if (prove_cmd->parsed()) {
      const Bounds bounds = paths.load();
      sogc_cert* c = nullptr;
      check(sogc_prove(bounds.get(), n, k, d, &c));
      const Cert cert(c);
      emit_cert(cert.get(), out_path);
      return verdict_exit(cert.get());
    }

    if (search_cmd->parsed()) {
      sogc_cert* c = nullptr;
      check(sogc_search(n, k, d, max_nodes, split_depth, threads, &c));
      const Cert cert(c);
      emit_cert(cert.get(), out_path);
      return verdict_exit(cert.get());
    }

    if (table_cmd->parsed()) {
      char* out = nullptr;
      if (catalog) {
        check(sogc_griesmer_catalog_tsv(k, s, &out));
      } else if (asymptotic) {
        const sogc_family fam = family == "griesmer" ? SOGC_FAMILY_GRIESMER
                                : family == "shrink" ? SOGC_FAMILY_SHRINK
                                                     : SOGC_FAMILY_BOTH;
        check(sogc_asymptotic_tsv(k, fam, table_m, &out));
      } else {
        if (from == 0 || to == 0) throw CLI::ValidationError("table", "--from and --to are required for d_so tables");
        if (code_paths.empty()) {
          for (const char* sub : {"paper_codes", "codes"}) {
            const std::string p = paths.dir() + "/" + sub;
            if (std::filesystem::exists(p)) code_paths.push_back(p);
          }
        }
        std::vector<const char*> raw;
        for (const auto& p : code_paths) raw.push_back(p.c_str());
        const Bounds bounds = paths.load();
        check(sogc_dso_table_tsv(bounds.get(), k, from, to, raw.data(), raw.size(), provenance ? 1 : 0, &out));
      }
      std::cout << (pretty ? pretty_table(take(out)) : take(out));
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const std::string json = read_text(in_path);
      sogc_cert* c = nullptr;
      check(sogc_cert_from_json(json.c_str(), &c));
      const Cert cert(c);
      const Bounds bounds = paths.load();
      int ok = 0;
      check(sogc_cert_verify(cert.get(), bounds.get(), &ok));
      std::cout << (ok != 0 ? "valid" : "invalid") << "\n";
      return ok != 0 ? kExitOk : kExitFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
