#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "sogc/bounds.hpp"
#include "sogc/code_io.hpp"
#include "sogc/constructions.hpp"
#include "sogc/error.hpp"
#include "sogc/prover.hpp"
#include "sogc/report.hpp"
#include "sogc/sogc.h"

struct sogc_code {
  sogc::LinearCode code;
};

struct sogc_bounds {
  sogc::BoundsTable table;
  sogc::RefutationSet refutations;
};

struct sogc_cert {
  sogc::ProofCertificate cert;
};

namespace {

thread_local std::string last_error;

sogc_status fail(sogc_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs fn, translating library exceptions into status codes.
template <class Fn>
sogc_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return SOGC_OK;
  } catch (const sogc::RankError& e) {
    return fail(SOGC_ERR_RANK, e.what());
  } catch (const sogc::DimensionError& e) {
    return fail(SOGC_ERR_DIMENSION, e.what());
  } catch (const sogc::ParameterError& e) {
    return fail(SOGC_ERR_PARAMETER, e.what());
  } catch (const sogc::PreconditionError& e) {
    return fail(SOGC_ERR_PRECONDITION, e.what());
  } catch (const sogc::ValidationError& e) {
    return fail(SOGC_ERR_VALIDATION, e.what());
  } catch (const sogc::IndexError& e) {
    return fail(SOGC_ERR_INDEX, e.what());
  } catch (const sogc::MembershipError& e) {
    return fail(SOGC_ERR_MEMBERSHIP, e.what());
  } catch (const sogc::LookupError& e) {
    return fail(SOGC_ERR_LOOKUP, e.what());
  } catch (const sogc::InfeasibleError& e) {
    return fail(SOGC_ERR_INFEASIBLE, e.what());
  } catch (const sogc::ConstructionError& e) {
    return fail(SOGC_ERR_CONSTRUCTION, e.what());
  } catch (const sogc::IoError& e) {
    return fail(SOGC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SOGC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SOGC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SOGC_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

sogc_status null_arg(const char* name) {
  return fail(SOGC_ERR_NULL_ARGUMENT, (std::string(name) + " must not be null").c_str());
}

template <class Fn>
sogc_status make_code(sogc_code** out, Fn&& fn) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new sogc_code{fn()}; });
}

template <class Fn>
sogc_status make_string(char** out, Fn&& fn) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = dup_string(fn()); });
}

template <class Fn>
sogc_status make_cert(sogc_cert** out, Fn&& fn) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new sogc_cert{fn()}; });
}

}  // namespace

extern "C" {

const char* sogc_version(void) { return "1.0.0"; }

const char* sogc_last_error(void) { return last_error.c_str(); }

void sogc_free_string(char* s) { std::free(s); }

void sogc_set_threads(unsigned threads) { sogc::set_default_threads(threads); }

sogc_status sogc_code_from_text(const char* text, sogc_code** out) {
  if (text == nullptr) return null_arg("text");
  return make_code(out, [&] { return sogc::LinearCode(sogc::parse_code_text(text).generator); });
}

sogc_status sogc_code_load(const char* path, sogc_code** out) {
  if (path == nullptr) return null_arg("path");
  return make_code(out, [&] { return sogc::load_code(path); });
}

sogc_status sogc_code_save(const sogc_code* code, const char* path, const char* comment) {
  if (code == nullptr) return null_arg("code");
  if (path == nullptr) return null_arg("path");
  return guarded([&] {
    std::vector<std::string> comments;
    if (comment != nullptr && *comment != '\0') comments.emplace_back(std::string(" ") + comment);
    sogc::write_code_file(path, code->code.generator(), comments);
  });
}

sogc_status sogc_code_to_text(const sogc_code* code, char** out) {
  if (code == nullptr) return null_arg("code");
  return make_string(out, [&] { return sogc::format_code_text(code->code.generator()); });
}

void sogc_code_free(sogc_code* code) { delete code; }

sogc_status sogc_code_params(const sogc_code* code, size_t* n, size_t* k, size_t* d) {
  if (code == nullptr) return null_arg("code");
  return guarded([&] {
    const auto p = code->code.params();
    if (n != nullptr) *n = p.n;
    if (k != nullptr) *k = p.k;
    if (d != nullptr) *d = p.d;
  });
}

sogc_status sogc_code_is_self_orthogonal(const sogc_code* code, int* out) {
  if (code == nullptr) return null_arg("code");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = code->code.is_self_orthogonal() ? 1 : 0; });
}

sogc_status sogc_code_is_doubly_even(const sogc_code* code, int* out) {
  if (code == nullptr) return null_arg("code");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = code->code.is_doubly_even() ? 1 : 0; });
}

sogc_status sogc_code_is_griesmer(const sogc_code* code, int* out) {
  if (code == nullptr) return null_arg("code");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = sogc::is_griesmer(code->code) ? 1 : 0; });
}

sogc_status sogc_code_weight_counts(const sogc_code* code, uint64_t* counts, size_t len) {
  if (code == nullptr) return null_arg("code");
  if (counts == nullptr && len != 0) return null_arg("counts");
  return guarded([&] {
    const auto& wc = code->code.weight_counts();
    for (size_t w = 0; w < len; ++w) counts[w] = w < wc.size() ? wc[w] : 0;
  });
}

sogc_status sogc_code_min_weight_codeword(const sogc_code* code, char** out) {
  if (code == nullptr) return null_arg("code");
  return make_string(out, [&] { return code->code.min_weight_codeword().to_string(); });
}

sogc_status sogc_code_summary_tsv(const sogc_code* code, char** out) {
  if (code == nullptr) return null_arg("code");
  return make_string(out, [&] { return sogc::code_summary_tsv(code->code); });
}

sogc_status sogc_code_weight_distribution_tsv(const sogc_code* code, char** out) {
  if (code == nullptr) return null_arg("code");
  return make_string(out, [&] { return sogc::weight_distribution_tsv(code->code); });
}

sogc_status sogc_simplex(size_t k, sogc_code** out) {
  return make_code(out, [&] { return sogc::simplex(k); });
}

sogc_status sogc_reed_muller_1(size_t k, sogc_code** out) {
  return make_code(out, [&] { return sogc::reed_muller_1(k); });
}

sogc_status sogc_solomon_stiffler(size_t k, size_t s, const size_t* u, size_t p, sogc_code** out) {
  if (u == nullptr && p != 0) return null_arg("u");
  return make_code(out, [&] {
    sogc::SolomonStifflerSpec spec{k, s, {}};
    if (p != 0) spec.u.assign(u, u + p);
    return sogc::solomon_stiffler(spec);
  });
}

sogc_status sogc_belov(size_t k, size_t s, const size_t* u_seq, size_t t, size_t u, sogc_code** out) {
  if (u_seq == nullptr && t != 0) return null_arg("u_seq");
  return make_code(out, [&] {
    sogc::BelovSpec spec{k, s, {}, u};
    if (t != 0) spec.u_seq.assign(u_seq, u_seq + t);
    return sogc::belov(spec);
  });
}

sogc_status sogc_paper_code(const char* name, sogc_code** out) {
  if (name == nullptr) return null_arg("name");
  return make_code(out, [&] { return sogc::paper_code(name); });
}

sogc_status sogc_residual(const sogc_code* code, const char* codeword, sogc_code** out) {
  if (code == nullptr) return null_arg("code");
  return make_code(out, [&] {
    const sogc::GF2Vector c =
        codeword == nullptr ? code->code.min_weight_codeword() : sogc::GF2Vector::from_string(codeword);
    return sogc::residual(code->code, c);
  });
}

sogc_status sogc_puncture(const sogc_code* code, const size_t* positions, size_t count, sogc_code** out) {
  if (code == nullptr) return null_arg("code");
  if (positions == nullptr && count != 0) return null_arg("positions");
  return make_code(out, [&] {
    std::vector<std::size_t> pos;
    if (count != 0) pos.assign(positions, positions + count);
    return sogc::puncture(code->code, pos);
  });
}

sogc_status sogc_juxtapose(const sogc_code* c0, const char* matrix_text, sogc_code** out) {
  if (c0 == nullptr) return null_arg("c0");
  if (matrix_text == nullptr) return null_arg("matrix_text");
  return make_code(out, [&] { return sogc::juxtapose(c0->code, sogc::parse_code_text(matrix_text).generator); });
}

sogc_status sogc_extend_rm(const sogc_code* code, size_t m, sogc_code** out) {
  if (code == nullptr) return null_arg("code");
  return make_code(out, [&] { return sogc::extend_rm(code->code, m); });
}

sogc_status sogc_add_simplex_copies(const sogc_code* code, size_t m, sogc_code** out) {
  if (code == nullptr) return null_arg("code");
  return make_code(out, [&] { return sogc::add_simplex_copies(code->code, m); });
}

sogc_status sogc_shrink_by_duplicate(const sogc_code* code, sogc_code** out) {
  if (code == nullptr) return null_arg("code");
  return make_code(out, [&] { return sogc::shrink_by_duplicate(code->code); });
}

size_t sogc_griesmer_sum(size_t k, size_t d) { return sogc::griesmer_sum(k, d); }

size_t sogc_griesmer_max_d(size_t n, size_t k) { return sogc::griesmer_max_d(n, k); }

sogc_status sogc_asymptotic_threshold(size_t k, size_t* m_min) {
  if (m_min == nullptr) return null_arg("m_min");
  return guarded([&] { *m_min = sogc::asymptotic_threshold(k).m_min; });
}

sogc_status sogc_bounds_load(const char* bounds_path, const char* refutations_path, sogc_bounds** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto b = std::make_unique<sogc_bounds>();
    if (bounds_path != nullptr) b->table = sogc::BoundsTable::load(bounds_path);
    if (refutations_path != nullptr) b->refutations = sogc::RefutationSet::load(refutations_path);
    *out = b.release();
  });
}

void sogc_bounds_free(sogc_bounds* bounds) { delete bounds; }

sogc_status sogc_dso_upper(const sogc_bounds* bounds, size_t n, size_t k, size_t* d, char** rules) {
  if (bounds == nullptr) return null_arg("bounds");
  if (d == nullptr) return null_arg("d");
  if (rules != nullptr) *rules = nullptr;
  return guarded([&] {
    const auto ub = sogc::dso_upper(n, k, bounds->table, &bounds->refutations,
                                    sogc::make_residual_refuter(bounds->table));
    *d = ub.d;
    if (rules != nullptr) {
      std::string text;
      for (const auto& r : ub.rules) text += r + "\n";
      *rules = dup_string(text);
    }
  });
}

sogc_status sogc_prove(const sogc_bounds* bounds, size_t n, size_t k, size_t d, sogc_cert** out) {
  if (bounds == nullptr) return null_arg("bounds");
  return make_cert(out, [&] { return sogc::residual_refute(n, k, d, bounds->table); });
}

sogc_status sogc_search(size_t n, size_t k, size_t d, uint64_t max_nodes, size_t split_depth, unsigned threads,
                        sogc_cert** out) {
  return make_cert(out, [&] {
    sogc::SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.target_d = d;
    cfg.max_nodes = max_nodes;
    cfg.thread_split_depth = split_depth;
    cfg.threads = threads;
    return sogc::search_so_code(cfg);
  });
}

sogc_status sogc_cert_verdict(const sogc_cert* cert, sogc_verdict* out) {
  if (cert == nullptr) return null_arg("cert");
  if (out == nullptr) return null_arg("out");
  switch (cert->cert.verdict) {
    case sogc::Verdict::Nonexistent:
      *out = SOGC_NONEXISTENT;
      break;
    case sogc::Verdict::ExistsWitness:
      *out = SOGC_EXISTS_WITNESS;
      break;
    case sogc::Verdict::Inconclusive:
      *out = SOGC_INCONCLUSIVE;
      break;
  }
  return SOGC_OK;
}

sogc_status sogc_cert_to_json(const sogc_cert* cert, char** out) {
  if (cert == nullptr) return null_arg("cert");
  return make_string(out, [&] { return sogc::certificate_to_json(cert->cert); });
}

sogc_status sogc_cert_from_json(const char* json, sogc_cert** out) {
  if (json == nullptr) return null_arg("json");
  return make_cert(out, [&] { return sogc::certificate_from_json(json); });
}

sogc_status sogc_cert_verify(const sogc_cert* cert, const sogc_bounds* bounds, int* ok) {
  if (cert == nullptr) return null_arg("cert");
  if (bounds == nullptr) return null_arg("bounds");
  if (ok == nullptr) return null_arg("ok");
  return guarded([&] { *ok = sogc::verify_certificate(cert->cert, bounds->table) ? 1 : 0; });
}

sogc_status sogc_cert_witness(const sogc_cert* cert, sogc_code** out) {
  if (cert == nullptr) return null_arg("cert");
  return make_code(out, [&] {
    if (!cert->cert.witness) throw sogc::LookupError("certificate has no witness");
    return sogc::LinearCode(*cert->cert.witness);
  });
}

void sogc_cert_free(sogc_cert* cert) { delete cert; }

sogc_status sogc_griesmer_catalog_tsv(size_t k, size_t s, char** out) {
  return make_string(out, [&] { return sogc::griesmer_catalog_tsv(k, s); });
}

sogc_status sogc_asymptotic_tsv(size_t k, sogc_family family, long m, char** out) {
  return make_string(out, [&] {
    sogc::AsymptoticFamily fam = sogc::AsymptoticFamily::Both;
    if (family == SOGC_FAMILY_GRIESMER) fam = sogc::AsymptoticFamily::Griesmer;
    if (family == SOGC_FAMILY_SHRINK) fam = sogc::AsymptoticFamily::Shrink;
    std::optional<std::size_t> mm;
    if (m >= 0) mm = static_cast<std::size_t>(m);
    return sogc::asymptotic_tsv(k, fam, mm);
  });
}

sogc_status sogc_dso_table_tsv(const sogc_bounds* bounds, size_t k, size_t n_first, size_t n_last,
                               const char* const* code_paths, size_t path_count, int provenance, char** out) {
  if (bounds == nullptr) return null_arg("bounds");
  if (code_paths == nullptr && path_count != 0) return null_arg("code_paths");
  for (size_t i = 0; i < path_count; ++i) {
    if (code_paths[i] == nullptr) return null_arg("code path");
  }
  return make_string(out, [&] {
    std::vector<std::filesystem::path> paths(code_paths, code_paths + path_count);
    const auto known = sogc::lift_known_codes(k, sogc::load_known_codes(paths));
    sogc::DsoTableOptions options;
    options.table = &bounds->table;
    options.refutations = &bounds->refutations;
    options.refuter = sogc::make_residual_refuter(bounds->table);
    return sogc::dso_table_tsv(sogc::dso_table(k, n_first, n_last, known, options), provenance != 0);
  });
}

}  // extern "C"
