#include "sogc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "sogc/error.hpp"

namespace sogc {

namespace {

constexpr std::size_t kMaxConstructionDimension = 16;
constexpr std::uint64_t kSearchNodeBudget = 5'000'000;

std::string seq_string(const std::vector<std::size_t>& u) {
  std::string out = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(u[i]);
  }
  return out + ")";
}

std::string params_string(const CodeParams& p) {
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]";
}

std::uint64_t pow2(std::size_t e) { return std::uint64_t{1} << e; }

bool criterion_holds(std::size_t k, std::size_t s, const std::vector<std::size_t>& dims) {
  const std::size_t terms = std::min(s + 1, dims.size());
  std::size_t sum = 0;
  for (std::size_t i = 0; i < terms; ++i) sum += dims[i];
  return sum <= s * k;
}

// Coverage bookkeeping shared by the two selection strategies.
class Cover {
 public:
  Cover(std::size_t k, std::size_t s) : s_(s), count_(pow2(k), 0) {}
  bool can_take(std::uint64_t v) const { return count_[v] < s_; }
  void add(std::uint64_t v) { ++count_[v]; }
  void remove(std::uint64_t v) { --count_[v]; }

 private:
  std::size_t s_;
  std::vector<std::size_t> count_;
};

std::optional<AnticodeAssignment> try_windows(std::size_t k, std::size_t s, const std::vector<std::size_t>& dims) {
  AnticodeAssignment out;
  Cover cover(k, s);
  std::size_t pos = 0;
  for (const std::size_t d : dims) {
    std::vector<std::uint64_t> basis;
    for (std::size_t j = 0; j < d; ++j) basis.push_back(pow2((pos + j) % k));
    pos = (pos + d) % k;
    for (const std::uint64_t v : span_nonzero(basis)) {
      if (!cover.can_take(v)) return std::nullopt;
      cover.add(v);
    }
    out.subspace_bases.push_back(std::move(basis));
  }
  return out;
}

// Depth-first search over general subspaces. Each subspace grows by basis
// vectors taken in increasing integer order; a vector w is admissible when
// every vector of the new coset w + V still has spare coverage.
class SubspaceSearch {
 public:
  SubspaceSearch(std::size_t k, std::size_t s, const std::vector<std::size_t>& dims)
      : k_(k), dims_(dims), cover_(k, s), in_span_(pow2(k), false) {}

  std::optional<AnticodeAssignment> run() {
    if (!place(0)) return std::nullopt;
    return result_;
  }
  bool exhausted() const { return nodes_ >= kSearchNodeBudget; }

 private:
  bool place(std::size_t i) {
    if (i == dims_.size()) return true;
    std::vector<std::uint64_t> span{0};
    std::vector<std::uint64_t> basis;
    return grow(i, basis, span, 0);
  }

  bool grow(std::size_t i, std::vector<std::uint64_t>& basis, std::vector<std::uint64_t>& span, std::uint64_t last) {
    if (basis.size() == dims_[i]) {
      result_.subspace_bases.push_back(basis);
      if (place(i + 1)) return true;
      result_.subspace_bases.pop_back();
      return false;
    }
    for (std::uint64_t w = last + 1; w < pow2(k_); ++w) {
      if (++nodes_ >= kSearchNodeBudget) return false;
      if (in_span_[w]) continue;
      bool ok = true;
      for (const std::uint64_t v : span) {
        if (!cover_.can_take(w ^ v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = span.size();
      for (std::size_t j = 0; j < old; ++j) {
        const std::uint64_t x = w ^ span[j];
        span.push_back(x);
        in_span_[x] = true;
        cover_.add(x);
      }
      basis.push_back(w);
      if (grow(i, basis, span, w)) return true;
      basis.pop_back();
      for (std::size_t j = old; j < span.size(); ++j) {
        in_span_[span[j]] = false;
        cover_.remove(span[j]);
      }
      span.resize(old);
      if (nodes_ >= kSearchNodeBudget) return false;
    }
    return false;
  }

  std::size_t k_;
  std::vector<std::size_t> dims_;
  Cover cover_;
  std::vector<bool> in_span_;  // membership in the subspace currently being grown
  std::uint64_t nodes_ = 0;
  AnticodeAssignment result_;
};

// `dims` must be nonincreasing.
AnticodeAssignment assign_subspaces(std::size_t k, std::size_t s, const std::vector<std::size_t>& dims) {
  if (!criterion_holds(k, s, dims)) {
    throw InfeasibleError(InfeasibleError::Reason::ConditionViolated,
                          "no anticode for k=" + std::to_string(k) + ", s=" + std::to_string(s) + ", u=" +
                              seq_string(dims) + ": the sum of the " + std::to_string(std::min(s + 1, dims.size())) +
                              " largest u_i exceeds s*k=" + std::to_string(s * k));
  }
  if (auto w = try_windows(k, s, dims)) return *w;
  SubspaceSearch search(k, s, dims);
  if (auto r = search.run()) return *r;
  throw InfeasibleError(InfeasibleError::Reason::StrategyExhausted,
                        "subspace search " + std::string(search.exhausted() ? "ran out of budget" : "found nothing") +
                            " for k=" + std::to_string(k) + ", s=" + std::to_string(s) + ", u=" + seq_string(dims));
}

// Remaining multiset of s copies of the simplex columns, ascending.
LinearCode from_remaining(std::size_t k, std::size_t s, const std::vector<std::size_t>& removed) {
  std::vector<std::uint64_t> cols;
  for (std::uint64_t v = 1; v < pow2(k); ++v) {
    for (std::size_t c = removed[v]; c < s; ++c) cols.push_back(v);
  }
  if (cols.size() < k) throw ConstructionError("anticode removes too many columns");
  return LinearCode(GF2Matrix::from_columns(k, cols));
}

}  // namespace

void validate(const SolomonStifflerSpec& spec) {
  if (spec.k < 4 || spec.k > kMaxConstructionDimension) {
    throw ParameterError("Solomon-Stiffler dimension must be in 4.." + std::to_string(kMaxConstructionDimension));
  }
  if (spec.s < 1) throw ParameterError("Solomon-Stiffler needs s >= 1");
  for (std::size_t i = 0; i < spec.u.size(); ++i) {
    const std::size_t upper = i == 0 ? spec.k : spec.u[i - 1];
    if (spec.u[i] < 1 || spec.u[i] >= upper) {
      throw ParameterError("u must satisfy k > u_1 > ... > u_p >= 1, got k=" + std::to_string(spec.k) +
                           ", u=" + seq_string(spec.u));
    }
  }
}

void validate(const BelovSpec& spec) {
  if (spec.k < 4 || spec.k > kMaxConstructionDimension) {
    throw ParameterError("Belov dimension must be in 4.." + std::to_string(kMaxConstructionDimension));
  }
  if (spec.s < 1) throw ParameterError("Belov needs s >= 1");
  if (spec.u < 3) throw ParameterError("Belov needs u >= 3");
  if (spec.u + 1 > spec.k) throw ParameterError("Belov needs u + 1 <= k");
  for (std::size_t i = 0; i < spec.u_seq.size(); ++i) {
    const std::size_t upper = i == 0 ? spec.k : spec.u_seq[i - 1];
    if (spec.u_seq[i] >= upper || spec.u_seq[i] <= spec.u) {
      throw ParameterError("Belov needs k > u_1 > ... > u_t > u");
    }
  }
}

bool is_feasible(const SolomonStifflerSpec& spec) { return criterion_holds(spec.k, spec.s, spec.u); }

CodeParams solomon_stiffler_parameters(const SolomonStifflerSpec& spec) {
  validate(spec);
  std::uint64_t n = spec.s * (pow2(spec.k) - 1);
  std::uint64_t d = spec.s * pow2(spec.k - 1);
  for (const std::size_t ui : spec.u) {
    n -= pow2(ui) - 1;
    d -= pow2(ui - 1);
  }
  return {static_cast<std::size_t>(n), spec.k, static_cast<std::size_t>(d)};
}

CodeParams belov_parameters(const BelovSpec& spec) {
  validate(spec);
  std::uint64_t n = spec.s * (pow2(spec.k) - 1);
  std::uint64_t d = spec.s * pow2(spec.k - 1);
  for (const std::size_t ui : spec.u_seq) {
    n -= pow2(ui) - 1;
    d -= pow2(ui - 1);
  }
  // |S \ T| = (2^(u+1) - 1) - (u + 2)
  n -= (pow2(spec.u + 1) - 1) - (spec.u + 2);
  d -= pow2(spec.u) - 2;
  return {static_cast<std::size_t>(n), spec.k, static_cast<std::size_t>(d)};
}

std::vector<std::uint64_t> span_nonzero(const std::vector<std::uint64_t>& basis) {
  std::vector<std::uint64_t> span{0};
  for (const std::uint64_t b : basis) {
    const std::size_t old = span.size();
    for (std::size_t j = 0; j < old; ++j) span.push_back(span[j] ^ b);
  }
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  span.erase(span.begin());  // the zero vector
  return span;
}

AnticodeAssignment choose_anticode(const SolomonStifflerSpec& spec) {
  validate(spec);
  return assign_subspaces(spec.k, spec.s, spec.u);
}

LinearCode simplex(std::size_t k) {
  if (k < 2) throw ParameterError("simplex needs k >= 2");
  if (k > kMaxConstructionDimension) throw ParameterError("simplex dimension too large");
  return LinearCode(simplex_generator(k));
}

LinearCode reed_muller_1(std::size_t k) {
  if (k < 3) throw ParameterError("first-order Reed-Muller needs k >= 3");
  if (k > kMaxConstructionDimension) throw ParameterError("Reed-Muller dimension too large");
  return LinearCode(reed_muller_1_generator(k));
}

LinearCode solomon_stiffler(const SolomonStifflerSpec& spec) {
  const CodeParams expected = solomon_stiffler_parameters(spec);
  const AnticodeAssignment a = choose_anticode(spec);
  std::vector<std::size_t> removed(pow2(spec.k), 0);
  for (const auto& basis : a.subspace_bases) {
    for (const std::uint64_t v : span_nonzero(basis)) ++removed[v];
  }
  LinearCode code = from_remaining(spec.k, spec.s, removed);
  if (code.params() != expected) {
    throw ConstructionError("Solomon-Stiffler k=" + std::to_string(spec.k) + ", s=" + std::to_string(spec.s) +
                            ", u=" + seq_string(spec.u) + " built " + params_string(code.params()) +
                            ", expected " + params_string(expected));
  }
  return code;
}

LinearCode belov(const BelovSpec& spec) {
  const CodeParams expected = belov_parameters(spec);
  std::vector<std::size_t> dims = spec.u_seq;
  dims.push_back(spec.u + 1);
  const AnticodeAssignment a = assign_subspaces(spec.k, spec.s, dims);

  std::vector<std::size_t> removed(pow2(spec.k), 0);
  for (std::size_t i = 0; i + 1 < a.subspace_bases.size(); ++i) {
    for (const std::uint64_t v : span_nonzero(a.subspace_bases[i])) ++removed[v];
  }
  const auto& s_basis = a.subspace_bases.back();
  std::vector<std::uint64_t> t(s_basis);
  t.push_back(std::accumulate(s_basis.begin(), s_basis.end(), std::uint64_t{0},
                              [](std::uint64_t x, std::uint64_t y) { return x ^ y; }));
  for (const std::uint64_t v : span_nonzero(s_basis)) {
    if (std::find(t.begin(), t.end(), v) == t.end()) ++removed[v];
  }
  LinearCode code = from_remaining(spec.k, spec.s, removed);
  if (code.params() != expected) {
    throw ConstructionError("Belov k=" + std::to_string(spec.k) + ", s=" + std::to_string(spec.s) + ", u_seq=" +
                            seq_string(spec.u_seq) + ", u=" + std::to_string(spec.u) + " built " +
                            params_string(code.params()) + ", expected " + params_string(expected));
  }
  return code;
}

std::vector<CatalogEntry> griesmer_catalog(std::size_t k, std::size_t s) {
  if (k < 4 || k > kMaxConstructionDimension) throw ParameterError("catalog dimension out of range");
  if (s < 1) throw ParameterError("catalog needs s >= 1");
  std::vector<CatalogEntry> out;
  // Subsets of {3, ..., k-1}, each listed in decreasing order.
  const std::size_t choices = k - 3;
  for (std::uint64_t mask = 0; mask < pow2(choices); ++mask) {
    SolomonStifflerSpec spec{k, s, {}};
    for (std::size_t b = choices; b-- > 0;) {
      if ((mask >> b) & 1U) spec.u.push_back(b + 3);
    }
    if (!is_feasible(spec)) continue;
    out.push_back({spec, solomon_stiffler_parameters(spec)});
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.spec.u.size() != b.spec.u.size()) return a.spec.u.size() < b.spec.u.size();
    return a.params.d > b.params.d;
  });
  return out;
}

}  // namespace sogc
