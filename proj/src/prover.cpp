#include "sogc/prover.hpp"

#include "sogc/error.hpp"

namespace sogc {

namespace {

std::string triple(const ParamTriple& p) {
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]";
}

// Griesmer or table contradiction for a linear [n,k,d] code.
std::optional<ProofStep> bound_contradiction(const ParamTriple& cur, const BoundsTable& table) {
  const std::size_t g = griesmer_sum(cur.k, cur.d);
  if (g > cur.n) {
    ProofStep s;
    s.rule = "griesmer";
    s.input = cur;
    s.bound = g;
    s.contradiction = true;
    return s;
  }
  if (const auto tb = table.upper_bound(cur.n, cur.k); tb && tb->d_upper < cur.d) {
    ProofStep s;
    s.rule = "table";
    s.input = cur;
    s.bound = tb->d_upper;
    s.entry = tb->entry;
    s.contradiction = true;
    return s;
  }
  return std::nullopt;
}

ParamTriple residual_output(const ParamTriple& cur, bool strengthened) {
  return {cur.n - cur.d, cur.k - 1, strengthened ? cur.d / 2 + 1 : (cur.d + 1) / 2};
}

std::string describe(const ProofCertificate& cert) {
  std::string out;
  for (const auto& s : cert.steps) {
    if (!out.empty()) out += "; ";
    if (s.output) {
      out += s.rule + " " + triple(*s.output);
    } else if (s.rule == "griesmer") {
      out += "g(" + std::to_string(s.input.k) + "," + std::to_string(s.input.d) + ")=" + std::to_string(*s.bound) +
             " > " + std::to_string(s.input.n);
    } else if (s.rule == "table") {
      out += "d(" + std::to_string(s.input.n) + "," + std::to_string(s.input.k) + ") <= " + std::to_string(*s.bound) +
             " from table entry d(" + std::to_string(s.entry->n) + "," + std::to_string(s.entry->k) + ") <= " +
             std::to_string(s.entry->d) + " (" + s.entry->source + ")";
    } else {
      out += s.rule;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Nonexistent:
      return "nonexistent";
    case Verdict::ExistsWitness:
      return "exists-witness";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view tool_version() { return "sogc 1.0.0"; }

ProofCertificate residual_refute(std::size_t n, std::size_t k, std::size_t d, const BoundsTable& table) {
  ProofCertificate cert;
  cert.claim = {n, k, d};
  cert.tool_version = std::string(tool_version());
  if (k < 1 || d == 0 || d % 2 != 0 || n < k) return cert;

  const std::size_t max_levels = k >= 2 ? k - 2 : 0;
  ParamTriple cur = cert.claim;
  bool so = true;
  for (std::size_t level = 0;; ++level) {
    if (auto s = bound_contradiction(cur, table)) {
      cert.steps.push_back(*s);
      cert.verdict = Verdict::Nonexistent;
      return cert;
    }
    if (level >= max_levels || cur.k < 2 || cur.d >= cur.n) break;
    ProofStep step;
    const bool strengthened = so && cur.d % 4 == 2;
    step.rule = strengthened ? "so-residual" : "residual";
    step.input = cur;
    step.output = residual_output(cur, strengthened);
    cert.steps.push_back(step);
    cur = *step.output;
    so = false;
  }

  // The chain did not close; at the Griesmer point the doubly-even rule may.
  if (k >= 3 && n == griesmer_sum(k, d) && d % 4 == 2) {
    ProofStep step;
    step.rule = "doubly-even";
    step.input = cert.claim;
    step.bound = n;
    step.contradiction = true;
    cert.steps.assign(1, step);
    cert.verdict = Verdict::Nonexistent;
  }
  return cert;
}

Refuter make_residual_refuter(const BoundsTable& table) {
  return [&table](std::size_t n, std::size_t k, std::size_t d) -> std::optional<std::string> {
    const ProofCertificate cert = residual_refute(n, k, d, table);
    if (cert.verdict != Verdict::Nonexistent) return std::nullopt;
    return describe(cert);
  };
}

bool verify_certificate(const ProofCertificate& cert, const BoundsTable& table) {
  auto malformed = [](std::size_t i, const std::string& what) {
    return ValidationError("certificate step " + std::to_string(i + 1) + ": " + what);
  };
  if (cert.steps.empty() && cert.verdict == Verdict::Nonexistent) {
    throw ValidationError("certificate: nonexistent verdict without steps");
  }

  ParamTriple cur = cert.claim;
  bool so = true;
  bool closed = false;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const ProofStep& s = cert.steps[i];
    if (closed) return false;  // nothing may follow a contradiction
    if (s.input != cur) return false;

    if (s.rule == "so-residual" || s.rule == "residual") {
      if (!s.output) throw malformed(i, "residual step without output parameters");
      if (s.contradiction) return false;
      const bool strengthened = s.rule == "so-residual";
      if (strengthened && (!so || cur.d % 4 != 2)) return false;
      if (cur.k < 2 || cur.d >= cur.n) return false;
      if (*s.output != residual_output(cur, strengthened)) return false;
      cur = *s.output;
      so = false;
    } else if (s.rule == "griesmer") {
      if (!s.bound) throw malformed(i, "griesmer step without bound value");
      const std::size_t g = griesmer_sum(cur.k, cur.d);
      if (*s.bound != g || g <= cur.n || !s.contradiction) return false;
      closed = true;
    } else if (s.rule == "table") {
      if (!s.bound || !s.entry) throw malformed(i, "table step without bound value or entry");
      const auto e = table.exact(s.entry->n, s.entry->k);
      if (!e || e->d != s.entry->d || e->source != s.entry->source || e->k != cur.k) return false;
      const std::size_t derived = e->n >= cur.n ? e->d : e->d + (cur.n - e->n);
      if (*s.bound != derived || derived >= cur.d || !s.contradiction) return false;
      closed = true;
    } else if (s.rule == "doubly-even") {
      if (!so || cur.k < 3 || cur.n != griesmer_sum(cur.k, cur.d) || cur.d % 4 != 2 || !s.contradiction) {
        return false;
      }
      closed = true;
    } else if (s.rule == "exhaustive-search") {
      if (i != 0 || cert.steps.size() != 1) throw malformed(i, "a search step must be the only step");
      SearchConfig cfg;
      cfg.n = cur.n;
      cfg.k = cur.k;
      cfg.target_d = cur.d;
      cfg.max_nodes = s.max_nodes;
      cfg.thread_split_depth = s.split_depth;
      const ProofCertificate again = search_so_code(cfg);
      if (again.verdict != cert.verdict || again.steps.front().nodes != s.nodes) return false;
      if (s.contradiction != (cert.verdict == Verdict::Nonexistent)) return false;
      closed = s.contradiction;
    } else {
      throw malformed(i, "unknown rule '" + s.rule + "'");
    }
  }

  switch (cert.verdict) {
    case Verdict::Nonexistent:
      return closed;
    case Verdict::Inconclusive:
      return !closed;
    case Verdict::ExistsWitness: {
      if (!cert.witness) throw ValidationError("certificate: exists-witness verdict without a witness");
      try {
        const LinearCode code(*cert.witness);
        return code.length() == cert.claim.n && code.dimension() == cert.claim.k && code.is_self_orthogonal() &&
               code.min_distance() >= cert.claim.d;
      } catch (const RankError&) {
        return false;
      }
    }
  }
  return false;
}

}  // namespace sogc
