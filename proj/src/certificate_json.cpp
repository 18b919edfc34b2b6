#include <json.hpp>

#include "sogc/error.hpp"
#include "sogc/prover.hpp"

namespace sogc {

namespace {

using nlohmann::ordered_json;

ordered_json triple_json(const ParamTriple& p) { return {{"n", p.n}, {"k", p.k}, {"d", p.d}}; }

std::size_t get_size(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number_unsigned()) {
    throw ValidationError(where + ": missing or invalid non-negative integer '" + key + "'");
  }
  return obj.at(key).get<std::size_t>();
}

ParamTriple triple_from(const ordered_json& obj, const std::string& where) {
  return {get_size(obj, "n", where), get_size(obj, "k", where), get_size(obj, "d", where)};
}

Verdict verdict_from(const std::string& s) {
  if (s == "nonexistent") return Verdict::Nonexistent;
  if (s == "exists-witness") return Verdict::ExistsWitness;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw ValidationError("certificate claim: unknown verdict '" + s + "'");
}

}  // namespace

std::string certificate_to_json(const ProofCertificate& cert, int indent) {
  ordered_json doc;
  ordered_json claim = triple_json(cert.claim);
  claim["verdict"] = std::string(to_string(cert.verdict));
  doc["claim"] = claim;
  doc["steps"] = ordered_json::array();
  for (const auto& s : cert.steps) {
    ordered_json j;
    j["rule"] = s.rule;
    j["input"] = triple_json(s.input);
    if (s.output) j["output"] = triple_json(*s.output);
    if (s.bound) j["bound"] = *s.bound;
    if (s.entry) {
      j["entry"] = {{"n", s.entry->n}, {"k", s.entry->k}, {"d", s.entry->d}, {"source", s.entry->source}};
    }
    if (s.rule == "exhaustive-search") {
      j["nodes"] = s.nodes;
      j["max_nodes"] = s.max_nodes;
      j["split_depth"] = s.split_depth;
    }
    j["contradiction"] = s.contradiction;
    doc["steps"].push_back(std::move(j));
  }
  if (cert.witness) {
    doc["witness"] = {{"n", cert.witness->cols()}, {"k", cert.witness->rows()}, {"rows", cert.witness->to_strings()}};
  }
  doc["tool_version"] = cert.tool_version;
  return doc.dump(indent) + "\n";
}

ProofCertificate certificate_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("certificate must be a JSON object");
  ProofCertificate cert;
  if (!doc.contains("claim")) throw ValidationError("certificate: missing 'claim'");
  const auto& claim = doc.at("claim");
  cert.claim = triple_from(claim, "certificate claim");
  if (!claim.contains("verdict") || !claim.at("verdict").is_string()) {
    throw ValidationError("certificate claim: missing 'verdict'");
  }
  cert.verdict = verdict_from(claim.at("verdict").get<std::string>());

  if (!doc.contains("steps") || !doc.at("steps").is_array()) throw ValidationError("certificate: missing 'steps' array");
  std::size_t index = 0;
  for (const auto& j : doc.at("steps")) {
    const std::string where = "certificate step " + std::to_string(++index);
    if (!j.is_object()) throw ValidationError(where + ": not an object");
    ProofStep s;
    if (!j.contains("rule") || !j.at("rule").is_string()) throw ValidationError(where + ": missing 'rule'");
    s.rule = j.at("rule").get<std::string>();
    if (!j.contains("input")) throw ValidationError(where + ": missing 'input'");
    s.input = triple_from(j.at("input"), where + " input");
    if (j.contains("output")) s.output = triple_from(j.at("output"), where + " output");
    if (j.contains("bound")) s.bound = get_size(j, "bound", where);
    if (j.contains("entry")) {
      const auto& e = j.at("entry");
      const ParamTriple t = triple_from(e, where + " entry");
      if (!e.contains("source") || !e.at("source").is_string()) throw ValidationError(where + " entry: missing 'source'");
      s.entry = BoundEntry{t.n, t.k, t.d, e.at("source").get<std::string>()};
    }
    if (j.contains("nodes")) s.nodes = get_size(j, "nodes", where);
    if (j.contains("max_nodes")) s.max_nodes = get_size(j, "max_nodes", where);
    if (j.contains("split_depth")) s.split_depth = get_size(j, "split_depth", where);
    if (!j.contains("contradiction") || !j.at("contradiction").is_boolean()) {
      throw ValidationError(where + ": missing boolean 'contradiction'");
    }
    s.contradiction = j.at("contradiction").get<bool>();
    cert.steps.push_back(std::move(s));
  }

  if (doc.contains("witness")) {
    const auto& w = doc.at("witness");
    const std::size_t n = get_size(w, "n", "certificate witness");
    const std::size_t k = get_size(w, "k", "certificate witness");
    if (!w.contains("rows") || !w.at("rows").is_array() || w.at("rows").size() != k) {
      throw ValidationError("certificate witness: 'rows' must hold k strings");
    }
    std::vector<std::string> rows;
    for (const auto& r : w.at("rows")) {
      if (!r.is_string() || r.get<std::string>().size() != n) {
        throw ValidationError("certificate witness: every row must be a string of n bits");
      }
      rows.push_back(r.get<std::string>());
    }
    cert.witness = GF2Matrix::from_strings(rows);
  }
  if (doc.contains("tool_version") && doc.at("tool_version").is_string()) {
    cert.tool_version = doc.at("tool_version").get<std::string>();
  }
  return cert;
}

}  // namespace sogc
