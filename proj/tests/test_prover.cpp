#include <algorithm>
#include <bit>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "sogc/bounds.hpp"
#include "sogc/constructions.hpp"
#include "sogc/error.hpp"
#include "sogc/prover.hpp"
#include "test_support.hpp"

using namespace sogc;
using sogc::test::brute_force_dso;
using sogc::test::kListed;
using sogc::test::Triple;

namespace {

const std::filesystem::path kData = SOGC_TEST_DATA_DIR;

const BoundsTable& bundled_table() {
  static const BoundsTable t = BoundsTable::load(kData / "bounds.tsv");
  return t;
}

ProofCertificate search(std::size_t n, std::size_t k, std::size_t d, unsigned threads = 1, std::size_t split = 2) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.target_d = d;
  cfg.threads = threads;
  cfg.thread_split_depth = split;
  return search_so_code(cfg);
}

}  // namespace

TEST_CASE("residual-chain examples") {
  const auto c47 = residual_refute(47, 7, 22, bundled_table());
  CHECK(c47.verdict == Verdict::Nonexistent);
  REQUIRE(c47.steps.size() == 2);
  CHECK(c47.steps[0].rule == "so-residual");
  REQUIRE(c47.steps[0].output.has_value());
  CHECK(*c47.steps[0].output == ParamTriple{25, 6, 12});
  CHECK(c47.steps[1].rule == "table");
  CHECK(c47.steps[1].contradiction);
  CHECK(verify_certificate(c47, bundled_table()));

  const auto c45 = residual_refute(45, 6, 22, bundled_table());
  CHECK(c45.verdict == Verdict::Nonexistent);
  CHECK(c45.steps.back().rule == "griesmer");
  CHECK(c45.steps.back().bound == std::size_t{24});

  CHECK(residual_refute(56, 6, 28, bundled_table()).verdict == Verdict::Inconclusive);
  CHECK(residual_refute(47, 7, 22, BoundsTable{}).verdict == Verdict::Inconclusive);
}

TEST_CASE("every listed triple is refuted and replays") {
  for (const auto& t : kListed) {
    CAPTURE(t.n);
    CAPTURE(t.k);
    CAPTURE(t.d);
    const auto cert = residual_refute(t.n, t.k, t.d, bundled_table());
    REQUIRE(cert.verdict == Verdict::Nonexistent);
    REQUIRE(verify_certificate(cert, bundled_table()));
    REQUIRE(verify_certificate(certificate_from_json(certificate_to_json(cert)), bundled_table()));
  }
}

TEST_CASE("refutations are sound and never contradict a construction") {
  for (std::size_t k = 3; k <= 8; ++k) {
    for (std::size_t d = 2; d <= (std::size_t{1} << (k - 1)) + 8; d += 2) {
      for (std::size_t n = griesmer_sum(k, d); n <= griesmer_sum(k, d) + 6; ++n) {
        const auto cert = residual_refute(n, k, d, bundled_table());
        if (cert.verdict == Verdict::Nonexistent) REQUIRE(verify_certificate(cert, bundled_table()));
      }
    }
  }
  for (std::size_t k = 4; k <= 8; ++k) {
    for (std::size_t s = 1; s <= 2; ++s) {
      for (const auto& e : griesmer_catalog(k, s)) {
        CAPTURE(e.params.n);
        REQUIRE(residual_refute(e.params.n, e.params.k, e.params.d, bundled_table()).verdict != Verdict::Nonexistent);
      }
    }
  }
  for (const auto& kc : load_known_codes({kData / "paper_codes", kData / "codes"})) {
    const auto p = kc.code.params();
    CAPTURE(kc.origin);
    REQUIRE(residual_refute(p.n, p.k, p.d, bundled_table()).verdict != Verdict::Nonexistent);
  }
}

TEST_CASE("tampered and malformed certificates") {
  auto cert = residual_refute(47, 7, 22, bundled_table());
  auto tampered = cert;
  tampered.steps[1].bound = 12;
  CHECK_FALSE(verify_certificate(tampered, bundled_table()));
  auto wrong_output = cert;
  wrong_output.steps[0].output = ParamTriple{25, 6, 11};
  CHECK_FALSE(verify_certificate(wrong_output, bundled_table()));
  CHECK_FALSE(verify_certificate(cert, BoundsTable{}));
  auto empty = cert;
  empty.steps.clear();
  CHECK_THROWS_AS(verify_certificate(empty, bundled_table()), ValidationError);
  auto unknown = cert;
  unknown.steps[0].rule = "magic";
  CHECK_THROWS_AS(verify_certificate(unknown, bundled_table()), ValidationError);
  CHECK_THROWS_AS(certificate_from_json("{}"), ValidationError);
  CHECK_THROWS_AS(certificate_from_json("not json"), ValidationError);
}

TEST_CASE("certificate JSON round trip") {
  const auto cert = residual_refute(94, 7, 46, bundled_table());
  const auto json = certificate_to_json(cert);
  CHECK(certificate_to_json(certificate_from_json(json)) == json);
  const auto found = search(7, 3, 4);
  const auto json2 = certificate_to_json(found);
  const auto back = certificate_from_json(json2);
  CHECK(certificate_to_json(back) == json2);
  REQUIRE(back.witness.has_value());
  CHECK(*back.witness == *found.witness);
}

TEST_CASE("search examples") {
  const auto s = search(7, 3, 4);
  CHECK(s.verdict == Verdict::ExistsWitness);
  REQUIRE(s.witness.has_value());
  CHECK(s.witness->columns() == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(verify_certificate(s, BoundsTable{}));
  const auto none = search(5, 3, 2);
  CHECK(none.verdict == Verdict::Nonexistent);
  CHECK(verify_certificate(none, BoundsTable{}));
  const auto budget = search(13, 4, 6, 1, 2);
  CHECK(budget.verdict == Verdict::Nonexistent);
  SearchConfig cfg;
  cfg.n = 13;
  cfg.k = 4;
  cfg.target_d = 6;
  cfg.max_nodes = 1000;
  const auto cut = search_so_code(cfg);
  CHECK(cut.verdict == Verdict::Inconclusive);
  CHECK(cut.steps.back().nodes >= 1000);
}

TEST_CASE("search agrees with brute-force enumeration for k <= 3, n <= 9") {
  std::size_t compared = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = k; n <= 9; ++n) {
      const std::size_t best = brute_force_dso(n, k);
      for (std::size_t d = 2; d <= n; d += 2) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(d);
        const auto cert = search(n, k, d);
        REQUIRE(cert.verdict == (d <= best ? Verdict::ExistsWitness : Verdict::Nonexistent));
        if (cert.witness) {
          const LinearCode w(*cert.witness);
          REQUIRE(w.is_self_orthogonal());
          REQUIRE(w.min_distance() >= d);
          REQUIRE(w.length() == n);
        }
        ++compared;
      }
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("search results do not depend on threads or split depth") {
  for (const Triple t : {Triple{15, 4, 8}, Triple{12, 4, 6}, Triple{14, 4, 6}, Triple{9, 4, 4}}) {
    const auto ref = search(t.n, t.k, t.d, 1, 1);
    for (const unsigned threads : {1U, 2U, 4U}) {
      for (const std::size_t split : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
        const auto other = search(t.n, t.k, t.d, threads, split);
        REQUIRE(other.verdict == ref.verdict);
        REQUIRE(other.witness == ref.witness);
      }
    }
  }
}
