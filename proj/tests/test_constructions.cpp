#include <algorithm>
#include <bit>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "sogc/bounds.hpp"
#include "sogc/code_io.hpp"
#include "sogc/constructions.hpp"
#include "sogc/error.hpp"
#include "test_support.hpp"

using namespace sogc;

namespace {

const std::filesystem::path kData = SOGC_TEST_DATA_DIR;

// Every strictly decreasing sequence drawn from {k-1, ..., 1}.
std::vector<std::vector<std::size_t>> decreasing_sequences(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1U << (k - 1)); ++mask) {
    std::vector<std::size_t> u;
    for (std::size_t v = k - 1; v >= 1; --v) {
      if ((mask >> (v - 1)) & 1U) u.push_back(v);
    }
    out.push_back(u);
  }
  return out;
}

// Columns of s * S_k that the code does not use, i.e. the anticode.
std::vector<std::uint64_t> anticode_columns(const LinearCode& code, std::size_t s) {
  std::map<std::uint64_t, long> count;
  const std::uint64_t top = std::uint64_t{1} << code.dimension();
  for (std::uint64_t c = 1; c < top; ++c) count[c] = static_cast<long>(s);
  for (const auto c : code.generator().columns()) --count[c];
  std::vector<std::uint64_t> out;
  for (const auto& [c, left] : count) {
    REQUIRE(left >= 0);
    for (long i = 0; i < left; ++i) out.push_back(c);
  }
  return out;
}

// wt(xG) + wt(xA) = s 2^(k-1) for every nonzero message x.
void check_complement_identity(const LinearCode& code, std::size_t s) {
  const std::size_t k = code.dimension();
  const auto anti = anticode_columns(code, s);
  const std::size_t total = s << (k - 1);
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << k); ++x) {
    std::size_t wa = 0;
    for (const auto c : anti) wa += static_cast<std::size_t>(std::popcount(c & x) & 1);
    REQUIRE(code.encode(x).weight() + wa == total);
  }
}

// How often each nonzero vector is covered by the chosen subspaces.
std::map<std::uint64_t, std::size_t> cover_counts(const AnticodeAssignment& a) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& basis : a.subspace_bases) {
    for (const auto v : span_nonzero(basis)) ++out[v];
  }
  return out;
}

}  // namespace

TEST_CASE("simplex codes") {
  const auto s3 = simplex(3);
  CHECK(s3.params() == CodeParams{7, 3, 4});
  CHECK(s3.is_self_orthogonal());
  const auto s2 = simplex(2);
  CHECK(s2.params() == CodeParams{3, 2, 2});
  CHECK_FALSE(s2.is_self_orthogonal());
  CHECK(simplex(4).weight_distribution() == WeightDistribution{{0, 1}, {8, 15}});
  CHECK_THROWS_AS(simplex(1), ParameterError);
}

TEST_CASE("first-order Reed-Muller codes") {
  const auto r3 = reed_muller_1(3);
  CHECK(r3.params() == CodeParams{8, 4, 4});
  CHECK(r3.is_self_orthogonal());
  CHECK(reed_muller_1(5).params() == CodeParams{32, 6, 16});
  for (std::size_t k = 3; k <= 8; ++k) {
    const std::uint64_t mid = (std::uint64_t{1} << (k + 1)) - 2;
    const WeightDistribution expect = {{0, 1}, {std::size_t{1} << (k - 1), mid}, {std::size_t{1} << k, 1}};
    CHECK(reed_muller_1(k).weight_distribution() == expect);
    CHECK(reed_muller_1(k).is_self_orthogonal());
  }
  CHECK_THROWS_AS(reed_muller_1(2), ParameterError);
}

TEST_CASE("spec validation and feasibility") {
  CHECK_THROWS_AS(validate(SolomonStifflerSpec{3, 1, {}}), ParameterError);
  CHECK_THROWS_AS(validate(SolomonStifflerSpec{6, 0, {}}), ParameterError);
  CHECK_THROWS_AS(validate(SolomonStifflerSpec{6, 1, {6}}), ParameterError);
  CHECK_THROWS_AS(validate(SolomonStifflerSpec{6, 1, {3, 3}}), ParameterError);
  CHECK_THROWS_AS(validate(SolomonStifflerSpec{6, 1, {3, 4}}), ParameterError);
  CHECK_NOTHROW(validate(SolomonStifflerSpec{6, 1, {5, 1}}));
  CHECK_THROWS_AS(validate(BelovSpec{6, 1, {}, 2}), ParameterError);
  CHECK_THROWS_AS(validate(BelovSpec{6, 1, {4}, 4}), ParameterError);
  CHECK(is_feasible({6, 1, {3, 2}}));
  CHECK_FALSE(is_feasible({6, 1, {5, 4}}));
  CHECK(is_feasible({7, 2, {5, 4, 3}}));
  CHECK_FALSE(is_feasible({7, 2, {6, 5, 4}}));
}

TEST_CASE("anticode selection") {
  const auto one = choose_anticode({6, 1, {3}});
  REQUIRE(one.subspace_bases.size() == 1);
  CHECK(one.subspace_bases[0] == std::vector<std::uint64_t>{1, 2, 4});

  const auto three = choose_anticode({7, 2, {5, 4, 3}});
  REQUIRE(three.subspace_bases.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(test::naive_rank(GF2Matrix::from_columns(7, three.subspace_bases[i])) == std::vector<std::size_t>{5, 4, 3}[i]);
  }
  for (const auto& [v, count] : cover_counts(three)) CHECK(count <= 2);

  try {
    choose_anticode({6, 1, {5, 4}});
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    CHECK(e.reason() == InfeasibleError::Reason::ConditionViolated);
  }

  // Deterministic for a fixed spec.
  CHECK(choose_anticode({7, 2, {6, 5, 3}}).subspace_bases == choose_anticode({7, 2, {6, 5, 3}}).subspace_bases);
}

TEST_CASE("Solomon-Stiffler examples") {
  const auto a = solomon_stiffler({6, 1, {3}});
  CHECK(a.params() == CodeParams{56, 6, 28});
  CHECK(a.is_self_orthogonal());
  CHECK(is_griesmer(a));
  const auto b = solomon_stiffler({7, 2, {5, 4, 3}});
  CHECK(b.params() == CodeParams{201, 7, 100});
  CHECK(b.is_self_orthogonal());
  CHECK(is_griesmer(b));
  const auto c = solomon_stiffler({6, 1, {2}});
  CHECK(c.params() == CodeParams{60, 6, 30});
  CHECK(is_griesmer(c));
  CHECK_FALSE(c.is_self_orthogonal());
  // Columns come out in nondecreasing integer order.
  const auto cols = b.generator().columns();
  CHECK(std::is_sorted(cols.begin(), cols.end()));
}

TEST_CASE("SO exactly when the smallest subspace has dimension at least 3") {
  std::size_t checked = 0;
  for (std::size_t k = 4; k <= 7; ++k) {
    for (std::size_t s = 1; s <= 2; ++s) {
      for (const auto& u : decreasing_sequences(k)) {
        const SolomonStifflerSpec spec{k, s, u};
        if (!is_feasible(spec)) continue;
        const auto code = solomon_stiffler(spec);
        CAPTURE(k);
        CAPTURE(s);
        CAPTURE(u.size());
        const bool predicted = u.empty() || u.back() >= 3;
        REQUIRE(code.params() == solomon_stiffler_parameters(spec));
        REQUIRE(code.length() == griesmer_sum(k, code.min_distance()));
        REQUIRE(code.is_self_orthogonal() == predicted);
        REQUIRE(code.is_doubly_even() == code.is_self_orthogonal());
        check_complement_identity(code, s);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Belov codes") {
  const auto b = belov({6, 1, {}, 4});
  CHECK(b.params() == CodeParams{38, 6, 18});
  CHECK(b.params() == belov_parameters({6, 1, {}, 4}));
  CHECK(griesmer_sum(6, 18) == 38);
  CHECK(is_griesmer(b));
  CHECK_FALSE(b.is_self_orthogonal());
  CHECK(b.min_distance() % 4 == 2);
  check_complement_identity(b, 1);

  std::size_t built = 0;
  for (std::size_t k = 5; k <= 7; ++k) {
    for (std::size_t s = 1; s <= 2; ++s) {
      for (std::size_t u = 3; u < k; ++u) {
        for (const auto& seq : decreasing_sequences(k)) {
          if (!seq.empty() && seq.back() <= u) continue;
          const BelovSpec spec{k, s, seq, u};
          LinearCode code = simplex(3);
          try {
            code = belov(spec);
          } catch (const InfeasibleError&) {
            continue;
          }
          REQUIRE(code.params() == belov_parameters(spec));
          REQUIRE_FALSE(code.is_self_orthogonal());
          REQUIRE(code.min_distance() % 4 == 2);
          check_complement_identity(code, s);
          ++built;
        }
      }
    }
  }
  CHECK(built >= 10);
}

TEST_CASE("bundled exemplar matrices") {
  const auto c18 = paper_code("so_18_6_8");
  CHECK(c18.params() == CodeParams{18, 6, 8});
  CHECK(c18.is_self_orthogonal());
  const auto c95 = paper_code("so_95_7_46");
  CHECK(c95.params() == CodeParams{95, 7, 46});
  CHECK(c95.is_self_orthogonal());
  const auto c82 = paper_code("so_82_7_40");
  CHECK(c82.params() == CodeParams{82, 7, 40});
  CHECK(c82.is_self_orthogonal());
  CHECK(extend_rm(c18, 1).generator() == c82.generator());
  CHECK_THROWS_AS(paper_code("so_1_1_1"), LookupError);
  CHECK(paper_code_names() == std::vector<std::string>{"so_18_6_8", "so_82_7_40", "so_95_7_46"});
}

TEST_CASE("data files agree with the embedded matrices") {
  for (const auto& name : paper_code_names()) {
    CAPTURE(name);
    const auto file = read_code_file(kData / "paper_codes" / (name + ".code"));
    CHECK(file.generator == parse_code_text(paper_code_text(name)).generator);
    CHECK(file.generator == paper_code(name).generator());
    CHECK_FALSE(file.comments.empty());
  }
}

TEST_CASE("catalog sizes and properties") {
  const std::map<std::pair<std::size_t, std::size_t>, std::size_t> sizes = {
      {{6, 1}, 4}, {{6, 2}, 8}, {{7, 1}, 6}, {{7, 2}, 14}};
  for (const auto& [ks, count] : sizes) {
    const auto cat = griesmer_catalog(ks.first, ks.second);
    CHECK(cat.size() == count);
    for (const auto& e : cat) {
      const auto code = solomon_stiffler(e.spec);
      CHECK(code.params() == e.params);
      CHECK(code.is_self_orthogonal());
      CHECK(code.is_doubly_even());
      CHECK(is_griesmer(code));
    }
  }
  // Grouped by p, and by d descending inside a group.
  const auto cat = griesmer_catalog(7, 2);
  for (std::size_t i = 1; i < cat.size(); ++i) {
    const auto& a = cat[i - 1];
    const auto& b = cat[i];
    CHECK((a.spec.u.size() < b.spec.u.size() || (a.spec.u.size() == b.spec.u.size() && a.params.d > b.params.d)));
  }
}
