#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "randic/enumerate.hpp"
#include "randic/families.hpp"
#include "randic/index.hpp"
#include "randic/verifier.hpp"

using namespace randic;

namespace {

ExtremalOptions opts(int top, bool prescreen = true, int workers = 1) {
  ExtremalOptions o;
  o.top = top;
  o.prescreen = prescreen;
  o.workers = workers;
  return o;
}

void check_report_invariants(const ExtremalReport& r) {
  for (std::size_t i = 1; i < r.ranked_values.size(); ++i) {
    CHECK(compare(r.ranked_values[i].value, r.ranked_values[i - 1].value) == -1);
  }
  for (const auto& ranked : r.ranked_values) {
    for (const auto& group : ranked.groups) {
      for (const auto& g : group.graphs) {
        CHECK(randic_exact(g) == ranked.value);
        CHECK(edge_type_signature(g) == group.signature);
      }
    }
  }
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("degree identity examples") {
  CHECK(check_degree_identities(oracle::star(4)));
  CHECK(check_degree_identities(oracle::petersen()));
  CHECK(check_degree_identities(oracle::complete(5)));
  CHECK_THROWS(check_degree_identities(Graph(1)));
  CHECK_THROWS(check_degree_identities(Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("m_ii bound examples") {
  CHECK(check_mii_bound(oracle::complete(4)));
  CHECK(check_mii_bound(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})));
  CHECK_THROWS(check_mii_bound(Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("extremal search at n = 8, k = 5") {
  const ExtremalReport r = extremal_search(8, 5);
  REQUIRE(r.ranked_values.size() == 1);
  CHECK(r.ranked_values.front().value == RadicalValue(4));
  CHECK(r.ranked_values.front().multiplicity() == 5);
  CHECK(r.class_size == 1169);
  check_report_invariants(r);
}

TEST_CASE("full ranking accounts for every class") {
  const ExtremalReport r = extremal_search(7, 3, opts(1000));
  std::size_t total = 0;
  for (const auto& ranked : r.ranked_values) total += ranked.multiplicity();
  CHECK(total == r.class_size);
  CHECK(r.class_size == 107);
  check_report_invariants(r);
}

TEST_CASE("prescreening never changes the top values") {
  for (int n = 5; n <= 8; ++n) {
    for (int k = 1; k <= 6; ++k) {
      if (n + k - 1 > n * (n - 1) / 2) continue;
      for (int top : {1, 3}) {
        const ExtremalReport screened = extremal_search(n, k, opts(top, true));
        const ExtremalReport full = extremal_search(n, k, opts(top, false));
        CHECK(to_text(screened) == to_text(full));
      }
    }
  }
}

TEST_CASE("extremal search refuses specs beyond the ceiling") {
  CHECK_THROWS_AS(extremal_search(13, 5), std::invalid_argument);
  ExtremalOptions capped;
  capped.max_degree = 4;
  CHECK_NOTHROW(extremal_search(7, 5, capped));
}

TEST_CASE("reports are identical for every worker count") {
  CHECK(to_text(extremal_search(9, 5, opts(2, true, 1))) == to_text(extremal_search(9, 5, opts(2, true, 3))));
  ClaimParams one;
  ClaimParams three;
  three.workers = 3;
  CHECK(to_json(verify_claim("lemma1_5", one)) == to_json(verify_claim("lemma1_5", three)));
}

TEST_CASE("claim table") {
  const auto& ids = claim_ids();
  CHECK(ids.size() == 25);
  CHECK(ids.front() == "lemma1_1");
  CHECK_THROWS_AS(verify_claim("lemma9"), std::invalid_argument);
  ClaimParams bad;
  bad.n = 30;
  CHECK_THROWS_AS(verify_claim("lemma2", bad), std::invalid_argument);
  ClaimParams small;
  small.n = 7;
  CHECK_THROWS_AS(verify_claim("thm_tth1_1", small), std::invalid_argument);
}

TEST_CASE("degree identities and the m_ii bound hold up to 7 vertices") {
  ClaimParams p;
  p.n = 7;
  CHECK(verify_claim("lemma2", p).status == Status::Pass);
  CHECK(verify_claim("lemma5", p).status == Status::Pass);
}

TEST_CASE("JSON report shape") {
  ClaimParams p;
  p.n = 9;
  const auto doc = nlohmann::json::parse(to_json(verify_claim("thm_tth1_1", p)));
  CHECK(doc["claim_id"] == "thm_tth1_1");
  CHECK(doc["status"] == "PASS");
  CHECK(doc["notes"].is_array());
  const auto ext = nlohmann::json::parse(to_json(extremal_search(9, 5, opts(2))));
  CHECK(ext["class_size"] == 8404);
  REQUIRE(ext["ranked_values"].size() == 2);
  CHECK(ext["ranked_values"][0]["exact"] == "11/3 + 1/3*sqrt(6)");
  CHECK(ext["ranked_values"][0]["decimal"] == "4.483163247594");
}

TEST_CASE("second maximum at n = 9, k = 5") {
  const ExtremalReport r = extremal_search(9, 5, opts(2));
  REQUIRE(r.ranked_values.size() == 2);
  const auto& second = r.ranked_values[1];
  CHECK(second.value == family_value({ValueFamily::Gamma2, 9, 5}));
  REQUIRE(second.groups.size() == 1);
  EdgeTypeSignature gamma;
  gamma.add(4, 3, 4);
  gamma.add(3, 3, 6);
  gamma.add(2, 3, 2);
  gamma.add(2, 2, 1);
  CHECK(second.groups.front().signature == gamma);
}

TEST_CASE("finding: the T2 probe reports a counterexample at n = 10, k = 4") {
  const VerificationResult r = probe_transform_monotonicity(TransformKind::T2, {10, 10}, {4, 4});
  CHECK(r.status == Status::Counterexample);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(sign(r.witnesses.front().value) != 0);
}

TEST_CASE("finding: equality in the second bound at n = 2k - 2 is not exclusive to gamma2") {
  ClaimParams p;
  p.n = 10;
  p.k = 6;
  const VerificationResult r = verify_claim("thm_basth2_2", p);
  CHECK(r.status == Status::Counterexample);
  REQUIRE_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) {
    const Graph g = parse_graph6(w.graph6);
    CHECK(randic_exact(g) == family_value({ValueFamily::Gamma2, 10, 6}));
    CHECK_FALSE(is_member(g, make_family_spec(FamilyName::Gamma2, 10, 6)));
  }
}

TEST_CASE("counterexamples always carry witnesses") {
  ClaimParams p;
  p.n = 10;
  p.k = 6;
  for (const char* id : {"thm_basth2_2", "theorem_final_2"}) {
    const VerificationResult r = verify_claim(id, p);
    if (r.status == Status::Counterexample) CHECK_FALSE(r.witnesses.empty());
  }
}

}  // TEST_SUITE
