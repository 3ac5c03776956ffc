#include "doctest.h"
#include "oracles.hpp"
#include "randic/families.hpp"
#include "randic/index.hpp"

using namespace randic;

namespace {

constexpr FamilyName kSignatureFamilies[] = {
    FamilyName::Lambda1, FamilyName::Gamma1, FamilyName::Lambda2, FamilyName::Gamma2, FamilyName::Regular3,
    FamilyName::Omega1,  FamilyName::Omega2, FamilyName::Omega3,  FamilyName::Omega4, FamilyName::Omega5,
    FamilyName::Omega6,  FamilyName::Omega7, FamilyName::Omega8};

constexpr FamilyName kUpsilon[] = {FamilyName::Upsilon1, FamilyName::Upsilon2, FamilyName::Upsilon3,
                                   FamilyName::Upsilon4, FamilyName::Upsilon5, FamilyName::Upsilon6};

EdgeTypeSignature sig(std::initializer_list<std::pair<DegreePair, long>> entries) {
  EdgeTypeSignature s;
  for (const auto& [p, c] : entries) s.add(p.first, p.second, c);
  return s;
}

bool fixed_k(FamilyName name) {
  return name != FamilyName::Lambda1 && name != FamilyName::Gamma1 && name != FamilyName::Lambda2 &&
         name != FamilyName::Gamma2 && name != FamilyName::Regular3;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("names round trip") {
  for (FamilyName name : kSignatureFamilies) CHECK(parse_family_name(to_string(name)) == name);
  for (FamilyName name : kUpsilon) CHECK(parse_family_name(to_string(name)) == name);
  CHECK(to_string(FamilyName::Omega7) == "omega7");
  CHECK_THROWS_AS(parse_family_name("omega9"), std::invalid_argument);
}

TEST_CASE("signature examples") {
  CHECK(family_signature(make_family_spec(FamilyName::Lambda1, 9, 5)) == sig({{{3, 3}, 11}, {{2, 3}, 2}}));
  CHECK(family_signature(make_family_spec(FamilyName::Gamma2, 10, 5)) ==
        sig({{{3, 4}, 4}, {{3, 3}, 6}, {{2, 3}, 2}, {{2, 2}, 2}}));
  CHECK(family_signature(make_family_spec(FamilyName::Gamma1, 13, 6)) ==
        sig({{{3, 3}, 16}, {{2, 3}, 1}, {{1, 2}, 1}}));
  CHECK(family_signature(make_family_spec(FamilyName::Omega4, 13)) ==
        family_signature(make_family_spec(FamilyName::Gamma1, 13, 6)));
  CHECK(family_signature(make_family_spec(FamilyName::Omega8, 14)) == sig({{{3, 3}, 13}, {{2, 3}, 4}, {{2, 2}, 2}}));
  CHECK_THROWS_AS(family_signature(make_family_spec(FamilyName::Upsilon1, 9)), std::invalid_argument);
}

TEST_CASE("infeasible parameters") {
  CHECK_THROWS_AS(make_family_spec(FamilyName::Lambda1, 8, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_family_spec(FamilyName::Regular3, 9, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_family_spec(FamilyName::Omega1, 10, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_family_spec(FamilyName::Omega8, 11), std::invalid_argument);
  CHECK_THROWS_AS(make_family_spec(FamilyName::Gamma2, 9, 3), std::invalid_argument);
  CHECK(feasibility_bound(FamilyName::Lambda1, 5) == 9);
  CHECK(feasibility_bound(FamilyName::Gamma1, 6) == 13);
  CHECK(feasibility_bound(FamilyName::Gamma2, 5) == 8);
  CHECK(feasibility_bound(FamilyName::Omega8) == 12);
}

TEST_CASE("membership examples") {
  const FamilySpec lambda = make_family_spec(FamilyName::Lambda1, 9, 5);
  const Graph built = construct_member(lambda);
  CHECK(is_member(built, lambda));
  CHECK(edge_type_signature(built) == sig({{{3, 3}, 11}, {{2, 3}, 2}}));
  CHECK_FALSE(is_member(oracle::cycle(9), lambda));
  CHECK(is_member(oracle::petersen(), make_family_spec(FamilyName::Upsilon3, 10)));
  CHECK(is_member(oracle::petersen(), make_family_spec(FamilyName::Regular3, 10, 6)));
  CHECK_FALSE(is_member(oracle::petersen(), make_family_spec(FamilyName::Upsilon1, 10)));
}

TEST_CASE("catalog of cubic graphs") {
  for (int order = 4; order <= 20; order += 2) {
    const Graph g = cubic_graph(order);
    CHECK(g.order() == order);
    CHECK(oracle::dfs_connected(g));
    CHECK(degree_profile(g).counts == std::map<int, int>{{3, order}});
  }
  CHECK(canonical_code(cubic_graph(10)) == canonical_code(oracle::petersen()));
}

TEST_CASE("constructed members, signature values and closed forms agree") {
  for (FamilyName name : kSignatureFamilies) {
    for (int k = 3; k <= 6; ++k) {
      int bound = 0;
      try {
        bound = feasibility_bound(name, k);
        make_family_spec(name, bound, k);
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (int n = bound; n <= bound + 4; ++n) {
        if (name == FamilyName::Regular3 && n != bound) continue;
        CAPTURE(to_string(name));
        CAPTURE(n);
        CAPTURE(k);
        const FamilySpec spec = make_family_spec(name, n, k);
        REQUIRE(spec.expected_value);
        CHECK(randic_of_signature(family_signature(spec)) == *spec.expected_value);
        const Graph g = construct_member(spec);
        CHECK(is_member(g, spec));
        CHECK(g.order() == n);
        CHECK(oracle::dfs_connected(g));
        CHECK(cyclomatic_number(g) == spec.k);
        CHECK(randic_exact(g) == *spec.expected_value);
      }
      if (fixed_k(name)) break;
    }
  }
}

TEST_CASE("Upsilon members match their degree profiles") {
  for (FamilyName name : kUpsilon) {
    const int bound = feasibility_bound(name);
    for (int n = bound; n <= bound + 4; ++n) {
      CAPTURE(to_string(name));
      CAPTURE(n);
      const FamilySpec spec = make_family_spec(name, n);
      REQUIRE(spec.degree_profile);
      const Graph g = construct_member(spec);
      CHECK(is_member(g, spec));
      CHECK(degree_profile(g) == *spec.degree_profile);
      CHECK(cyclomatic_number(g) == spec.k);
    }
  }
}

TEST_CASE("signatures satisfy the degree identities") {
  // Each family signature implies a degree profile through
  // n_i = (2 m_{i,i} + sum_{j != i} m_{i,j}) / i; check it is integral and
  // counts n vertices.
  for (FamilyName name : kSignatureFamilies) {
    for (int k = 3; k <= 6; ++k) {
      int bound = 0;
      try {
        bound = feasibility_bound(name, k);
        make_family_spec(name, bound, k);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const FamilySpec spec = make_family_spec(name, bound + 1 - (name == FamilyName::Regular3), k);
      std::map<int, long> ends;
      for (const auto& [pair, count] : family_signature(spec).counts) {
        ends[pair.first] += count;
        ends[pair.second] += count;
      }
      long vertices = 0;
      for (const auto& [degree, total] : ends) {
        CHECK(total % degree == 0);
        vertices += total / degree;
      }
      CHECK(vertices == spec.n);
      if (fixed_k(name)) break;
    }
  }
}

TEST_CASE("enumerated members of small families") {
  const auto members = enumerate_members(make_family_spec(FamilyName::Regular3, 8, 5));
  CHECK(members.size() == 5);
  for (const auto& g : members) CHECK(is_member(g, make_family_spec(FamilyName::Regular3, 8, 5)));
  const auto omega1 = enumerate_members(make_family_spec(FamilyName::Omega1, 9));
  CHECK(omega1.size() == 19);
}

}  // TEST_SUITE
