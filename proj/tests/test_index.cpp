#include "doctest.h"
#include "oracles.hpp"
#include "randic/enumerate.hpp"
#include "randic/families.hpp"
#include "randic/index.hpp"

using namespace randic;

namespace {

RadicalValue half_n_minus(int n, const RadicalValue& c) { return RadicalValue::fraction(n, 2) - c; }

const RadicalValue kC1 = (RadicalValue(5) - 2 * RadicalValue::sqrt(6)) / 6;
const RadicalValue kC2 = (RadicalValue(6) - (2 * RadicalValue::sqrt(3) + RadicalValue::sqrt(6))) / 3;

}  // namespace

TEST_SUITE("index") {

TEST_CASE("exact index of small graphs") {
  CHECK(randic_exact(oracle::complete(4)) == RadicalValue(2));
  CHECK(randic_exact(oracle::cycle(8)) == RadicalValue(4));
  CHECK(randic_exact(oracle::petersen()) == RadicalValue(5));
  CHECK(randic_exact(oracle::path(4)) == RadicalValue::sqrt(2) + RadicalValue::fraction(1, 2));
  CHECK(randic_exact(oracle::star(4)) == RadicalValue(2));
  CHECK(randic_exact(Graph(1)).is_zero());
}

TEST_CASE("float index") {
  CHECK(randic_float(oracle::complete(4)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(randic_float(oracle::path(4)) == doctest::Approx(1.914214).epsilon(1e-6));
  const Graph lambda = construct_member(make_family_spec(FamilyName::Lambda1, 9, 5));
  CHECK(randic_float(lambda) == doctest::Approx(4.483163).epsilon(1e-6));
}

TEST_CASE("exact and float index agree with the MPFR sum on every 7-vertex graph") {
  for (int m = 6; m <= 21; ++m) {
    enumerate({7, m, std::nullopt, true}, [](const Graph& g) {
      const double reference = oracle::mpfr_randic(g);
      CHECK(oracle::mpfr_value(randic_exact(g)) == doctest::Approx(reference).epsilon(1e-15));
      CHECK(randic_float(g) == doctest::Approx(reference).epsilon(1e-13));
    });
  }
}

TEST_CASE("index from signature") {
  EdgeTypeSignature omega1;
  omega1.add(3, 3, 11);
  omega1.add(2, 3, 2);
  CHECK(randic_of_signature(omega1) == half_n_minus(9, kC1));

  EdgeTypeSignature c5;
  c5.add(2, 2, 5);
  CHECK(randic_of_signature(c5) == RadicalValue::fraction(5, 2));

  EdgeTypeSignature gamma;
  gamma.add(4, 3, 4);
  gamma.add(3, 3, 6);
  gamma.add(2, 3, 2);
  gamma.add(2, 2, 1);
  CHECK(randic_of_signature(gamma) == half_n_minus(9, kC2));

  const Graph g = parse_graph6("JbGGGlA_LO?");
  CHECK(randic_of_signature(edge_type_signature(g)) == randic_exact(g));
}

TEST_CASE("closed-form family values") {
  CHECK(family_value({ValueFamily::Lambda1, 9, 5}) == half_n_minus(9, kC1));
  CHECK(family_value({ValueFamily::Regular3, 8, 5}) == RadicalValue(4));
  const RadicalValue g2 = family_value({ValueFamily::Gamma2, 9, 5});
  CHECK(g2 == half_n_minus(9, kC2));
  CHECK(to_decimal(g2, 6) == "4.471197");
  CHECK(family_value({ValueFamily::Lambda2, 12, 6}) == half_n_minus(12, 2 * kC1));
  CHECK_THROWS_AS(family_value({ValueFamily::Regular3, 9, 5}), std::invalid_argument);
  CHECK_THROWS_AS(family_value({ValueFamily::Lambda1, 9, 2}), std::invalid_argument);
  CHECK_THROWS_AS(family_value({ValueFamily::Gamma2, 9, 3}), std::invalid_argument);
}

}  // TEST_SUITE
