#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "randic/radical.hpp"

using namespace randic;

namespace {

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RadicalValue term(std::uint32_t s, long num, long den) { return RadicalValue::sqrt(s) * q(num, den); }

}  // namespace

TEST_SUITE("radical") {

TEST_CASE("squarefree part") {
  std::uint64_t t = 0;
  CHECK(squarefree_part(12, &t) == 3);
  CHECK(t == 2);
  CHECK(squarefree_part(1, &t) == 1);
  CHECK(t == 1);
  CHECK(squarefree_part(49, &t) == 1);
  CHECK(t == 7);
  CHECK(squarefree_part(2 * 9 * 25 * 11) == 22);
}

TEST_CASE("reciprocal square roots") {
  CHECK(RadicalValue::reciprocal_sqrt(4) == RadicalValue::fraction(1, 2));
  CHECK(RadicalValue::reciprocal_sqrt(6).terms() == std::map<std::uint32_t, Rational>{{6, Rational(1, 6)}});
  CHECK(RadicalValue::reciprocal_sqrt(12).terms() == std::map<std::uint32_t, Rational>{{3, Rational(1, 6)}});
  for (std::uint64_t p = 1; p < 200; ++p) {
    const RadicalValue r = RadicalValue::reciprocal_sqrt(p);
    CHECK(r * r == RadicalValue::fraction(1, static_cast<long>(p)));
  }
  CHECK_THROWS_AS(RadicalValue::reciprocal_sqrt(0), std::invalid_argument);
}

TEST_CASE("addition and scaling") {
  const RadicalValue a = RadicalValue::reciprocal_sqrt(6);
  CHECK(add(a, -a).is_zero());
  CHECK(scale(RadicalValue::fraction(1, 2), 4) == RadicalValue(2));
  const RadicalValue c = add(RadicalValue::fraction(-5, 6), term(6, 1, 3));
  CHECK(c == -(RadicalValue(5) - 2 * RadicalValue::sqrt(6)) / 6);
  CHECK(c.to_string() == "-5/6 + 1/3*sqrt(6)");
  CHECK(RadicalValue().to_string() == "0");
  CHECK((RadicalValue(1) - RadicalValue::sqrt(2)).to_string() == "1 - sqrt(2)");
}

TEST_CASE("sign") {
  CHECK(sign(RadicalValue()) == 0);
  CHECK(sign(RadicalValue(1) - RadicalValue::sqrt(2)) == -1);
  CHECK(sign(add(RadicalValue::fraction(-5, 6), term(6, 1, 3))) == -1);
  CHECK(sign(RadicalValue::fraction(3, 7)) == 1);
}

TEST_CASE("sign of near-cancelling sums") {
  // 99/70 - sqrt(2) ~ 7.2e-5 and 577/408 - sqrt(2) ~ 2.1e-6.
  CHECK(sign(RadicalValue::sqrt(2) - RadicalValue::fraction(99, 70)) == -1);
  CHECK(sign(RadicalValue::fraction(577, 408) - RadicalValue::sqrt(2)) == 1);
  // A convergent of sqrt(2) that overshoots by about 1.7e-35.
  const Rational convergent(mpz_class("202605639573839043"), mpz_class("143263821649299118"));
  const RadicalValue tight = RadicalValue::sqrt(2) - RadicalValue(convergent);
  CHECK(sign(tight) == -1);
  CHECK(oracle::mpfr_sign(tight) == -1);
}

TEST_CASE("sign matches the MPFR oracle on random sums") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coeff(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<std::uint32_t> radicand(1, 60);
  for (int trial = 0; trial < 2000; ++trial) {
    RadicalValue v;
    for (int i = 0; i < 4; ++i) v += RadicalValue::sqrt(radicand(rng)) * q(coeff(rng), den(rng));
    CHECK(sign(v) == oracle::mpfr_sign(v));
  }
}

TEST_CASE("compare orders exactly") {
  const RadicalValue a = RadicalValue::sqrt(3) + RadicalValue::sqrt(7);
  const RadicalValue b = RadicalValue::sqrt(2) + RadicalValue::sqrt(10);
  CHECK(compare(a, b) == (oracle::mpfr_value(a) > oracle::mpfr_value(b) ? 1 : -1));
  CHECK(compare(a, a) == 0);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(RadicalValue(2), 3) == "2.000");
  const RadicalValue c1 = (RadicalValue(5) - 2 * RadicalValue::sqrt(6)) / 6;
  CHECK(to_decimal(c1, 6) == "0.016837");
  const RadicalValue c2 = (RadicalValue(6) - (2 * RadicalValue::sqrt(3) + RadicalValue::sqrt(6))) / 3;
  CHECK(to_decimal(c2, 6) == "0.028803");
  CHECK(to_decimal(RadicalValue::fraction(1, 8), 2) == "0.13");
  CHECK(to_decimal(RadicalValue::fraction(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(RadicalValue::fraction(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(RadicalValue(), 4) == "0.0000");
  CHECK(to_decimal(-RadicalValue::sqrt(2), 12) == "-1.414213562373");
  CHECK_THROWS_AS(to_decimal(RadicalValue(1), 0), std::invalid_argument);
}

TEST_CASE("decimal rendering matches the MPFR oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<std::uint32_t> radicand(2, 30);
  for (int trial = 0; trial < 500; ++trial) {
    RadicalValue v = RadicalValue::fraction(coeff(rng), den(rng));
    v += RadicalValue::sqrt(radicand(rng)) * q(coeff(rng), den(rng));
    for (int digits : {1, 6, 12, 30}) {
      if (v.is_rational()) continue;
      CHECK(to_decimal(v, digits) == oracle::mpfr_decimal(v, digits));
    }
  }
}

TEST_CASE("double conversion") {
  const RadicalValue v = RadicalValue::fraction(11, 3) + term(6, 1, 3);
  CHECK(v.to_double() == doctest::Approx(oracle::mpfr_value(v)).epsilon(1e-14));
}

}  // TEST_SUITE
