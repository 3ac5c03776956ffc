#include "randic/radical.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace randic {

namespace {

constexpr int kInitialBits = 64;
constexpr int kMaxSignBits = 1024;
constexpr std::uint64_t kMaxRadicand = std::uint64_t{1} << 16;

// Enclosure of value * 2^bits by rationals [lo, hi].
void enclose(const RadicalValue& a, int bits, Rational& lo, Rational& hi) {
  lo = 0;
  hi = 0;
  mpz_class root;
  for (const auto& [s, q] : a.terms()) {
    if (s == 1) {
      Rational exact = q;
      mpq_mul_2exp(exact.get_mpq_t(), exact.get_mpq_t(), bits);
      lo += exact;
      hi += exact;
      continue;
    }
    mpz_class scaled = s;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    // s is squarefree and > 1, so sqrt(s) * 2^bits is irrational and lies
    // strictly between root and root + 1.
    Rational below = q * Rational(root);
    Rational above = q * Rational(root + 1);
    if (q > 0) {
      lo += below;
      hi += above;
    } else {
      lo += above;
      hi += below;
    }
  }
}

mpz_class round_half_up(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

}  // namespace

std::uint64_t squarefree_part(std::uint64_t p, std::uint64_t* t) {
  if (p == 0) throw std::invalid_argument("squarefree_part of 0");
  std::uint64_t s = 1;
  std::uint64_t cofactor = 1;
  for (std::uint64_t f = 2; f * f <= p; ++f) {
    int e = 0;
    while (p % f == 0) {
      p /= f;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) cofactor *= f;
    if (e % 2 == 1) s *= f;
  }
  s *= p;
  if (t) *t = cofactor;
  return s;
}

RadicalValue::RadicalValue(long integer) {
  if (integer != 0) terms_.emplace(1, Rational(integer));
}

RadicalValue::RadicalValue(const Rational& q) {
  if (q != 0) terms_.emplace(1, q);
}

RadicalValue RadicalValue::fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return RadicalValue(q);
}

RadicalValue RadicalValue::sqrt(std::uint64_t p) {
  if (p > kMaxRadicand * kMaxRadicand) throw std::invalid_argument("radicand too large");
  RadicalValue out;
  if (p == 0) return out;
  std::uint64_t t = 1;
  std::uint64_t s = squarefree_part(p, &t);
  out.terms_.emplace(static_cast<std::uint32_t>(s), Rational(static_cast<unsigned long>(t)));
  return out;
}

RadicalValue RadicalValue::reciprocal_sqrt(std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("reciprocal_sqrt of 0");
  if (p > kMaxRadicand * kMaxRadicand) throw std::invalid_argument("radicand too large");
  std::uint64_t t = 1;
  std::uint64_t s = squarefree_part(p, &t);
  RadicalValue out;
  Rational coeff(1UL, static_cast<unsigned long>(s * t));
  coeff.canonicalize();
  out.terms_.emplace(static_cast<std::uint32_t>(s), coeff);
  return out;
}

bool RadicalValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

void RadicalValue::add_term(std::uint32_t s, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalValue& RadicalValue::operator+=(const RadicalValue& other) {
  for (const auto& [s, q] : other.terms_) add_term(s, q);
  return *this;
}

RadicalValue& RadicalValue::operator-=(const RadicalValue& other) {
  for (const auto& [s, q] : other.terms_) add_term(s, -q);
  return *this;
}

RadicalValue& RadicalValue::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= q;
  return *this;
}

RadicalValue& RadicalValue::operator/=(const Rational& q) {
  if (q == 0) throw std::invalid_argument("division by zero");
  for (auto& [s, c] : terms_) c /= q;
  return *this;
}

RadicalValue RadicalValue::operator-() const {
  RadicalValue out = *this;
  for (auto& [s, c] : out.terms_) c = -c;
  return out;
}

RadicalValue RadicalValue::operator*(const RadicalValue& other) const {
  RadicalValue out;
  for (const auto& [s1, q1] : terms_) {
    for (const auto& [s2, q2] : other.terms_) {
      // sqrt(s1) sqrt(s2) = g sqrt(s1 s2 / g^2) with g = gcd(s1, s2).
      std::uint64_t t = 1;
      std::uint64_t s = squarefree_part(std::uint64_t{s1} * s2, &t);
      if (s > kMaxRadicand) throw std::invalid_argument("radicand too large");
      Rational q = q1 * q2 * Rational(static_cast<unsigned long>(t));
      out.add_term(static_cast<std::uint32_t>(s), q);
    }
  }
  return out;
}

std::string RadicalValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, q] : terms_) {
    Rational magnitude = abs(q);
    if (first) {
      if (q < 0) os << '-';
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (s == 1) {
      os << magnitude.get_str();
    } else if (magnitude == 1) {
      os << "sqrt(" << s << ')';
    } else {
      os << magnitude.get_str() << "*sqrt(" << s << ')';
    }
  }
  return os.str();
}

double RadicalValue::to_double() const {
  double sum = 0.0;
  for (const auto& [s, q] : terms_) sum += q.get_d() * std::sqrt(static_cast<double>(s));
  return sum;
}

RadicalValue add(const RadicalValue& a, const RadicalValue& b) { return a + b; }

RadicalValue scale(const RadicalValue& a, const Rational& q) { return a * q; }

int sign(const RadicalValue& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.terms().begin()->second);
  Rational lo;
  Rational hi;
  for (int bits = kInitialBits; bits <= kMaxSignBits; bits *= 2) {
    enclose(a, bits, lo, hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw std::logic_error("sign undecided at 1024 bits: " + a.to_string());
}

int compare(const RadicalValue& a, const RadicalValue& b) { return sign(a - b); }

std::string to_decimal(const RadicalValue& a, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  const int s = sign(a);
  const RadicalValue magnitude = s < 0 ? -a : a;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational factor(ten_pow);

  mpz_class rounded;
  if (magnitude.is_rational()) {
    Rational exact = magnitude.is_zero() ? Rational(0) : magnitude.terms().begin()->second;
    rounded = round_half_up(exact * factor);
  } else {
    // Irrational values are never exactly halfway, so this terminates.
    const RadicalValue scaled = magnitude * factor;
    Rational lo;
    Rational hi;
    for (int bits = kInitialBits;; bits *= 2) {
      enclose(scaled, bits, lo, hi);
      Rational unit;
      mpq_set_ui(unit.get_mpq_t(), 1, 1);
      mpq_div_2exp(unit.get_mpq_t(), unit.get_mpq_t(), bits);
      mpz_class r_lo = round_half_up(lo * unit);
      mpz_class r_hi = round_half_up(hi * unit);
      if (r_lo == r_hi) {
        rounded = r_lo;
        break;
      }
    }
  }

  std::string body = rounded.get_str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, 1, '.');
  if (s < 0 && rounded != 0) body.insert(0, 1, '-');
  return body;
}

}  // namespace randic
