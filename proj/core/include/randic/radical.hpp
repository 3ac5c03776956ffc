#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace randic {

using Rational = mpq_class;

/// Exact number of the form sum_s q_s * sqrt(s), with s squarefree and every
/// stored q_s nonzero. Square roots of distinct squarefree integers are
/// linearly independent over Q, so the value is zero iff no term is stored.
class RadicalValue {
 public:
  RadicalValue() = default;
  RadicalValue(long integer);  // NOLINT(google-explicit-constructor)
  explicit RadicalValue(const Rational& q);

  /// sqrt(p) for p >= 0, reduced to t * sqrt(s).
  static RadicalValue sqrt(std::uint64_t p);
  /// 1 / sqrt(p) for p >= 1, reduced to (1 / (s t)) * sqrt(s).
  static RadicalValue reciprocal_sqrt(std::uint64_t p);
  static RadicalValue fraction(long num, long den);

  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  RadicalValue& operator+=(const RadicalValue& other);
  RadicalValue& operator-=(const RadicalValue& other);
  RadicalValue& operator*=(const Rational& q);
  RadicalValue& operator/=(const Rational& q);
  RadicalValue operator-() const;

  friend RadicalValue operator+(RadicalValue a, const RadicalValue& b) { return a += b; }
  friend RadicalValue operator-(RadicalValue a, const RadicalValue& b) { return a -= b; }
  friend RadicalValue operator*(RadicalValue a, const Rational& q) { return a *= q; }
  friend RadicalValue operator*(const Rational& q, RadicalValue a) { return a *= q; }
  friend RadicalValue operator/(RadicalValue a, const Rational& q) { return a /= q; }

  bool operator==(const RadicalValue& other) const { return terms_ == other.terms_; }

  /// Exact product; used to check identities such as (1/sqrt p)^2 = 1/p.
  RadicalValue operator*(const RadicalValue& other) const;

  /// "q1*sqrt(s1) + q2*sqrt(s2) - ...", rationals as a/b, sqrt(1) elided.
  std::string to_string() const;
  double to_double() const;

 private:
  void add_term(std::uint32_t s, const Rational& q);

  std::map<std::uint32_t, Rational> terms_;
};

RadicalValue add(const RadicalValue& a, const RadicalValue& b);
RadicalValue scale(const RadicalValue& a, const Rational& q);

/// Certified sign in {-1, 0, +1}. Zero is decided symbolically; otherwise
/// each sqrt(s) is enclosed by integer square roots at 64, 128, ..., 1024
/// bits until the enclosure of the sum excludes zero.
int sign(const RadicalValue& a);

/// Three-way exact comparison: sign(a - b).
int compare(const RadicalValue& a, const RadicalValue& b);

/// Fixed-point decimal with `digits` digits after the point, correctly
/// rounded (ties, which only rational values can produce, round away from
/// zero).
std::string to_decimal(const RadicalValue& a, int digits);

/// The squarefree s with p = s * t^2; `t` receives the cofactor.
std::uint64_t squarefree_part(std::uint64_t p, std::uint64_t* t = nullptr);

}  // namespace randic
