#include "randic/index.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace randic {

namespace {

// Degrees are below 64, so every product deg(u) deg(v) is below 4096.
constexpr int kTableSize = kMaxVertices * kMaxVertices;

const RadicalValue& cached_reciprocal_sqrt(int p) {
  static const auto table = [] {
    std::array<RadicalValue, kTableSize> t;
    for (int q = 1; q < kTableSize; ++q) t[q] = RadicalValue::reciprocal_sqrt(q);
    return t;
  }();
  return table[p];
}

}  // namespace

RadicalValue randic_exact(const Graph& g) {
  RadicalValue sum;
  for (const auto& [u, v] : g.edges()) sum += cached_reciprocal_sqrt(g.degree(u) * g.degree(v));
  return sum;
}

double randic_float(const Graph& g) {
  double sum = 0.0;
  for (const auto& [u, v] : g.edges()) {
    sum += 1.0 / std::sqrt(static_cast<double>(g.degree(u) * g.degree(v)));
  }
  return sum;
}

RadicalValue randic_of_signature(const EdgeTypeSignature& sig) {
  RadicalValue sum;
  for (const auto& [pair, count] : sig.counts) {
    if (pair.first <= 0) throw std::invalid_argument("signature contains degree 0");
    const auto p = static_cast<std::uint64_t>(pair.first) * static_cast<std::uint64_t>(pair.second);
    sum += RadicalValue::reciprocal_sqrt(p) * Rational(count);
  }
  return sum;
}

RadicalValue family_value(const FamilyValueId& id) {
  const int min_k = (id.name == ValueFamily::Lambda2 || id.name == ValueFamily::Gamma2) ? 4 : 3;
  if (id.k < min_k) throw std::invalid_argument("k below the family minimum");
  if (id.n < 1) throw std::invalid_argument("n must be positive");

  const RadicalValue half_n = RadicalValue::fraction(id.n, 2);
  const RadicalValue sqrt2 = RadicalValue::sqrt(2);
  const RadicalValue sqrt3 = RadicalValue::sqrt(3);
  const RadicalValue sqrt6 = RadicalValue::sqrt(6);

  switch (id.name) {
    case ValueFamily::Lambda1:
      return half_n - (RadicalValue(5) - Rational(2) * sqrt6) / Rational(6);
    case ValueFamily::Gamma1:
      return half_n - (RadicalValue(7) - (sqrt6 + Rational(3) * sqrt2)) / Rational(6);
    case ValueFamily::Lambda2:
      return half_n - (RadicalValue(5) - Rational(2) * sqrt6) / Rational(3);
    case ValueFamily::Gamma2:
      return half_n - (RadicalValue(6) - (Rational(2) * sqrt3 + sqrt6)) / Rational(3);
    case ValueFamily::Regular3:
      if (id.n != 2 * id.k - 2) throw std::invalid_argument("3-regular graphs need n = 2k - 2");
      return half_n;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace randic
