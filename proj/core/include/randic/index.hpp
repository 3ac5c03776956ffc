#pragma once

#include "randic/graph.hpp"
#include "randic/radical.hpp"

namespace randic {

/// Exact R(G) = sum over edges uv of 1 / sqrt(deg(u) deg(v)).
RadicalValue randic_exact(const Graph& g);

/// Double-precision R(G), for screening.
double randic_float(const Graph& g);

/// Sum over degree pairs of m_{i,j} / sqrt(i j).
RadicalValue randic_of_signature(const EdgeTypeSignature& sig);

enum class ValueFamily { Lambda1, Gamma1, Lambda2, Gamma2, Regular3 };

struct FamilyValueId {
  ValueFamily name = ValueFamily::Lambda1;
  int n = 0;
  int k = 0;
};

/// Closed-form value n/2 - c for the family. Throws std::invalid_argument
/// when k is below the family's minimum, or when REGULAR3 is asked for
/// n != 2k - 2.
RadicalValue family_value(const FamilyValueId& id);

}  // namespace randic
