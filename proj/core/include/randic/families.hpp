#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "randic/graph.hpp"
#include "randic/radical.hpp"

namespace randic {

enum class FamilyName {
  Lambda1,
  Gamma1,
  Lambda2,
  Gamma2,
  Omega1,
  Omega2,
  Omega3,
  Omega4,
  Omega5,
  Omega6,
  Omega7,
  Omega8,
  Upsilon1,
  Upsilon2,
  Upsilon3,
  Upsilon4,
  Upsilon5,
  Upsilon6,
  Regular3,
};

std::string to_string(FamilyName name);
/// CLI spelling: lambda1, gamma1, lambda2, gamma2, omega1..omega8,
/// upsilon1..upsilon6, regular3. Throws std::invalid_argument.
FamilyName parse_family_name(std::string_view text);

/// Parameterized family. Upsilon families are defined by a degree profile;
/// all others by an edge-type signature.
struct FamilySpec {
  FamilyName name = FamilyName::Lambda1;
  int n = 0;
  int k = 0;
  std::optional<DegreeProfile> degree_profile;
  std::optional<EdgeTypeSignature> edge_signature;
  /// Closed form where one is known (every family except Upsilon).
  std::optional<RadicalValue> expected_value;
};

/// Builds and checks a spec. Omega and Upsilon families have a fixed k
/// (5 or 6); pass k = 0 or that value. Throws std::invalid_argument for an
/// infeasible (n, k).
FamilySpec make_family_spec(FamilyName name, int n, int k = 0);

/// Smallest n for which make_family_spec(name, n, k) succeeds.
int feasibility_bound(FamilyName name, int k = 0);

/// The m_{i,j} map with the n-dependent entries filled in. Throws
/// std::invalid_argument for Upsilon specs.
EdgeTypeSignature family_signature(const FamilySpec& spec);

bool is_member(const Graph& g, const FamilySpec& spec);

/// One deterministic representative.
Graph construct_member(const FamilySpec& spec);

/// All members up to isomorphism, via exhaustive enumeration.
std::vector<Graph> enumerate_members(const FamilySpec& spec, int workers = 1);

/// Connected 3-regular graph on `order` vertices from the built-in catalog
/// (K4, K3,3, cube, Petersen, Moebius-Kantor, otherwise a prism).
Graph cubic_graph(int order);

}  // namespace randic
