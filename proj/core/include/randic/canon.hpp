#pragma once

#include <vector>

#include "randic/graph.hpp"

namespace randic {

using Permutation = std::vector<int>;

/// Result of the individualization-refinement search.
///
/// `order[i]` is the vertex placed at canonical position i; relabeling each
/// vertex `order[i]` to `i` yields the canonical form. `generators` generate
/// the full automorphism group (each maps vertex v to generators[k][v]).
struct CanonicalLabeling {
  std::vector<int> order;
  std::vector<Permutation> generators;

  /// position[v] = canonical position of v (the inverse of `order`).
  std::vector<int> positions() const;
};

CanonicalLabeling canonical_labeling(const Graph& g);

/// Orbit representative (smallest vertex in the orbit) for every vertex.
std::vector<int> vertex_orbits(int n, const std::vector<Permutation>& generators);

/// Minimal union-find over small integer universes.
class DisjointSets {
 public:
  explicit DisjointSets(int size);
  int find(int x);
  void unite(int a, int b);

 private:
  std::vector<int> parent_;
};

}  // namespace randic
