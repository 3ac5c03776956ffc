#pragma once

// Reference computations that share no code with the library beyond the
// Graph container.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "randic/graph.hpp"
#include "randic/radical.hpp"

namespace oracle {

/// Value of a radical sum evaluated in 256-bit MPFR arithmetic.
double mpfr_value(const randic::RadicalValue& v);

/// Sign of a radical sum from a 256-bit MPFR evaluation; 0 only for the
/// empty sum.
int mpfr_sign(const randic::RadicalValue& v);

/// Decimal rendering of a radical sum with `digits` places, rounding half
/// up on the magnitude, computed at 512 bits.
std::string mpfr_decimal(const randic::RadicalValue& v, int digits);

/// Randic index summed edge by edge in 256-bit MPFR arithmetic.
double mpfr_randic(const randic::Graph& g);

/// Adjacency bitstring minimized over all vertex permutations; only for
/// n <= 7.
std::uint64_t brute_canonical(const randic::Graph& g);

/// Isomorphism classes of labeled graphs with n vertices and m edges,
/// keyed by brute_canonical. n <= 6.
std::set<std::uint64_t> brute_force_classes(int n, int m, bool connected_only,
                                            std::optional<int> max_degree = std::nullopt);

/// Connectivity by depth-first search over the adjacency matrix.
bool dfs_connected(const randic::Graph& g);

/// Graph built from an edge list.
randic::Graph graph_of(int n, const std::vector<std::pair<int, int>>& edges);

randic::Graph cycle(int n);
randic::Graph path(int n);
randic::Graph complete(int n);
randic::Graph star(int leaves);
randic::Graph petersen();

}  // namespace oracle
