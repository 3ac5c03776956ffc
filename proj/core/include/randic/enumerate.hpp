#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

struct EnumSpec {
  int n = 0;
  int m = 0;
  std::optional<int> max_degree;
  bool connected_only = true;
};

/// Throws std::invalid_argument unless 0 <= m <= n(n-1)/2, n <= 64 and, for
/// connected_only, m >= n - 1.
void validate(const EnumSpec& spec);

/// Desk-scale limits: n <= 12 with unrestricted degree, n <= 14 when
/// max_degree <= 4.
bool within_ceiling(const EnumSpec& spec);

using GraphSink = std::function<void(const Graph&)>;

/// Calls `sink` once per isomorphism class, always from the calling thread
/// and in the same order for every worker count.
///
/// Graphs are grown one edge at a time by canonical augmentation. A child
/// G + e is kept when e lies in the automorphism orbit of the child's
/// canonical last edge, and children are formed from one non-edge per
/// Aut(G) orbit. The last edge prefers non-bridges, so in connected mode the
/// search keeps forests below n - 1 edges and connected graphs from there on.
void enumerate(const EnumSpec& spec, const GraphSink& sink, int workers = 1);

std::vector<Graph> enumerate_all(const EnumSpec& spec, int workers = 1);

std::uint64_t count(const EnumSpec& spec, int workers = 1);

}  // namespace randic
