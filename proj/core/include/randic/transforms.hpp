#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "randic/graph.hpp"
#include "randic/radical.hpp"

namespace randic {

enum class TransformKind { T1, T2, T3, T4, T5 };

std::string to_string(TransformKind kind);
/// Accepts "t1".."t5" (case-insensitive); throws std::invalid_argument.
TransformKind parse_transform_kind(std::string_view text);

/// Anchor vertices of a transformation site:
///   T1: [w, p1, q1]  hub w, first vertices of the moved path P and of Q
///   T2: [x, u1, y, v1]  Q = u1.. hangs at x, P = v1.. hangs at y
///   T3: [x, y]  the edge to subdivide
///   T4: [v1, v2, v3, v4, u1]
///   T5: [x1, x2, x3, x4, x5, x6, w]
struct TransformSite {
  TransformKind kind = TransformKind::T3;
  std::vector<int> vertices;

  bool operator==(const TransformSite&) const = default;
  std::string to_string() const;
};

/// A pendant path hanging at a vertex: a maximal run of degree-2 vertices
/// starting at `first` (adjacent to the hub) and ending at the degree-1
/// vertex `last`. `length` counts vertices.
struct PendantPath {
  int first = -1;
  int last = -1;
  int length = 0;
};

/// Pendant paths at `hub`, ordered by their first vertex.
std::vector<PendantPath> pendant_paths(const Graph& g, int hub);

/// Every site of the given kind, in deterministic label order.
///
/// T1: hub w with deg >= 3 and two pendant paths; P is the path with the
///     smaller first vertex (the result does not depend on which is moved).
/// T2: ordered x != y carrying pendant paths Q and P, both with degree >= 2
///     once their path is removed, and every other neighbour of x of degree
///     >= 2 in the graph without P and Q.
/// T3: every edge.
/// T4: v2 of degree 2 with neighbours v1 (deg >= 2) and v3 (deg >= 3), v4 a
///     vertex of maximum degree >= 4, u1 a neighbour of v4; all distinct.
/// T5: x2 of degree 3 with neighbours x1 < x3 (degree 3) and w, x5 of degree
///     2 with neighbours x4 (degree 4) and x6 (degree 1 or 2), x5 not
///     adjacent to w; all distinct.
std::vector<TransformSite> find_sites(const Graph& g, TransformKind kind);

bool is_valid_site(const Graph& g, const TransformSite& site);

/// Throws std::invalid_argument when the site does not validate against g.
Graph apply_transform(const Graph& g, const TransformSite& site);

/// Rewrites without validation; the site must come from find_sites(g, ...).
Graph apply_site_unchecked(const Graph& g, const TransformSite& site);

/// randic_exact(apply_transform(g, site)) - randic_exact(g), computed from
/// the change in edge-type signature.
RadicalValue delta_randic(const Graph& g, const TransformSite& site);

/// Same as delta_randic without validation.
RadicalValue delta_randic_unchecked(const Graph& g, const TransformSite& site);

}  // namespace randic
