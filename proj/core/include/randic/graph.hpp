#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace randic {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency
/// bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int max_degree() const;

  /// Rejects loops, duplicates and out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Appends an isolated vertex and returns its label.
  int add_vertex();

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// perm[v] is the new label of v.
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

struct DegreeProfile {
  int n = 0;
  int max_degree = 0;
  /// degree -> number of vertices with that degree; only nonzero entries.
  std::map<int, int> counts;

  int count(int degree) const;
  bool operator==(const DegreeProfile&) const = default;
};

/// Unordered degree pair, always stored with first <= second.
using DegreePair = std::pair<int, int>;

constexpr DegreePair degree_pair(int a, int b) {
  return a <= b ? DegreePair{a, b} : DegreePair{b, a};
}

/// m_{i,j}: number of edges joining a degree-i vertex to a degree-j vertex.
/// Counts are signed so that differences of signatures are representable.
struct EdgeTypeSignature {
  std::map<DegreePair, long> counts;

  long count(int i, int j) const;
  long total() const;
  void add(int i, int j, long delta);
  EdgeTypeSignature operator-(const EdgeTypeSignature& other) const;
  bool operator==(const EdgeTypeSignature&) const = default;
  std::string to_string() const;
};

DegreeProfile degree_profile(const Graph& g);
EdgeTypeSignature edge_type_signature(const Graph& g);

bool is_connected(const Graph& g);
/// m - n + 1; throws std::invalid_argument for disconnected graphs.
int cyclomatic_number(const Graph& g);
/// Bitset of the connected component containing v.
VertexSet component_of(const Graph& g, int v);

/// Isomorphism-invariant total-order key. Two graphs have equal codes iff
/// they are isomorphic.
struct CanonicalCode {
  int n = 0;
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Graph& g);
/// The graph relabeled into canonical order.
Graph canonical_form(const Graph& g);

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace randic
