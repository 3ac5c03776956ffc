#include "randic/graph.hpp"

#include <sstream>

namespace randic {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) {
    throw std::invalid_argument("missing edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
  --m_;
}

int Graph::add_vertex() {
  if (n_ == kMaxVertices) throw std::invalid_argument("graph already has 64 vertices");
  return n_++;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = rows_[u] & ~((bit(u) << 1) - 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  Graph out(n_);
  for (int u = 0; u < n_; ++u) {
    VertexSet row = rows_[u];
    VertexSet mapped = 0;
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      mapped |= bit(perm[v]);
    }
    out.rows_[perm[u]] = mapped;
  }
  out.m_ = m_;
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  for (int v = 0; v < n_; ++v) {
    if (rows_[v] != other.rows_[v]) return false;
  }
  return true;
}

int DegreeProfile::count(int degree) const {
  auto it = counts.find(degree);
  return it == counts.end() ? 0 : it->second;
}

long EdgeTypeSignature::count(int i, int j) const {
  auto it = counts.find(degree_pair(i, j));
  return it == counts.end() ? 0 : it->second;
}

long EdgeTypeSignature::total() const {
  long sum = 0;
  for (const auto& [pair, c] : counts) sum += c;
  return sum;
}

void EdgeTypeSignature::add(int i, int j, long delta) {
  auto key = degree_pair(i, j);
  long value = (counts[key] += delta);
  if (value == 0) counts.erase(key);
}

EdgeTypeSignature EdgeTypeSignature::operator-(const EdgeTypeSignature& other) const {
  EdgeTypeSignature out = *this;
  for (const auto& [pair, c] : other.counts) out.add(pair.first, pair.second, -c);
  return out;
}

std::string EdgeTypeSignature::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [pair, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << '(' << pair.first << ',' << pair.second << "):" << c;
  }
  os << '}';
  return os.str();
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.n = g.order();
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    ++p.counts[d];
    p.max_degree = std::max(p.max_degree, d);
  }
  return p;
}

EdgeTypeSignature edge_type_signature(const Graph& g) {
  EdgeTypeSignature sig;
  for (auto [u, v] : g.edges()) sig.add(g.degree(u), g.degree(v), 1);
  return sig;
}

VertexSet component_of(const Graph& g, int v) {
  VertexSet seen = bit(v);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(u);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return std::popcount(component_of(g, 0)) == g.order();
}

int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("cyclomatic number requires a connected graph");
  }
  return g.size() - g.order() + 1;
}

}  // namespace randic
