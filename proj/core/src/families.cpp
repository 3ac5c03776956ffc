#include "randic/families.hpp"

#include <array>
#include <stdexcept>

#include "randic/enumerate.hpp"
#include "randic/index.hpp"

namespace randic {

namespace {

constexpr std::array<std::string_view, 19> kNames = {
    "lambda1",  "gamma1",   "lambda2",  "gamma2",   "omega1",   "omega2",   "omega3",
    "omega4",   "omega5",   "omega6",   "omega7",   "omega8",   "upsilon1", "upsilon2",
    "upsilon3", "upsilon4", "upsilon5", "upsilon6", "regular3"};

enum class Shape { Lambda1, Gamma1, Lambda2, Gamma2, Regular3, Upsilon };

struct Resolved {
  Shape shape;
  int k;  // 0 when free
};

// Omega families are Lambda/Gamma specializations, identified by signature.
Resolved resolve(FamilyName name) {
  switch (name) {
    case FamilyName::Lambda1: return {Shape::Lambda1, 0};
    case FamilyName::Gamma1: return {Shape::Gamma1, 0};
    case FamilyName::Lambda2: return {Shape::Lambda2, 0};
    case FamilyName::Gamma2: return {Shape::Gamma2, 0};
    case FamilyName::Regular3: return {Shape::Regular3, 0};
    case FamilyName::Omega1: return {Shape::Lambda1, 5};
    case FamilyName::Omega2: return {Shape::Gamma1, 5};
    case FamilyName::Omega3: return {Shape::Lambda1, 6};
    case FamilyName::Omega4: return {Shape::Gamma1, 6};
    case FamilyName::Omega5: return {Shape::Gamma2, 5};
    case FamilyName::Omega6: return {Shape::Lambda2, 5};
    case FamilyName::Omega7: return {Shape::Gamma2, 6};
    case FamilyName::Omega8: return {Shape::Lambda2, 6};
    case FamilyName::Upsilon1:
    case FamilyName::Upsilon2:
    case FamilyName::Upsilon5: return {Shape::Upsilon, 5};
    case FamilyName::Upsilon3:
    case FamilyName::Upsilon4:
    case FamilyName::Upsilon6: return {Shape::Upsilon, 6};
  }
  throw std::invalid_argument("unknown family");
}

// Upsilon degree profiles: n1, n4, n3; n2 is whatever is left.
struct UpsilonCounts {
  int n1;
  int n4;
  int n3;
};

UpsilonCounts upsilon_counts(FamilyName name) {
  switch (name) {
    case FamilyName::Upsilon1: return {0, 0, 8};
    case FamilyName::Upsilon2: return {1, 0, 9};
    case FamilyName::Upsilon3: return {0, 0, 10};
    case FamilyName::Upsilon4: return {1, 0, 11};
    case FamilyName::Upsilon5: return {0, 1, 6};
    case FamilyName::Upsilon6: return {0, 1, 8};
    default: throw std::invalid_argument("not an upsilon family");
  }
}

int min_k(Shape shape) {
  return (shape == Shape::Lambda2 || shape == Shape::Gamma2) ? 4 : 3;
}

int shape_bound(Shape shape, int k) {
  switch (shape) {
    case Shape::Lambda1: return 2 * k - 1;
    case Shape::Gamma1: return 2 * k + 1;
    case Shape::Lambda2: return 2 * k;
    case Shape::Gamma2: return 2 * k - 2;
    case Shape::Regular3: return 2 * k - 2;
    case Shape::Upsilon: break;
  }
  throw std::invalid_argument("no shape bound");
}

ValueFamily value_family(Shape shape) {
  switch (shape) {
    case Shape::Lambda1: return ValueFamily::Lambda1;
    case Shape::Gamma1: return ValueFamily::Gamma1;
    case Shape::Lambda2: return ValueFamily::Lambda2;
    case Shape::Gamma2: return ValueFamily::Gamma2;
    case Shape::Regular3: return ValueFamily::Regular3;
    case Shape::Upsilon: break;
  }
  throw std::invalid_argument("no closed form");
}

int resolve_k(FamilyName name, int k) {
  const Resolved r = resolve(name);
  if (r.k != 0) {
    if (k != 0 && k != r.k) {
      throw std::invalid_argument(to_string(name) + " has cyclomatic number " +
                                  std::to_string(r.k) + ", not " + std::to_string(k));
    }
    return r.k;
  }
  if (k < min_k(r.shape)) {
    throw std::invalid_argument(to_string(name) + " needs k >= " + std::to_string(min_k(r.shape)));
  }
  return k;
}

EdgeTypeSignature shape_signature(Shape shape, int n, int k) {
  EdgeTypeSignature sig;
  switch (shape) {
    case Shape::Lambda1:
      sig.add(3, 3, 3L * k - 4);
      sig.add(2, 3, 2);
      sig.add(2, 2, n - (2L * k - 1));
      break;
    case Shape::Gamma1:
      sig.add(3, 3, 3L * k - 2);
      sig.add(2, 3, 1);
      sig.add(1, 2, 1);
      sig.add(2, 2, n - (2L * k + 1));
      break;
    case Shape::Lambda2:
      sig.add(3, 3, 3L * k - 5);
      sig.add(2, 3, 4);
      sig.add(2, 2, n - 2L * k);
      break;
    case Shape::Gamma2:
      sig.add(3, 4, 4);
      sig.add(3, 3, 3L * k - 9);
      sig.add(2, 3, 2);
      sig.add(2, 2, n - (2L * k - 2));
      break;
    case Shape::Regular3:
      sig.add(3, 3, 3L * n / 2);
      break;
    case Shape::Upsilon:
      throw std::invalid_argument("upsilon families are defined by degree profile");
  }
  return sig;
}

// Replaces edge uv by a path through `inner` new vertices (inner >= 1).
void replace_by_path(Graph& g, int u, int v, int inner) {
  g.remove_edge(u, v);
  int prev = u;
  for (int i = 0; i < inner; ++i) {
    const int w = g.add_vertex();
    g.add_edge(prev, w);
    prev = w;
  }
  g.add_edge(prev, v);
}

// Hangs a path of `length` new vertices at v.
void attach_path(Graph& g, int v, int length) {
  int prev = v;
  for (int i = 0; i < length; ++i) {
    const int w = g.add_vertex();
    g.add_edge(prev, w);
    prev = w;
  }
}

// Two disjoint edges of a cubic graph: the lowest edge and the lowest edge
// avoiding its endpoints.
std::pair<std::pair<int, int>, std::pair<int, int>> independent_edges(const Graph& h) {
  const auto edges = h.edges();
  const auto first = edges.front();
  for (const auto& e : edges) {
    if (e.first != first.first && e.first != first.second && e.second != first.first &&
        e.second != first.second) {
      return {first, e};
    }
  }
  throw std::logic_error("no independent edge pair");
}

// Cubic H on 2k - 4 vertices, w joined to the ends of two removed disjoint
// edges, and a further edge replaced by a path of `inner` vertices.
Graph gamma2_core(int k, int inner) {
  Graph g = cubic_graph(2 * k - 4);
  const auto [e1, e2] = independent_edges(g);
  g.remove_edge(e1.first, e1.second);
  g.remove_edge(e2.first, e2.second);
  const int w = g.add_vertex();
  for (int v : {e1.first, e1.second, e2.first, e2.second}) g.add_edge(w, v);
  if (inner > 0) {
    for (const auto& [x, y] : g.edges()) {
      if (x != w && y != w) {
        replace_by_path(g, x, y, inner);
        break;
      }
    }
  }
  return g;
}

Graph construct_upsilon(FamilyName name, int n) {
  const UpsilonCounts c = upsilon_counts(name);
  const int k = resolve(name).k;
  Graph g;
  if (c.n4 == 1) {
    g = gamma2_core(k, 0);
  } else {
    g = cubic_graph(2 * k - 2);
  }
  const int base = g.order();
  if (c.n1 == 1) {
    // Subdivide an edge, then hang the rest as a pendant path at the new vertex.
    const auto [x, y] = g.edges().front();
    replace_by_path(g, x, y, 1);
    attach_path(g, g.order() - 1, n - base - 1);
  } else if (n > base) {
    const auto [x, y] = g.edges().back();
    replace_by_path(g, x, y, n - base);
  }
  return g;
}

Graph construct_shape(Shape shape, int n, int k) {
  switch (shape) {
    case Shape::Lambda1: {
      Graph g = cubic_graph(2 * k - 2);
      const auto [u, v] = g.edges().front();
      replace_by_path(g, u, v, n - (2 * k - 2));
      return g;
    }
    case Shape::Gamma1: {
      Graph g = cubic_graph(2 * k - 2);
      const auto [x, y] = g.edges().front();
      replace_by_path(g, x, y, 1);
      attach_path(g, g.order() - 1, n - (2 * k - 1));
      return g;
    }
    case Shape::Lambda2: {
      Graph g = cubic_graph(2 * k - 2);
      const auto [e1, e2] = independent_edges(g);
      const int extra = n - (2 * k - 2);
      replace_by_path(g, e1.first, e1.second, 1);
      replace_by_path(g, e2.first, e2.second, extra - 1);
      return g;
    }
    case Shape::Gamma2:
      return gamma2_core(k, n - (2 * k - 3));
    case Shape::Regular3:
      return cubic_graph(n);
    case Shape::Upsilon:
      break;
  }
  throw std::invalid_argument("no construction");
}

}  // namespace

std::string to_string(FamilyName name) { return std::string(kNames[static_cast<int>(name)]); }

FamilyName parse_family_name(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<FamilyName>(i);
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

int feasibility_bound(FamilyName name, int k) {
  const Resolved r = resolve(name);
  const int kk = resolve_k(name, k);
  if (r.shape != Shape::Upsilon) return shape_bound(r.shape, kk);
  const UpsilonCounts c = upsilon_counts(name);
  return c.n1 + c.n3 + c.n4;
}

FamilySpec make_family_spec(FamilyName name, int n, int k) {
  const Resolved r = resolve(name);
  FamilySpec spec;
  spec.name = name;
  spec.k = resolve_k(name, k);
  spec.n = n;

  if (r.shape == Shape::Regular3) {
    if (n != 2 * spec.k - 2) {
      throw std::invalid_argument("regular3 needs n = 2k - 2 = " + std::to_string(2 * spec.k - 2));
    }
  } else if (n < feasibility_bound(name, spec.k)) {
    throw std::invalid_argument(to_string(name) + " with k = " + std::to_string(spec.k) +
                                " needs n >= " + std::to_string(feasibility_bound(name, spec.k)));
  }

  if (r.shape == Shape::Upsilon) {
    const UpsilonCounts c = upsilon_counts(name);
    DegreeProfile p;
    p.n = n;
    p.max_degree = c.n4 > 0 ? 4 : 3;
    if (c.n1) p.counts[1] = c.n1;
    if (n - c.n1 - c.n3 - c.n4 > 0) p.counts[2] = n - c.n1 - c.n3 - c.n4;
    p.counts[3] = c.n3;
    if (c.n4) p.counts[4] = c.n4;
    spec.degree_profile = p;
  } else {
    spec.edge_signature = shape_signature(r.shape, n, spec.k);
    spec.expected_value = family_value({value_family(r.shape), n, spec.k});
  }
  return spec;
}

EdgeTypeSignature family_signature(const FamilySpec& spec) {
  if (!spec.edge_signature) {
    throw std::invalid_argument(to_string(spec.name) + " is defined by a degree profile");
  }
  return *spec.edge_signature;
}

bool is_member(const Graph& g, const FamilySpec& spec) {
  if (g.order() != spec.n || !is_connected(g)) return false;
  if (cyclomatic_number(g) != spec.k) return false;
  if (spec.degree_profile) return degree_profile(g) == *spec.degree_profile;
  return edge_type_signature(g) == *spec.edge_signature;
}

Graph construct_member(const FamilySpec& spec) {
  const Resolved r = resolve(spec.name);
  Graph g = r.shape == Shape::Upsilon ? construct_upsilon(spec.name, spec.n)
                                      : construct_shape(r.shape, spec.n, spec.k);
  if (!is_member(g, spec)) {
    throw std::logic_error("construction for " + to_string(spec.name) + " failed its membership check");
  }
  return g;
}

std::vector<Graph> enumerate_members(const FamilySpec& spec, int workers) {
  int cap = 0;
  if (spec.degree_profile) {
    cap = spec.degree_profile->max_degree;
  } else {
    for (const auto& [pair, count] : spec.edge_signature->counts) {
      if (count > 0) cap = std::max(cap, pair.second);
    }
  }
  EnumSpec es{spec.n, spec.n + spec.k - 1, cap, true};
  std::vector<Graph> out;
  enumerate(es, [&](const Graph& g) {
    if (is_member(g, spec)) out.push_back(g);
  }, workers);
  return out;
}

Graph cubic_graph(int order) {
  if (order < 4 || order % 2 != 0) {
    throw std::invalid_argument("no cubic graph on " + std::to_string(order) + " vertices");
  }
  switch (order) {
    case 4:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case 6:
      return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    case 8:
      return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    case 10:
      return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                 {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    case 16: {
      // Generalized Petersen graph GP(8, 3).
      Graph g(16);
      for (int i = 0; i < 8; ++i) {
        g.add_edge(i, (i + 1) % 8);
        g.add_edge(i, i + 8);
        const int a = 8 + i;
        const int b = 8 + (i + 3) % 8;
        if (!g.has_edge(a, b)) g.add_edge(a, b);
      }
      return g;
    }
    default: {
      // Prism C_m x K2.
      const int m = order / 2;
      Graph g(order);
      for (int i = 0; i < m; ++i) {
        g.add_edge(i, (i + 1) % m);
        g.add_edge(m + i, m + (i + 1) % m);
        g.add_edge(i, m + i);
      }
      return g;
    }
  }
}

}  // namespace randic
