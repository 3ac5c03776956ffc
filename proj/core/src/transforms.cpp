#include "randic/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "randic/index.hpp"

namespace randic {

namespace {

// Follows a pendant path that starts at `first` next to `hub`. Returns the
// path, or length 0 when the walk meets a vertex of degree >= 3 or the hub.
PendantPath walk_path(const Graph& g, int hub, int first) {
  int prev = hub;
  int cur = first;
  for (int length = 1; length <= g.order(); ++length) {
    const int d = g.degree(cur);
    if (d == 1) return {first, cur, length};
    if (d != 2) return {};
    const VertexSet rest = g.neighbors(cur) & ~bit(prev);
    const int next = std::countr_zero(rest);
    if (next == hub) return {};
    prev = cur;
    cur = next;
  }
  return {};
}

int path_end(const Graph& g, int hub, int first) {
  const PendantPath p = walk_path(g, hub, first);
  if (p.length == 0) throw std::invalid_argument("no pendant path at the given anchor");
  return p.last;
}

std::vector<int> neighbor_list(const Graph& g, int v) {
  std::vector<int> out;
  VertexSet row = g.neighbors(v);
  while (row) {
    out.push_back(std::countr_zero(row));
    row &= row - 1;
  }
  return out;
}

bool pairwise_distinct(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

void t1_sites(const Graph& g, std::vector<TransformSite>& out) {
  for (int w = 0; w < g.order(); ++w) {
    if (g.degree(w) < 3) continue;
    const auto paths = pendant_paths(g, w);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        out.push_back({TransformKind::T1, {w, paths[i].first, paths[j].first}});
      }
    }
  }
}

void t2_sites(const Graph& g, std::vector<TransformSite>& out) {
  const int n = g.order();
  std::vector<std::vector<PendantPath>> paths(n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) paths[v] = pendant_paths(g, v);
  }
  for (int x = 0; x < n; ++x) {
    for (const auto& q : paths[x]) {
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        for (const auto& p : paths[y]) {
          bool ok = true;
          VertexSet others = g.neighbors(x) & ~bit(q.first);
          while (others && ok) {
            const int v = std::countr_zero(others);
            others &= others - 1;
            ok = g.degree(v) - (v == y ? 1 : 0) >= 2;
          }
          if (ok) out.push_back({TransformKind::T2, {x, q.first, y, p.first}});
        }
      }
    }
  }
}

void t3_sites(const Graph& g, std::vector<TransformSite>& out) {
  for (const auto& [x, y] : g.edges()) out.push_back({TransformKind::T3, {x, y}});
}

void t4_sites(const Graph& g, std::vector<TransformSite>& out) {
  const int delta = g.max_degree();
  if (delta < 4) return;
  for (int v2 = 0; v2 < g.order(); ++v2) {
    if (g.degree(v2) != 2) continue;
    const auto ends = neighbor_list(g, v2);
    for (int flip = 0; flip < 2; ++flip) {
      const int v1 = ends[flip];
      const int v3 = ends[1 - flip];
      if (g.degree(v1) < 2 || g.degree(v3) < 3) continue;
      for (int v4 = 0; v4 < g.order(); ++v4) {
        if (g.degree(v4) != delta || v4 == v1 || v4 == v3) continue;
        for (int u1 : neighbor_list(g, v4)) {
          if (u1 == v1 || u1 == v3 || u1 == v2) continue;
          out.push_back({TransformKind::T4, {v1, v2, v3, v4, u1}});
        }
      }
    }
  }
}

void t5_sites(const Graph& g, std::vector<TransformSite>& out) {
  const int n = g.order();
  for (int x2 = 0; x2 < n; ++x2) {
    if (g.degree(x2) != 3) continue;
    const auto around = neighbor_list(g, x2);
    for (int pick = 0; pick < 3; ++pick) {
      const int w = around[pick];
      std::vector<int> rest;
      for (int i = 0; i < 3; ++i) {
        if (i != pick) rest.push_back(around[i]);
      }
      const int x1 = rest[0];
      const int x3 = rest[1];
      if (g.degree(x1) != 3 || g.degree(x3) != 3) continue;
      for (int x5 = 0; x5 < n; ++x5) {
        if (g.degree(x5) != 2 || g.has_edge(x5, w)) continue;
        const auto ends = neighbor_list(g, x5);
        int x4 = -1;
        int x6 = -1;
        for (int flip = 0; flip < 2; ++flip) {
          const int a = ends[flip];
          const int b = ends[1 - flip];
          if (g.degree(a) == 4 && (g.degree(b) == 1 || g.degree(b) == 2)) {
            x4 = a;
            x6 = b;
          }
        }
        if (x4 < 0) continue;
        if (!pairwise_distinct({x1, x2, x3, x4, x5, x6, w})) continue;
        out.push_back({TransformKind::T5, {x1, x2, x3, x4, x5, x6, w}});
      }
    }
  }
}

std::size_t anchor_count(TransformKind kind) {
  switch (kind) {
    case TransformKind::T1: return 3;
    case TransformKind::T2: return 4;
    case TransformKind::T3: return 2;
    case TransformKind::T4: return 5;
    case TransformKind::T5: return 7;
  }
  return 0;
}

}  // namespace

std::string to_string(TransformKind kind) {
  return "t" + std::to_string(static_cast<int>(kind) + 1);
}

TransformKind parse_transform_kind(std::string_view text) {
  if (text.size() == 2 && std::tolower(static_cast<unsigned char>(text[0])) == 't' &&
      text[1] >= '1' && text[1] <= '5') {
    return static_cast<TransformKind>(text[1] - '1');
  }
  throw std::invalid_argument("unknown transformation kind '" + std::string(text) + "'");
}

std::string TransformSite::to_string() const {
  std::string out = randic::to_string(kind);
  for (int v : vertices) out += " " + std::to_string(v);
  return out;
}

std::vector<PendantPath> pendant_paths(const Graph& g, int hub) {
  std::vector<PendantPath> out;
  for (int c : neighbor_list(g, hub)) {
    const PendantPath p = walk_path(g, hub, c);
    if (p.length > 0) out.push_back(p);
  }
  return out;
}

std::vector<TransformSite> find_sites(const Graph& g, TransformKind kind) {
  std::vector<TransformSite> out;
  switch (kind) {
    case TransformKind::T1: t1_sites(g, out); break;
    case TransformKind::T2: t2_sites(g, out); break;
    case TransformKind::T3: t3_sites(g, out); break;
    case TransformKind::T4: t4_sites(g, out); break;
    case TransformKind::T5: t5_sites(g, out); break;
  }
  return out;
}

bool is_valid_site(const Graph& g, const TransformSite& site) {
  if (site.vertices.size() != anchor_count(site.kind)) return false;
  for (int v : site.vertices) {
    if (v < 0 || v >= g.order()) return false;
  }
  const auto sites = find_sites(g, site.kind);
  return std::find(sites.begin(), sites.end(), site) != sites.end();
}

Graph apply_site_unchecked(const Graph& g, const TransformSite& site) {
  Graph out = g;
  const auto& a = site.vertices;
  switch (site.kind) {
    case TransformKind::T1: {
      const int q_last = path_end(g, a[0], a[2]);
      out.remove_edge(a[0], a[1]);
      out.add_edge(q_last, a[1]);
      break;
    }
    case TransformKind::T2: {
      const int p_last = path_end(g, a[2], a[3]);
      out.remove_edge(a[0], a[1]);
      out.add_edge(p_last, a[1]);
      break;
    }
    case TransformKind::T3: {
      const int v = out.add_vertex();
      out.remove_edge(a[0], a[1]);
      out.add_edge(a[0], v);
      out.add_edge(v, a[1]);
      break;
    }
    case TransformKind::T4:
      out.remove_edge(a[3], a[4]);
      out.add_edge(a[1], a[4]);
      break;
    case TransformKind::T5:
      out.remove_edge(a[1], a[6]);
      out.add_edge(a[4], a[6]);
      break;
  }
  return out;
}

Graph apply_transform(const Graph& g, const TransformSite& site) {
  if (!is_valid_site(g, site)) {
    throw std::invalid_argument("invalid " + to_string(site.kind) + " site: " + site.to_string());
  }
  return apply_site_unchecked(g, site);
}

RadicalValue delta_randic_unchecked(const Graph& g, const TransformSite& site) {
  const Graph after = apply_site_unchecked(g, site);
  return randic_of_signature(edge_type_signature(after) - edge_type_signature(g));
}

RadicalValue delta_randic(const Graph& g, const TransformSite& site) {
  if (!is_valid_site(g, site)) {
    throw std::invalid_argument("invalid " + to_string(site.kind) + " site: " + site.to_string());
  }
  return delta_randic_unchecked(g, site);
}

}  // namespace randic
