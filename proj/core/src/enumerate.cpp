#include "randic/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "randic/canon.hpp"

namespace randic {

namespace {

constexpr std::size_t kFrontierPerWorker = 32;
constexpr std::size_t kReorderWindow = 256;

// Bridge neighbours of every vertex (Tarjan low-link).
class BridgeFinder {
 public:
  explicit BridgeFinder(const Graph& g) : g_(g) {
    for (int v = 0; v < g.order(); ++v) {
      if (disc_[v] < 0) visit(v, -1);
    }
  }
  bool is_bridge(int u, int v) const { return (bridge_rows_[u] >> v) & 1U; }

 private:
  void visit(int v, int parent) {
    disc_[v] = low_[v] = time_++;
    VertexSet row = g_.neighbors(v);
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      if (w == parent) continue;
      if (disc_[w] < 0) {
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] > disc_[v]) {
          bridge_rows_[v] |= bit(w);
          bridge_rows_[w] |= bit(v);
        }
      } else {
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const Graph& g_;
  int time_ = 0;
  std::array<int, kMaxVertices> disc_ = filled(-1);
  std::array<int, kMaxVertices> low_{};
  std::array<VertexSet, kMaxVertices> bridge_rows_{};

  static std::array<int, kMaxVertices> filled(int value) {
    std::array<int, kMaxVertices> a;
    a.fill(value);
    return a;
  }
};

// Isomorphism-invariant edge key; the canonical last edge has the largest.
class EdgeKeys {
 public:
  explicit EdgeKeys(const Graph& g) : g_(g), bridges_(g) {
    for (int v = 0; v < g.order(); ++v) deg_[v] = g.degree(v);
    for (int v = 0; v < g.order(); ++v) {
      VertexSet row = g.neighbors(v);
      int sum = 0;
      while (row) {
        sum += deg_[std::countr_zero(row)];
        row &= row - 1;
      }
      nbr_sum_[v] = sum;
    }
  }

  std::uint64_t operator()(int u, int v) const {
    const std::uint64_t non_bridge = bridges_.is_bridge(u, v) ? 0 : 1;
    const std::uint64_t deg_sum = deg_[u] + deg_[v];
    const std::uint64_t deg_min = std::min(deg_[u], deg_[v]);
    const std::uint64_t common = std::popcount(g_.neighbors(u) & g_.neighbors(v));
    const std::uint64_t nbr_total = nbr_sum_[u] + nbr_sum_[v];
    const std::uint64_t nbr_min = std::min(nbr_sum_[u], nbr_sum_[v]);
    return non_bridge << 62 | deg_sum << 54 | deg_min << 47 | common << 40 | nbr_total << 20 |
           nbr_min;
  }

 private:
  const Graph& g_;
  BridgeFinder bridges_;
  std::array<int, kMaxVertices> deg_{};
  std::array<int, kMaxVertices> nbr_sum_{};
};

int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }

bool in_edge_orbit(const std::vector<Permutation>& gens, std::pair<int, int> from,
                   std::pair<int, int> target) {
  std::vector<std::pair<int, int>> queue{from};
  std::vector<bool> seen(kMaxVertices * (kMaxVertices - 1) / 2, false);
  seen[pair_index(from.first, from.second)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [u, v] = queue[head];
    if (u == target.first && v == target.second) return true;
    for (const auto& gen : gens) {
      int a = gen[u];
      int b = gen[v];
      if (a > b) std::swap(a, b);
      const int id = pair_index(a, b);
      if (!seen[id]) {
        seen[id] = true;
        queue.emplace_back(a, b);
      }
    }
  }
  return false;
}

// True when the edge ab (a < b) is in the orbit of the canonical last edge of h.
bool is_canonical_augmentation(const Graph& h, int a, int b) {
  const EdgeKeys key(h);
  const std::uint64_t own = key(a, b);
  std::vector<std::pair<int, int>> ties;
  for (int u = 0; u < h.order(); ++u) {
    VertexSet higher = h.neighbors(u) & ~((bit(u) << 1) - 1);
    while (higher) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      if (u == a && v == b) continue;
      const std::uint64_t k = key(u, v);
      if (k > own) return false;
      if (k == own) ties.emplace_back(u, v);
    }
  }
  if (ties.empty()) return true;

  const CanonicalLabeling labeling = canonical_labeling(h);
  const auto pos = labeling.positions();
  auto rank = [&](std::pair<int, int> e) {
    const int p = pos[e.first];
    const int q = pos[e.second];
    return std::pair{std::max(p, q), std::min(p, q)};
  };
  std::pair<int, int> best{a, b};
  for (const auto& e : ties) {
    if (rank(e) > rank(best)) best = e;
  }
  if (best == std::pair{a, b}) return true;
  return in_edge_orbit(labeling.generators, best, {a, b});
}

class Generator {
 public:
  explicit Generator(const EnumSpec& spec)
      : n_(spec.n),
        m_(spec.m),
        cap_(spec.max_degree.value_or(kMaxVertices)),
        connected_(spec.connected_only) {}

  // Accepted children of g, in deterministic order.
  void children(const Graph& g, std::vector<Graph>& out) const {
    const int e = g.size();
    if (!room_for(g, m_ - e)) return;
    const bool forest_level = connected_ && e < n_ - 1;

    std::vector<std::pair<int, int>> candidates;
    for (int v = 1; v < n_; ++v) {
      if (g.degree(v) >= cap_) continue;
      const VertexSet comp = forest_level ? component_of(g, v) : 0;
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(u, v) || g.degree(u) >= cap_) continue;
        if (forest_level && (comp & bit(u))) continue;
        candidates.emplace_back(u, v);
      }
    }
    if (candidates.empty()) return;
    std::sort(candidates.begin(), candidates.end());

    const auto gens = canonical_labeling(g).generators;
    std::vector<int> root;
    if (!gens.empty()) {
      DisjointSets pairs(n_ * (n_ - 1) / 2);
      for (const auto& gen : gens) {
        for (int v = 1; v < n_; ++v) {
          for (int u = 0; u < v; ++u) {
            int a = gen[u];
            int b = gen[v];
            if (a > b) std::swap(a, b);
            pairs.unite(pair_index(u, v), pair_index(a, b));
          }
        }
      }
      root.resize(n_ * (n_ - 1) / 2);
      for (std::size_t i = 0; i < root.size(); ++i) root[i] = pairs.find(static_cast<int>(i));
    }

    std::vector<bool> orbit_done(root.size(), false);
    for (const auto& [u, v] : candidates) {
      if (!root.empty()) {
        const int r = root[pair_index(u, v)];
        if (orbit_done[r]) continue;
        orbit_done[r] = true;
      }
      Graph h = g;
      h.add_edge(u, v);
      if (is_canonical_augmentation(h, u, v)) out.push_back(std::move(h));
    }
  }

  void dfs(const Graph& g, std::vector<Graph>& leaves) const {
    if (g.size() == m_) {
      leaves.push_back(g);
      return;
    }
    std::vector<Graph> next;
    children(g, next);
    for (const auto& h : next) dfs(h, leaves);
  }

  void dfs(const Graph& g, const GraphSink& sink) const {
    if (g.size() == m_) {
      sink(g);
      return;
    }
    std::vector<Graph> next;
    children(g, next);
    for (const auto& h : next) dfs(h, sink);
  }

  int target_edges() const { return m_; }

 private:
  // Enough free degree left under the cap for `remaining` more edges.
  bool room_for(const Graph& g, int remaining) const {
    if (cap_ >= n_ - 1) return true;
    int slack = 0;
    for (int v = 0; v < n_; ++v) slack += cap_ - g.degree(v);
    return slack >= 2 * remaining;
  }

  int n_;
  int m_;
  int cap_;
  bool connected_;
};

void enumerate_parallel(const Generator& gen, const Graph& root, const GraphSink& sink,
                        int workers) {
  std::vector<Graph> frontier{root};
  while (frontier.size() < kFrontierPerWorker * static_cast<std::size_t>(workers) &&
         !frontier.empty() && frontier.front().size() < gen.target_edges()) {
    std::vector<Graph> next;
    for (const auto& g : frontier) gen.children(g, next);
    frontier = std::move(next);
  }

  const std::size_t items = frontier.size();
  std::vector<std::vector<Graph>> results(items);
  std::vector<bool> ready(items, false);
  std::atomic<std::size_t> next_item{0};
  std::size_t emitted = 0;
  std::mutex mu;
  std::condition_variable cv;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_item.fetch_add(1);
      if (i >= items) return;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return i < emitted + kReorderWindow || failure; });
        if (failure) return;
      }
      std::vector<Graph> leaves;
      try {
        gen.dfs(frontier[i], leaves);
      } catch (...) {
        std::lock_guard lock(mu);
        failure = std::current_exception();
        cv.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      results[i] = std::move(leaves);
      ready[i] = true;
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

  while (emitted < items) {
    std::vector<Graph> batch;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return ready[emitted] || failure; });
      if (failure) break;
      batch = std::move(results[emitted]);
    }
    try {
      for (const auto& g : batch) sink(g);
    } catch (...) {
      std::lock_guard lock(mu);
      failure = std::current_exception();
      cv.notify_all();
      break;
    }
    std::lock_guard lock(mu);
    ++emitted;
    cv.notify_all();
  }
  if (failure) {
    pool.clear();
    std::rethrow_exception(failure);
  }
}

}  // namespace

void validate(const EnumSpec& spec) {
  if (spec.n < 0 || spec.n > kMaxVertices) {
    throw std::invalid_argument("n = " + std::to_string(spec.n) + " outside [0, 64]");
  }
  const int max_m = spec.n * (spec.n - 1) / 2;
  if (spec.m < 0 || spec.m > max_m) {
    throw std::invalid_argument("m = " + std::to_string(spec.m) + " outside [0, " +
                                std::to_string(max_m) + "]");
  }
  if (spec.connected_only && spec.m < spec.n - 1) {
    throw std::invalid_argument("a connected graph on " + std::to_string(spec.n) +
                                " vertices needs at least " + std::to_string(spec.n - 1) + " edges");
  }
  if (spec.max_degree && *spec.max_degree < 0) throw std::invalid_argument("negative max_degree");
}

bool within_ceiling(const EnumSpec& spec) {
  if (spec.n <= 12) return true;
  return spec.n <= 14 && spec.max_degree && *spec.max_degree <= 4;
}

void enumerate(const EnumSpec& spec, const GraphSink& sink, int workers) {
  validate(spec);
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const Generator gen(spec);
  const Graph root(spec.n);
  if (workers == 1) {
    gen.dfs(root, sink);
  } else {
    enumerate_parallel(gen, root, sink, workers);
  }
}

std::vector<Graph> enumerate_all(const EnumSpec& spec, int workers) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); }, workers);
  return out;
}

std::uint64_t count(const EnumSpec& spec, int workers) {
  std::uint64_t total = 0;
  enumerate(spec, [&](const Graph&) { ++total; }, workers);
  return total;
}

}  // namespace randic
