#include "randic/canon.hpp"

#include <algorithm>
#include <numeric>

// Individualization-refinement canonical labeling in the style of nauty:
// equitable refinement, depth-first search over the first non-singleton cell,
// pruning by automorphisms found at leaves that reproduce the first or the
// best certificate. The canonical form is the lexicographically largest leaf
// certificate; the automorphisms recorded along the way generate Aut(G).

namespace randic {

std::vector<int> CanonicalLabeling::positions() const {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

DisjointSets::DisjointSets(int size) : parent_(size) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent_[a] = b;
}

std::vector<int> vertex_orbits(int n, const std::vector<Permutation>& generators) {
  DisjointSets sets(n);
  for (const auto& gen : generators) {
    for (int v = 0; v < n; ++v) sets.unite(v, gen[v]);
  }
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = sets.find(v);
  return rep;
}

namespace {

using Cert = std::array<VertexSet, kMaxVertices>;

struct Partition {
  int cells = 0;
  std::array<std::uint8_t, kMaxVertices> lab{};    // position -> vertex
  std::array<std::uint8_t, kMaxVertices> start{};  // position -> first position of its cell
  std::array<std::uint8_t, kMaxVertices> end{};    // cell start -> one past its last position
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition root;
    root.cells = 1;
    for (int i = 0; i < n_; ++i) {
      root.lab[i] = static_cast<std::uint8_t>(i);
      root.start[i] = 0;
    }
    root.end[0] = static_cast<std::uint8_t>(n_);
    split_by_degree(root);
    search(root);

    CanonicalLabeling out;
    out.order.assign(best_lab_.begin(), best_lab_.begin() + n_);
    out.generators = std::move(generators_);
    return out;
  }

 private:
  // Degree refinement of the unit partition, then full equitable refinement.
  void split_by_degree(Partition& p) {
    std::array<int, kMaxVertices> deg{};
    for (int v = 0; v < n_; ++v) deg[v] = g_.degree(v);
    std::stable_sort(p.lab.begin(), p.lab.begin() + n_,
                     [&](std::uint8_t a, std::uint8_t b) { return deg[a] < deg[b]; });
    std::uint8_t queue_buf[kMaxVertices];
    int queued = 0;
    int s = 0;
    p.cells = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && deg[p.lab[i]] != deg[p.lab[i - 1]]) {
        p.end[s] = static_cast<std::uint8_t>(i);
        queue_buf[queued++] = static_cast<std::uint8_t>(s);
        ++p.cells;
        s = i;
      }
      p.start[i] = static_cast<std::uint8_t>(s);
    }
    if (n_ > 0) {
      p.end[s] = static_cast<std::uint8_t>(n_);
      queue_buf[queued++] = static_cast<std::uint8_t>(s);
      ++p.cells;
    }
    refine(p, queue_buf, queued);
  }

  // Equitable refinement driven by a FIFO of splitter cells (by start).
  void refine(Partition& p, const std::uint8_t* initial, int initial_count) const {
    std::uint8_t queue[kMaxVertices];
    int head = 0;
    int size = 0;
    VertexSet in_queue = 0;
    auto push = [&](int s) {
      if (in_queue & bit(s)) return;
      in_queue |= bit(s);
      queue[(head + size) % kMaxVertices] = static_cast<std::uint8_t>(s);
      ++size;
    };
    for (int i = 0; i < initial_count; ++i) push(initial[i]);

    std::array<int, kMaxVertices> count{};
    while (size > 0 && p.cells < n_) {
      int s = queue[head];
      head = (head + 1) % kMaxVertices;
      --size;
      in_queue &= ~bit(s);

      VertexSet mask = 0;
      for (int i = s; i < p.end[s]; ++i) mask |= bit(p.lab[i]);

      for (int x = 0; x < n_;) {
        const int xe = p.end[x];
        if (xe - x > 1) {
          bool uniform = true;
          for (int i = x; i < xe; ++i) {
            count[p.lab[i]] = std::popcount(g_.neighbors(p.lab[i]) & mask);
            if (count[p.lab[i]] != count[p.lab[x]]) uniform = false;
          }
          if (!uniform) {
            // Insertion sort by count; cells are tiny.
            for (int i = x + 1; i < xe; ++i) {
              std::uint8_t v = p.lab[i];
              int j = i - 1;
              while (j >= x && count[p.lab[j]] > count[v]) {
                p.lab[j + 1] = p.lab[j];
                --j;
              }
              p.lab[j + 1] = v;
            }
            int fs = x;
            for (int i = x + 1; i <= xe; ++i) {
              if (i == xe || count[p.lab[i]] != count[p.lab[fs]]) {
                p.end[fs] = static_cast<std::uint8_t>(i);
                for (int k = fs; k < i; ++k) p.start[k] = static_cast<std::uint8_t>(fs);
                if (fs != x) ++p.cells;
                push(fs);
                fs = i;
              }
            }
          }
        }
        x = xe;
      }
    }
  }

  void individualize(Partition& p, int cell, int v) const {
    int at = cell;
    while (p.lab[at] != v) ++at;
    std::swap(p.lab[at], p.lab[cell]);
    const int e = p.end[cell];
    p.end[cell] = static_cast<std::uint8_t>(cell + 1);
    p.end[cell + 1] = static_cast<std::uint8_t>(e);
    for (int i = cell + 1; i < e; ++i) p.start[i] = static_cast<std::uint8_t>(cell + 1);
    ++p.cells;
    std::uint8_t splitter = static_cast<std::uint8_t>(cell);
    refine(p, &splitter, 1);
  }

  void certificate(const Partition& p, Cert& cert) const {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    for (int i = 0; i < n_; ++i) {
      VertexSet row = g_.neighbors(p.lab[i]);
      VertexSet mapped = 0;
      while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        mapped |= bit(pos[v]);
      }
      cert[i] = mapped;
    }
  }

  int compare(const Cert& a, const Cert& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  int common_prefix(const std::vector<int>& other) const {
    std::size_t d = 0;
    while (d < path_.size() && d < other.size() && path_[d] == other[d]) ++d;
    return static_cast<int>(d);
  }

  void record_automorphism(const std::array<std::uint8_t, kMaxVertices>& from, const Partition& to) {
    Permutation gen(n_);
    VertexSet fixed = 0;
    for (int i = 0; i < n_; ++i) {
      gen[from[i]] = to.lab[i];
      if (from[i] == to.lab[i]) fixed |= bit(from[i]);
    }
    if (std::popcount(fixed) == n_) return;
    generators_.push_back(std::move(gen));
    fixed_points_.push_back(fixed);
  }

  // Returns -1 to continue normally, or the depth of the ancestor at which
  // the search should resume with that ancestor's next child.
  int leaf(const Partition& p) {
    Cert cert;
    certificate(p, cert);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path_;
      return -1;
    }
    if (compare(cert, first_cert_) == 0) {
      record_automorphism(first_lab_, p);
      return common_prefix(first_path_);
    }
    int cmp = compare(cert, best_cert_);
    if (cmp == 0) {
      record_automorphism(best_lab_, p);
      return common_prefix(best_path_);
    }
    if (cmp > 0) {
      best_cert_ = cert;
      best_lab_ = p.lab;
      best_path_ = path_;
    }
    return -1;
  }

  int search(const Partition& p) {
    if (p.cells == n_) return leaf(p);

    int target = 0;
    while (p.end[target] - target == 1) target = p.end[target];
    const int target_end = p.end[target];

    std::uint8_t cell[kMaxVertices];
    int cell_size = 0;
    for (int i = target; i < target_end; ++i) cell[cell_size++] = p.lab[i];
    std::sort(cell, cell + cell_size);

    const int depth = static_cast<int>(path_.size());
    VertexSet fixed = 0;
    for (int v : path_) fixed |= bit(v);

    std::uint8_t explored[kMaxVertices];
    int explored_count = 0;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    DisjointSets orbits(n_);

    for (int c = 0; c < cell_size; ++c) {
      const int v = cell[c];
      if (explored_count > 0) {
        if (orbit_gens != generators_.size()) {
          orbits = DisjointSets(n_);
          for (std::size_t k = 0; k < generators_.size(); ++k) {
            if ((fixed_points_[k] & fixed) != fixed) continue;
            for (int u = 0; u < n_; ++u) orbits.unite(u, generators_[k][u]);
          }
          orbit_gens = generators_.size();
        }
        bool equivalent = false;
        for (int e = 0; e < explored_count && !equivalent; ++e) {
          equivalent = orbits.find(explored[e]) == orbits.find(v);
        }
        if (equivalent) continue;
      }
      explored[explored_count++] = static_cast<std::uint8_t>(v);

      Partition child = p;
      individualize(child, target, v);
      path_.push_back(v);
      int jump = search(child);
      path_.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  const Graph& g_;
  const int n_;

  std::vector<int> path_;
  bool have_first_ = false;
  Cert first_cert_{};
  Cert best_cert_{};
  std::array<std::uint8_t, kMaxVertices> first_lab_{};
  std::array<std::uint8_t, kMaxVertices> best_lab_{};
  std::vector<int> first_path_;
  std::vector<int> best_path_;

  std::vector<Permutation> generators_;
  std::vector<VertexSet> fixed_points_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return Searcher(g).run();
}

CanonicalCode canonical_code(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  const int n = g.order();
  CanonicalCode code;
  code.n = n;
  code.words.assign((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(labeling.order[i], labeling.order[j])) {
        code.words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
  }
  return code;
}

Graph canonical_form(const Graph& g) {
  return g.relabeled(canonical_labeling(g).positions());
}

}  // namespace randic
