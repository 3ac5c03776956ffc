#include "randic/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "randic/enumerate.hpp"
#include "randic/families.hpp"
#include "randic/index.hpp"

namespace randic {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

// ---------------------------------------------------------------------------
// Result bookkeeping

class Outcome {
 public:
  explicit Outcome(std::string claim_id) { result_.claim_id = std::move(claim_id); }

  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  void detail(std::string text) { result_.details.push_back(std::move(text)); }

  void counterexample(const Graph& g, std::string why) {
    escalate(Status::Counterexample);
    record(g, std::move(why));
  }
  void fail(std::string why) {
    escalate(Status::Fail);
    detail("FAIL: " + why);
  }
  void witness(const Graph& g, std::string why) { record(g, std::move(why)); }

  std::uint64_t violations() const { return violations_; }
  Status status() const { return result_.status; }

  VerificationResult finish() {
    if (violations_ > result_.witnesses.size()) {
      detail("violations: " + std::to_string(violations_) + " (first " +
             std::to_string(result_.witnesses.size()) + " shown)");
    }
    return std::move(result_);
  }

 private:
  void escalate(Status s) {
    if (s == Status::Fail || result_.status == Status::Pass) result_.status = s;
  }
  void record(const Graph& g, std::string why) {
    ++violations_;
    if (result_.witnesses.size() < kMaxWitnesses) {
      result_.witnesses.push_back({write_graph6(g), randic_exact(g), std::move(why)});
    }
  }

  VerificationResult result_;
  std::uint64_t violations_ = 0;
};

std::string dec(const RadicalValue& v) { return to_decimal(v, 12); }

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

// Every connected graph with n in [n_lo, n_hi] and cyclomatic number in
// [k_lo, k_hi], in (n, k, enumeration) order.
void for_each_connected(std::pair<int, int> n_range, std::pair<int, int> k_range, int workers,
                        Outcome& out, const std::function<void(const Graph&, int)>& fn) {
  for (int n = std::max(n_range.first, 1); n <= n_range.second; ++n) {
    for (int k = std::max(k_range.first, 0); k <= k_range.second; ++k) {
      const EnumSpec spec{n, n + k - 1, std::nullopt, true};
      if (spec.m > n * (n - 1) / 2) break;
      std::uint64_t classes = 0;
      enumerate(spec, [&](const Graph& g) {
        ++classes;
        fn(g, k);
      }, workers);
      out.detail(nk(n, k) + " classes=" + std::to_string(classes));
    }
  }
}

std::vector<CanonicalCode> codes_of(const std::vector<Graph>& graphs) {
  std::vector<CanonicalCode> codes;
  for (const auto& g : graphs) codes.push_back(canonical_code(g));
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::vector<Graph> graphs_of(const RankedValue& ranked) {
  std::vector<Graph> out;
  for (const auto& group : ranked.groups) out.insert(out.end(), group.graphs.begin(), group.graphs.end());
  return out;
}

// ---------------------------------------------------------------------------
// Parameter handling

int require_range(std::optional<int> given, int fallback, int lo, int hi, const char* what) {
  const int v = given.value_or(fallback);
  if (v < lo || v > hi) {
    throw std::invalid_argument(std::string(what) + " = " + std::to_string(v) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

using Pair = std::pair<int, int>;

// (n, k) pairs for a theorem claim: the defaults, or the single pair selected
// by --n/--k after checking it against `admissible`.
std::vector<Pair> theorem_pairs(const ClaimParams& p, std::vector<Pair> defaults,
                                std::optional<int> fixed_k,
                                const std::function<std::string(int, int)>& admissible) {
  if (!p.n && !p.k) return defaults;
  int k = 0;
  if (fixed_k) {
    if (p.k && *p.k != *fixed_k) {
      throw std::invalid_argument("this claim fixes k = " + std::to_string(*fixed_k));
    }
    k = *fixed_k;
  } else if (p.k) {
    k = *p.k;
  } else {
    throw std::invalid_argument("this claim needs --k together with --n");
  }
  if (!p.n) {
    std::vector<Pair> out;
    for (const auto& pr : defaults) {
      if (pr.second == k) out.push_back(pr);
    }
    if (out.empty()) throw std::invalid_argument("no default n for k = " + std::to_string(k));
    return out;
  }
  const int n = *p.n;
  if (const std::string why = admissible(n, k); !why.empty()) {
    throw std::invalid_argument(nk(n, k) + " out of range: " + why);
  }
  if (!within_ceiling({n, n + k - 1, std::nullopt, true})) {
    throw std::invalid_argument(nk(n, k) + " exceeds the enumeration ceiling n <= 12");
  }
  return {{n, k}};
}

// ---------------------------------------------------------------------------
// Extremal theorem checks

using Membership = std::function<bool(const Graph&)>;

// The top value equals `expected`, every graph attaining it satisfies
// `member`, and `constructed` (a family member) attains it.
void check_first(Outcome& out, const ExtremalReport& report, const RadicalValue& expected,
                 const Membership& member, const Graph& constructed, const std::string& family) {
  const std::string where = nk(report.n, report.k);
  if (report.ranked_values.empty()) {
    out.fail(where + ": empty class");
    return;
  }
  const RankedValue& top = report.ranked_values.front();
  out.detail(where + " classes=" + std::to_string(report.class_size) + " first=" + dec(top.value) +
             " multiplicity=" + std::to_string(top.multiplicity()));
  const int c = compare(top.value, expected);
  if (c != 0) {
    for (const auto& g : graphs_of(top)) {
      out.counterexample(g, where + ": maximum " + dec(top.value) + (c > 0 ? " exceeds " : " is below ") +
                                "the bound " + dec(expected));
    }
    return;
  }
  for (const auto& g : graphs_of(top)) {
    if (!member(g)) out.counterexample(g, where + ": attains the maximum but is not in " + family);
  }
  const auto codes = codes_of(graphs_of(top));
  if (!std::binary_search(codes.begin(), codes.end(), canonical_code(constructed))) {
    out.counterexample(constructed, where + ": member of " + family + " misses the maximum");
  }
}

// Among graphs failing `excluded`, the largest value equals `expected` and
// is attained exactly by members of the family.
void check_second(Outcome& out, const ExtremalReport& report, const Membership& excluded,
                  const RadicalValue& expected, const Membership& member, const Graph& constructed,
                  const std::string& family) {
  const std::string where = nk(report.n, report.k);
  for (std::size_t r = 0; r < report.ranked_values.size(); ++r) {
    const RankedValue& ranked = report.ranked_values[r];
    std::vector<Graph> rest;
    for (const auto& g : graphs_of(ranked)) {
      if (!excluded(g)) rest.push_back(g);
    }
    if (rest.empty()) continue;
    out.detail(where + " rank=" + std::to_string(r + 1) + " value=" + dec(ranked.value) +
               " non-excluded=" + std::to_string(rest.size()));
    const int c = compare(ranked.value, expected);
    if (c != 0) {
      for (const auto& g : rest) {
        out.counterexample(g, where + ": largest value outside the excluded set is " + dec(ranked.value) +
                                  ", bound " + dec(expected));
      }
      return;
    }
    for (const auto& g : rest) {
      if (!member(g)) out.counterexample(g, where + ": attains the bound but is not in " + family);
    }
    const auto codes = codes_of(rest);
    if (!std::binary_search(codes.begin(), codes.end(), canonical_code(constructed))) {
      out.counterexample(constructed, where + ": member of " + family + " misses the bound");
    }
    return;
  }
  out.fail(where + ": every ranked graph lies in the excluded set; raise top");
}

Membership member_of(FamilyName name, int n, int k) {
  const FamilySpec spec = make_family_spec(name, n, k);
  return [spec](const Graph& g) { return is_member(g, spec); };
}

Graph constructed(FamilyName name, int n, int k) {
  return construct_member(make_family_spec(name, n, k));
}

RadicalValue closed_form(FamilyName name, int n, int k) {
  return *make_family_spec(name, n, k).expected_value;
}

ExtremalReport search(int n, int k, int top, int workers) {
  ExtremalOptions opt;
  opt.top = top;
  opt.workers = workers;
  return extremal_search(n, k, opt);
}

// A "first/second maximum" reading of a report. `first` is the family of
// maximizers; `second` (optional) is the family attaining the maximum among
// graphs outside `first`.
void check_reading(Outcome& out, const ExtremalReport& report, std::optional<FamilyName> first,
                   std::optional<FamilyName> second) {
  const int n = report.n;
  const int k = report.k;
  // A family with no members at (n, k) cannot hold the graphs of a
  // nonempty rank.
  auto empty_family = [&](FamilyName family, std::size_t rank) {
    const int bound = feasibility_bound(family, k);
    if (n >= bound) return false;
    if (rank < report.ranked_values.size()) {
      for (const auto& g : graphs_of(report.ranked_values[rank])) {
        out.counterexample(g, nk(n, k) + ": rank " + std::to_string(rank + 1) + " is attained but " +
                                  to_string(family) + " is empty (needs n >= " + std::to_string(bound) + ")");
      }
    }
    return true;
  };
  if (first && !empty_family(*first, 0)) {
    check_first(out, report, closed_form(*first, n, k), member_of(*first, n, k),
                constructed(*first, n, k), to_string(*first));
  }
  if (second && !empty_family(*second, 1)) {
    const FamilyName excluded_family = first.value_or(FamilyName::Lambda1);
    check_second(out, report, member_of(excluded_family, n, k), closed_form(*second, n, k),
                 member_of(*second, n, k), constructed(*second, n, k), to_string(*second));
  }
}

void check_theorem_pair(Outcome& out, int n, int k, std::optional<FamilyName> first,
                        std::optional<FamilyName> second, int workers) {
  check_reading(out, search(n, k, second ? 2 : 1, workers), first, second);
}

// ---------------------------------------------------------------------------
// Lemma 1 probes

struct DeltaRange {
  std::optional<RadicalValue> lo;
  std::optional<RadicalValue> hi;
  std::uint64_t count = 0;

  void add(const RadicalValue& v) {
    ++count;
    if (!lo || compare(v, *lo) < 0) lo = v;
    if (!hi || compare(v, *hi) > 0) hi = v;
  }
  std::string describe(const std::string& label) const {
    if (count == 0) return label + ": no sites";
    return label + ": sites=" + std::to_string(count) + " min=" + dec(*lo) + " max=" + dec(*hi);
  }
};

int pendant_length(const Graph& g, int hub, int first) {
  for (const auto& p : pendant_paths(g, hub)) {
    if (p.first == first) return p.length;
  }
  return 0;
}

const Rational kMarginT1(1, 100);
const Rational kMarginT2(6, 10000000000L);
const Rational kMarginT3b(38, 1000);
const Rational kMarginT5(68, 10000);

void probe_t1(Outcome& out, std::pair<int, int> nr, std::pair<int, int> kr, int workers) {
  DeltaRange all;
  DeltaRange long_paths;
  for_each_connected(nr, kr, workers, out, [&](const Graph& g, int) {
    for (const auto& site : find_sites(g, TransformKind::T1)) {
      const RadicalValue d = delta_randic_unchecked(g, site);
      all.add(d);
      const std::string at = site.to_string() + " delta=" + dec(d);
      if (sign(d) <= 0) {
        out.counterexample(g, at + " is not positive");
        continue;
      }
      const int k = pendant_length(g, site.vertices[0], site.vertices[1]);
      const int l = pendant_length(g, site.vertices[0], site.vertices[2]);
      if (k >= 2 && l >= 2) {
        long_paths.add(d);
        if (sign(d - RadicalValue(kMarginT1)) <= 0) out.counterexample(g, at + " is not above 0.01");
      }
    }
  });
  out.detail(all.describe("T1"));
  out.detail(long_paths.describe("T1 with both paths of >= 2 vertices"));
}

void probe_t2(Outcome& out, std::pair<int, int> nr, std::pair<int, int> kr, int workers) {
  DeltaRange all;
  DeltaRange long_paths;
  for_each_connected(nr, kr, workers, out, [&](const Graph& g, int) {
    for (const auto& site : find_sites(g, TransformKind::T2)) {
      const RadicalValue d = delta_randic_unchecked(g, site);
      all.add(d);
      const std::string at = site.to_string() + " delta=" + dec(d);
      if (sign(d) <= 0) {
        out.counterexample(g, at + " is not positive");
        continue;
      }
      const int k = pendant_length(g, site.vertices[0], site.vertices[1]);
      const int l = pendant_length(g, site.vertices[2], site.vertices[3]);
      if (k >= 2 && l >= 2) {
        long_paths.add(d);
        if (sign(d - RadicalValue(kMarginT2)) < 0) out.counterexample(g, at + " is below 6e-10");
      }
    }
  });
  out.detail(all.describe("T2"));
  out.detail(long_paths.describe("T2 with both paths of >= 2 vertices"));
}

enum class T3Part { A, B, C };

void probe_t3(Outcome& out, T3Part part, std::pair<int, int> nr, std::pair<int, int> kr, int workers) {
  DeltaRange gaps;
  DeltaRange equal_class;
  std::uint64_t pairs22 = 0;
  for_each_connected(nr, kr, workers, out, [&](const Graph& g, int) {
    struct Sub {
      std::pair<int, int> edge;
      RadicalValue delta;
      int du;
      int dv;
    };
    std::vector<Sub> subs;
    for (const auto& [x, y] : g.edges()) {
      const TransformSite site{TransformKind::T3, {x, y}};
      subs.push_back({{x, y}, delta_randic_unchecked(g, site), g.degree(x), g.degree(y)});
    }
    auto label = [](const Sub& s) {
      return std::to_string(s.edge.first) + "-" + std::to_string(s.edge.second);
    };

    if (part == T3Part::A) {
      // xy with both ends of degree >= 3 versus wz with deg(z) in {1, 2}.
      for (const auto& xy : subs) {
        if (xy.du < 3 || xy.dv < 3) continue;
        for (const auto& wz : subs) {
          if (std::min(wz.du, wz.dv) > 2) continue;
          const RadicalValue gap = wz.delta - xy.delta;
          gaps.add(gap);
          if (sign(gap) <= 0) {
            out.counterexample(g, "subdividing " + label(wz) + " does not beat " + label(xy) +
                                      ": R(G2)-R(G1)=" + dec(gap));
          }
        }
      }
    } else if (part == T3Part::B) {
      // xy with deg(x) = 2 versus wz with deg(w) >= 3, deg(z) = 1.
      for (const auto& xy : subs) {
        if (xy.du != 2 && xy.dv != 2) continue;
        for (const auto& wz : subs) {
          const bool shape = (wz.du >= 3 && wz.dv == 1) || (wz.dv >= 3 && wz.du == 1);
          if (!shape) continue;
          const RadicalValue gap = wz.delta - xy.delta;
          gaps.add(gap);
          if (sign(gap - RadicalValue(kMarginT3b)) <= 0) {
            out.counterexample(g, "subdividing " + label(wz) + " versus " + label(xy) +
                                      ": R(G2)-R(G1)=" + dec(gap) + " is not above 0.038");
          }
        }
      }
    } else {
      // Any two edges each with an endpoint of degree 2 give equal results.
      std::optional<EdgeTypeSignature> reference;
      std::optional<EdgeTypeSignature> reference22;
      for (const auto& s : subs) {
        if (s.du != 2 && s.dv != 2) continue;
        equal_class.add(s.delta);
        const Graph after = apply_site_unchecked(g, {TransformKind::T3, {s.edge.first, s.edge.second}});
        const EdgeTypeSignature sig = edge_type_signature(after);
        if (!reference) reference = sig;
        if (sig != *reference) {
          out.counterexample(g, "subdividing " + label(s) + " changes the edge-type signature differently");
        }
        if (s.du == 2 && s.dv == 2) {
          ++pairs22;
          if (!reference22) reference22 = sig;
          if (sig != *reference22) {
            out.counterexample(g, "degree-(2,2) subdivisions of " + label(s) + " differ");
          }
        }
      }
    }
  });
  if (part == T3Part::C) {
    out.detail(equal_class.describe("T3 deltas on edges with a degree-2 end"));
    out.detail("degree-(2,2) subdivisions checked: " + std::to_string(pairs22));
    if (equal_class.count > 0 && compare(*equal_class.lo, *equal_class.hi) != 0) {
      out.fail("T3 deltas with a degree-2 end are not all equal");
    }
  } else {
    out.detail(gaps.describe(part == T3Part::A ? "R(G2)-R(G1), part a" : "R(G2)-R(G1), part b"));
  }
}

// deg(v1) = 2, deg(v3) = 3, deg(u1) = 3, deg(v4) = 4 and the other neighbours
// of v4 have degrees {3, 4, 4}.
bool t4_equality_shape(const Graph& g, const TransformSite& s) {
  const auto& a = s.vertices;
  if (g.degree(a[0]) != 2 || g.degree(a[2]) != 3 || g.degree(a[4]) != 3 || g.degree(a[3]) != 4) {
    return false;
  }
  std::vector<int> others;
  VertexSet row = g.neighbors(a[3]) & ~bit(a[4]);
  while (row) {
    others.push_back(g.degree(std::countr_zero(row)));
    row &= row - 1;
  }
  std::sort(others.begin(), others.end());
  return others == std::vector<int>{3, 4, 4};
}

// d1 = deg(u1) <= 3 and some other neighbour of v4 has degree <= 3.
bool t4_hypothesis(const Graph& g, const TransformSite& s) {
  const int v4 = s.vertices[3];
  const int u1 = s.vertices[4];
  if (g.degree(u1) > 3) return false;
  VertexSet row = g.neighbors(v4) & ~bit(u1);
  while (row) {
    if (g.degree(std::countr_zero(row)) <= 3) return true;
    row &= row - 1;
  }
  return false;
}

Graph t4_equality_witness() {
  return Graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 4}, {3, 1}, {4, 2}, {3, 7}, {4, 7}, {1, 2},
                   {5, 6}, {5, 7}, {6, 8}});
}

void probe_t4(Outcome& out, std::pair<int, int> nr, std::pair<int, int> kr, int workers) {
  DeltaRange in_scope;
  std::uint64_t all_sites = 0;
  std::uint64_t zeros = 0;
  for_each_connected(nr, kr, workers, out, [&](const Graph& g, int) {
    for (const auto& site : find_sites(g, TransformKind::T4)) {
      ++all_sites;
      if (!t4_hypothesis(g, site)) continue;
      const RadicalValue d = delta_randic_unchecked(g, site);
      in_scope.add(d);
      const int s = sign(d);
      const std::string at = site.to_string() + " delta=" + dec(d);
      if (s < 0) out.counterexample(g, at + " is negative");
      if (s == 0) ++zeros;
      if ((s == 0) != t4_equality_shape(g, site)) {
        out.counterexample(g, at + (s == 0 ? " is zero outside" : " is nonzero inside") +
                                  " the equality configuration");
      }
    }
  });
  out.detail("T4 sites=" + std::to_string(all_sites) + " with d1, d2 <= 3: " +
             std::to_string(in_scope.count) + " zero-delta: " + std::to_string(zeros));
  out.detail(in_scope.describe("T4 with d1, d2 <= 3"));

  const Graph w = t4_equality_witness();
  const TransformSite site{TransformKind::T4, {6, 5, 7, 0, 1}};
  const RadicalValue d = delta_randic(w, site);
  if (!d.is_zero() || !t4_equality_shape(w, site) || !t4_hypothesis(w, site)) {
    out.fail("equality witness " + write_graph6(w) + " " + site.to_string() + " has delta " + dec(d));
  } else {
    out.witness(w, "equality witness " + site.to_string() + " delta=0");
  }
}

void probe_t5(Outcome& out, std::pair<int, int> nr, std::pair<int, int> kr, int workers) {
  DeltaRange all;
  for_each_connected(nr, kr, workers, out, [&](const Graph& g, int) {
    for (const auto& site : find_sites(g, TransformKind::T5)) {
      const RadicalValue d = delta_randic_unchecked(g, site);
      all.add(d);
      const std::string at = site.to_string() + " delta=" + dec(d);
      if (sign(d) >= 0) {
        out.counterexample(g, at + " is not negative");
      } else if (sign(-d - RadicalValue(kMarginT5)) <= 0) {
        out.counterexample(g, at + " has |delta| <= 0.0068");
      }
    }
  });
  out.detail(all.describe("T5"));
}

// ---------------------------------------------------------------------------
// Claim table

using Runner = std::function<void(Outcome&, const ClaimParams&)>;

std::pair<int, int> lemma1_ranges(const ClaimParams& p, int& k_hi) {
  const int n = require_range(p.n, 9, 2, 12, "n");
  k_hi = require_range(p.k, 6, 0, 20, "k");
  return {2, n};
}

void lemma1_notes(Outcome& out) {
  out.note("pendant path lengths count vertices");
}

void run_lemma1_1(Outcome& out, const ClaimParams& p) {
  int k = 0;
  const auto nr = lemma1_ranges(p, k);
  lemma1_notes(out);
  out.note("the 0.01 margin is checked when both paths have at least 2 vertices; positivity elsewhere");
  probe_t1(out, nr, {0, k}, p.workers);
}

void run_lemma1_2(Outcome& out, const ClaimParams& p) {
  int k = 0;
  const auto nr = lemma1_ranges(p, k);
  lemma1_notes(out);
  out.note("neighbour condition read as deg(v) >= 2 for every neighbour v of x in the graph without P and Q");
  probe_t2(out, nr, {0, k}, p.workers);
}

void run_lemma1_3(Outcome& out, const ClaimParams& p, T3Part part) {
  int k = 0;
  const auto nr = lemma1_ranges(p, k);
  if (part == T3Part::A) {
    out.note("direction checked: subdividing wz with deg(z) in {1,2} gives the larger index; deg(w) unconstrained");
  }
  if (part == T3Part::C) {
    out.note("checked for every edge with an endpoint of degree 2, including the degree-(2,2) case");
  }
  probe_t3(out, part, nr, {0, k}, p.workers);
}

void run_lemma1_4(Outcome& out, const ClaimParams& p) {
  int k = 0;
  const auto nr = lemma1_ranges(p, k);
  out.note("v4 has maximum degree; d1 = deg(u1) and d2 is another neighbour of v4, both <= 3");
  probe_t4(out, nr, {0, k}, p.workers);
}

void run_lemma1_5(Outcome& out, const ClaimParams& p) {
  int k = 0;
  const auto nr = lemma1_ranges(p, k);
  out.note("margin checked as R(G) - R(G') > 0.0068");
  probe_t5(out, nr, {0, k}, p.workers);
}

void run_lemma2(Outcome& out, const ClaimParams& p) {
  const int n = require_range(p.n, 8, 2, 10, "n");
  out.note("graphs with at least two vertices (a single vertex has degree 0)");
  for (int order = 2; order <= n; ++order) {
    for_each_connected({order, order}, {0, order * (order - 1) / 2}, p.workers, out,
                       [&](const Graph& g, int) {
                         if (!check_degree_identities(g)) out.counterexample(g, "degree identity fails");
                       });
  }
}

void run_lemma5(Outcome& out, const ClaimParams& p) {
  const int n = require_range(p.n, 8, 2, 10, "n");
  out.note("n_i(T) read as n_i(G)");
  std::uint64_t applicable = 0;
  for (int order = 2; order <= n; ++order) {
    for_each_connected({order, order}, {0, order * (order - 1) / 2}, p.workers, out,
                       [&](const Graph& g, int) {
                         const auto prof = degree_profile(g);
                         for (const auto& [i, count] : prof.counts) {
                           if (i >= 3 && i <= order - 1 && count < order) ++applicable;
                         }
                         if (!check_mii_bound(g)) out.counterexample(g, "m_ii bound fails");
                       });
  }
  out.detail("degree classes meeting the precondition: " + std::to_string(applicable));
}

void run_cor3(Outcome& out, const ClaimParams& p) {
  const int n = require_range(p.n, 9, 2, 11, "n");
  for_each_connected({2, n}, {5, 6}, p.workers, out, [&](const Graph& g, int) {
    if (!check_degree_identities(g)) out.counterexample(g, "specialized degree identity fails");
  });
}

void run_cor4(Outcome& out, const ClaimParams& p) {
  const int n = require_range(p.n, 12, 12, 14, "n");
  out.note("enumerated with maximum degree 3; the converse holds because each profile fixes m");
  for (int k : {5, 6}) {
    const EnumSpec spec{n, n + k - 1, 3, true};
    std::uint64_t classes = 0;
    std::uint64_t checked = 0;
    enumerate(spec, [&](const Graph& g) {
      ++classes;
      if (g.max_degree() != 3) return;
      const auto prof = degree_profile(g);
      const int n1 = prof.count(1);
      if (n1 > 1) return;
      ++checked;
      const FamilyName host = k == 5 ? (n1 == 0 ? FamilyName::Upsilon1 : FamilyName::Upsilon2)
                                     : (n1 == 0 ? FamilyName::Upsilon3 : FamilyName::Upsilon4);
      if (!is_member(g, make_family_spec(host, n, k))) {
        out.counterexample(g, nk(n, k) + ": not in " + to_string(host));
      }
    }, p.workers);
    out.detail(nk(n, k) + " max degree 3 classes=" + std::to_string(classes) +
               " with n1 <= 1: " + std::to_string(checked));
  }
  for (FamilyName host : {FamilyName::Upsilon1, FamilyName::Upsilon2, FamilyName::Upsilon3,
                          FamilyName::Upsilon4}) {
    const FamilySpec spec = make_family_spec(host, n);
    const Graph g = construct_member(spec);
    const int n1 = degree_profile(g).count(1);
    if (cyclomatic_number(g) != spec.k || n1 > 1 || g.max_degree() != 3) {
      out.counterexample(g, to_string(host) + " member with cyclomatic number " +
                                std::to_string(cyclomatic_number(g)));
    }
  }
}

void run_regular(Outcome& out, int n, int k, int workers, bool petersen) {
  ExtremalOptions opt;
  opt.workers = workers;
  const ExtremalReport report = extremal_search(n, k, opt);
  check_first(out, report, RadicalValue::fraction(n, 2), member_of(FamilyName::Regular3, n, k),
              cubic_graph(n), "the 3-regular graphs");
  const std::uint64_t cubic = count({n, n + k - 1, 3, true}, workers);
  const std::size_t found = report.ranked_values.empty() ? 0 : report.ranked_values.front().multiplicity();
  out.detail("connected cubic graphs on " + std::to_string(n) + " vertices: " + std::to_string(cubic));
  if (found != cubic) {
    out.fail("maximizer count " + std::to_string(found) + " differs from the cubic count " +
             std::to_string(cubic));
  }
  if (petersen) {
    const auto codes = codes_of(graphs_of(report.ranked_values.front()));
    const bool present = std::binary_search(codes.begin(), codes.end(), canonical_code(cubic_graph(10)));
    out.detail(std::string("Petersen graph among maximizers: ") + (present ? "yes" : "no"));
    if (!present) out.fail("Petersen graph missing from the maximizers");
  }
}

std::string at_least(int n, int bound) {
  return n >= bound ? "" : "needs n >= " + std::to_string(bound);
}

const std::vector<std::pair<std::string, Runner>>& claim_table() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"lemma1_1", run_lemma1_1},
      {"lemma1_2", run_lemma1_2},
      {"lemma1_3a", [](Outcome& o, const ClaimParams& p) { run_lemma1_3(o, p, T3Part::A); }},
      {"lemma1_3b", [](Outcome& o, const ClaimParams& p) { run_lemma1_3(o, p, T3Part::B); }},
      {"lemma1_3c", [](Outcome& o, const ClaimParams& p) { run_lemma1_3(o, p, T3Part::C); }},
      {"lemma1_4", run_lemma1_4},
      {"lemma1_5", run_lemma1_5},
      {"lemma2", run_lemma2},
      {"cor3", run_cor3},
      {"cor4", run_cor4},
      {"lemma5", run_lemma5},
      {"thm_tth1_1",
       [](Outcome& o, const ClaimParams& p) {
         for (auto [n, k] : theorem_pairs(p, {{9, 5}, {10, 5}}, 5, [](int n, int) { return at_least(n, 9); })) {
           check_theorem_pair(o, n, k, FamilyName::Omega1, std::nullopt, p.workers);
         }
       }},
      {"thm_tth1_2",
       [](Outcome& o, const ClaimParams& p) {
         for (auto [n, k] : theorem_pairs(p, {{11, 6}}, 6, [](int n, int) { return at_least(n, 11); })) {
           check_theorem_pair(o, n, k, FamilyName::Omega3, std::nullopt, p.workers);
         }
       }},
      {"remark7_1",
       [](Outcome& o, const ClaimParams& p) {
         for (auto [n, k] : theorem_pairs(p, {{8, 5}}, 5, [](int n, int) { return n == 8 ? "" : "needs n = 8"; })) {
           run_regular(o, n, k, p.workers, false);
         }
       }},
      {"remark7_2",
       [](Outcome& o, const ClaimParams& p) {
         for (auto [n, k] : theorem_pairs(p, {{10, 6}}, 6, [](int n, int) { return n == 10 ? "" : "needs n = 10"; })) {
           run_regular(o, n, k, p.workers, true);
         }
       }},
      {"thm_basth1_1",
       [](Outcome& o, const ClaimParams& p) {
         const auto pairs = theorem_pairs(p, {{5, 3}, {6, 3}, {7, 4}, {8, 4}, {9, 5}, {10, 5}}, std::nullopt,
                                          [](int n, int k) {
                                            return k < 3 ? std::string("needs k >= 3") : at_least(n, 2 * k - 1);
                                          });
         for (auto [n, k] : pairs) check_theorem_pair(o, n, k, FamilyName::Lambda1, std::nullopt, p.workers);
       }},
      {"thm_basth1_2",
       [](Outcome& o, const ClaimParams& p) {
         const auto pairs = theorem_pairs(p, {{4, 3}, {6, 4}, {8, 5}, {10, 6}}, std::nullopt, [](int n, int k) {
           return k < 3 ? std::string("needs k >= 3") : (n == 2 * k - 2 ? "" : "needs n = 2k - 2");
         });
         for (auto [n, k] : pairs) check_theorem_pair(o, n, k, FamilyName::Regular3, std::nullopt, p.workers);
       }},
      {"thm_tth3_1",
       [](Outcome& o, const ClaimParams& p) {
         o.note("omega5 is read by its edge signature m43=4, m33=6, m23=2 (a gamma2 family with k = 5); "
                "a host set of maximum degree 3 cannot contain it");
         for (auto [n, k] : theorem_pairs(p, {{9, 5}, {10, 5}}, 5, [](int n, int) { return at_least(n, 9); })) {
           check_theorem_pair(o, n, k, FamilyName::Omega1, FamilyName::Omega5, p.workers);
         }
       }},
      {"thm_tth3_2",
       [](Outcome& o, const ClaimParams& p) {
         o.note("omega7 is read by its edge signature m43=4, m33=9, m23=2 (a gamma2 family with k = 6)");
         o.note("the proof's reference to omega5 in the cyclomatic-6 case is read as omega7");
         for (auto [n, k] : theorem_pairs(p, {{11, 6}}, 6, [](int n, int) { return at_least(n, 11); })) {
           check_theorem_pair(o, n, k, FamilyName::Omega3, FamilyName::Omega7, p.workers);
         }
       }},
      {"thm_basth2_1",
       [](Outcome& o, const ClaimParams& p) {
         const auto pairs = theorem_pairs(p, {{7, 4}, {8, 4}, {9, 5}, {10, 5}}, std::nullopt, [](int n, int k) {
           return k < 4 ? std::string("needs k >= 4") : at_least(n, 2 * k - 1);
         });
         for (auto [n, k] : pairs) {
           check_theorem_pair(o, n, k, FamilyName::Lambda1, FamilyName::Gamma2, p.workers);
         }
       }},
      {"thm_basth2_2",
       [](Outcome& o, const ClaimParams& p) {
         const auto pairs = theorem_pairs(p, {{6, 4}, {8, 5}, {10, 6}}, std::nullopt, [](int n, int k) {
           return k < 4 ? std::string("needs k >= 4") : (n == 2 * k - 2 ? "" : "needs n = 2k - 2");
         });
         for (auto [n, k] : pairs) {
           check_theorem_pair(o, n, k, FamilyName::Regular3, FamilyName::Gamma2, p.workers);
         }
       }},
      {"corollary_final_1",
       [](Outcome& o, const ClaimParams& p) {
         for (auto [n, k] : theorem_pairs(p, {{9, 5}, {10, 5}}, 5, [](int n, int) { return at_least(n, 9); })) {
           check_theorem_pair(o, n, k, FamilyName::Omega1, FamilyName::Omega5, p.workers);
         }
       }},
      {"corollary_final_2",
       [](Outcome& o, const ClaimParams& p) {
         o.note("claim as stated: omega7 first and omega8 second");
         for (auto [n, k] : theorem_pairs(p, {{11, 6}}, 6, [](int n, int) { return at_least(n, 11); })) {
           const ExtremalReport report = search(n, k, 2, p.workers);
           check_reading(o, report, FamilyName::Omega7, FamilyName::Omega8);
           if (!report.ranked_values.empty()) {
             const auto top = graphs_of(report.ranked_values.front());
             for (FamilyName family : {FamilyName::Omega3, FamilyName::Omega7}) {
               const auto member = member_of(family, n, k);
               const auto hits = std::count_if(top.begin(), top.end(), member);
               o.detail(nk(n, k) + ": rank-1 graphs in " + to_string(family) + ": " + std::to_string(hits) +
                        " of " + std::to_string(top.size()));
             }
           }
           Outcome alt("alternative");
           check_reading(alt, report, FamilyName::Omega3, FamilyName::Omega7);
           o.detail(nk(n, k) + ": reading omega3 first, omega7 second " +
                    (alt.status() == Status::Pass ? "matches" : "does not match") + " exhaustive search");
         }
       }},
      {"theorem_final_1",
       [](Outcome& o, const ClaimParams& p) {
         const auto pairs = theorem_pairs(p, {{7, 4}, {8, 4}, {9, 5}, {10, 5}}, std::nullopt, [](int n, int k) {
           return k < 4 ? std::string("needs k >= 4") : at_least(n, 2 * k - 1);
         });
         for (auto [n, k] : pairs) {
           check_theorem_pair(o, n, k, FamilyName::Lambda1, FamilyName::Gamma2, p.workers);
         }
       }},
      {"theorem_final_2",
       [](Outcome& o, const ClaimParams& p) {
         const auto pairs = theorem_pairs(p, {{6, 4}, {8, 5}, {10, 6}}, std::nullopt, [](int n, int k) {
           return k < 4 ? std::string("needs k >= 4") : (n == 2 * k - 2 ? "" : "needs n = 2k - 2");
         });
         for (auto [n, k] : pairs) {
           check_theorem_pair(o, n, k, FamilyName::Regular3, FamilyName::Gamma2, p.workers);
         }
       }},
  };
  return table;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Counterexample: return "COUNTEREXAMPLE";
  }
  return "FAIL";
}

bool check_degree_identities(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("degree identities need at least two vertices");
  const int gamma = cyclomatic_number(g);
  const DegreeProfile prof = degree_profile(g);
  long s1 = 0;
  long s2 = 0;
  for (const auto& [i, count] : prof.counts) {
    if (i >= 3) {
      s1 += static_cast<long>(i - 2) * count;
      s2 += static_cast<long>(i - 1) * count;
    }
  }
  const long n = g.order();
  const long n1 = prof.count(1);
  const long n2 = prof.count(2);
  bool ok = n1 == 2 - 2L * gamma + s1 && n2 == 2L * gamma + n - 2 - s2;
  if (gamma == 5) ok = ok && n1 == s1 - 8 && n2 == n + 8 - s2;
  if (gamma == 6) ok = ok && n1 == s1 - 10 && n2 == n + 10 - s2;
  return ok;
}

bool check_mii_bound(const Graph& g) {
  const int gamma = cyclomatic_number(g);
  const DegreeProfile prof = degree_profile(g);
  const EdgeTypeSignature sig = edge_type_signature(g);
  const int n = g.order();
  const int slack = prof.count(1) == 0 ? -2 : -1;
  for (const auto& [i, count] : prof.counts) {
    if (i < 3 || i > n - 1 || count <= 0 || count >= n) continue;
    if (sig.count(i, i) > count + slack + gamma) return false;
  }
  return true;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, runner] : claim_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerificationResult verify_claim(std::string_view claim_id, const ClaimParams& params) {
  if (params.workers < 1) throw std::invalid_argument("workers must be >= 1");
  for (const auto& [id, runner] : claim_table()) {
    if (id == claim_id) {
      Outcome out(id);
      runner(out, params);
      return out.finish();
    }
  }
  throw std::invalid_argument("unknown claim '" + std::string(claim_id) + "'");
}

VerificationResult probe_transform_monotonicity(TransformKind kind, std::pair<int, int> n_range,
                                                std::pair<int, int> k_range, int workers) {
  Outcome out("probe_" + to_string(kind));
  switch (kind) {
    case TransformKind::T1: probe_t1(out, n_range, k_range, workers); break;
    case TransformKind::T2: probe_t2(out, n_range, k_range, workers); break;
    case TransformKind::T3:
      probe_t3(out, T3Part::A, n_range, k_range, workers);
      probe_t3(out, T3Part::B, n_range, k_range, workers);
      probe_t3(out, T3Part::C, n_range, k_range, workers);
      break;
    case TransformKind::T4: probe_t4(out, n_range, k_range, workers); break;
    case TransformKind::T5: probe_t5(out, n_range, k_range, workers); break;
  }
  return out.finish();
}

}  // namespace randic
