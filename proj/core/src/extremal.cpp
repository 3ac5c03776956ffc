#include <cmath>
#include <limits>
#include <stdexcept>

#include "randic/enumerate.hpp"
#include "randic/index.hpp"
#include "randic/verifier.hpp"

namespace randic {

namespace {

constexpr double kScreenMargin = 1e-6;
constexpr double kSameValueTolerance = 1e-9;

struct Entry {
  RankedValue ranked;
  double approx = 0.0;
};

class Ranking {
 public:
  Ranking(int top, bool prescreen) : top_(top), prescreen_(prescreen) {}

  void add(const Graph& g) {
    ++seen_;
    const double f = randic_float(g);
    if (f < cutoff_) return;
    EdgeTypeSignature sig = edge_type_signature(g);

    for (auto& e : entries_) {
      if (std::abs(e.approx - f) > kSameValueTolerance) continue;
      for (auto& group : e.ranked.groups) {
        if (group.signature == sig) {
          group.graphs.push_back(g);
          return;
        }
      }
    }

    RadicalValue value = randic_of_signature(sig);
    std::size_t at = 0;
    while (at < entries_.size()) {
      const int c = compare(value, entries_[at].ranked.value);
      if (c == 0) {
        entries_[at].ranked.groups.push_back({std::move(sig), {g}});
        return;
      }
      if (c > 0) break;
      ++at;
    }
    if (prescreen_ && at >= static_cast<std::size_t>(top_)) return;

    Entry entry;
    entry.approx = value.to_double();
    entry.ranked.value = std::move(value);
    entry.ranked.groups.push_back({std::move(sig), {g}});
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(at), std::move(entry));

    if (prescreen_ && entries_.size() >= static_cast<std::size_t>(top_)) {
      entries_.resize(top_);
      cutoff_ = entries_.back().approx - kScreenMargin;
    }
  }

  std::vector<RankedValue> take() {
    if (entries_.size() > static_cast<std::size_t>(top_)) entries_.resize(top_);
    std::vector<RankedValue> out;
    for (auto& e : entries_) out.push_back(std::move(e.ranked));
    return out;
  }

  std::uint64_t seen() const { return seen_; }

 private:
  int top_;
  bool prescreen_;
  double cutoff_ = -std::numeric_limits<double>::infinity();
  std::vector<Entry> entries_;
  std::uint64_t seen_ = 0;
};

}  // namespace

std::size_t RankedValue::multiplicity() const {
  std::size_t total = 0;
  for (const auto& group : groups) total += group.graphs.size();
  return total;
}

ExtremalReport extremal_search(int n, int k, const ExtremalOptions& options) {
  if (options.top < 1) throw std::invalid_argument("top must be >= 1");
  if (k < 0) throw std::invalid_argument("cyclomatic number must be >= 0");
  const EnumSpec spec{n, n + k - 1, options.max_degree, true};
  validate(spec);
  if (!within_ceiling(spec)) {
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds the enumeration ceiling (n <= 12, or n <= 14 with "
                                "max degree <= 4)");
  }

  Ranking ranking(options.top, options.prescreen);
  enumerate(spec, [&](const Graph& g) { ranking.add(g); }, options.workers);

  ExtremalReport report;
  report.n = n;
  report.k = k;
  report.max_degree = options.max_degree;
  report.class_size = ranking.seen();
  report.ranked_values = ranking.take();
  return report;
}

}  // namespace randic
