#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "randic/graph.hpp"
#include "randic/radical.hpp"
#include "randic/transforms.hpp"

namespace randic {

/// Graphs of one edge-type signature, in enumeration order.
struct SignatureGroup {
  EdgeTypeSignature signature;
  std::vector<Graph> graphs;
};

/// One distinct Randic value with every graph of the class attaining it.
struct RankedValue {
  RadicalValue value;
  std::vector<SignatureGroup> groups;

  std::size_t multiplicity() const;
};

struct ExtremalReport {
  int n = 0;
  int k = 0;
  std::optional<int> max_degree;
  /// Strictly decreasing.
  std::vector<RankedValue> ranked_values;
  std::uint64_t class_size = 0;
};

struct ExtremalOptions {
  int top = 1;
  std::optional<int> max_degree;
  int workers = 1;
  /// Skip graphs whose float value is more than 1e-6 below the current
  /// top-th exact value. Disabling keeps every class until the end.
  bool prescreen = true;
};

/// Exact top-ranked Randic values over connected graphs with n vertices and
/// cyclomatic number k. Throws std::invalid_argument beyond the enumeration
/// ceiling.
ExtremalReport extremal_search(int n, int k, const ExtremalOptions& options = {});

/// Both identities n1 = 2 - 2g + sum (i-2) n_i and
/// n2 = 2g + n - 2 - sum (i-1) n_i, plus their g = 5, 6 specializations.
/// Requires a connected graph with at least two vertices.
bool check_degree_identities(const Graph& g);

/// m_{i,i} <= n_i - 2 + g when n1 = 0 and m_{i,i} <= n_i - 1 + g otherwise,
/// for every 3 <= i <= n - 1 with 0 < n_i < n. Requires a connected graph.
bool check_mii_bound(const Graph& g);

enum class Status { Pass, Fail, Counterexample };

std::string to_string(Status status);

struct Witness {
  std::string graph6;
  RadicalValue value;
  std::string note;
};

struct VerificationResult {
  std::string claim_id;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  /// Interpretation flags.
  std::vector<std::string> notes;
  /// Coverage and aggregate lines.
  std::vector<std::string> details;
};

struct ClaimParams {
  std::optional<int> n;
  std::optional<int> k;
  int workers = 1;
};

/// Identifiers accepted by verify_claim, in a fixed order.
const std::vector<std::string>& claim_ids();

/// Runs one claim over its default range, or over the range selected by
/// params. Throws std::invalid_argument for an unknown id or out-of-range
/// parameters.
VerificationResult verify_claim(std::string_view claim_id, const ClaimParams& params = {});

/// Lemma-1 style monotonicity probe of one transformation over all
/// connected graphs with n in n_range and cyclomatic number in k_range.
VerificationResult probe_transform_monotonicity(TransformKind kind, std::pair<int, int> n_range,
                                                std::pair<int, int> k_range, int workers = 1);

std::string to_text(const VerificationResult& result, int digits = 12);
std::string to_json(const VerificationResult& result, int digits = 12);
std::string to_text(const ExtremalReport& report, int digits = 12);
std::string to_json(const ExtremalReport& report, int digits = 12);

}  // namespace randic
