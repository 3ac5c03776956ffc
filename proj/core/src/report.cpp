#include <sstream>

#include "json.hpp"

#include "randic/verifier.hpp"

namespace randic {

using nlohmann::ordered_json;

std::string to_text(const VerificationResult& result, int digits) {
  std::ostringstream os;
  os << "claim: " << result.claim_id << '\n';
  os << "status: " << to_string(result.status) << '\n';
  for (const auto& n : result.notes) os << "note: " << n << '\n';
  for (const auto& d : result.details) os << "detail: " << d << '\n';
  for (const auto& w : result.witnesses) {
    os << "witness: " << w.graph6 << '\t' << w.value.to_string() << '\t'
       << to_decimal(w.value, digits) << '\t' << w.note << '\n';
  }
  return os.str();
}

std::string to_json(const VerificationResult& result, int digits) {
  ordered_json j;
  j["claim_id"] = result.claim_id;
  j["status"] = to_string(result.status);
  j["notes"] = result.notes;
  j["details"] = result.details;
  j["witnesses"] = ordered_json::array();
  for (const auto& w : result.witnesses) {
    j["witnesses"].push_back({{"graph6", w.graph6},
                              {"exact", w.value.to_string()},
                              {"decimal", to_decimal(w.value, digits)},
                              {"note", w.note}});
  }
  return j.dump(2) + "\n";
}

std::string to_text(const ExtremalReport& report, int digits) {
  std::ostringstream os;
  os << "n: " << report.n << '\n';
  os << "k: " << report.k << '\n';
  os << "max_degree: " << (report.max_degree ? std::to_string(*report.max_degree) : "unrestricted")
     << '\n';
  os << "classes: " << report.class_size << '\n';
  for (std::size_t r = 0; r < report.ranked_values.size(); ++r) {
    const auto& ranked = report.ranked_values[r];
    os << "rank " << r + 1 << ": " << ranked.value.to_string() << '\t'
       << to_decimal(ranked.value, digits) << "\tmultiplicity=" << ranked.multiplicity() << '\n';
    for (const auto& group : ranked.groups) {
      os << "  signature " << group.signature.to_string() << ": " << group.graphs.size()
         << (group.graphs.size() == 1 ? " graph\n" : " graphs\n");
      for (const auto& g : group.graphs) os << "    " << write_graph6(g) << '\n';
    }
  }
  return os.str();
}

std::string to_json(const ExtremalReport& report, int digits) {
  ordered_json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["max_degree"] = report.max_degree ? ordered_json(*report.max_degree) : ordered_json(nullptr);
  j["class_size"] = report.class_size;
  j["ranked_values"] = ordered_json::array();
  for (const auto& ranked : report.ranked_values) {
    ordered_json r;
    r["exact"] = ranked.value.to_string();
    r["decimal"] = to_decimal(ranked.value, digits);
    r["multiplicity"] = ranked.multiplicity();
    r["groups"] = ordered_json::array();
    for (const auto& group : ranked.groups) {
      ordered_json gj;
      gj["signature"] = group.signature.to_string();
      gj["graphs"] = ordered_json::array();
      for (const auto& g : group.graphs) gj["graphs"].push_back(write_graph6(g));
      r["groups"].push_back(gj);
    }
    j["ranked_values"].push_back(r);
  }
  return j.dump(2) + "\n";
}

}  // namespace randic
