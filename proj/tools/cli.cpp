#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "randic/enumerate.hpp"
#include "randic/families.hpp"
#include "randic/index.hpp"
#include "randic/transforms.hpp"
#include "randic/verifier.hpp"

namespace randic::cli {

namespace {

// Raised for unreadable input, unwritable output and malformed graph6.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in_path;
  std::string out_path;
  int digits = 12;
  int workers = 1;
  bool json = false;

  std::string family;
  std::string kind;
  std::string claim;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> max_degree;
  std::optional<int> site;
  int top = 1;
  bool all = false;
  bool list = false;
  bool connected = false;
  bool count_only = false;
};

// Reads graph6 lines, skipping blank ones, and reports the line number of
// any malformed entry.
std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw IoError("line " + std::to_string(number) + " '" + line + "': " + e.what());
    }
  }
  if (in.bad()) throw IoError("read error");
  return out;
}

std::vector<Graph> input_graphs(const Options& o, std::istream& in) {
  if (o.in_path.empty()) return read_graphs(in);
  std::ifstream file(o.in_path);
  if (!file) throw IoError("cannot open --in file '" + o.in_path + "'");
  return read_graphs(file);
}

std::string profile_string(const DegreeProfile& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, c] : p.counts) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(d) + ": " + std::to_string(c);
  }
  return out + "}";
}

int cmd_randic(const Options& o, std::istream& in, std::ostream& out) {
  for (const auto& g : input_graphs(o, in)) {
    const RadicalValue r = randic_exact(g);
    out << r.to_string() << '\t' << to_decimal(r, o.digits) << '\n';
  }
  return kOk;
}

int cmd_signature(const Options& o, std::istream& in, std::ostream& out) {
  for (const auto& g : input_graphs(o, in)) {
    out << edge_type_signature(g).to_string() << '\t' << profile_string(degree_profile(g)) << '\n';
  }
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const FamilyName name = parse_family_name(o.family);
  const FamilySpec spec = make_family_spec(name, *o.n, o.k.value_or(0));
  if (o.all) {
    if (!within_ceiling({spec.n, spec.n + spec.k - 1, std::nullopt, true})) {
      throw std::invalid_argument("--all is limited to n <= 12");
    }
    for (const auto& g : enumerate_members(spec, o.workers)) out << write_graph6(g) << '\n';
  } else {
    out << write_graph6(construct_member(spec)) << '\n';
  }
  return kOk;
}

int cmd_transform(const Options& o, std::istream& in, std::ostream& out) {
  const TransformKind kind = parse_transform_kind(o.kind);
  const auto graphs = input_graphs(o, in);
  for (const auto& g : graphs) {
    const auto sites = find_sites(g, kind);
    if (o.site) {
      if (*o.site < 0 || *o.site >= static_cast<int>(sites.size())) {
        throw std::invalid_argument("--site " + std::to_string(*o.site) + " out of range: graph " +
                                    write_graph6(g) + " has " + std::to_string(sites.size()) + " sites");
      }
      out << write_graph6(apply_transform(g, sites[*o.site])) << '\n';
      continue;
    }
    if (graphs.size() > 1) out << "# " << write_graph6(g) << '\n';
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const RadicalValue d = delta_randic(g, sites[i]);
      out << i << '\t' << sites[i].to_string() << '\t' << d.to_string() << '\t'
          << to_decimal(d, o.digits) << '\n';
    }
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const EnumSpec spec{*o.n, *o.m, o.max_degree, o.connected};
  if (o.count_only) {
    out << count(spec, o.workers) << '\n';
  } else {
    enumerate(spec, [&](const Graph& g) { out << write_graph6(g) << '\n'; }, o.workers);
  }
  return kOk;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  ExtremalOptions opt;
  opt.top = o.top;
  opt.max_degree = o.max_degree;
  opt.workers = o.workers;
  const ExtremalReport report = extremal_search(*o.n, *o.k, opt);
  out << (o.json ? to_json(report, o.digits) : to_text(report, o.digits));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  ClaimParams params;
  params.n = o.n;
  params.k = o.k;
  params.workers = o.workers;
  const VerificationResult result = verify_claim(o.claim, params);
  out << (o.json ? to_json(result, o.digits) : to_text(result, o.digits));
  return result.status == Status::Pass ? kOk : kClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Randic index tools for k-cyclic graphs", "randic"};
  app.require_subcommand(1);
  app.add_option("--out", o.out_path, "Write output to FILE instead of standard output");

  auto positive = CLI::PositiveNumber;
  auto nonneg = CLI::NonNegativeNumber;

  auto* randic = app.add_subcommand("randic", "Exact and decimal Randic index of each input graph");
  randic->add_option("--in", o.in_path, "graph6 file (default: standard input)");
  randic->add_option("--digits", o.digits, "Decimal digits")->check(positive);

  auto* signature = app.add_subcommand("signature", "Edge-type signature and degree profile");
  signature->add_option("--in", o.in_path, "graph6 file (default: standard input)");

  auto* construct = app.add_subcommand("construct", "Build a member of a family");
  construct->add_option("--family", o.family, "lambda1, gamma1, lambda2, gamma2, omega1..8, upsilon1..6, regular3")
      ->required();
  construct->add_option("--n", o.n, "Vertex count")->required()->check(nonneg);
  construct->add_option("--k", o.k, "Cyclomatic number (fixed for omega and upsilon)")->check(nonneg);
  construct->add_flag("--all", o.all, "All members up to isomorphism");
  construct->add_option("--workers", o.workers, "Parallel workers")->check(positive);

  auto* transform = app.add_subcommand("transform", "List or apply transformation sites");
  transform->add_option("--kind", o.kind, "t1, t2, t3, t4 or t5")->required();
  auto* site_opt = transform->add_option("--site", o.site, "Apply the site with this index");
  auto* list_opt = transform->add_flag("--list", o.list, "List sites with exact deltas (default)");
  site_opt->excludes(list_opt);
  transform->add_option("--in", o.in_path, "graph6 file (default: standard input)");
  transform->add_option("--digits", o.digits, "Decimal digits")->check(positive);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "One graph6 line per isomorphism class");
  enumerate_cmd->add_option("--n", o.n, "Vertex count")->required()->check(nonneg);
  enumerate_cmd->add_option("--m", o.m, "Edge count")->required()->check(nonneg);
  enumerate_cmd->add_option("--max-degree", o.max_degree, "Degree cap")->check(nonneg);
  enumerate_cmd->add_flag("--connected", o.connected, "Connected graphs only");
  enumerate_cmd->add_flag("--count", o.count_only, "Print the number of classes only");
  enumerate_cmd->add_option("--workers", o.workers, "Parallel workers")->check(positive);

  auto* extremal = app.add_subcommand("extremal", "Top Randic values over connected (n, k) graphs");
  extremal->add_option("--n", o.n, "Vertex count")->required()->check(nonneg);
  extremal->add_option("--k", o.k, "Cyclomatic number")->required()->check(nonneg);
  extremal->add_option("--top", o.top, "Number of distinct values")->check(positive);
  extremal->add_option("--max-degree", o.max_degree, "Degree cap")->check(nonneg);
  extremal->add_option("--workers", o.workers, "Parallel workers")->check(positive);
  extremal->add_option("--digits", o.digits, "Decimal digits")->check(positive);
  extremal->add_flag("--json", o.json, "JSON report");

  auto* verify = app.add_subcommand("verify", "Check one claim exhaustively");
  verify->add_option("--claim", o.claim, "Claim identifier")->required();
  verify->add_option("--n", o.n, "Vertex count (or upper bound for range claims)")->check(nonneg);
  verify->add_option("--k", o.k, "Cyclomatic number (or upper bound for Lemma 1 probes)")->check(nonneg);
  verify->add_option("--workers", o.workers, "Parallel workers")->check(positive);
  verify->add_option("--digits", o.digits, "Decimal digits")->check(positive);
  verify->add_flag("--json", o.json, "JSON report");

  std::string claim_list;
  for (const auto& id : claim_ids()) claim_list += (claim_list.empty() ? "" : ", ") + id;
  verify->footer("Claims: " + claim_list);

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].starts_with("-")) continue;
    if (app.get_subcommand_no_throw(args[i]) == nullptr) {
      err << "error: unknown subcommand '" << args[i] << "'\n";
      return kUsage;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    if (code != 0) err << "error: ";
    err << cli_err.str();
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* dest = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot open --out file '" << o.out_path << "'\n";
      return kIoError;
    }
    dest = &file;
  }

  int code = kOk;
  try {
    if (*randic) code = cmd_randic(o, in, *dest);
    else if (*signature) code = cmd_signature(o, in, *dest);
    else if (*construct) code = cmd_construct(o, *dest);
    else if (*transform) code = cmd_transform(o, in, *dest);
    else if (*enumerate_cmd) code = cmd_enumerate(o, *dest);
    else if (*extremal) code = cmd_extremal(o, *dest);
    else if (*verify) code = cmd_verify(o, *dest);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  dest->flush();
  if (!*dest) {
    err << "error: write failed\n";
    return kIoError;
  }
  return code;
}

}  // namespace randic::cli
