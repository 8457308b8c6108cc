// Copyright 2026 The hypermax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypermax/binomial.hpp"
#include "hypermax/connectivity.hpp"
#include "hypermax/constructions.hpp"
#include "hypermax/errors.hpp"
#include "hypermax/extremal.hpp"
#include "hypermax/io.hpp"
#include "hypermax/search.hpp"
#include "hypermax/strength.hpp"

namespace hypermax::cli {
namespace {

using Json = nlohmann::ordered_json;

struct GenArgs {
  int n = 0;
  std::int64_t k = 0;
  int r = 0;
  int t = 0;
  std::string tree;
  std::string variant = "star";
  std::string strategy = "lex";
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct CheckArgs {
  std::string file;
  std::int64_t k = 0;
  bool audit = false;
  std::string format = "text";
  int jobs = 1;
};

struct BoundsArgs {
  int n = 0;
  std::int64_t k = 0;
  int r = 0;
  std::string format = "text";
};

struct SearchArgs {
  int n = 0;
  std::int64_t k = 0;
  int r = 0;
  int jobs = 1;
  std::string out;
  std::string dump;
  bool no_prune = false;
  std::string format = "csv";
};

struct ScanArgs {
  std::vector<std::string> points;
  int jobs = 1;
  std::string out;
};

struct OracleArgs {
  std::string mode;
  std::string file;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

BuildStrategy make_strategy(const GenArgs& a) {
  if (a.strategy == "lex") return BuildStrategy::lexicographic();
  if (!a.seed) throw InvalidArgument("--strategy random requires --seed");
  return BuildStrategy::seeded(*a.seed);
}

// path<s>, star<s>, random<s> (needs --seed), or a tree file.
TreeSpec resolve_tree(const GenArgs& a) {
  for (std::string_view prefix : {"path", "star", "random"}) {
    if (a.tree.rfind(prefix, 0) != 0) continue;
    const auto s = parse_int(std::string_view(a.tree).substr(prefix.size()));
    if (!s) break;
    if (prefix == "path") return path_tree(*s);
    if (prefix == "star") return star_tree(*s);
    if (!a.seed) throw InvalidArgument("--tree random<s> requires --seed");
    return random_tree(*s, *a.seed);
  }
  std::ifstream in(a.tree);
  if (!in) throw ParseError(0, "cannot open tree file " + a.tree);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tree(buffer.str());
}

// Hypergraph goes to --out when given, else to stdout; the summary then
// moves to stderr so stdout stays a clean hypergraph file.
void emit(const GenArgs& a, const Hypergraph& h, const std::string& summary, std::ostream& out,
          std::ostream& err) {
  if (a.out.empty()) {
    out << to_text(h);
    err << summary;
  } else {
    write_hypergraph(a.out, h);
    out << "wrote " << a.out << "\n" << summary;
  }
}

int cmd_gen_m(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const Hypergraph h = build_m_family(a.n, a.k, a.r, make_strategy(a));
  emit(a, h,
       "edges: " + std::to_string(h.num_edges()) + "\nupper_bound: " + std::to_string(upper_bound(a.n, a.k, a.r)) +
           "\n",
       out, err);
  return kExitOk;
}

int cmd_gen_nt(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const NtConstruction nt = build_nt_family(a.t, a.r, resolve_tree(a), make_strategy(a));
  const int n = nt.graph.num_vertices();
  emit(a, nt.graph,
       "k: " + std::to_string(nt.k) + "\nedges: " + std::to_string(nt.graph.num_edges()) +
           "\nlower_bound: " + std::to_string(lower_bound(n, nt.k, a.r)) + "\n",
       out, err);
  return kExitOk;
}

int cmd_gen_one_max(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const Hypergraph h = a.variant == "star" ? build_one_max_star(a.n, a.r) : build_one_max_partition(a.n, a.r);
  const int lower = (a.n - 1 + a.r - 2) / (a.r - 1);
  emit(a, h,
       "edges: " + std::to_string(h.num_edges()) + "\nlower_bound: " + std::to_string(lower) +
           "\nupper_bound: " + std::to_string(a.n - a.r + 1) + "\n",
       out, err);
  return kExitOk;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Hypergraph h = read_hypergraph(a.file);
  const int n = h.num_vertices();
  const int r = h.uniformity();
  const MaximalityReport report = is_k_edge_maximal(h, a.k, {.jobs = a.jobs});
  const bool maximal = report.verdict == Verdict::kMaximal;

  std::optional<std::int64_t> kappa;
  if (n >= 2) kappa = edge_connectivity(h).value;
  std::optional<bool> super;
  if (n >= 2 && n <= kBruteforceConnectivityLimit) super = is_super_edge_connected(h).super_edge_connected;

  struct Bounds {
    int t;
    std::int64_t lower;
    std::int64_t upper;
    bool m_family;
  };
  std::optional<Bounds> bounds;
  if (a.k >= 2 && r >= 2 && n >= threshold_t(a.k, r)) {
    bounds = Bounds{threshold_t(a.k, r), lower_bound(n, a.k, r), upper_bound(n, a.k, r), is_m_family_member(h, a.k)};
  }
  const bool attains_upper = bounds && static_cast<std::int64_t>(h.num_edges()) == bounds->upper;

  std::optional<AuditReport> audit;
  if (a.audit && maximal && a.k >= 2) audit = audit_maximal(h, a.k);
  const bool audit_failed = audit && audit->any_failed();

  if (a.format == "json") {
    Json doc;
    doc["vertices"] = n;
    doc["uniformity"] = r;
    doc["edges"] = h.num_edges();
    doc["kappa"] = kappa ? Json(*kappa) : Json(nullptr);
    doc["min_degree"] = min_degree(h);
    doc["super_edge_connected"] = super ? Json(*super) : Json(nullptr);
    const Json fields = Json::parse(report_json(report));
    for (const auto& [key, value] : fields.items()) doc[key] = value;
    if (bounds) {
      doc["bounds"] = Json{{"t", bounds->t}, {"lower_bound", bounds->lower}, {"upper_bound", bounds->upper}};
      doc["attains_upper_bound"] = attains_upper;
      doc["m_family"] = bounds->m_family;
    } else {
      doc["bounds"] = nullptr;
    }
    if (a.audit) doc["audit"] = audit ? Json::parse(audit_json(*audit)) : Json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "vertices: " << n << "\nuniformity: " << r << "\nedges: " << h.num_edges() << "\n";
    out << "kappa: " << (kappa ? std::to_string(*kappa) : "n/a") << "\n";
    out << "min_degree: " << min_degree(h) << "\n";
    out << "super_edge_connected: " << (super ? yes_no(*super) : "skipped") << "\n";
    out << report_text(report);
    if (bounds) {
      out << "t: " << bounds->t << "\nlower_bound: " << bounds->lower << "\nupper_bound: " << bounds->upper << "\n";
      out << "attains_upper_bound: " << yes_no(attains_upper) << "\nm_family: " << yes_no(bounds->m_family) << "\n";
    } else {
      out << "bounds: not applicable\n";
    }
    if (audit) {
      out << audit_text(*audit);
    } else if (a.audit) {
      out << "audit: skipped\n";
    }
  }
  return maximal && !audit_failed ? kExitOk : kExitNegative;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const int t = threshold_t(a.k, a.r);
  const std::int64_t lower = lower_bound(a.n, a.k, a.r);
  const std::int64_t upper = upper_bound(a.n, a.k, a.r);
  if (a.format == "json") {
    out << Json{{"n", a.n}, {"k", a.k}, {"r", a.r}, {"t", t}, {"lower_bound", lower}, {"upper_bound", upper}}.dump(2)
        << "\n";
  } else {
    out << "t: " << t << "\nlower_bound: " << lower << "\nupper_bound: " << upper << "\n";
  }
  return kExitOk;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
  if (!file) throw Error("write failed for " + path);
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchLimits limits;
  limits.jobs = a.jobs;
  limits.prune = !a.no_prune;
  limits.keep_hypergraphs = !a.dump.empty();
  const SearchResult result = enumerate_maximal(a.n, a.k, a.r, limits);
  if (!a.dump.empty()) dump_maximal(a.dump, result);
  std::string text;
  if (a.format == "json") {
    text = summary_json(result.summary) + "\n";
  } else if (a.format == "text") {
    text = summary_text(result.summary);
  } else {
    text = csv_header() + "\n" + csv_row(result.summary) + "\n";
  }
  write_or_print(a.out, text, out);
  return kExitOk;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Params> grid;
  for (const std::string& point : a.points) {
    std::vector<int> values;
    std::stringstream in(point);
    for (std::string item; std::getline(in, item, ',');) {
      const auto v = parse_int(item);
      if (!v) throw InvalidArgument("--point expects n,k,r, got " + point);
      values.push_back(*v);
    }
    if (values.size() != 3) throw InvalidArgument("--point expects n,k,r, got " + point);
    grid.push_back(Params::make(values[0], values[1], values[2]));
  }
  SearchLimits limits;
  limits.jobs = a.jobs;
  limits.keep_hypergraphs = false;
  const auto rows = extremal_scan(grid, limits);
  bool failed = false;
  for (const ScanRow& row : rows) {
    if (row.summary) continue;
    failed = true;
    err << "point " << row.params.n << "," << row.params.k << "," << row.params.r << ": " << row.error << "\n";
  }
  write_or_print(a.out, scan_csv(rows), out);
  return failed ? kExitGuard : kExitOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const Hypergraph h = read_hypergraph(a.file);
  out << (a.mode == "kappa" ? edge_connectivity_bruteforce(h) : strength_bruteforce(h)) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-edge-maximal r-uniform hypergraphs: generators, certifiers, bounds and search", "hypermax"};
  app.set_version_flag("--version", std::string("hypermax ") + HYPERMAX_VERSION);
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a hypergraph from one of the constructions");
  gen->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", gen_args.out, "Output file; stdout when omitted");
    sub->add_option("--seed", gen_args.seed, "Seed for randomized choices");
  };
  auto* gen_m = gen->add_subcommand("m", "Upper-bound family M(n; k, r)");
  gen_m->add_option("--n", gen_args.n, "Vertices")->required();
  gen_m->add_option("--k", gen_args.k, "Connectivity bound")->required();
  gen_m->add_option("--r", gen_args.r, "Uniformity")->required();
  gen_m->add_option("--strategy", gen_args.strategy, "lex or random")->check(CLI::IsMember({"lex", "random"}));
  add_common(gen_m);
  auto* gen_nt = gen->add_subcommand("nt", "Lower-bound family N(T)");
  gen_nt->add_option("--t", gen_args.t, "Block size")->required();
  gen_nt->add_option("--r", gen_args.r, "Uniformity")->required();
  gen_nt->add_option("--tree", gen_args.tree, "path<s>, star<s>, random<s> or a tree file")->required();
  gen_nt->add_option("--strategy", gen_args.strategy, "lex or random")->check(CLI::IsMember({"lex", "random"}));
  add_common(gen_nt);
  auto* gen_one = gen->add_subcommand("one-max", "1-edge-maximal families");
  gen_one->add_option("--variant", gen_args.variant, "star or partition")->check(CLI::IsMember({"star", "partition"}));
  gen_one->add_option("--n", gen_args.n, "Vertices")->required();
  gen_one->add_option("--r", gen_args.r, "Uniformity")->required();
  add_common(gen_one);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Certify k-edge-maximality of a hypergraph file");
  check->add_option("file", check_args.file, "Hypergraph file")->required();
  check->add_option("--k", check_args.k, "Connectivity bound")->required();
  check->add_flag("--audit", check_args.audit, "Append the structural audit");
  check->add_option("--format", check_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--jobs", check_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Print t and both size bounds");
  bounds->add_option("--n", bounds_args.n, "Vertices")->required();
  bounds->add_option("--k", bounds_args.k, "Connectivity bound")->required();
  bounds->add_option("--r", bounds_args.r, "Uniformity")->required();
  bounds->add_option("--format", bounds_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Enumerate all k-edge-maximal hypergraphs on n labeled vertices");
  search->add_option("--n", search_args.n, "Vertices")->required();
  search->add_option("--k", search_args.k, "Connectivity bound")->required();
  search->add_option("--r", search_args.r, "Uniformity")->required();
  search->add_option("--jobs", search_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", search_args.out, "Output file; stdout when omitted");
  search->add_option("--dump", search_args.dump, "Directory for every maximal hypergraph found");
  search->add_flag("--no-prune", search_args.no_prune, "Certify every connected candidate");
  search->add_option("--format", search_args.format, "csv, text or json")
      ->check(CLI::IsMember({"csv", "text", "json"}));

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Search several parameter points and emit one CSV");
  scan->add_option("--point", scan_args.points, "n,k,r (repeatable)")->required();
  scan->add_option("--jobs", scan_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", scan_args.out, "Output file; stdout when omitted");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Brute-force kappa' or strength");
  oracle->add_option("mode", oracle_args.mode, "kappa or strength")
      ->required()
      ->check(CLI::IsMember({"kappa", "strength"}));
  oracle->add_option("file", oracle_args.file, "Hypergraph file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_m->parsed()) return cmd_gen_m(gen_args, out, err);
    if (gen_nt->parsed()) return cmd_gen_nt(gen_args, out, err);
    if (gen_one->parsed()) return cmd_gen_one_max(gen_args, out, err);
    if (check->parsed()) return cmd_check(check_args, out);
    if (bounds->parsed()) return cmd_bounds(bounds_args, out);
    if (search->parsed()) return cmd_search(search_args, out);
    if (scan->parsed()) return cmd_scan(scan_args, out, err);
    if (oracle->parsed()) return cmd_oracle(oracle_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  }
  return kExitUsage;
}

}  // namespace hypermax::cli
