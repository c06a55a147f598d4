#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linrez/checks.hpp"
#include "linrez/errors.hpp"
#include "linrez/io.hpp"
#include "linrez/linearity.hpp"
#include "linrez/parallel.hpp"
#include "linrez/report.hpp"
#include "linrez/resolution.hpp"

using namespace linrez;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kResourceCutoff = 3 };

struct Common {
  std::string field = "p:32003";
  std::optional<unsigned> threads;
  std::string out;
  std::string graph_path;
  std::string ideal_path;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_report(const Common& c, const Json& report) {
  const std::string text = emit_report(report);
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ArgumentError("cannot write " + c.out);
  f << text;
}

Json input_echo(const Common& c) {
  Json in = Json::object();
  if (!c.graph_path.empty()) in["graph_file"] = c.graph_path;
  if (!c.ideal_path.empty()) in["ideal_file"] = c.ideal_path;
  return in;
}

void require_one_input(const Common& c) {
  if (c.graph_path.empty() == c.ideal_path.empty()) throw ArgumentError("give exactly one of --graph or --ideal");
}

Graph load_simple_graph(const Common& c) {
  if (c.graph_path.empty()) throw ArgumentError("--graph is required");
  Graph g = parse_graph_file(c.graph_path);
  if (!g.is_simple()) throw ArgumentError("this command needs a simple graph (no loops)");
  return g;
}

// ---------------------------------------------------------------------------

struct BettiArgs {
  std::string route = "default";
  int max_i = -1;
  std::size_t max_lattice = LcmLattice::kDefaultMaxSize;
};

int cmd_betti(const Common& c, const BettiArgs& a) {
  require_one_input(c);
  Stopwatch clock;
  const FieldSpec field = FieldSpec::parse(c.field);
  std::optional<Graph> graph;
  MonomialIdeal ideal;
  if (!c.graph_path.empty()) {
    graph = parse_graph_file(c.graph_path);
    ideal = edge_ideal(*graph);
  } else {
    ideal = parse_ideal_file(c.ideal_path);
  }
  if (ideal.is_zero()) throw ArgumentError("the zero ideal has no resolution to report");

  std::vector<BettiRoute> routes;
  if (a.route == "default") {
    if (ideal.is_squarefree()) routes = {BettiRoute::gpw, BettiRoute::hochster};
    else routes = {BettiRoute::gpw};
  } else {
    routes = {parse_route(a.route)};
  }
  BettiOptions opts;
  opts.max_i = a.max_i;
  opts.max_lattice_size = a.max_lattice;

  Json tables = Json::object();
  std::optional<BettiTable> first;
  bool agree = true;
  for (auto r : routes) {
    auto t = betti_table(ideal, field, r, opts);
    if (first && (t.multigraded != first->multigraded)) agree = false;
    tables[route_name(t.route)] = betti_json(t, ideal);
    if (!first) first = std::move(t);
  }

  const Json summary = betti_json(*first, ideal);
  Json results{{"ideal", to_json(ideal)},
               {"tables", tables},
               {"index", summary["index"]},
               {"projdim", summary["projdim"]},
               {"field", field.name()},
               {"complete", first->complete()}};
  if (routes.size() > 1) results["routes_agree"] = agree;
  if (graph) {
    results["graph"] = to_json(*graph);
    const auto gap = is_gap_free(*graph);
    if (gap.witness) results["gap"] = {to_json(gap.witness->first), to_json(gap.witness->second)};
    if (graph->is_simple()) results["index_combinatorial"] = combinatorial_index_json(*graph);
  }
  Json config{{"field", field.name()}, {"max_i", a.max_i}, {"route", a.route}};
  const bool partial = !first->complete();
  const std::string status = !agree ? "failed" : partial ? "incomplete" : "ok";
  write_report(c, make_report("betti", input_echo(c), config, results, status, {{"seconds", clock.seconds()}}));
  if (!agree) return kCheckFailed;
  return kOk;
}

struct IndexArgs {
  int max_power = 3;
  int max_i = -1;
  std::string route = "auto";
  std::size_t max_lattice = LcmLattice::kDefaultMaxSize;
  int max_sqfree_power = -1;
  bool no_squarefree = false;
};

int cmd_index(const Common& c, const IndexArgs& a) {
  Stopwatch clock;
  const Graph g = load_simple_graph(c);
  if (a.max_power < 1) throw ArgumentError("--max-power must be positive");
  ScanOptions so;
  so.field = FieldSpec::parse(c.field);
  so.max_power = a.max_power;
  so.max_i = a.max_i;
  so.route = parse_route(a.route);
  so.max_lattice_size = a.max_lattice;
  so.squarefree = !a.no_squarefree;
  so.max_squarefree_power = a.max_sqfree_power;
  so.threads = resolve_threads(c.threads);
  bool incomplete = false;
  Json results = index_scan(g, so, &incomplete);
  results["graph"] = to_json(g);
  Json config{{"field", so.field.name()},
              {"max_power", a.max_power},
              {"max_i", a.max_i},
              {"route", a.route},
              {"squarefree", so.squarefree},
              {"max_squarefree_power", a.max_sqfree_power}};
  write_report(c, make_report("index", input_echo(c), config, results, incomplete ? "incomplete" : "ok",
                              {{"seconds", clock.seconds()}, {"threads", so.threads}}));
  return incomplete ? kResourceCutoff : kOk;
}

struct SqfreeArgs {
  std::optional<int> k;
  int max_i = -1;
};

int cmd_sqfree(const Common& c, const SqfreeArgs& a) {
  Stopwatch clock;
  const Graph g = load_simple_graph(c);
  const FieldSpec field = FieldSpec::parse(c.field);
  const unsigned threads = resolve_threads(c.threads);
  const auto report = matching_report(g);
  std::vector<int> ks;
  if (a.k) {
    if (*a.k < 1) throw ArgumentError("--k must be positive");
    ks.push_back(*a.k);
  } else {
    for (int k = 1; k <= report.nu; ++k) ks.push_back(k);
  }
  const auto base = edge_ideal(g);
  IndexOptions io;
  io.field = field;
  io.max_i = a.max_i;
  bool incomplete = false;
  Json powers = Json::array();
  for (int k : ks) {
    const auto ideal = squarefree_power(base, k);
    Json e{{"k", k}, {"generators", ideal.size()}};
    if (ideal.is_zero()) {
      e["ideal"] = "zero";
      powers.push_back(e);
      continue;
    }
    e["ideal"] = to_json(ideal);
    e["linearity"] = linearity_json(is_linearly_related(ideal, threads), has_linear_quotients_lex(ideal));
    try {
      const auto r = compute_index(ideal, io);
      e["index"] = index_json(r, field);
      if (!r.exact && !r.witness) incomplete = true;
    } catch (const ResourceLimitError& err) {
      e["index"] = {{"status", "resource-limit"}, {"error", err.what()}};
      incomplete = true;
    }
    powers.push_back(e);
  }
  Json results{{"graph", to_json(g)}, {"matching", to_json(report)}, {"squarefree_powers", powers}};
  Json config{{"field", field.name()}, {"k", a.k ? Json(*a.k) : Json(nullptr)}, {"max_i", a.max_i}};
  write_report(c, make_report("sqfree", input_echo(c), config, results, incomplete ? "incomplete" : "ok",
                              {{"seconds", clock.seconds()}, {"threads", threads}}));
  return incomplete ? kResourceCutoff : kOk;
}

struct VerifyArgs {
  std::vector<std::string> checks;
  std::optional<int> max_n;
  std::vector<int> ns;
  bool list = false;
};

int cmd_verify(const Common& c, const VerifyArgs& a) {
  if (a.list) {
    for (const auto& info : check_catalog())
      std::cout << info.name << (info.optional ? " (optional)" : "") << "\n    " << info.claim << "\n";
    return kOk;
  }
  CheckOptions o;
  o.field = FieldSpec::parse(c.field);
  o.max_n = a.max_n;
  o.ns = a.ns;
  o.threads = resolve_threads(c.threads);
  if (!c.ideal_path.empty()) o.ideal_path = c.ideal_path;
  std::vector<std::string> names = a.checks;
  if (names.empty())
    for (const auto& info : check_catalog()) names.push_back(info.name);
  for (const auto& n : names) {
    const auto& cat = check_catalog();
    if (std::none_of(cat.begin(), cat.end(), [&](const CheckInfo& i) { return i.name == n; }))
      throw ArgumentError("unknown check '" + n + "' (see verify --list)");
  }
  std::vector<CheckResult> results;
  for (const auto& n : names) {
    results.push_back(run_check(n, o));
    std::cerr << results.back().status << "  " << n << "  (" << results.back().seconds << " s)\n";
  }
  const Json report = checks_report(results, o);
  write_report(c, report);
  return report["status"] == "ok" ? kOk : kCheckFailed;
}

struct ScanArgs {
  int max_n = 6;
  int max_power = 3;
};

int cmd_scan(const Common& c, const ScanArgs& a) {
  Stopwatch clock;
  ConjectureScanOptions so;
  so.field = FieldSpec::parse(c.field);
  so.max_n = a.max_n;
  so.max_power = a.max_power;
  so.threads = resolve_threads(c.threads);
  if (so.max_n < 2 || so.max_n > 8) throw ArgumentError("--max-n must lie in 2..8");
  if (so.max_power < 1) throw ArgumentError("--max-power must be positive");
  const Json results = conjecture_scan(so);
  Json config{{"field", so.field.name()}, {"max_n", so.max_n}, {"max_power", so.max_power}};
  write_report(c, make_report("scan", Json::object(), config, results, "ok",
                              {{"seconds", clock.seconds()}, {"threads", so.threads}}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolution invariants of monomial and edge ideals"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool inputs) {
    sub->add_option("--field", common.field, "q or p:<prime>")->capture_default_str();
    sub->add_option("--threads", common.threads, "worker count (overrides LINREZ_THREADS)");
    sub->add_option("--out", common.out, "write the JSON report here instead of stdout");
    if (inputs) {
      sub->add_option("--graph", common.graph_path, "graph file");
      sub->add_option("--ideal", common.ideal_path, "ideal file");
    }
  };

  BettiArgs betti;
  auto* betti_cmd = app.add_subcommand("betti", "graded Betti table, index and projective dimension");
  add_common(betti_cmd, true);
  betti_cmd->add_option("--route", betti.route, "gpw, hochster, koszul or auto (default: gpw and hochster when "
                                                "squarefree, gpw otherwise)");
  betti_cmd->add_option("--max-i", betti.max_i, "highest homological degree (-1: full)");
  betti_cmd->add_option("--max-lattice", betti.max_lattice, "lcm-lattice size limit");

  IndexArgs index;
  auto* index_cmd = app.add_subcommand("index", "index of I(G)^k and I(G)^[k]");
  add_common(index_cmd, true);
  index_cmd->add_option("--max-power", index.max_power, "largest ordinary power")->capture_default_str();
  index_cmd->add_option("--max-i", index.max_i, "homology cutoff per computation (-1: Taylor bound)");
  index_cmd->add_option("--route", index.route, "route for degrees >= 2")->capture_default_str();
  index_cmd->add_option("--max-lattice", index.max_lattice, "lcm-lattice size limit");
  index_cmd->add_option("--max-sqfree-power", index.max_sqfree_power, "largest squarefree power (-1: nu)");
  index_cmd->add_flag("--no-squarefree", index.no_squarefree, "skip squarefree powers");

  SqfreeArgs sqfree;
  auto* sqfree_cmd = app.add_subcommand("sqfree", "matching numbers and squarefree powers of I(G)");
  add_common(sqfree_cmd, true);
  sqfree_cmd->add_option("--k", sqfree.k, "single power (default: 1..nu)");
  sqfree_cmd->add_option("--max-i", sqfree.max_i, "homology cutoff per computation (-1: Taylor bound)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run named checks");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--check", verify.checks, "check name (repeatable or comma separated)")->delimiter(',');
  verify_cmd->add_option("--max-n", verify.max_n, "vertex bound for exhaustive checks");
  verify_cmd->add_option("--n", verify.ns, "parameter list, e.g. 5,7,9")->delimiter(',');
  verify_cmd->add_option("--ideal", common.ideal_path, "ideal file for the optional external check");
  verify_cmd->add_flag("--list", verify.list, "list the checks and exit");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "evaluate open statements over small graphs");
  add_common(scan_cmd, false);
  scan_cmd->add_option("--max-n", scan.max_n, "largest vertex count")->capture_default_str();
  scan_cmd->add_option("--max-power", scan.max_power, "largest ordinary power")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*betti_cmd) return cmd_betti(common, betti);
    if (*index_cmd) return cmd_index(common, index);
    if (*sqfree_cmd) return cmd_sqfree(common, sqfree);
    if (*verify_cmd) return cmd_verify(common, verify);
    if (*scan_cmd) return cmd_scan(common, scan);
  } catch (const ParseError& e) {
    std::cerr << "linrez: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceLimitError& e) {
    std::cerr << "linrez: resource limit: " << e.what() << "\n";
    return kResourceCutoff;
  } catch (const std::invalid_argument& e) {
    std::cerr << "linrez: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
