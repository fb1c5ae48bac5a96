// Command-line front end for the mdimlab library.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdimlab/constructors.hpp"
#include "mdimlab/design.hpp"
#include "mdimlab/error.hpp"
#include "mdimlab/expr.hpp"
#include "mdimlab/graph.hpp"
#include "mdimlab/imprimitivity.hpp"
#include "mdimlab/lifting.hpp"
#include "mdimlab/mdim.hpp"
#include "mdimlab/verify.hpp"

using namespace mdimlab;
using json = nlohmann::ordered_json;

namespace {

/// Exit status for a search that ran out of nodes.
constexpr int kBudgetExit = 2;

Graph load_graph_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_graph(arg);
  return parse_graph(arg);
}

SymmetricDesign load_design_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_design(arg);
  return parse_design(arg);
}

std::vector<int> parse_int_array(const std::string& text, const char* what) {
  try {
    return json::parse(text).get<std::vector<int>>();
  } catch (const json::exception&) {
    throw Error(Errc::ParseError, std::string(what) + " must be a JSON array of integers");
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MDIMLAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "MDIMLAB_BUDGET is not an integer");
    }
  }
  return kDefaultNodeBudget;
}

json pair_json(const VertexPair& p) { return json::array({p.x, p.y}); }

json certificate_json(const ResolvingCertificate& c) {
  json out;
  out["mu"] = c.mu();
  out["set"] = c.set;
  out["status"] = to_string(c.status);
  out["method"] = c.method;
  out["nodes_explored"] = c.nodes_explored;
  if (c.budget_exceeded) out["budget_exceeded"] = true;
  if (c.failed_pair) out["failed_pair"] = pair_json(*c.failed_pair);
  if (!c.per_pair_witness.empty()) {
    json w = json::array();
    for (const auto& [p, v] : c.per_pair_witness) w.push_back(json::array({p.x, p.y, v}));
    out["witness"] = w;
  }
  return out;
}

void print_certificate_text(const ResolvingCertificate& c) {
  std::cout << "mu = " << c.mu() << " (" << to_string(c.status) << ", " << c.method << ")\nset:";
  for (Vertex v : c.set) std::cout << ' ' << v;
  std::cout << '\n';
  if (c.budget_exceeded) std::cout << "node budget exhausted after " << c.nodes_explored << " nodes; set is an upper bound\n";
  for (const auto& [p, v] : c.per_pair_witness) std::cout << "  " << p.x << ' ' << p.y << " <- " << v << '\n';
}

json summary_json(const GraphSummary& s) { return json{{"n", s.n}, {"d", s.d}, {"k", s.k}}; }

struct Common {
  bool as_json = false;
  int threads = 1;
  std::uint64_t budget = 0;

  SolveOptions solve(bool witness = false) const {
    SolveOptions o;
    o.node_budget = budget != 0 ? budget : default_budget();
    o.threads = threads;
    o.witness = witness;
    return o;
  }
};

int cmd_construct(const std::string& family, const std::vector<int>& params, const std::string& expr, const std::string& out,
                  bool dot, bool design) {
  std::string text = expr;
  if (text.empty()) {
    if (family.empty()) throw Error(Errc::BadParameters, "give --family or --expr");
    text = family;
    for (int p : params) text += ":" + std::to_string(p);
  }
  std::ostringstream buf;
  if (design) {
    write_design(buf, parse_design(text));
  } else {
    const Graph g = parse_graph(text);
    if (dot)
      write_dot(buf, g);
    else
      write_graph(buf, g);
  }
  if (out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(out);
    if (!f) throw Error(Errc::ParseError, "cannot write " + out);
    f << buf.str();
  }
  return 0;
}

int cmd_classify(const std::string& arg, const Common& c) {
  const AHClass cls = classify_ah(load_graph_arg(arg));
  json out;
  out["class"] = cls.name();
  out["d"] = cls.d;
  out["k"] = cls.k;
  if (cls.antipodal) out["t"] = cls.antipodal->t;
  if (!cls.halved.empty()) {
    out["halved"] = json::array();
    for (const GraphSummary& s : cls.halved) out["halved"].push_back(summary_json(s));
  }
  if (cls.folded) out["folded"] = summary_json(*cls.folded);
  out["subclaims"] = json::array();
  for (const Subclaim& s : cls.subclaims) out["subclaims"].push_back(json{{"claim", s.claim}, {"holds", s.holds}});
  if (c.as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << cls.name() << "  d=" << cls.d << " k=" << cls.k;
    if (cls.antipodal) std::cout << " t=" << cls.antipodal->t;
    std::cout << '\n';
    for (const Subclaim& s : cls.subclaims) std::cout << "  [" << (s.holds ? "ok" : "FAIL") << "] " << s.claim << '\n';
  }
  return 0;
}

int emit(const ResolvingCertificate& cert, const Common& c, json extra = json::object()) {
  if (c.as_json) {
    json out = certificate_json(cert);
    for (auto& [k, v] : extra.items()) out[k] = v;
    std::cout << out.dump(2) << '\n';
  } else {
    print_certificate_text(cert);
    for (auto& [k, v] : extra.items()) std::cout << k << ": " << v.dump() << '\n';
  }
  return cert.budget_exceeded ? kBudgetExit : 0;
}

int cmd_mdim(const std::string& arg, bool greedy, bool witness, const Common& c) {
  const Graph g = load_graph_arg(arg);
  return emit(greedy ? mdim_greedy(g, c.solve(witness)) : mdim_exact(g, c.solve(witness)), c);
}

struct LiftArgs {
  std::string from;
  std::string graph;
  std::string set;
  std::string minus_set;
  std::string plus_side;
  int x = -1;
};

int cmd_lift(const LiftArgs& a, const Common& c) {
  const std::vector<int> r = parse_int_array(a.set, "--set");
  if (a.from == "halved") {
    if (a.minus_set.empty()) throw Error(Errc::BadParameters, "--from halved needs --minus-set");
    return emit(lift_halved(load_graph_arg(a.graph), r, parse_int_array(a.minus_set, "--minus-set")), c);
  }
  if (a.from == "folded") {
    const Graph g = load_graph_arg(a.graph);
    const FoldedLift lift = lift_folded(g, antipodal_structure(g, bfs_distances(g)), r);
    json extra{{"case", to_string(lift.fold_case)}};
    if (lift.extra) extra["extra"] = *lift.extra;
    return emit(lift.certificate, c, extra);
  }
  if (a.from == "taylor") return emit(taylor_lift(taylor(load_graph_arg(a.graph)), r), c);
  if (a.from == "double") return emit(double_lift(load_graph_arg(a.graph), r), c);
  if (a.from == "project") return emit(project_to_folded(load_graph_arg(a.graph), r), c);
  if (a.from == "push") {
    const Graph g = load_graph_arg(a.graph);
    Bitset plus(static_cast<std::size_t>(g.order()));
    if (a.plus_side.empty()) {
      const AntipodalStructure s = antipodal_structure(g, bfs_distances(g));
      if (is_bipartite(g) && s.t == 2) {
        plus = bipartition(g).plus_set;
      } else {
        for (const auto& cls : s.classes) plus.set(static_cast<std::size_t>(cls.front()));
      }
    } else {
      for (int v : parse_int_array(a.plus_side, "--plus")) {
        if (v < 0 || v >= g.order()) throw Error(Errc::IndexOutOfRange, "--plus vertex out of range");
        plus.set(static_cast<std::size_t>(v));
      }
    }
    return emit(push_to_plus(g, plus, r), c);
  }
  if (a.from == "descendant") {
    if (a.x < 0) throw Error(Errc::BadParameters, "--from descendant needs --x");
    const DescendantLift lift = descendant_extract(load_graph_arg(a.graph), r, a.x);
    return emit(lift.certificate, c, json{{"descendant_to_parent", lift.descendant.to_parent}});
  }
  throw Error(Errc::BadParameters, "unknown --from '" + a.from + "'");
}

int cmd_bounds(const std::string& arg, const Common& c) {
  const Graph g = load_graph_arg(arg);
  const DistanceMatrix dm = bfs_distances(g);
  if (!dm.connected()) throw Error(Errc::DisconnectedGraph, "bounds need a connected graph");
  json out;
  out["n"] = g.order();
  out["d"] = *dm.diameter();
  out["lower_bound"] = g.order() == 1 ? 0 : lower_bound_nd(g.order(), *dm.diameter());
  out["greedy"] = mdim_greedy(g).mu();
  try {
    const BabaiReport b = babai_bounds(g, dm);
    json babai;
    babai["k"] = b.k;
    babai["max_distance_class"] = b.max_distance_class;
    babai["sqrt_bound"] = b.bound_sqrt;
    if (b.bound_valency) babai["valency_bound"] = *b.bound_valency;
    babai["distance_class_bound"] = b.bound_distance_class;
    out["babai"] = babai;
  } catch (const Error& e) {
    if (e.code() != Errc::NotPrimitive && e.code() != Errc::NotDRG) throw;
    out["babai"] = nullptr;
  }
  if (c.as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    for (auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << '\n';
  }
  return 0;
}

int cmd_semiresolve(const std::string& arg, const std::string& side, bool split, const std::string& check, const Common& c) {
  const SymmetricDesign d = load_design_arg(arg);
  json out;
  bool exhausted = false;
  if (!check.empty()) {
    const std::vector<int> set = parse_int_array(check, "--check");
    const PairCheck r = side == "points" ? is_semi_resolving_for_points(d, set) : is_semi_resolving_for_blocks(d, set);
    out["side"] = side;
    out["semi_resolving"] = r.ok;
    if (r.failed) out["failed_pair"] = json::array({r.failed->first, r.failed->second});
  } else if (split) {
    const SplitCertificate s = split_mdim(d, c.solve());
    out["mu_star"] = s.mu_star;
    out["points"] = s.points.set;
    out["blocks"] = s.blocks.set;
    out["vertices"] = s.vertices;
    out["minimum"] = s.points.minimum && s.blocks.minimum;
    exhausted = !(s.points.minimum && s.blocks.minimum);
  } else {
    if (side != "blocks" && side != "points") throw Error(Errc::BadParameters, "--side must be blocks or points");
    const SemiResolvingCertificate s = min_semi_resolving(d, side == "points" ? DesignSide::Points : DesignSide::Blocks, c.solve());
    out["side"] = side;
    out["size"] = s.set.size();
    out["set"] = s.set;
    out["minimum"] = s.minimum;
    out["nodes_explored"] = s.nodes_explored;
    exhausted = !s.minimum;
  }
  if (c.as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    for (auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << '\n';
  }
  return exhausted ? kBudgetExit : 0;
}

int cmd_verify(const std::string& suite, bool slow, const std::string& golden, const Common& c) {
  if (suite != "paper") throw Error(Errc::BadParameters, "unknown suite '" + suite + "'");
  SuiteOptions o;
  if (!golden.empty()) o.golden_path = golden;
  o.include_slow = slow;
  o.solve = c.solve();
  const std::vector<CheckRow> rows = run_suite(o);
  int failures = 0;
  for (const CheckRow& r : rows) failures += r.pass ? 0 : 1;
  if (c.as_json) {
    json out = json::array();
    for (const CheckRow& r : rows)
      out.push_back(json{{"id", r.id}, {"claim", r.claim}, {"expected", json::parse(r.expected)}, {"computed", r.computed}, {"pass", r.pass}});
    std::cout << out.dump(2) << '\n';
  } else {
    for (const CheckRow& r : rows) {
      std::cout << (r.pass ? "pass " : "FAIL ") << std::left << std::setw(46) << r.id << " expected " << std::setw(14) << r.expected
                << " computed " << r.computed << '\n';
    }
    std::cout << rows.size() - static_cast<std::size_t>(failures) << "/" << rows.size() << " checks pass\n";
  }
  if (failures > 0) {
    std::cerr << "mismatches:\n";
    for (const CheckRow& r : rows)
      if (!r.pass) std::cerr << "  " << r.id << "\n    - expected " << r.expected << "\n    + computed " << r.computed << '\n';
    return 1;
  }
  return 0;
}

int cmd_oracle(const std::string& golden, int max_n, bool write) {
  const std::string path = golden.empty() ? default_golden_path() : golden;
  std::vector<GoldenEntry> entries = load_golden(path);
  int mismatches = 0;
  for (GoldenEntry& e : entries) {
    if (e.source != "oracle") continue;
    const std::string value = oracle_value(e.id, max_n);
    if (value.empty()) {
      std::cout << "skip  " << e.id << " (beyond --max-n)\n";
      continue;
    }
    const bool same = json::parse(value) == json::parse(e.expected);
    mismatches += same ? 0 : 1;
    std::cout << (same ? "same  " : "new   ") << e.id << " = " << value << '\n';
    e.expected = value;
  }
  if (write) save_golden(path, entries);
  return mismatches > 0 && !write ? 1 : 0;
}

int cmd_experiment(const std::string& which, const std::string& arg, const Common& c) {
  json out;
  if (which == "switching") {
    const std::string expr = arg.empty() ? "paley:13" : arg;
    const LabeledCover gamma = taylor(load_graph_arg(expr));
    out["delta"] = expr;
    out["mu_delta"] = mdim_exact(load_graph_arg(expr), c.solve()).mu();
    json rows = json::array();
    std::set<int> values;
    for (Vertex w = 0; w < gamma.graph.order(); ++w) {
      const int mu = mdim_exact(induced_neighborhood(gamma.graph, w).graph, c.solve()).mu();
      values.insert(mu);
      rows.push_back(json{{"vertex", gamma.tags[static_cast<std::size_t>(w)].to_string()}, {"mu", mu}});
    }
    out["descendants"] = rows;
    out["distinct_values"] = std::vector<int>(values.begin(), values.end());
  } else if (which == "polarity") {
    std::vector<std::string> designs = {"pg2:2", "pg2:3", "pg2:5", "complement(pg2:2)", "design(double(rook:4:4))", "design(double(shrikhande))"};
    if (!arg.empty()) designs = {arg};
    // Incidence graphs grow fast; without an explicit budget each design gets a small one
    // and reports an upper bound when it runs out.
    SolveOptions solve = c.solve();
    if (c.budget == 0 && std::getenv("MDIMLAB_BUDGET") == nullptr) solve.node_budget = 1'000'000;
    json rows = json::array();
    for (const std::string& e : designs) {
      const SymmetricDesign d = load_design_arg(e);
      const PolaritySearch p = find_null_polarity(d);
      const ResolvingCertificate cert = mdim_exact(incidence_graph(d).graph, solve);
      const double v = d.v();
      const double k = d.k();
      const double bound_a = 4.0 * std::sqrt(v) * std::log(v);
      const double bound_b = 4.0 * v * v / (k * (v - k)) * std::log(v);
      json row;
      row["design"] = e;
      row["v"] = d.v();
      row["k"] = d.k();
      row["lambda"] = d.lambda();
      row["null_polarity"] = p.status == PolaritySearch::Status::Found      ? "found"
                             : p.status == PolaritySearch::Status::NotFound ? "none"
                                                                             : "budget-exceeded";
      row["mu"] = cert.mu();
      row["mu_minimum"] = cert.status == CertificateStatus::Minimum;
      row["bound_a"] = bound_a;
      row["bound_b"] = bound_b;
      row["below_both"] = cert.mu() < bound_a && cert.mu() < bound_b;
      rows.push_back(row);
    }
    out["designs"] = rows;
  } else {
    throw Error(Errc::BadParameters, "unknown experiment '" + which + "' (switching or polarity)");
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric dimension of distance-regular graphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool solver) {
    sub->add_flag("--json", common.as_json, "JSON output");
    if (solver) {
      sub->add_option("--threads", common.threads, "worker threads for the exact search")->check(CLI::Range(1, 256));
      sub->add_option("--budget", common.budget, "node budget (default: MDIMLAB_BUDGET or 1e8)");
    }
  };

  std::string family, expr, out;
  std::vector<int> params;
  bool dot = false, design = false;
  auto* construct = app.add_subcommand("construct", "build a graph or design and write it out");
  construct->add_option("--family", family, "family name, e.g. odd, cycle, paley");
  construct->add_option("--param", params, "family parameters, repeatable");
  construct->add_option("--expr", expr, "graph or design expression");
  construct->add_option("--out", out, "output file (default stdout)");
  construct->add_flag("--dot", dot, "Graphviz output");
  construct->add_flag("--design", design, "the expression names a design");

  std::string graph_arg;
  auto* classify = app.add_subcommand("classify", "AH class of a distance-regular graph");
  classify->add_option("graph", graph_arg, "graph file or expression")->required();
  add_common(classify, false);

  bool exact = false, greedy = false, witness = false;
  auto* mdim = app.add_subcommand("mdim", "metric dimension");
  mdim->add_option("graph", graph_arg, "graph file or expression")->required();
  auto* exact_flag = mdim->add_flag("--exact", exact, "exact branch-and-bound (default)");
  mdim->add_flag("--greedy", greedy, "greedy upper bound")->excludes(exact_flag);
  mdim->add_flag("--witness", witness, "list a resolving vertex for every pair");
  add_common(mdim, true);

  LiftArgs lift_args;
  auto* lift = app.add_subcommand("lift", "transfer a resolving set to a related graph");
  lift->add_option("--from", lift_args.from, "halved | folded | taylor | double | push | project | descendant")->required();
  lift->add_option("graph", lift_args.graph, "source graph (taylor, double: the base graph)")->required();
  lift->add_option("--set", lift_args.set, "input set as a JSON array")->required();
  lift->add_option("--minus-set", lift_args.minus_set, "set for the second halved graph");
  lift->add_option("--plus", lift_args.plus_side, "vertices of the + part (push)");
  lift->add_option("--x", lift_args.x, "vertex of the set (descendant)");
  add_common(lift, false);

  auto* bounds = app.add_subcommand("bounds", "lower bound, greedy and Babai bounds");
  bounds->add_option("graph", graph_arg, "graph file or expression")->required();
  add_common(bounds, false);

  std::string design_arg, side = "blocks", check;
  bool split = false;
  auto* semi = app.add_subcommand("semiresolve", "semi-resolving and split resolving sets of a design");
  semi->add_option("design", design_arg, "design file or expression")->required();
  semi->add_option("--side", side, "blocks: points resolving blocks; points: blocks resolving points");
  semi->add_flag("--split", split, "smallest split resolving set");
  semi->add_option("--check", check, "check a given set instead of searching");
  add_common(semi, true);

  std::string suite = "paper", golden;
  bool slow = false;
  auto* verify = app.add_subcommand("verify", "golden-value regression suite");
  verify->add_option("--suite", suite, "suite name")->default_val("paper");
  verify->add_flag("--include-slow", slow, "also run entries marked slow");
  verify->add_option("--golden", golden, "golden file (default: the shipped one)");
  add_common(verify, true);

  int max_n = 40;
  bool write = false;
  auto* oracle = app.add_subcommand("oracle", "recompute oracle golden values by exhaustive search");
  oracle->add_option("--golden", golden, "golden file (default: the shipped one)");
  oracle->add_option("--max-n", max_n, "largest graph to enumerate")->default_val(40);
  oracle->add_flag("--write", write, "store the recomputed values");

  std::string which, exp_arg;
  auto* experiment = app.add_subcommand("experiment", "open-question experiments: switching, polarity");
  experiment->add_option("which", which, "switching | polarity")->required();
  experiment->add_option("input", exp_arg, "base graph (switching) or design (polarity)");
  add_common(experiment, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*construct) return cmd_construct(family, params, expr, out, dot, design);
    if (*classify) return cmd_classify(graph_arg, common);
    if (*mdim) return cmd_mdim(graph_arg, greedy, witness, common);
    if (*lift) return cmd_lift(lift_args, common);
    if (*bounds) return cmd_bounds(graph_arg, common);
    if (*semi) return cmd_semiresolve(design_arg, side, split, check, common);
    if (*verify) return cmd_verify(suite, slow, golden, common);
    if (*oracle) return cmd_oracle(golden, max_n, write);
    if (*experiment) return cmd_experiment(which, exp_arg, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::BudgetExceeded ? kBudgetExit : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
