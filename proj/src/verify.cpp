#include "mdimlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

#include <json.hpp>

#include "mdimlab/error.hpp"
#include "mdimlab/expr.hpp"
#include "mdimlab/imprimitivity.hpp"
#include "mdimlab/lifting.hpp"

#ifndef MDIMLAB_DATA_DIR
#define MDIMLAB_DATA_DIR "data"
#endif

namespace mdimlab {

using json = nlohmann::ordered_json;

const std::vector<ZooEntry>& classifier_zoo() {
  static const std::vector<ZooEntry> zoo = {
      {"petersen", "AH1"},          {"cycle:7", "AH2"},       {"complete:5", "AH3"},  {"multipartite:3:4", "AH4"},
      {"hypercube:3", "AH5"},       {"heawood", "AH6"},       {"icosahedron", "AH7"}, {"hypercube:4", "AH8"},
      {"hypercube:6", "AH9"},       {"johnson:8:4", "AH10"},  {"gq22", "AH11"},       {"double(petersen)", "AH12"},
      {"hypercube:8", "AH13"},
  };
  return zoo;
}

const std::vector<std::string>& solver_zoo() {
  static const std::vector<std::string> zoo = {
      "cycle:5",          "cycle:6",          "cycle:7",          "cycle:8",
      "cycle:12",         "complete:3",       "complete:5",       "complete:8",
      "multipartite:2:2", "multipartite:3:3", "multipartite:3:4", "kvv:3",
      "kvv:4",            "kvv:6",            "hypercube:3",      "hypercube:4",
      "hypercube:6",      "petersen",         "double(petersen)", "double(complete:4)",
      "odd:4",            "double(odd:4)",    "johnson:6:3",      "johnson:8:4",
      "kneser:6:2",       "paley:5",          "paley:13",         "paley:17",
      "icosahedron",      "taylor(paley:13)", "taylor(paley:17)", "rook:3:3",
      "rook:4:4",         "shrikhande",       "heawood",          "incidence(complement(pg2:2))",
      "incidence(pg2:3)", "gq22",             "incidence(design(double(rook:4:4)))",
  };
  return zoo;
}

std::string default_golden_path() { return std::string(MDIMLAB_DATA_DIR) + "/golden.json"; }

std::vector<GoldenEntry> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open golden file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("golden file: ") + e.what());
  }
  std::vector<GoldenEntry> out;
  try {
    for (const auto& e : doc.at("entries")) {
      out.push_back({e.at("id").get<std::string>(), e.value("claim", ""), e.at("expected").dump(),
                     e.value("source", ""), e.value("slow", false)});
    }
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("golden file: ") + e.what());
  }
  return out;
}

void save_golden(const std::string& path, const std::vector<GoldenEntry>& entries) {
  json doc;
  doc["entries"] = json::array();
  for (const GoldenEntry& e : entries) {
    json row;
    row["id"] = e.id;
    row["claim"] = e.claim;
    row["expected"] = json::parse(e.expected);
    row["source"] = e.source;
    if (e.slow) row["slow"] = true;
    doc["entries"].push_back(row);
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

namespace {

struct TooLarge {};

/// Minimum sets either from the exact solver or by brute force.
struct Engine {
  SolveOptions options;
  bool brute = false;
  int max_n = 0;

  std::vector<Vertex> minimum(const Graph& g) const {
    if (brute) {
      if (g.order() > max_n) throw TooLarge{};
      return mdim_enumerate(g).set;
    }
    const ResolvingCertificate c = mdim_exact(g, options);
    if (c.budget_exceeded) throw Error(Errc::BudgetExceeded, "node budget exhausted");
    return c.set;
  }

  int mu(const Graph& g) const { return static_cast<int>(minimum(g).size()); }

  std::vector<int> semi(const SymmetricDesign& d, DesignSide side) const {
    if (!brute) {
      const SemiResolvingCertificate c = min_semi_resolving(d, side, options);
      if (!c.minimum) throw Error(Errc::BudgetExceeded, "node budget exhausted");
      return c.set;
    }
    if (d.v() > max_n) throw TooLarge{};
    const int v = d.v();
    for (int size = 0; size <= v; ++size) {
      std::vector<int> set(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) set[static_cast<std::size_t>(i)] = i;
      while (true) {
        const PairCheck ok = side == DesignSide::Blocks ? is_semi_resolving_for_blocks(d, set) : is_semi_resolving_for_points(d, set);
        if (ok) return set;
        int i = size - 1;
        while (i >= 0 && set[static_cast<std::size_t>(i)] == v - size + i) --i;
        if (i < 0) break;
        ++set[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) set[static_cast<std::size_t>(j)] = set[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    throw Error(Errc::VerificationFailure, "no semi-resolving set");
  }
};

json bounds_hold(const Graph& g, const Engine& engine) {
  const DistanceMatrix dm = bfs_distances(g);
  const int mu = engine.mu(g);
  bool ok = lower_bound_nd(g.order(), std::max(1, *dm.diameter())) <= mu && mu <= mdim_greedy(g).mu();
  try {
    const BabaiReport b = babai_bounds(g, dm);
    ok = ok && b.bound_sqrt > mu && b.bound_distance_class > mu && (!b.bound_valency || *b.bound_valency > mu);
  } catch (const Error& e) {
    if (e.code() != Errc::NotPrimitive && e.code() != Errc::NotDRG) throw;
  }
  return ok;
}

json compute(const std::string& kind, const std::string& expr, const Engine& engine) {
  if (kind == "mu") return engine.mu(parse_graph(expr));
  if (kind == "ah") return classify_ah(parse_graph(expr)).name();
  if (kind == "halved-lift") {
    const Graph g = parse_graph(expr);
    const Halving h = halve(g);
    return lift_halved(g, engine.minimum(h.plus.graph), engine.minimum(h.minus.graph)).mu();
  }
  if (kind == "folded-lift") {
    const Graph g = parse_graph(expr);
    const AntipodalStructure s = antipodal_structure(g, bfs_distances(g));
    const FoldedLift lift = lift_folded(g, s, engine.minimum(fold(g, s).folded));
    json out;
    out["case"] = to_string(lift.fold_case);
    out["size"] = lift.certificate.mu();
    return out;
  }
  if (kind == "projection") {
    const Graph g = parse_graph(expr);
    return project_to_folded(g, engine.minimum(g)).mu();
  }
  if (kind == "taylor-lift") {
    const Graph delta = parse_graph(expr);
    return taylor_lift(taylor(delta), engine.minimum(delta)).mu();
  }
  if (kind == "descendants") {
    const LabeledCover gamma = taylor(parse_graph(expr));
    std::set<int> values;
    for (Vertex w = 0; w < gamma.graph.order(); ++w) values.insert(engine.mu(induced_neighborhood(gamma.graph, w).graph));
    return json(std::vector<int>(values.begin(), values.end()));
  }
  if (kind == "double-lift") {
    const Graph delta = parse_graph(expr);
    return double_lift(delta, engine.minimum(delta)).mu();
  }
  if (kind == "blocking") {
    const SymmetricDesign plane = parse_design(expr);
    const std::vector<int> s = three_lines_2blocking(plane);
    bool semi = true;
    for (std::size_t i = 0; i < s.size() && semi; ++i) {
      std::vector<int> rest = s;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      semi = static_cast<bool>(is_semi_resolving_for_blocks(plane, rest));
    }
    json out;
    out["size"] = s.size();
    out["double_blocking"] = is_double_blocking(plane, s);
    out["minus_one_semi_resolving"] = semi;
    return out;
  }
  if (kind == "split") {
    const SymmetricDesign d = parse_design(expr);
    if (!engine.brute) return split_mdim(d, engine.options).mu_star;
    return engine.semi(d, DesignSide::Blocks).size() + engine.semi(d, DesignSide::Points).size();
  }
  if (kind == "bounds") return bounds_hold(parse_graph(expr), engine);
  throw Error(Errc::ParseError, "unknown check kind '" + kind + "'");
}

std::pair<std::string, std::string> split_id(const std::string& id) {
  const auto slash = id.find('/');
  if (slash == std::string::npos) throw Error(Errc::ParseError, "check id '" + id + "' has no kind");
  return {id.substr(0, slash), id.substr(slash + 1)};
}

}  // namespace

std::string evaluate(const std::string& id, const SolveOptions& options) {
  const auto [kind, expr] = split_id(id);
  return compute(kind, expr, Engine{options, false, 0}).dump();
}

std::string oracle_value(const std::string& id, int max_n) {
  const auto [kind, expr] = split_id(id);
  if (kind == "ah" || kind == "blocking" || kind == "bounds") return {};
  try {
    return compute(kind, expr, Engine{{}, true, max_n}).dump();
  } catch (const TooLarge&) {
    return {};
  }
}

std::vector<CheckRow> run_suite(const SuiteOptions& options) {
  std::vector<CheckRow> rows;
  for (const GoldenEntry& e : load_golden(options.golden_path)) {
    if (e.slow && !options.include_slow) continue;
    CheckRow row{e.id, e.claim, e.source, e.expected, {}, false, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      row.computed = evaluate(e.id, options.solve);
      row.pass = json::parse(row.computed) == json::parse(row.expected);
    } catch (const std::exception& ex) {
      row.computed = std::string("error: ") + ex.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mdimlab
