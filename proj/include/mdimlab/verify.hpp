#pragma once

// Golden-value regression suite. Each golden entry has an id of the form
// "<kind>/<expression>"; the kind selects the computation and the
// expression names the graph or design (see expr.hpp). Values are compared
// as compact JSON text.
//
// Kinds:
//   mu/G            exact metric dimension
//   ah/G            AH class name
//   halved-lift/G   size of lift_halved from minimum sets of both halves
//   folded-lift/G   {"case", "size"} of lift_folded from a minimum folded set
//   projection/G    size of project_to_folded from a minimum set of G
//   taylor-lift/D   size of taylor_lift from a minimum set of D
//   descendants/D   sorted distinct values of mu(Gamma[w]), Gamma = taylor(D)
//   double-lift/D   size of double_lift from a minimum set of D
//   blocking/P      {"size", "double_blocking", "minus_one_semi_resolving"}
//   split/P         mu* of the design P
//   bounds/G        lower_bound_nd <= mu <= greedy, and Babai bounds > mu
//                   where they apply

#include <string>
#include <vector>

#include "mdimlab/mdim.hpp"

namespace mdimlab {

struct ZooEntry {
  std::string expr;
  std::string ah;  ///< expected class
};

/// One graph per AH class.
const std::vector<ZooEntry>& classifier_zoo();

/// Graphs whose metric dimension the exact solver settles at desk scale.
const std::vector<std::string>& solver_zoo();

struct GoldenEntry {
  std::string id;
  std::string claim;
  std::string expected;  ///< compact JSON
  std::string source;    ///< "published", "oracle" or "elementary"
  bool slow = false;
};

/// The checked-in golden file.
std::string default_golden_path();
std::vector<GoldenEntry> load_golden(const std::string& path);
void save_golden(const std::string& path, const std::vector<GoldenEntry>& entries);

/// Computes the value of a golden id, as compact JSON. Throws
/// Error(ParseError) for unknown kinds and Error(BudgetExceeded) when an
/// exact solve runs out of nodes.
std::string evaluate(const std::string& id, const SolveOptions& options = {});

/// Brute-force value for "mu/G" ids with at most max_n vertices, by
/// exhaustive enumeration; empty for anything else.
std::string oracle_value(const std::string& id, int max_n);

struct CheckRow {
  std::string id;
  std::string claim;
  std::string source;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct SuiteOptions {
  std::string golden_path = default_golden_path();
  bool include_slow = false;
  SolveOptions solve;
};

/// Evaluates every golden entry (slow ones only on request). Errors during
/// evaluation are reported in `computed` and count as failures.
std::vector<CheckRow> run_suite(const SuiteOptions& options);

}  // namespace mdimlab
