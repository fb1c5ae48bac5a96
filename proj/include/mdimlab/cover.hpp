#pragma once

// Minimum set cover by branch-and-bound over bitsets. Both the resolving-set
// problem (cover all vertex pairs) and the semi-resolving problems for
// designs (cover all block pairs or point pairs) reduce to this.

#include <cstdint>
#include <vector>

#include "mdimlab/bitset.hpp"

namespace mdimlab {

/// Candidates 0..m-1 each cover a subset of the elements 0..universe-1.
/// `coverers[e]` is the transpose of `sets`.
struct CoverProblem {
  std::size_t universe = 0;
  std::vector<Bitset> sets;
  std::vector<Bitset> coverers;

  static CoverProblem from_sets(std::size_t universe, std::vector<Bitset> sets);
};

struct CoverOptions {
  std::uint64_t node_budget = 100'000'000;
  int threads = 1;
  /// Known lower bound on the optimum; the search stops as soon as it is met.
  std::size_t lower_bound = 0;
  /// Elements to branch on before any other uncovered element.
  std::vector<std::size_t> priority;
};

struct CoverResult {
  std::vector<int> chosen;  ///< ascending
  bool optimal = false;     ///< false iff the node budget ran out
  std::uint64_t nodes = 0;
};

/// Greedy maximum-coverage; ties go to the smallest candidate. Throws
/// Error(BadParameters) if some element has no coverer.
std::vector<int> greedy_cover(const CoverProblem& problem);

/// Exact minimum cover seeded with the greedy solution. At each node the
/// uncovered element with the fewest remaining coverers is branched on, its
/// coverers tried in decreasing marginal coverage (ties by ascending id),
/// each later sibling excluding the earlier ones. A node is pruned when the
/// smallest number of remaining candidates whose marginal coverages could
/// sum to the uncovered count cannot beat the incumbent.
///
/// With threads > 1 the root's branches are shared among workers; the
/// optimum size is the same, the reported cover may differ.
CoverResult solve_min_cover(const CoverProblem& problem, const CoverOptions& options);

}  // namespace mdimlab
