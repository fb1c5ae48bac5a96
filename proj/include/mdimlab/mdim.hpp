#pragma once

// Resolving sets and metric dimension, plus the design-theoretic variants:
// semi-resolving and split resolving sets, double blocking sets and null
// polarities.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdimlab/cover.hpp"
#include "mdimlab/design.hpp"
#include "mdimlab/graph.hpp"

namespace mdimlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Unordered pair with x < y.
struct VertexPair {
  Vertex x;
  Vertex y;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

struct ResolveCheck {
  bool resolving = false;
  std::optional<VertexPair> unresolved;  ///< lexicographically first failure

  explicit operator bool() const noexcept { return resolving; }
};

/// True iff d(v, x) != d(v, y).
bool resolves(const DistanceMatrix& dm, Vertex v, Vertex x, Vertex y);

/// Exact check over all unordered pairs. Throws Error(IndexOutOfRange) for
/// vertices outside the graph.
ResolveCheck is_resolving(const DistanceMatrix& dm, std::span<const Vertex> set);

enum class CertificateStatus { VerifiedResolving, Minimum, Failed };
const char* to_string(CertificateStatus s) noexcept;

struct ResolvingCertificate {
  std::vector<Vertex> set;  ///< ascending
  CertificateStatus status = CertificateStatus::Failed;
  std::string method;
  std::optional<VertexPair> failed_pair;
  /// For each pair, the first member of `set` resolving it; filled on request.
  std::vector<std::pair<VertexPair, Vertex>> per_pair_witness;
  std::uint64_t nodes_explored = 0;
  /// The exact search stopped at its node budget; `set` is an upper bound.
  bool budget_exceeded = false;

  int mu() const noexcept { return static_cast<int>(set.size()); }
};

/// Set-cover view of the resolving condition: one element per unordered
/// pair, one candidate per vertex.
class PairCoverInstance {
 public:
  explicit PairCoverInstance(const DistanceMatrix& dm);

  int order() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return problem_.universe; }
  std::size_t pair_index(Vertex x, Vertex y) const;
  VertexPair pair(std::size_t index) const { return pairs_[index]; }

  /// Pairs resolved by v.
  const Bitset& resolved_by(Vertex v) const { return problem_.sets[static_cast<std::size_t>(v)]; }
  /// Vertices resolving the pair with the given index.
  const Bitset& resolvers_of(std::size_t pair) const { return problem_.coverers[pair]; }
  const CoverProblem& problem() const noexcept { return problem_; }

 private:
  int n_ = 0;
  std::vector<VertexPair> pairs_;
  CoverProblem problem_;
};

struct SolveOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  int threads = 1;
  bool witness = false;
};

/// Pairs of vertices with equal open or closed neighbourhoods. Any
/// resolving set contains at least one vertex of each such pair.
std::vector<VertexPair> twin_pairs(const Graph& g);

/// Minimum resolving set by branch-and-bound (see solve_min_cover), seeded
/// with mdim_greedy and stopped early once lower_bound_nd is met. When the
/// node budget runs out the certificate carries the best set found with
/// status VerifiedResolving. Throws Error(DisconnectedGraph).
ResolvingCertificate mdim_exact(const Graph& g, const SolveOptions& options = {});

/// Greedy maximum-coverage resolving set, status VerifiedResolving.
ResolvingCertificate mdim_greedy(const Graph& g, const SolveOptions& options = {});

/// Exhaustive search over subsets in increasing size. Intended for small
/// graphs and for bootstrapping reference values.
ResolvingCertificate mdim_enumerate(const Graph& g);

/// Re-checks `set` against dm and returns a certificate with the given
/// method, status VerifiedResolving or Failed.
ResolvingCertificate certify(const DistanceMatrix& dm, std::vector<Vertex> set, std::string method, bool witness = false);

/// Least mu >= 0 with mu + d^mu >= n.
int lower_bound_nd(long long n, int d);

struct BabaiReport {
  int n = 0;
  int k = 0;
  int d = 0;
  int max_distance_class = 0;
  double bound_sqrt = 0;                 ///< 4 sqrt(n) ln n
  std::optional<double> bound_valency;   ///< 2n^2/(k(n-k)) ln n, only for d = 2
  double bound_distance_class = 0;       ///< 2d n/(n-M) ln n
};

/// Upper bounds for primitive distance-regular graphs with k >= 3 and
/// d >= 2, natural logarithms. Throws Error(NotPrimitive) otherwise.
BabaiReport babai_bounds(const Graph& g, const DistanceMatrix& dm);

/// Which objects of a design must be told apart.
enum class DesignSide {
  Blocks,  ///< choose points resolving every pair of blocks
  Points,  ///< choose blocks resolving every pair of points
};

struct PairCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> failed;  ///< lexicographically first

  explicit operator bool() const noexcept { return ok; }
};

/// Every pair of blocks has a chosen point on exactly one of them.
PairCheck is_semi_resolving_for_blocks(const SymmetricDesign& d, std::span<const int> points);
/// Every pair of points has a chosen block through exactly one of them.
PairCheck is_semi_resolving_for_points(const SymmetricDesign& d, std::span<const int> blocks);

struct SemiResolvingCertificate {
  DesignSide side = DesignSide::Blocks;
  std::vector<int> set;
  bool minimum = false;
  std::uint64_t nodes_explored = 0;
};

SemiResolvingCertificate min_semi_resolving(const SymmetricDesign& d, DesignSide side, const SolveOptions& options = {});

struct SplitCertificate {
  SemiResolvingCertificate points;  ///< points resolving the blocks
  SemiResolvingCertificate blocks;  ///< blocks resolving the points
  int mu_star = 0;
  /// Union as vertices of incidence_graph(d); verified resolving there.
  std::vector<Vertex> vertices;
};

/// Smallest split resolving set. Requires k < v - 1 (Error(BadParameters)).
SplitCertificate split_mdim(const SymmetricDesign& d, const SolveOptions& options = {});

/// Every line carries at least two points of `points`. Requires lambda = 1.
bool is_double_blocking(const SymmetricDesign& plane, std::span<const int> points);

/// Union of the first three pairwise non-concurrent lines in lexicographic
/// order of line triples; 3q points.
std::vector<int> three_lines_2blocking(const SymmetricDesign& plane);

struct PolaritySearch {
  enum class Status { Found, NotFound, BudgetExceeded };
  Status status = Status::NotFound;
  std::vector<int> sigma;
  std::uint64_t nodes = 0;
};

/// Backtracking over point -> block assignments, keeping the partial map
/// symmetric and free of absolute points.
PolaritySearch find_null_polarity(const SymmetricDesign& d, std::uint64_t node_budget = 10'000'000);

}  // namespace mdimlab
