#include "mdimlab/mdim.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "mdimlab/error.hpp"

namespace mdimlab {

const char* to_string(CertificateStatus s) noexcept {
  switch (s) {
    case CertificateStatus::VerifiedResolving: return "verified-resolving";
    case CertificateStatus::Minimum: return "minimum";
    case CertificateStatus::Failed: return "failed";
  }
  return "failed";
}

bool resolves(const DistanceMatrix& dm, Vertex v, Vertex x, Vertex y) { return dm(v, x) != dm(v, y); }

namespace {

void check_vertices(int n, std::span<const Vertex> set) {
  for (Vertex v : set)
    if (v < 0 || v >= n) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace

ResolveCheck is_resolving(const DistanceMatrix& dm, std::span<const Vertex> set) {
  const int n = dm.order();
  check_vertices(n, set);
  std::unordered_map<std::string, Vertex> first;
  std::unordered_map<std::string, bool> reported;
  std::optional<VertexPair> worst;
  std::string key(set.size(), '\0');
  for (Vertex y = 0; y < n; ++y) {
    for (std::size_t i = 0; i < set.size(); ++i) key[i] = static_cast<char>(dm(set[i], y));
    auto [it, inserted] = first.try_emplace(key, y);
    if (inserted || reported[key]) continue;
    reported[key] = true;
    const VertexPair p{it->second, y};
    if (!worst || p.x < worst->x || (p.x == worst->x && p.y < worst->y)) worst = p;
  }
  return ResolveCheck{!worst.has_value(), worst};
}

PairCoverInstance::PairCoverInstance(const DistanceMatrix& dm) : n_(dm.order()) {
  const auto n = static_cast<std::size_t>(n_);
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y) pairs_.push_back({x, y});
  std::vector<Bitset> sets(n, Bitset(pairs_.size()));
  for (std::size_t v = 0; v < n; ++v) {
    auto row = dm.row(static_cast<Vertex>(v));
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      if (row[static_cast<std::size_t>(pairs_[p].x)] != row[static_cast<std::size_t>(pairs_[p].y)]) sets[v].set(p);
  }
  problem_ = CoverProblem::from_sets(pairs_.size(), std::move(sets));
}

std::size_t PairCoverInstance::pair_index(Vertex x, Vertex y) const {
  if (x > y) std::swap(x, y);
  if (x < 0 || y >= n_ || x == y) throw Error(Errc::IndexOutOfRange, "not a pair of distinct vertices");
  const auto ux = static_cast<std::size_t>(x);
  const auto n = static_cast<std::size_t>(n_);
  return ux * n - ux * (ux + 1) / 2 + static_cast<std::size_t>(y - x - 1);
}

std::vector<VertexPair> twin_pairs(const Graph& g) {
  std::vector<VertexPair> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      Bitset open_x = g.neighbors(x);
      Bitset open_y = g.neighbors(y);
      open_x.reset(static_cast<std::size_t>(y));
      open_y.reset(static_cast<std::size_t>(x));
      if (open_x == open_y) out.push_back({x, y});
    }
  return out;
}

ResolvingCertificate certify(const DistanceMatrix& dm, std::vector<Vertex> set, std::string method, bool witness) {
  ResolvingCertificate cert;
  cert.set = sorted_unique(std::move(set));
  cert.method = std::move(method);
  const ResolveCheck check = is_resolving(dm, cert.set);
  cert.status = check ? CertificateStatus::VerifiedResolving : CertificateStatus::Failed;
  cert.failed_pair = check.unresolved;
  if (witness && check) {
    for (Vertex x = 0; x < dm.order(); ++x)
      for (Vertex y = x + 1; y < dm.order(); ++y)
        for (Vertex v : cert.set)
          if (resolves(dm, v, x, y)) {
            cert.per_pair_witness.push_back({{x, y}, v});
            break;
          }
  }
  return cert;
}

namespace {

DistanceMatrix connected_distances(const Graph& g) {
  DistanceMatrix dm = bfs_distances(g);
  if (!dm.connected()) throw Error(Errc::DisconnectedGraph, "metric dimension needs a connected graph");
  return dm;
}

}  // namespace

ResolvingCertificate mdim_exact(const Graph& g, const SolveOptions& options) {
  const DistanceMatrix dm = connected_distances(g);
  const PairCoverInstance inst(dm);
  CoverOptions co;
  co.node_budget = options.node_budget;
  co.threads = options.threads;
  co.lower_bound = g.order() == 1 ? 0 : static_cast<std::size_t>(lower_bound_nd(g.order(), *dm.diameter()));
  for (const VertexPair& p : twin_pairs(g)) co.priority.push_back(inst.pair_index(p.x, p.y));
  const CoverResult r = solve_min_cover(inst.problem(), co);

  ResolvingCertificate cert = certify(dm, r.chosen, "exact-bnb", options.witness);
  if (cert.status == CertificateStatus::Failed) throw Error(Errc::VerificationFailure, "solver returned a non-resolving set");
  cert.nodes_explored = r.nodes;
  if (r.optimal)
    cert.status = CertificateStatus::Minimum;
  else
    cert.budget_exceeded = true;
  return cert;
}

ResolvingCertificate mdim_greedy(const Graph& g, const SolveOptions& options) {
  const DistanceMatrix dm = connected_distances(g);
  const PairCoverInstance inst(dm);
  ResolvingCertificate cert = certify(dm, greedy_cover(inst.problem()), "greedy", options.witness);
  if (cert.status == CertificateStatus::Failed) throw Error(Errc::VerificationFailure, "greedy returned a non-resolving set");
  return cert;
}

ResolvingCertificate mdim_enumerate(const Graph& g) {
  const DistanceMatrix dm = connected_distances(g);
  const int n = g.order();
  std::uint64_t checked = 0;
  for (int size = 0; size <= n; ++size) {
    std::vector<Vertex> set(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) set[static_cast<std::size_t>(i)] = i;
    while (true) {
      ++checked;
      if (is_resolving(dm, set)) {
        ResolvingCertificate cert = certify(dm, set, "enumeration");
        cert.status = CertificateStatus::Minimum;
        cert.nodes_explored = checked;
        return cert;
      }
      int i = size - 1;
      while (i >= 0 && set[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++set[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) set[static_cast<std::size_t>(j)] = set[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw Error(Errc::VerificationFailure, "no resolving set found");
}

int lower_bound_nd(long long n, int d) {
  if (n < 1 || d < 1) throw Error(Errc::BadParameters, "lower bound needs n >= 1 and d >= 1");
  for (int mu = 0;; ++mu) {
    long long power = 1;
    for (int i = 0; i < mu && power < n; ++i) power *= d;
    if (mu + power >= n) return mu;
  }
}

BabaiReport babai_bounds(const Graph& g, const DistanceMatrix& dm) {
  const IntersectionArray ia = intersection_array(g, dm);
  const int d = ia.diameter();
  const int k = ia.valency();
  if (d < 2 || k < 3 || !is_primitive(g, dm))
    throw Error(Errc::NotPrimitive, "bounds need a primitive distance-regular graph with d >= 2 and k >= 3");
  BabaiReport r;
  r.n = g.order();
  r.k = k;
  r.d = d;
  r.max_distance_class = max_distance_class(dm);
  const double n = r.n;
  const double ln = std::log(n);
  r.bound_sqrt = 4.0 * std::sqrt(n) * ln;
  if (d == 2) r.bound_valency = 2.0 * n * n / (static_cast<double>(k) * (n - k)) * ln;
  r.bound_distance_class = 2.0 * d * n / (n - r.max_distance_class) * ln;
  return r;
}

namespace {

/// Candidate c separates objects a, b iff exactly one contains c.
CoverProblem separation_problem(const std::vector<Bitset>& membership, int objects) {
  std::size_t pairs = static_cast<std::size_t>(objects) * static_cast<std::size_t>(objects - 1) / 2;
  std::vector<Bitset> sets(membership.size(), Bitset(pairs));
  for (std::size_t c = 0; c < membership.size(); ++c) {
    std::size_t p = 0;
    for (int a = 0; a < objects; ++a)
      for (int b = a + 1; b < objects; ++b, ++p)
        if (membership[c].test(static_cast<std::size_t>(a)) != membership[c].test(static_cast<std::size_t>(b))) sets[c].set(p);
  }
  return CoverProblem::from_sets(pairs, std::move(sets));
}

PairCheck separation_check(const std::vector<const Bitset*>& chosen, int objects) {
  for (int a = 0; a < objects; ++a)
    for (int b = a + 1; b < objects; ++b) {
      bool separated = false;
      for (const Bitset* m : chosen)
        if (m->test(static_cast<std::size_t>(a)) != m->test(static_cast<std::size_t>(b))) {
          separated = true;
          break;
        }
      if (!separated) return PairCheck{false, std::pair{a, b}};
    }
  return PairCheck{true, std::nullopt};
}

std::vector<Bitset> membership(const SymmetricDesign& d, DesignSide side) {
  std::vector<Bitset> rows;
  for (int c = 0; c < d.v(); ++c) rows.push_back(side == DesignSide::Blocks ? d.blocks_through(c) : d.points_on(c));
  return rows;
}

void check_indices(const SymmetricDesign& d, std::span<const int> items) {
  for (int i : items)
    if (i < 0 || i >= d.v()) throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside the design");
}

}  // namespace

PairCheck is_semi_resolving_for_blocks(const SymmetricDesign& d, std::span<const int> points) {
  check_indices(d, points);
  std::vector<const Bitset*> chosen;
  for (int x : points) chosen.push_back(&d.blocks_through(x));
  return separation_check(chosen, d.v());
}

PairCheck is_semi_resolving_for_points(const SymmetricDesign& d, std::span<const int> blocks) {
  check_indices(d, blocks);
  std::vector<const Bitset*> chosen;
  for (int b : blocks) chosen.push_back(&d.points_on(b));
  return separation_check(chosen, d.v());
}

SemiResolvingCertificate min_semi_resolving(const SymmetricDesign& d, DesignSide side, const SolveOptions& options) {
  const CoverProblem p = separation_problem(membership(d, side), d.v());
  CoverOptions co;
  co.node_budget = options.node_budget;
  co.threads = options.threads;
  // Distinct membership vectors over |S| candidates need 2^|S| >= v.
  while ((std::size_t{1} << co.lower_bound) < static_cast<std::size_t>(d.v())) ++co.lower_bound;
  const CoverResult r = solve_min_cover(p, co);
  SemiResolvingCertificate cert{side, r.chosen, r.optimal, r.nodes};
  const PairCheck check = side == DesignSide::Blocks ? is_semi_resolving_for_blocks(d, cert.set) : is_semi_resolving_for_points(d, cert.set);
  if (!check) throw Error(Errc::VerificationFailure, "semi-resolving search returned an invalid set");
  return cert;
}

SplitCertificate split_mdim(const SymmetricDesign& d, const SolveOptions& options) {
  if (d.k() >= d.v() - 1 || d.k() < 1) throw Error(Errc::BadParameters, "split resolving sets need 1 <= k < v - 1");
  SplitCertificate out;
  out.points = min_semi_resolving(d, DesignSide::Blocks, options);
  out.blocks = min_semi_resolving(d, DesignSide::Points, options);
  out.mu_star = static_cast<int>(out.points.set.size() + out.blocks.set.size());
  for (int x : out.points.set) out.vertices.push_back(x);
  for (int b : out.blocks.set) out.vertices.push_back(d.v() + b);
  const LabeledCover ig = incidence_graph(d);
  if (!is_resolving(bfs_distances(ig.graph), out.vertices))
    throw Error(Errc::VerificationFailure, "split resolving set does not resolve the incidence graph");
  return out;
}

namespace {

void require_plane(const SymmetricDesign& plane) {
  if (plane.lambda() != 1) throw Error(Errc::BadParameters, "expected a projective plane (lambda = 1)");
}

}  // namespace

bool is_double_blocking(const SymmetricDesign& plane, std::span<const int> points) {
  require_plane(plane);
  check_indices(plane, points);
  Bitset s(static_cast<std::size_t>(plane.v()));
  for (int x : points) s.set(static_cast<std::size_t>(x));
  for (int b = 0; b < plane.v(); ++b)
    if (plane.points_on(b).count_and(s) < 2) return false;
  return true;
}

std::vector<int> three_lines_2blocking(const SymmetricDesign& plane) {
  require_plane(plane);
  const int v = plane.v();
  auto meet = [&](int a, int b) { return (plane.points_on(a) & plane.points_on(b)).first(); };
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c) {
        const std::size_t ab = meet(a, b);
        const std::size_t ac = meet(a, c);
        const std::size_t bc = meet(b, c);
        if (ab == ac || ab == bc || ac == bc) continue;
        return (plane.points_on(a) | plane.points_on(b) | plane.points_on(c)).to_vector();
      }
  throw Error(Errc::NoSuchTriple, "no three non-concurrent lines");
}

namespace {

class PolarityBacktrack {
 public:
  PolarityBacktrack(const SymmetricDesign& d, std::uint64_t budget)
      : d_(d), budget_(budget), sigma_(static_cast<std::size_t>(d.v()), -1), used_(static_cast<std::size_t>(d.v()), false) {}

  PolaritySearch run() {
    PolaritySearch out;
    const bool found = extend(0);
    out.nodes = nodes_;
    if (found) {
      out.status = PolaritySearch::Status::Found;
      out.sigma = sigma_;
    } else {
      out.status = exceeded_ ? PolaritySearch::Status::BudgetExceeded : PolaritySearch::Status::NotFound;
    }
    return out;
  }

 private:
  bool extend(int x) {
    if (x == d_.v()) return true;
    for (int b = 0; b < d_.v(); ++b) {
      if (used_[static_cast<std::size_t>(b)] || d_.incident(x, b)) continue;
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) ok = d_.incident(y, b) == d_.incident(x, sigma_[static_cast<std::size_t>(y)]);
      if (!ok) continue;
      sigma_[static_cast<std::size_t>(x)] = b;
      used_[static_cast<std::size_t>(b)] = true;
      if (extend(x + 1)) return true;
      used_[static_cast<std::size_t>(b)] = false;
      sigma_[static_cast<std::size_t>(x)] = -1;
      if (exceeded_) return false;
    }
    return false;
  }

  const SymmetricDesign& d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<int> sigma_;
  std::vector<bool> used_;
};

}  // namespace

PolaritySearch find_null_polarity(const SymmetricDesign& d, std::uint64_t node_budget) {
  return PolarityBacktrack(d, node_budget).run();
}

}  // namespace mdimlab
