#include <doctest.h>

#include <cmath>

#include "mdimlab/constructors.hpp"
#include "mdimlab/design.hpp"
#include "mdimlab/error.hpp"
#include "mdimlab/expr.hpp"
#include "mdimlab/mdim.hpp"
#include "oracles.hpp"

using namespace mdimlab;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::BadParameters;
}

}  // namespace

TEST_CASE("is_resolving") {
  const DistanceMatrix c5 = bfs_distances(cycle(5));
  CHECK(static_cast<bool>(is_resolving(c5, std::vector<Vertex>{0, 1})));
  const ResolveCheck k4 = is_resolving(bfs_distances(complete(4)), std::vector<Vertex>{0, 1});
  CHECK(!k4);
  CHECK(k4.unresolved == VertexPair{2, 3});
  const DistanceMatrix p = bfs_distances(odd_graph(3));
  for (Vertex v = 0; v < 10; ++v) CHECK(!is_resolving(p, std::vector<Vertex>{v}));
  CHECK(code_of([&] { is_resolving(p, std::vector<Vertex>{10}); }) == Errc::IndexOutOfRange);
  CHECK(!is_resolving(p, std::vector<Vertex>{}));
  CHECK(static_cast<bool>(is_resolving(bfs_distances(complete(1)), std::vector<Vertex>{})));
}

TEST_CASE("is_resolving reports the first unresolved pair") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const Graph g = oracle::random_connected(rng, n, 0.3);
    const auto d = oracle::distances(g);
    std::vector<Vertex> set;
    for (int v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.3)(rng)) set.push_back(v);
    const ResolveCheck r = is_resolving(bfs_distances(g), set);
    CHECK(r.resolving == oracle::resolving(d, set));
    if (!r) {
      std::optional<VertexPair> first;
      for (int x = 0; x < n && !first; ++x)
        for (int y = x + 1; y < n && !first; ++y) {
          bool same = true;
          for (Vertex s : set) same = same && d[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] == d[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)];
          if (same) first = VertexPair{x, y};
        }
      CHECK(r.unresolved == first);
    }
  }
}

TEST_CASE("pair cover instance") {
  const PairCoverInstance inst(bfs_distances(cycle(5)));
  CHECK(inst.pair_count() == 10);
  for (std::size_t i = 0; i < inst.pair_count(); ++i) {
    const VertexPair p = inst.pair(i);
    CHECK(inst.pair_index(p.x, p.y) == i);
    CHECK(inst.pair_index(p.y, p.x) == i);
  }
  CHECK(inst.resolved_by(0).test(inst.pair_index(0, 1)));
  CHECK(!inst.resolved_by(0).test(inst.pair_index(1, 4)));
  CHECK(inst.resolvers_of(inst.pair_index(1, 4)).test(1));
}

TEST_CASE("exact metric dimension") {
  auto mu = [](const char* e) { return mdim_exact(parse_graph(e)).mu(); };
  CHECK(mu("complete:6") == 5);
  CHECK(mu("multipartite:3:4") == 9);
  CHECK(mu("kvv:5") == 4);
  CHECK(mu("petersen") == 3);
  CHECK(mu("complete:1") == 0);
  CHECK(mu("complete:2") == 1);
  const ResolvingCertificate c = mdim_exact(odd_graph(3));
  CHECK(c.status == CertificateStatus::Minimum);
  CHECK(c.method == "exact-bnb");
  CHECK(!c.budget_exceeded);
  CHECK(static_cast<bool>(is_resolving(bfs_distances(odd_graph(3)), c.set)));
  CHECK(code_of([] { mdim_exact(Graph(2, {})); }) == Errc::DisconnectedGraph);
}

TEST_CASE("Petersen: no 2-set resolves, some 3-set does") {
  const auto d = oracle::distances(odd_graph(3));
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) CHECK(!oracle::resolving(d, {a, b}));
  CHECK(oracle::metric_dimension(odd_graph(3)) == 3);
}

TEST_CASE("exact solver agrees with exhaustive search") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g = oracle::random_connected(rng, n, std::uniform_real_distribution<double>(0.0, 0.6)(rng));
    SolveOptions o;
    o.threads = 1 + trial % 3;
    CHECK(mdim_exact(g, o).mu() == oracle::metric_dimension(g));
    CHECK(mdim_enumerate(g).mu() == oracle::metric_dimension(g));
  }
}

TEST_CASE("witnesses") {
  SolveOptions o;
  o.witness = true;
  const Graph g = cycle(6);
  const DistanceMatrix dm = bfs_distances(g);
  const ResolvingCertificate c = mdim_exact(g, o);
  CHECK(c.per_pair_witness.size() == 15);
  for (const auto& [p, v] : c.per_pair_witness) {
    CHECK(resolves(dm, v, p.x, p.y));
    CHECK(std::find(c.set.begin(), c.set.end(), v) != c.set.end());
  }
}

TEST_CASE("budget exhaustion keeps a verified upper bound") {
  SolveOptions o;
  o.node_budget = 10;
  const Graph g = parse_graph("gq22");
  const ResolvingCertificate c = mdim_exact(g, o);
  CHECK(c.budget_exceeded);
  CHECK(c.status == CertificateStatus::VerifiedResolving);
  CHECK(static_cast<bool>(is_resolving(bfs_distances(g), c.set)));
}

TEST_CASE("greedy") {
  CHECK(mdim_greedy(complete(4)).mu() == 3);
  const ResolvingCertificate c6 = mdim_greedy(cycle(6));
  CHECK(c6.mu() <= 3);
  CHECK(c6.status == CertificateStatus::VerifiedResolving);
  CHECK(c6.method == "greedy");
}

TEST_CASE("certify") {
  const DistanceMatrix dm = bfs_distances(complete(4));
  const ResolvingCertificate bad = certify(dm, {1, 0}, "manual");
  CHECK(bad.status == CertificateStatus::Failed);
  CHECK(bad.failed_pair == VertexPair{2, 3});
  CHECK(bad.set == std::vector<Vertex>{0, 1});
  CHECK(certify(dm, {0, 1, 2, 2}, "manual").status == CertificateStatus::VerifiedResolving);
}

TEST_CASE("twin pairs") {
  const auto t = twin_pairs(complete_multipartite(2, 2));
  CHECK(t == std::vector<VertexPair>{{0, 1}, {2, 3}});
  CHECK(twin_pairs(cycle(5)).empty());
  CHECK(twin_pairs(complete(3)).size() == 3);
}

TEST_CASE("lower bound from diameter") {
  CHECK(lower_bound_nd(10, 2) == 3);
  CHECK(lower_bound_nd(2, 1) == 1);
  CHECK(lower_bound_nd(2, 5) == 1);
  CHECK(lower_bound_nd(14, 3) == 3);
  CHECK(lower_bound_nd(1, 1) == 0);
  CHECK(lower_bound_nd(6, 1) == 5);
  CHECK(lower_bound_nd(1000000000000LL, 8) == 14);
  CHECK(code_of([] { lower_bound_nd(0, 2); }) == Errc::BadParameters);
}

TEST_CASE("Babai bounds") {
  const Graph p = odd_graph(3);
  const BabaiReport b = babai_bounds(p, bfs_distances(p));
  CHECK(b.n == 10);
  CHECK(b.max_distance_class == 6);
  CHECK(b.bound_sqrt == doctest::Approx(4 * std::sqrt(10.0) * std::log(10.0)));
  REQUIRE(b.bound_valency.has_value());
  CHECK(*b.bound_valency == doctest::Approx(200.0 / 21.0 * std::log(10.0)));
  CHECK(b.bound_distance_class == doctest::Approx(2 * 2 * 10.0 / 4.0 * std::log(10.0)));
  const Graph q = hypercube(3);
  CHECK(code_of([&] { babai_bounds(q, bfs_distances(q)); }) == Errc::NotPrimitive);
  const Graph c = cycle(7);
  CHECK(code_of([&] { babai_bounds(c, bfs_distances(c)); }) == Errc::NotPrimitive);
  const Graph o4 = odd_graph(4);
  CHECK(!babai_bounds(o4, bfs_distances(o4)).bound_valency.has_value());
}

TEST_CASE("semi-resolving sets of the Fano plane") {
  const SymmetricDesign fano = pg2(2);
  std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
  CHECK(static_cast<bool>(is_semi_resolving_for_blocks(fano, all)));
  CHECK(static_cast<bool>(is_semi_resolving_for_points(fano, all)));
  const std::vector<int> line = fano.points_on(0).to_vector();
  const PairCheck r = is_semi_resolving_for_blocks(fano, std::vector<int>(line.begin(), line.end()));
  CHECK(!r);
  REQUIRE(r.failed.has_value());
  const auto [a, b] = *r.failed;
  for (int x : line) CHECK(fano.incident(x, a) == fano.incident(x, b));
  CHECK(code_of([&] { is_semi_resolving_for_blocks(fano, std::vector<int>{7}); }) == Errc::IndexOutOfRange);
}

TEST_CASE("minimum semi-resolving and split sets") {
  const SymmetricDesign fano = pg2(2);
  const SemiResolvingCertificate s = min_semi_resolving(fano, DesignSide::Blocks);
  CHECK(s.minimum);
  CHECK(static_cast<bool>(is_semi_resolving_for_blocks(fano, s.set)));
  const SplitCertificate split = split_mdim(fano);
  CHECK(split.mu_star == static_cast<int>(split.points.set.size() + split.blocks.set.size()));
  CHECK(static_cast<bool>(is_resolving(bfs_distances(incidence_graph(fano).graph), split.vertices)));
  CHECK(mdim_exact(incidence_graph(fano).graph).mu() <= split.mu_star);
  CHECK(code_of([] { split_mdim(trivial_design(5)); }) == Errc::BadParameters);
}

TEST_CASE("double blocking sets from three lines") {
  for (int q : {2, 3, 5}) {
    const SymmetricDesign plane = pg2(q);
    const std::vector<int> s = three_lines_2blocking(plane);
    CHECK(s.size() == static_cast<std::size_t>(3 * q));
    CHECK(is_double_blocking(plane, s));
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> rest = s;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK(static_cast<bool>(is_semi_resolving_for_blocks(plane, rest)));
      CHECK(!is_double_blocking(plane, rest));
    }
  }
  CHECK(code_of([] { three_lines_2blocking(design_complement(pg2(2))); }) == Errc::BadParameters);
}

TEST_CASE("null polarity search") {
  CHECK(find_null_polarity(pg2(2)).status == PolaritySearch::Status::NotFound);
  CHECK(find_null_polarity(pg2(3)).status == PolaritySearch::Status::NotFound);
  const SymmetricDesign biplane = design_from_graph(bipartite_double(shrikhande()).graph);
  const PolaritySearch p = find_null_polarity(biplane);
  REQUIRE(p.status == PolaritySearch::Status::Found);
  CHECK(is_null_polarity(biplane, p.sigma));
  CHECK(find_null_polarity(biplane, 1).status == PolaritySearch::Status::BudgetExceeded);
}

TEST_CASE("complementary designs have equal metric dimension") {
  const SymmetricDesign fano = pg2(2);
  CHECK(mdim_exact(incidence_graph(fano).graph).mu() == mdim_exact(incidence_graph(design_complement(fano)).graph).mu());
}
