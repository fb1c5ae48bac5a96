#include <doctest.h>

#include "mdimlab/constructors.hpp"
#include "mdimlab/error.hpp"
#include "mdimlab/expr.hpp"
#include "mdimlab/lifting.hpp"
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

std::vector<Vertex> minimum(const Graph& g) { return mdim_exact(g).set; }

void check_resolves(const Graph& g, const ResolvingCertificate& c) {
  CHECK(c.status == CertificateStatus::VerifiedResolving);
  CHECK(oracle::resolving(oracle::distances(g), c.set));
}

AntipodalStructure antipodes(const Graph& g) { return antipodal_structure(g, bfs_distances(g)); }

}  // namespace

TEST_CASE("lift_halved") {
  SUBCASE("sizes add up") {
    for (const std::string& e : {"hypercube:3", "hypercube:4", "multipartite:2:4", "gq22", "heawood"}) {
      const Graph g = parse_graph(e);
      const Halving h = halve(g);
      const auto rp = minimum(h.plus.graph);
      const auto rm = minimum(h.minus.graph);
      const ResolvingCertificate c = lift_halved(g, rp, rm);
      CHECK(c.mu() == static_cast<int>(rp.size() + rm.size()));
      CHECK(c.method == "lifted-halving");
      check_resolves(g, c);
    }
  }
  SUBCASE("K_{n,n} gives 2n - 2") {
    for (int n = 2; n <= 5; ++n) {
      const Graph g = complete_multipartite(2, n);
      const Halving h = halve(g);
      CHECK(lift_halved(g, minimum(h.plus.graph), minimum(h.minus.graph)).mu() == 2 * n - 2);
    }
  }
  SUBCASE("C_6 from two 2-sets of the triangles") {
    const ResolvingCertificate c = lift_halved(cycle(6), std::vector<Vertex>{0, 1}, std::vector<Vertex>{0, 1});
    CHECK(c.mu() == 4);
    check_resolves(cycle(6), c);
  }
  SUBCASE("rejects non-resolving halves") {
    CHECK(code_of([] { lift_halved(hypercube(3), std::vector<Vertex>{0}, std::vector<Vertex>{0, 1, 2}); }) == Errc::InputNotResolving);
  }
}

TEST_CASE("lift_folded") {
  SUBCASE("sK_t from s-1 vertices of K_s adds one class") {
    for (int s = 2; s <= 4; ++s)
      for (int t = 2; t <= 4; ++t) {
        const Graph g = complete_multipartite(s, t);
        std::vector<int> rbar;
        for (int i = 0; i < s - 1; ++i) rbar.push_back(i);
        const FoldedLift f = lift_folded(g, antipodes(g), rbar);
        CHECK(f.fold_case == FoldCase::WithExtra);
        CHECK(f.extra == s - 1);
        CHECK(f.certificate.mu() == s * (t - 1));
        check_resolves(g, f.certificate);
      }
  }
  SUBCASE("odd diameter resolves directly") {
    const Graph q = hypercube(3);
    const FoldedLift fq = lift_folded(q, antipodes(q), std::vector<int>{0, 1, 2});
    CHECK(fq.fold_case == FoldCase::Direct);
    CHECK(fq.certificate.mu() == 3);
    check_resolves(q, fq.certificate);

    const Graph ico = taylor(cycle(5)).graph;
    const FoldedLift fi = lift_folded(ico, antipodes(ico), std::vector<int>{0, 1, 2, 3, 4});
    CHECK(fi.fold_case == FoldCase::Direct);
    CHECK(fi.certificate.mu() == 5);
    check_resolves(ico, fi.certificate);
  }
  SUBCASE("the size bound r|R| and r(|R|+1)") {
    for (const std::string& e : {"hypercube:4", "hypercube:5", "johnson:8:4", "double(odd:4)", "cycle:8", "cycle:10"}) {
      const Graph g = parse_graph(e);
      const AntipodalStructure s = antipodes(g);
      const auto rbar = minimum(fold(g, s).folded);
      const FoldedLift f = lift_folded(g, s, std::vector<int>(rbar.begin(), rbar.end()));
      const int r = s.t - 1;
      const int expected = f.fold_case == FoldCase::Direct ? r * static_cast<int>(rbar.size()) : r * static_cast<int>(rbar.size() + 1);
      CHECK(f.certificate.mu() == expected);
      check_resolves(g, f.certificate);
    }
  }
  SUBCASE("rejects a non-resolving folded set") {
    const Graph q = hypercube(3);
    CHECK(code_of([&] { lift_folded(q, antipodes(q), std::vector<int>{0}); }) == Errc::InputNotResolving);
  }
}

TEST_CASE("push_to_plus") {
  const Graph ico = taylor(cycle(5)).graph;
  Bitset plus(12);
  for (int v : {0, 1, 2, 3, 4, 10}) plus.set(static_cast<std::size_t>(v));

  SUBCASE("mixed signs land in V+ with the same size") {
    const std::vector<Vertex> r{5, 1, 11};
    REQUIRE(oracle::resolving(oracle::distances(ico), {5, 1, 11}));
    const ResolvingCertificate c = push_to_plus(ico, plus, r);
    CHECK(c.set == std::vector<Vertex>{0, 1, 10});
    CHECK(c.method == "pushed-plus");
    check_resolves(ico, c);
  }
  SUBCASE("fixed point") {
    const std::vector<Vertex> r{0, 1, 10};
    CHECK(push_to_plus(ico, plus, r).set == r);
  }
  SUBCASE("every resolving set of the Desargues graph keeps its size") {
    const Graph d = bipartite_double(odd_graph(3)).graph;
    const Bipartition b = bipartition(d);
    const auto r = minimum(d);
    const ResolvingCertificate c = push_to_plus(d, b.plus_set, r);
    CHECK(c.mu() == static_cast<int>(r.size()));
    for (Vertex v : c.set) CHECK(b.in_plus(v));
    check_resolves(d, c);
  }
  SUBCASE("random resolving sets of a 2-antipodal graph") {
    const Graph g = taylor(paley(13)).graph;
    const auto d = oracle::distances(g);
    std::mt19937 rng(4);
    Bitset p(28);
    for (int v = 0; v < 13; ++v) p.set(static_cast<std::size_t>(v));
    p.set(26);
    int seen = 0;
    while (seen < 20) {
      std::vector<Vertex> r;
      for (int v = 0; v < 28; ++v)
        if (std::bernoulli_distribution(0.25)(rng)) r.push_back(v);
      if (!oracle::resolving(d, r)) continue;
      ++seen;
      const ResolvingCertificate c = push_to_plus(g, p, r);
      CHECK(c.mu() <= static_cast<int>(r.size()));
      check_resolves(g, c);
    }
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { push_to_plus(ico, plus, std::vector<Vertex>{0}); }) == Errc::InputNotResolving);
    Bitset bad(12);
    bad.set(0);
    CHECK(code_of([&] { push_to_plus(ico, bad, std::vector<Vertex>{0, 1, 10}); }) == Errc::NotTwoAntipodal);
    const Graph m = complete_multipartite(2, 3);
    CHECK(code_of([&] { push_to_plus(m, Bitset(6), std::vector<Vertex>{0, 1, 3, 4}); }) == Errc::NotTwoAntipodal);
  }
}

TEST_CASE("project_to_folded") {
  SUBCASE("equality for bipartite 2-antipodal graphs of odd diameter") {
    for (const Graph& base : {complete(4), odd_graph(3), odd_graph(4)}) {
      const Graph g = bipartite_double(base).graph;
      const auto r = minimum(g);
      const ResolvingCertificate c = project_to_folded(g, r);
      CHECK(c.method == "projected-folded");
      check_resolves(base, c);
      CHECK(c.mu() == mdim_exact(base).mu());
      CHECK(static_cast<int>(r.size()) == c.mu());
    }
  }
  SUBCASE("Q_3 projects onto 3 vertices of K_4") {
    const ResolvingCertificate c = project_to_folded(hypercube(3), minimum(hypercube(3)));
    CHECK(c.mu() == 3);
  }
  SUBCASE("hypothesis failures") {
    CHECK(code_of([] { project_to_folded(hypercube(4), std::vector<Vertex>{0, 1, 2, 4}); }) == Errc::HypothesisFailure);
    CHECK(code_of([] { project_to_folded(taylor(cycle(5)).graph, std::vector<Vertex>{0, 1, 10}); }) == Errc::HypothesisFailure);
    CHECK(code_of([] { project_to_folded(gq22_incidence(), std::vector<Vertex>{0}); }) == Errc::HypothesisFailure);
  }
}

TEST_CASE("taylor_lift") {
  const LabeledCover ico = taylor(cycle(5));
  const ResolvingCertificate c = taylor_lift(ico, std::vector<Vertex>{0, 1});
  CHECK(c.set == std::vector<Vertex>{0, 1, 10});
  CHECK(c.method == "lifted-taylor");
  check_resolves(ico.graph, c);
  for (int q : {13, 17}) {
    const Graph delta = paley(q);
    const LabeledCover gamma = taylor(delta);
    const auto r = minimum(delta);
    const ResolvingCertificate lifted = taylor_lift(gamma, r);
    CHECK(lifted.mu() == static_cast<int>(r.size()) + 1);
    CHECK(lifted.mu() == mdim_exact(gamma.graph).mu());
    check_resolves(gamma.graph, lifted);
  }
  CHECK(code_of([&] { taylor_lift(ico, std::vector<Vertex>{0}); }) == Errc::InputNotResolving);
}

TEST_CASE("descendant_extract") {
  SUBCASE("icosahedron gives 2-sets of C_5") {
    const Graph ico = taylor(cycle(5)).graph;
    const auto s = minimum(ico);
    REQUIRE(s.size() == 3);
    for (Vertex x : s) {
      const DescendantLift d = descendant_extract(ico, s, x);
      CHECK(d.certificate.mu() == 2);
      CHECK(d.descendant.graph.order() == 5);
      CHECK(d.certificate.method == "descendant");
      check_resolves(d.descendant.graph, d.certificate);
    }
  }
  SUBCASE("Paley(13) Taylor graph") {
    const Graph g = taylor(paley(13)).graph;
    const auto s = minimum(g);
    for (Vertex x : s) {
      const DescendantLift d = descendant_extract(g, s, x);
      CHECK(d.certificate.mu() == static_cast<int>(s.size()) - 1);
      check_resolves(d.descendant.graph, d.certificate);
    }
  }
  SUBCASE("errors") {
    const Graph ico = taylor(cycle(5)).graph;
    CHECK(code_of([&] { descendant_extract(ico, std::vector<Vertex>{0, 1, 10}, 2); }) == Errc::BadParameters);
    CHECK(code_of([&] { descendant_extract(ico, std::vector<Vertex>{0, 1}, 0); }) == Errc::InputNotResolving);
  }
}

TEST_CASE("double_lift") {
  for (const Graph& delta : {rook(4, 4), shrikhande()}) {
    const auto r = minimum(delta);
    const ResolvingCertificate c = double_lift(delta, r);
    CHECK(c.mu() == 2 * static_cast<int>(r.size()));
    CHECK(c.method == "lifted-double");
    check_resolves(bipartite_double(delta).graph, c);
  }
  CHECK(code_of([] { double_lift(odd_graph(3), std::vector<Vertex>{0, 1, 2}); }) == Errc::ParameterFailure);
  CHECK(code_of([] { double_lift(cycle(6), std::vector<Vertex>{0, 1}); }) == Errc::ParameterFailure);
  CHECK(code_of([] { double_lift(rook(4, 4), std::vector<Vertex>{0}); }) == Errc::InputNotResolving);
}
