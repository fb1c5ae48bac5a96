#include <doctest.h>

#include "mdimlab/constructors.hpp"
#include "mdimlab/error.hpp"
#include "mdimlab/expr.hpp"
#include "mdimlab/imprimitivity.hpp"
#include "mdimlab/verify.hpp"
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

AntipodalStructure antipodes(const Graph& g) { return antipodal_structure(g, bfs_distances(g)); }

}  // namespace

TEST_CASE("bipartition") {
  const Bipartition b = bipartition(hypercube(3));
  CHECK(b.plus == std::vector<Vertex>{0, 3, 5, 6});
  CHECK(b.minus == std::vector<Vertex>{1, 2, 4, 7});
  CHECK(b.in_plus(0));

  SUBCASE("odd cycles give an odd closed walk") {
    for (const Graph& g : {cycle(5), odd_graph(3), complete(4)}) {
      try {
        bipartition(g);
        FAIL("expected NotBipartiteError");
      } catch (const NotBipartiteError& e) {
        const auto& w = e.odd_walk;
        REQUIRE(w.size() >= 4);
        CHECK(w.front() == w.back());
        CHECK((w.size() - 1) % 2 == 1);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(g.adjacent(w[i], w[i + 1]));
      }
    }
  }
  CHECK(code_of([] { bipartition(Graph(2, {})); }) == Errc::DisconnectedGraph);
}

TEST_CASE("antipodal structure") {
  SUBCASE("complete multipartite: classes are the parts") {
    const AntipodalStructure s = antipodes(complete_multipartite(3, 4));
    CHECK(s.t == 4);
    CHECK(s.classes.size() == 3);
    CHECK(s.classes[1] == std::vector<Vertex>{4, 5, 6, 7});
    const AntipodalStructure s2 = antipodes(complete_multipartite(4, 3));
    CHECK(s2.t == 3);
    CHECK(s2.classes.size() == 4);
  }
  SUBCASE("Q_3 and the icosahedron are 2-antipodal") {
    const AntipodalStructure q = antipodes(hypercube(3));
    CHECK(q.t == 2);
    CHECK(q.antipode(0) == 7);
    CHECK(q.transversal[7] == 1);
    const LabeledCover t = taylor(cycle(5));
    const AntipodalStructure i = antipodes(t.graph);
    for (int v = 0; v < 5; ++v) CHECK(i.antipode(v) == v + 5);
    CHECK(i.antipode(10) == 11);
  }
  SUBCASE("antipode law d(x,u) + d(x,v) = d") {
    for (const Graph& g : {hypercube(4), taylor(paley(13)).graph, bipartite_double(odd_graph(3)).graph}) {
      const DistanceMatrix dm = bfs_distances(g);
      const AntipodalStructure s = antipodal_structure(g, dm);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex x = 0; x < g.order(); ++x) CHECK(dm(x, u) + dm(x, s.antipode(u)) == *dm.diameter());
    }
  }
  SUBCASE("non-antipodal graphs") {
    CHECK(code_of([] { antipodes(odd_graph(3)); }) == Errc::NotAntipodal);
    CHECK(code_of([] { antipodes(cycle(7)); }) == Errc::NotAntipodal);
    CHECK(code_of([] { antipodes(complete(4)); }) == Errc::NotAntipodal);
    CHECK(code_of([] { antipodes(complete_multipartite(2, 3)).antipode(0); }) == Errc::NotTwoAntipodal);
  }
  SUBCASE("t <= k") {
    for (const std::string& e : {"multipartite:3:4", "hypercube:5", "icosahedron", "johnson:8:4", "double(odd:4)", "cycle:8"}) {
      const Graph g = parse_graph(e);
      CHECK(antipodes(g).t <= *g.valency());
    }
  }
}

TEST_CASE("halving") {
  const Halving h = halve(hypercube(3));
  CHECK(h.plus.graph == complete(4));
  CHECK(h.minus.graph == complete(4));
  CHECK(h.plus.to_parent == std::vector<Vertex>{0, 3, 5, 6});
  for (const std::string& e : {"hypercube:4", "gq22", "heawood", "double(petersen)", "kvv:5"}) {
    const Graph g = parse_graph(e);
    const Halving hv = halve(g);
    CHECK(hv.plus.graph.order() + hv.minus.graph.order() == g.order());
    const auto d = oracle::distances(g);
    for (const Subgraph* s : {&hv.plus, &hv.minus})
      for (Vertex a = 0; a < s->graph.order(); ++a)
        for (Vertex b = 0; b < s->graph.order(); ++b)
          CHECK(s->graph.adjacent(a, b) ==
                (d[static_cast<std::size_t>(s->to_parent[static_cast<std::size_t>(a)])]
                  [static_cast<std::size_t>(s->to_parent[static_cast<std::size_t>(b)])] == 2));
  }
  CHECK_THROWS_AS(halve(cycle(5)), NotBipartiteError);
}

TEST_CASE("folding") {
  SUBCASE("examples") {
    const Graph q = hypercube(3);
    CHECK(fold(q, antipodes(q)).folded == complete(4));
    const Graph i = taylor(cycle(5)).graph;
    CHECK(fold(i, antipodes(i)).folded == complete(6));
    for (int s = 2; s <= 4; ++s)
      for (int t = 2; t <= 4; ++t) {
        const Graph m = complete_multipartite(s, t);
        CHECK(fold(m, antipodes(m)).folded == complete(s));
      }
  }
  SUBCASE("folding a bipartite double returns the base graph") {
    for (const Graph& g : {complete(4), odd_graph(3), odd_graph(4)}) {
      const Graph d = bipartite_double(g).graph;
      const Folding f = fold(d, antipodes(d));
      CHECK(f.folded == g);
      for (int v = 0; v < g.order(); ++v) {
        CHECK(f.quotient[static_cast<std::size_t>(v)] == v);
        CHECK(f.quotient[static_cast<std::size_t>(v + g.order())] == v);
      }
    }
  }
  SUBCASE("valency is preserved for diameter at least 3") {
    for (const std::string& e : {"hypercube:3", "hypercube:5", "icosahedron", "johnson:8:4", "double(odd:4)"}) {
      const Graph g = parse_graph(e);
      CHECK(fold(g, antipodes(g)).folded.valency() == g.valency());
    }
  }
}

TEST_CASE("complete multipartite recognition") {
  CHECK(is_complete_multipartite(complete_multipartite(3, 4)));
  CHECK(is_complete_multipartite(cycle(4)));
  CHECK(!is_complete_multipartite(cycle(5)));
  CHECK(!is_complete_multipartite(hypercube(3)));
}

TEST_CASE("AH classification of the zoo") {
  for (const ZooEntry& z : classifier_zoo()) {
    CAPTURE(z.expr);
    const AHClass c = classify_ah(parse_graph(z.expr));
    CHECK(c.name() == z.ah);
    for (const Subclaim& s : c.subclaims) CHECK(s.holds);
  }
}

TEST_CASE("AH details") {
  SUBCASE("small cycles") {
    CHECK(classify_ah(cycle(3)).id == 3);
    CHECK(classify_ah(cycle(4)).id == 4);
    CHECK(classify_ah(cycle(6)).id == 2);
  }
  SUBCASE("AH9 halves are antipodal of diameter 3") {
    const AHClass c = classify_ah(hypercube(6));
    REQUIRE(c.halved.size() == 2);
    for (const GraphSummary& s : c.halved) {
      CHECK(s.n == 32);
      CHECK(s.d == 3);
    }
  }
  SUBCASE("AH12 reports the 2-antipodal claim") {
    const AHClass c = classify_ah(bipartite_double(odd_graph(3)).graph);
    REQUIRE(c.antipodal.has_value());
    CHECK(c.antipodal->t == 2);
    REQUIRE(c.folded.has_value());
    CHECK(c.folded->n == 10);
  }
  SUBCASE("non distance-regular input") {
    CHECK_THROWS_AS(classify_ah(Graph(3, {{0, 1}, {1, 2}})), NotDrgError);
  }
}
