#include "mdimlab/imprimitivity.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "mdimlab/design.hpp"
#include "mdimlab/error.hpp"

namespace mdimlab {

Bipartition bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](std::size_t w) {
      if (depth[w] < 0) {
        depth[w] = depth[static_cast<std::size_t>(u)] + 1;
        parent[w] = u;
        queue.push_back(static_cast<int>(w));
      }
    });
  }
  if (std::find(depth.begin(), depth.end(), -1) != depth.end())
    throw Error(Errc::DisconnectedGraph, "bipartition needs a connected graph");

  for (const Edge& e : g.edges()) {
    if (depth[static_cast<std::size_t>(e.u)] % 2 != depth[static_cast<std::size_t>(e.w)] % 2) continue;
    std::vector<int> walk;
    for (int v = e.u; v >= 0; v = parent[static_cast<std::size_t>(v)]) walk.push_back(v);
    std::reverse(walk.begin(), walk.end());
    for (int v = e.w; v >= 0; v = parent[static_cast<std::size_t>(v)]) walk.push_back(v);
    throw NotBipartiteError(std::move(walk));
  }

  Bipartition out{{}, {}, Bitset(static_cast<std::size_t>(n))};
  for (int v = 0; v < n; ++v) {
    if (depth[static_cast<std::size_t>(v)] % 2 == 0) {
      out.plus.push_back(v);
      out.plus_set.set(static_cast<std::size_t>(v));
    } else {
      out.minus.push_back(v);
    }
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  try {
    (void)bipartition(g);
    return true;
  } catch (const NotBipartiteError&) {
    return false;
  }
}

Vertex AntipodalStructure::antipode(Vertex v) const {
  const auto& cls = classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])];
  if (cls.size() != 2) throw Error(Errc::NotTwoAntipodal, "antipode is only defined for 2-antipodal graphs");
  return cls[0] == v ? cls[1] : cls[0];
}

AntipodalStructure antipodal_structure(const Graph& g, const DistanceMatrix& dm) {
  if (!dm.connected()) throw Error(Errc::DisconnectedGraph, "antipodal structure needs a connected graph");
  const int d = *dm.diameter();
  if (d < 2) throw Error(Errc::NotAntipodal, "diameter must be at least 2");
  const int n = g.order();
  AntipodalStructure s;
  s.class_of.assign(static_cast<std::size_t>(n), -1);
  s.transversal.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (s.class_of[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<Vertex> cls{v};
    auto row = dm.row(v);
    for (int w = v + 1; w < n; ++w)
      if (row[static_cast<std::size_t>(w)] == d) cls.push_back(w);
    // The class of v must be closed: all members pairwise at distance d,
    // and nobody outside at distance d from any member.
    for (std::size_t i = 0; i < cls.size(); ++i) {
      int far = 0;
      for (std::uint8_t x : dm.row(cls[i])) far += x == d;
      if (far != static_cast<int>(cls.size()) - 1 || s.class_of[static_cast<std::size_t>(cls[i])] >= 0)
        throw Error(Errc::NotAntipodal, "distance-" + std::to_string(d) + " graph is not a disjoint union of cliques");
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (dm(cls[i], cls[j]) != d) throw Error(Errc::NotAntipodal, "vertices of an antipodal class are not at maximum distance");
    }
    const int id = static_cast<int>(s.classes.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      s.class_of[static_cast<std::size_t>(cls[i])] = id;
      s.transversal[static_cast<std::size_t>(cls[i])] = static_cast<int>(i);
    }
    s.classes.push_back(std::move(cls));
  }
  s.t = static_cast<int>(s.classes.front().size());
  for (const auto& cls : s.classes)
    if (static_cast<int>(cls.size()) != s.t || s.t < 2) throw Error(Errc::NotAntipodal, "antipodal classes differ in size");
  return s;
}

Halving halve(const Graph& g, const DistanceMatrix& dm) {
  const Bipartition bp = bipartition(g);
  auto side_graph = [&](const std::vector<Vertex>& side) {
    const auto m = side.size();
    std::vector<Bitset> rows(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (dm(side[i], side[j]) == 2) rows[i].set(j);
    return Subgraph{Graph::from_rows(std::move(rows)), side};
  };
  return Halving{side_graph(bp.plus), side_graph(bp.minus)};
}

Halving halve(const Graph& g) { return halve(g, bfs_distances(g)); }

Folding fold(const Graph& g, const AntipodalStructure& s) {
  const auto m = s.classes.size();
  std::vector<Bitset> rows(m, Bitset(m));
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<std::size_t>(s.class_of[static_cast<std::size_t>(e.u)]);
    const auto b = static_cast<std::size_t>(s.class_of[static_cast<std::size_t>(e.w)]);
    if (a == b) throw Error(Errc::NotAntipodal, "edge inside an antipodal class");
    rows[a].set(b);
    rows[b].set(a);
  }
  return Folding{Graph::from_rows(std::move(rows)), s.class_of};
}

bool is_complete_multipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[static_cast<std::size_t>(v)] >= 0) continue;
    const Bitset cls = g.neighbors(v).complement();
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(static_cast<int>(cls.count()));
    bool ok = true;
    cls.for_each([&](std::size_t w) {
      if (part[w] >= 0 || g.neighbors(static_cast<Vertex>(w)).complement() != cls) ok = false;
      part[w] = id;
    });
    if (!ok) return false;
  }
  return std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes.front(); });
}

namespace {

GraphSummary summarize(const Graph& g, const DistanceMatrix& dm) {
  return GraphSummary{g.order(), dm.diameter().value_or(-1), g.valency().value_or(-1)};
}

struct Analysis {
  DistanceMatrix dm;
  bool drg = false;
  bool primitive = false;
  bool antipodal = false;
  GraphSummary summary{};
};

Analysis analyze(const Graph& g) {
  Analysis a{bfs_distances(g)};
  a.summary = summarize(g, a.dm);
  a.drg = is_distance_regular(g, a.dm);
  if (a.drg) {
    a.primitive = is_primitive(g, a.dm);
    if (*a.dm.diameter() >= 2) {
      try {
        (void)antipodal_structure(g, a.dm);
        a.antipodal = true;
      } catch (const Error&) {
      }
    }
  }
  return a;
}

class ClaimLog {
 public:
  explicit ClaimLog(std::vector<Subclaim>& out) : out_(out) {}
  void add(std::string claim, bool holds) { out_.push_back({std::move(claim), holds}); }

 private:
  std::vector<Subclaim>& out_;
};

}  // namespace

AHClass classify_ah(const Graph& g) {
  const DistanceMatrix dm = bfs_distances(g);
  if (!dm.connected()) throw Error(Errc::DisconnectedGraph, "classification needs a connected graph");
  const IntersectionArray ia = intersection_array(g, dm);
  AHClass out;
  out.d = ia.diameter();
  out.k = ia.valency();
  const int d = out.d;
  const int k = out.k;
  const int n = g.order();
  ClaimLog log(out.subclaims);

  try {
    out.bipartition = bipartition(g);
  } catch (const NotBipartiteError&) {
  }
  if (d >= 2) {
    try {
      out.antipodal = antipodal_structure(g, dm);
    } catch (const Error&) {
    }
  }
  const bool bip = out.bipartition.has_value();
  const bool antip = out.antipodal.has_value();

  std::optional<Folding> folding;
  std::optional<Halving> halving;
  if (antip) {
    folding = fold(g, *out.antipodal);
    out.folded = summarize(folding->folded, bfs_distances(folding->folded));
    log.add("t <= k", out.antipodal->t <= k);
  }
  if (bip && d >= 2) {
    halving = halve(g, dm);
    for (const Subgraph* h : {&halving->plus, &halving->minus}) out.halved.push_back(summarize(h->graph, bfs_distances(h->graph)));
  }
  if (bip && antip && d % 2 == 1) log.add("odd diameter, bipartite and antipodal implies 2-antipodal", out.antipodal->t == 2);

  auto halves_are = [&](auto&& pred) {
    return halving && pred(analyze(halving->plus.graph)) && pred(analyze(halving->minus.graph));
  };

  const bool primitive = is_primitive(g, dm);
  if (d <= 1) {
    out.id = 3;
    log.add("complete graph", g.edge_count() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  } else if (d == 2 && !primitive) {
    out.id = 4;
    log.add("complete multipartite", is_complete_multipartite(g));
    log.add("antipodal with n = s t", antip && n == static_cast<int>(out.antipodal->classes.size()) * out.antipodal->t);
    log.add("folded graph is complete",
            folding && folding->folded.edge_count() ==
                           static_cast<std::size_t>(folding->folded.order()) * static_cast<std::size_t>(folding->folded.order() - 1) / 2);
  } else if (k == 2) {
    out.id = 2;
    log.add("cycle", g.edge_count() == static_cast<std::size_t>(n));
  } else if (d == 3 && bip && antip) {
    out.id = 5;
    const int v = n / 2;
    bool kvv = out.antipodal->t == 2 && k == v - 1;
    for (int u = 0; kvv && u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (g.adjacent(u, w) != (out.bipartition->in_plus(u) != out.bipartition->in_plus(w) && w != out.antipodal->antipode(u)))
          kvv = false;
    log.add("K_{v,v} - I", kvv);
  } else if (d == 3 && bip) {
    out.id = 6;
    bool design = false;
    try {
      const SymmetricDesign sd = design_from_graph(g);
      design = sd.k() < sd.v() - 1;
    } catch (const Error&) {
    }
    log.add("incidence graph of a symmetric design with k < v - 1", design);
  } else if (d == 3 && antip) {
    out.id = 7;
    const Graph& f = folding->folded;
    log.add("folded graph is K_{k+1}",
            f.order() == k + 1 && f.edge_count() == static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2);
  } else if (d == 4 && bip && antip) {
    out.id = 8;
    const Graph& f = folding->folded;
    log.add("folded graph is K_{k,k}", f.order() == 2 * k && f.valency() == k && is_bipartite(f));
    log.add("halved graphs are complete multipartite",
            is_complete_multipartite(halving->plus.graph) && is_complete_multipartite(halving->minus.graph));
  } else if (d == 6 && bip && antip) {
    out.id = 9;
    log.add("halved graphs are antipodal of diameter 3",
            halves_are([](const Analysis& a) { return a.antipodal && a.summary.d == 3; }));
    log.add("folded graph is bipartite of diameter 3", is_bipartite(folding->folded) && out.folded->d == 3);
  } else if (d >= 4 && antip && !bip) {
    out.id = 10;
    const Analysis f = analyze(folding->folded);
    log.add("folded graph is primitive", f.drg && f.primitive);
    log.add("folded diameter is floor(d/2)", f.summary.d == d / 2);
    log.add("folded valency equals k >= 3", f.summary.k == k && k >= 3);
  } else if (d >= 4 && bip && !antip) {
    out.id = 11;
    log.add("halved graphs are primitive", halves_are([](const Analysis& a) { return a.drg && a.primitive; }));
    log.add("halved diameter is floor(d/2)", halves_are([d](const Analysis& a) { return a.summary.d == d / 2; }));
    log.add("halved valency >= 3", halves_are([](const Analysis& a) { return a.summary.k >= 3; }));
  } else if (d % 2 == 1 && d >= 5 && bip && antip) {
    out.id = 12;
    const int e = d / 2;
    const Analysis f = analyze(folding->folded);
    log.add("2-antipodal", out.antipodal->t == 2);
    log.add("folded graph is primitive of diameter e >= 2", f.drg && f.primitive && f.summary.d == e && e >= 2);
    log.add("folded valency equals k >= 3", f.summary.k == k && k >= 3);
    log.add("halved graphs are primitive of diameter e",
            halves_are([e](const Analysis& a) { return a.drg && a.primitive && a.summary.d == e; }));
    log.add("halved valency >= 3", halves_are([](const Analysis& a) { return a.summary.k >= 3; }));
  } else if (d % 2 == 0 && d >= 8 && bip && antip) {
    out.id = 13;
    const int e = d / 2;
    bool ok = true;
    for (const Subgraph* h : {&halving->plus, &halving->minus}) {
      const DistanceMatrix hd = bfs_distances(h->graph);
      try {
        const Folding hf = fold(h->graph, antipodal_structure(h->graph, hd));
        const Analysis a = analyze(hf.folded);
        ok = ok && a.drg && a.primitive && a.summary.d == e / 2 && a.summary.k >= 3;
      } catch (const Error&) {
        ok = false;
      }
    }
    log.add("halving then folding gives primitive graphs of diameter floor(e/2) >= 2 and valency >= 3", ok && e / 2 >= 2);
  } else {
    out.id = 1;
    log.add("primitive", primitive);
    log.add("d >= 2 and k >= 3", d >= 2 && k >= 3);
  }

  std::ostringstream failed;
  for (const Subclaim& c : out.subclaims)
    if (!c.holds) failed << " [" << c.claim << "]";
  if (!failed.str().empty()) throw Error(Errc::ClassificationContradiction, out.name() + " claims failed:" + failed.str());
  return out;
}

}  // namespace mdimlab
