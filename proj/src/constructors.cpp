#include "mdimlab/constructors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "mdimlab/error.hpp"

namespace mdimlab {

std::string VertexTag::to_string() const {
  const std::string b = std::to_string(base);
  switch (role) {
    case Role::Plus: return b + "+";
    case Role::Minus: return b + "-";
    case Role::InfinityPlus: return "inf+";
    case Role::InfinityMinus: return "inf-";
    case Role::Point: return "p" + b;
    case Role::Block: return "B" + b;
  }
  return b;
}

Vertex LabeledCover::find(const VertexTag& tag) const {
  auto it = std::find(tags.begin(), tags.end(), tag);
  if (it == tags.end()) throw Error(Errc::IndexOutOfRange, "no vertex tagged " + tag.to_string());
  return static_cast<Vertex>(it - tags.begin());
}

std::vector<std::string> LabeledCover::labels() const {
  std::vector<std::string> out;
  out.reserve(tags.size());
  for (const VertexTag& t : tags) out.push_back(t.to_string());
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::BadParameters, what);
}

template <class Adjacent>
Graph from_predicate(int n, Adjacent&& adjacent) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (adjacent(u, w)) edges.push_back({u, w});
  return Graph(n, edges);
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

std::vector<unsigned> subsets_colex(int m, int r) {
  require(m >= 0 && m <= 30 && r >= 0 && r <= m, "subset parameters out of range");
  std::vector<unsigned> out;
  if (r == 0) return {0U};
  unsigned x = (1U << r) - 1;
  const unsigned limit = 1U << m;
  while (x < limit) {
    out.push_back(x);
    // Gosper's hack: next integer with the same popcount.
    const unsigned c = x & -x;
    const unsigned rr = x + c;
    x = (((rr ^ x) >> 2) / c) | rr;
  }
  return out;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  return from_predicate(n, [n](int u, int w) { return w == u + 1 || (u == 0 && w == n - 1); });
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  return from_predicate(n, [](int, int) { return true; });
}

Graph complete_multipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete multipartite needs s, t >= 1");
  return from_predicate(s * t, [t](int u, int w) { return u / t != w / t; });
}

Graph complete_bipartite_minus_matching(int v) {
  require(v >= 1, "K_{v,v} - I needs v >= 1");
  return from_predicate(2 * v, [v](int u, int w) { return u < v && w >= v && w - v != u; });
}

Graph hypercube(int m) {
  require(m >= 1 && m <= 12, "hypercube dimension must be in 1..12");
  return from_predicate(1 << m, [](int u, int w) { return std::popcount(static_cast<unsigned>(u ^ w)) == 1; });
}

Graph johnson(int m, int r) {
  require(r >= 1 && r < m && m <= 24, "johnson needs 1 <= r < m <= 24");
  const auto sets = subsets_colex(m, r);
  return from_predicate(static_cast<int>(sets.size()), [&](int u, int w) {
    return std::popcount(sets[static_cast<std::size_t>(u)] & sets[static_cast<std::size_t>(w)]) == r - 1;
  });
}

Graph kneser(int m, int r) {
  require(r >= 1 && 2 * r <= m && m <= 24, "kneser needs 1 <= r and 2r <= m <= 24");
  const auto sets = subsets_colex(m, r);
  return from_predicate(static_cast<int>(sets.size()), [&](int u, int w) {
    return (sets[static_cast<std::size_t>(u)] & sets[static_cast<std::size_t>(w)]) == 0U;
  });
}

Graph odd_graph(int r) {
  require(r >= 2, "odd graph needs r >= 2");
  return kneser(2 * r - 1, r - 1);
}

Graph paley(int q) {
  require(is_prime(q) && q % 4 == 1, "paley needs a prime q = 1 mod 4");
  std::vector<bool> square(static_cast<std::size_t>(q), false);
  for (long long x = 1; x < q; ++x) square[static_cast<std::size_t>((x * x) % q)] = true;
  return from_predicate(q, [&](int u, int w) { return square[static_cast<std::size_t>((w - u) % q)]; });
}

Graph rook(int m, int n) {
  require(m >= 1 && n >= 1, "rook needs m, n >= 1");
  return from_predicate(m * n, [n](int u, int w) { return u / n == w / n || u % n == w % n; });
}

Graph shrikhande() {
  static constexpr Edge kEdges[] = {
      {0, 1},   {0, 3},   {0, 4},   {0, 5},   {0, 12},  {0, 15},  {1, 2},   {1, 5},   {1, 6},   {1, 12},
      {1, 13},  {2, 3},   {2, 6},   {2, 7},   {2, 13},  {2, 14},  {3, 4},   {3, 7},   {3, 14},  {3, 15},
      {4, 5},   {4, 7},   {4, 8},   {4, 9},   {5, 6},   {5, 9},   {5, 10},  {6, 7},   {6, 10},  {6, 11},
      {7, 8},   {7, 11},  {8, 9},   {8, 11},  {8, 12},  {8, 13},  {9, 10},  {9, 13},  {9, 14},  {10, 11},
      {10, 14}, {10, 15}, {11, 12}, {11, 15}, {12, 13}, {12, 15}, {13, 14}, {14, 15},
  };
  return Graph(16, kEdges);
}

Graph gq22_incidence() {
  const auto duads = subsets_colex(6, 2);
  // Perfect matchings of {0..5}: pair the smallest free element with each
  // later one in turn, which yields lexicographic order of the pair lists.
  std::vector<std::vector<unsigned>> synthemes;
  std::vector<unsigned> current;
  std::function<void(unsigned)> rec = [&](unsigned free) {
    if (free == 0) {
      synthemes.push_back(current);
      return;
    }
    const int a = std::countr_zero(free);
    for (int b = a + 1; b < 6; ++b) {
      if (!(free >> b & 1U)) continue;
      const unsigned pair = (1U << a) | (1U << b);
      current.push_back(pair);
      rec(free & ~pair);
      current.pop_back();
    }
  };
  rec(0x3FU);

  const int nd = static_cast<int>(duads.size());
  std::vector<Edge> edges;
  for (int i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < synthemes.size(); ++j) {
      const auto& s = synthemes[j];
      if (std::find(s.begin(), s.end(), duads[static_cast<std::size_t>(i)]) != s.end())
        edges.push_back({i, nd + static_cast<int>(j)});
    }
  return Graph(nd + static_cast<int>(synthemes.size()), edges);
}

LabeledCover bipartite_double(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.w + n});
    edges.push_back({e.w, e.u + n});
  }
  LabeledCover out{Graph(2 * n, edges), {}};
  for (int v = 0; v < n; ++v) out.tags.push_back({VertexTag::Role::Plus, v});
  for (int v = 0; v < n; ++v) out.tags.push_back({VertexTag::Role::Minus, v});
  return out;
}

LabeledCover taylor(const Graph& delta) {
  const DistanceMatrix dm = bfs_distances(delta);
  std::optional<SrgParams> srg;
  if (dm.connected() && is_distance_regular(delta, dm)) srg = srg_parameters(intersection_array(delta, dm), delta.order());
  if (!srg) throw Error(Errc::NotSrgKEquals2c, "input is not a connected strongly regular graph");
  if (srg->k != 2 * srg->c)
    throw Error(Errc::NotSrgKEquals2c,
                "parameters (" + std::to_string(srg->n) + "," + std::to_string(srg->k) + "," + std::to_string(srg->a) + "," +
                    std::to_string(srg->c) + ") do not satisfy k = 2c");

  const int n = delta.order();
  const int inf_plus = 2 * n;
  const int inf_minus = 2 * n + 1;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    edges.push_back({u, inf_plus});
    edges.push_back({u + n, inf_minus});
    for (int w = 0; w < n; ++w) {
      if (u == w) continue;
      if (delta.adjacent(u, w)) {
        if (u < w) {
          edges.push_back({u, w});
          edges.push_back({u + n, w + n});
        }
      } else {
        edges.push_back({u, w + n});
      }
    }
  }
  LabeledCover out{Graph(2 * n + 2, edges), {}};
  for (int v = 0; v < n; ++v) out.tags.push_back({VertexTag::Role::Plus, v});
  for (int v = 0; v < n; ++v) out.tags.push_back({VertexTag::Role::Minus, v});
  out.tags.push_back({VertexTag::Role::InfinityPlus, 0});
  out.tags.push_back({VertexTag::Role::InfinityMinus, 0});

  const DistanceMatrix gd = bfs_distances(out.graph);
  bool ok = gd.diameter() == 3 && is_distance_regular(out.graph, gd);
  for (int v = 0; ok && v < out.graph.order(); ++v) {
    const int antipode = v < 2 * n ? (v < n ? v + n : v - n) : (v == inf_plus ? inf_minus : inf_plus);
    for (int w = 0; w < out.graph.order(); ++w)
      if ((gd(v, w) == 3) != (w == antipode)) ok = false;
  }
  if (!ok) throw Error(Errc::VerificationFailure, "Taylor construction did not produce a 2-antipodal graph of diameter 3");
  return out;
}

}  // namespace mdimlab
