#include "mdimlab/design.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "mdimlab/error.hpp"

namespace mdimlab {

SymmetricDesign SymmetricDesign::from_incidence(int v, int k, int lambda, std::vector<Bitset> rows) {
  auto fail = [](const std::string& what) { throw Error(Errc::InvalidDesign, what); };
  if (v < 1) fail("v must be positive");
  const auto uv = static_cast<std::size_t>(v);
  if (rows.size() != uv) fail("expected " + std::to_string(v) + " incidence rows");
  if (lambda * (v - 1) != k * (k - 1)) fail("lambda(v-1) != k(k-1)");

  SymmetricDesign d;
  d.v_ = v;
  d.k_ = k;
  d.lambda_ = lambda;
  d.cols_.assign(uv, Bitset(uv));
  for (std::size_t x = 0; x < uv; ++x) {
    if (rows[x].size() != uv) fail("incidence row has wrong width");
    if (rows[x].count() != static_cast<std::size_t>(k)) fail("point " + std::to_string(x) + " is not on k blocks");
    rows[x].for_each([&](std::size_t b) { d.cols_[b].set(x); });
  }
  for (std::size_t b = 0; b < uv; ++b)
    if (d.cols_[b].count() != static_cast<std::size_t>(k)) fail("block " + std::to_string(b) + " does not have k points");
  for (std::size_t x = 0; x < uv; ++x)
    for (std::size_t y = x + 1; y < uv; ++y) {
      if (rows[x].count_and(rows[y]) != static_cast<std::size_t>(lambda))
        fail("points " + std::to_string(x) + "," + std::to_string(y) + " are not on lambda common blocks");
      if (d.cols_[x].count_and(d.cols_[y]) != static_cast<std::size_t>(lambda))
        fail("blocks " + std::to_string(x) + "," + std::to_string(y) + " do not meet in lambda points");
    }
  d.rows_ = std::move(rows);
  return d;
}

SymmetricDesign pg2(int q) {
  if (!is_prime(q)) throw Error(Errc::NotPrime, "PG(2,q) is only built for prime q, got " + std::to_string(q));
  struct Triple {
    int x, y, z;
  };
  std::vector<Triple> pts;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) pts.push_back({x, y, z});
      }
  const int v = static_cast<int>(pts.size());
  std::vector<Bitset> rows(pts.size(), Bitset(pts.size()));
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t l = 0; l < pts.size(); ++l)
      if ((pts[p].x * pts[l].x + pts[p].y * pts[l].y + pts[p].z * pts[l].z) % q == 0) rows[p].set(l);
  return SymmetricDesign::from_incidence(v, q + 1, 1, std::move(rows));
}

SymmetricDesign trivial_design(int v) {
  if (v < 3) throw Error(Errc::BadParameters, "trivial design needs v >= 3");
  const auto uv = static_cast<std::size_t>(v);
  std::vector<Bitset> rows(uv, Bitset(uv));
  for (std::size_t x = 0; x < uv; ++x) {
    rows[x].set_all();
    rows[x].reset(x);
  }
  return SymmetricDesign::from_incidence(v, v - 1, v - 2, std::move(rows));
}

SymmetricDesign design_dual(const SymmetricDesign& d) {
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(d.v()));
  for (int b = 0; b < d.v(); ++b) rows.push_back(d.points_on(b));
  return SymmetricDesign::from_incidence(d.v(), d.k(), d.lambda(), std::move(rows));
}

SymmetricDesign design_complement(const SymmetricDesign& d) {
  const int lambda = d.v() - 2 * d.k() + d.lambda();
  if (lambda <= 0) throw Error(Errc::DegenerateComplement, "complement would have lambda = " + std::to_string(lambda));
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(d.v()));
  for (int x = 0; x < d.v(); ++x) rows.push_back(d.blocks_through(x).complement());
  return SymmetricDesign::from_incidence(d.v(), d.v() - d.k(), lambda, std::move(rows));
}

LabeledCover incidence_graph(const SymmetricDesign& d) {
  const int v = d.v();
  std::vector<Edge> edges;
  for (int x = 0; x < v; ++x)
    d.blocks_through(x).for_each([&](std::size_t b) { edges.push_back({x, v + static_cast<int>(b)}); });
  LabeledCover out{Graph(2 * v, edges), {}};
  for (int x = 0; x < v; ++x) out.tags.push_back({VertexTag::Role::Point, x});
  for (int b = 0; b < v; ++b) out.tags.push_back({VertexTag::Role::Block, b});
  if (d.k() > 1) {
    const DistanceMatrix dm = bfs_distances(out.graph);
    if (dm.diameter() != 3 || !is_distance_regular(out.graph, dm))
      throw Error(Errc::VerificationFailure, "incidence graph is not distance-regular of diameter 3");
  }
  return out;
}

SymmetricDesign design_from_graph(const Graph& g) {
  const DistanceMatrix dm = bfs_distances(g);
  auto fail = [] { throw Error(Errc::NotBipartiteDiameter3DRG, "need a bipartite distance-regular graph of diameter 3"); };
  if (dm.diameter() != 3 || !is_distance_regular(g, dm)) fail();
  std::vector<int> points;
  std::vector<int> blocks;
  std::vector<int> index(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto& side = dm(0, v) % 2 == 0 ? points : blocks;
    index[static_cast<std::size_t>(v)] = static_cast<int>(side.size());
    side.push_back(v);
  }
  for (const Edge& e : g.edges())
    if (dm(0, e.u) % 2 == dm(0, e.w) % 2) fail();
  if (points.size() != blocks.size()) fail();
  const IntersectionArray ia = intersection_array(g, dm);
  const auto v = points.size();
  std::vector<Bitset> rows(v, Bitset(v));
  for (std::size_t x = 0; x < v; ++x)
    g.neighbors(points[x]).for_each([&](std::size_t b) { rows[x].set(static_cast<std::size_t>(index[b])); });
  return SymmetricDesign::from_incidence(static_cast<int>(v), ia.valency(), ia.c(2), std::move(rows));
}

namespace {

void require_permutation(int v, std::span<const int> sigma) {
  if (sigma.size() != static_cast<std::size_t>(v)) throw Error(Errc::NotBijection, "sigma must have one image per point");
  std::vector<bool> used(static_cast<std::size_t>(v), false);
  for (int b : sigma) {
    if (b < 0 || b >= v || used[static_cast<std::size_t>(b)]) throw Error(Errc::NotBijection, "sigma is not a bijection onto the blocks");
    used[static_cast<std::size_t>(b)] = true;
  }
}

}  // namespace

bool is_null_polarity(const SymmetricDesign& d, std::span<const int> sigma) {
  require_permutation(d.v(), sigma);
  for (int x = 0; x < d.v(); ++x) {
    if (d.incident(x, sigma[static_cast<std::size_t>(x)])) return false;
    for (int y = x + 1; y < d.v(); ++y)
      if (d.incident(x, sigma[static_cast<std::size_t>(y)]) != d.incident(y, sigma[static_cast<std::size_t>(x)])) return false;
  }
  return true;
}

Graph srg_from_null_polarity(const SymmetricDesign& d, std::span<const int> sigma) {
  if (!is_null_polarity(d, sigma)) throw Error(Errc::NotNullPolarity, "sigma is not a null polarity");
  std::vector<Edge> edges;
  for (int u = 0; u < d.v(); ++u)
    for (int w = u + 1; w < d.v(); ++w)
      if (d.incident(u, sigma[static_cast<std::size_t>(w)])) edges.push_back({u, w});
  Graph g(d.v(), edges);
  const DistanceMatrix dm = bfs_distances(g);
  const SrgParams want{d.v(), d.k(), d.lambda(), d.lambda()};
  if (!dm.connected() || !is_distance_regular(g, dm) || srg_parameters(intersection_array(g, dm), g.order()) != want)
    throw Error(Errc::VerificationFailure, "polarity graph is not strongly regular (v,k,lambda,lambda)");
  return g;
}

SymmetricDesign read_design(std::istream& in) {
  int v = 0;
  int k = 0;
  int lambda = 0;
  if (!(in >> v >> k >> lambda) || v < 1 || v > 100000) throw Error(Errc::ParseError, "expected 'v k lambda' header");
  const auto uv = static_cast<std::size_t>(v);
  std::vector<Bitset> rows(uv, Bitset(uv));
  for (std::size_t x = 0; x < uv; ++x) {
    std::string row;
    if (!(in >> row) || row.size() != uv) throw Error(Errc::ParseError, "row " + std::to_string(x) + " must have v characters");
    for (std::size_t b = 0; b < uv; ++b) {
      if (row[b] == '1')
        rows[x].set(b);
      else if (row[b] != '0')
        throw Error(Errc::ParseError, "row " + std::to_string(x) + " has a character outside {0,1}");
    }
  }
  std::string extra;
  if (in >> extra) throw Error(Errc::ParseError, "trailing data after incidence matrix");
  return SymmetricDesign::from_incidence(v, k, lambda, std::move(rows));
}

void write_design(std::ostream& out, const SymmetricDesign& d) {
  out << d.v() << ' ' << d.k() << ' ' << d.lambda() << '\n';
  for (int x = 0; x < d.v(); ++x) {
    for (int b = 0; b < d.v(); ++b) out << (d.incident(x, b) ? '1' : '0');
    out << '\n';
  }
}

SymmetricDesign load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_design(in);
}

void save_design(const std::string& path, const SymmetricDesign& d) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  write_design(out, d);
}

}  // namespace mdimlab
