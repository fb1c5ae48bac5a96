#include "mdimlab/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mdimlab/error.hpp"

namespace mdimlab {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw Error(Errc::BadParameters, "graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.w < 0 || e.u >= n || e.w >= n)
      throw Error(Errc::BadParameters, "edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.w));
    if (e.u == e.w) throw Error(Errc::BadParameters, "loop at vertex " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.w));
    adj_[static_cast<std::size_t>(e.w)].set(static_cast<std::size_t>(e.u));
  }
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  const std::size_t n = rows.size();
  if (n < 1) throw Error(Errc::BadParameters, "graph needs at least one vertex");
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n) throw Error(Errc::BadParameters, "adjacency row has wrong width");
    if (rows[u].test(u)) throw Error(Errc::BadParameters, "loop at vertex " + std::to_string(u));
  }
  for (std::size_t u = 0; u < n; ++u)
    rows[u].for_each([&](std::size_t w) {
      if (!rows[w].test(u)) throw Error(Errc::BadParameters, "adjacency rows are not symmetric");
    });
  Graph g;
  g.n_ = static_cast<int>(n);
  g.adj_ = std::move(rows);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    const Bitset& row = neighbors(u);
    for (std::size_t w = row.next(static_cast<std::size_t>(u) + 1); w < row.size(); w = row.next(w + 1))
      out.push_back({u, static_cast<Vertex>(w)});
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const Bitset& row : adj_) twice += row.count();
  return twice / 2;
}

std::optional<int> Graph::valency() const {
  const int k = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

DistanceMatrix bfs_distances(const Graph& g) {
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  DistanceMatrix dm;
  dm.n_ = n;
  dm.dist_.assign(un * un, kUnreachable);

  Bitset visited(un);
  Bitset frontier(un);
  Bitset next(un);
  for (int s = 0; s < n; ++s) {
    std::uint8_t* row = dm.dist_.data() + static_cast<std::size_t>(s) * un;
    visited.clear();
    frontier.clear();
    visited.set(static_cast<std::size_t>(s));
    frontier.set(static_cast<std::size_t>(s));
    row[s] = 0;
    int level = 0;
    while (frontier.any()) {
      next.clear();
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<Vertex>(v)); });
      next -= visited;
      if (next.none()) break;
      ++level;
      if (level >= kUnreachable) throw Error(Errc::BadParameters, "graph diameter exceeds distance storage");
      next.for_each([&](std::size_t v) { row[v] = static_cast<std::uint8_t>(level); });
      visited |= next;
      std::swap(frontier, next);
    }
    dm.max_finite_ = std::max(dm.max_finite_, level);
    if (visited.count() != un) dm.connected_ = false;
  }
  return dm;
}

bool is_connected(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Bitset visited(n);
  Bitset frontier(n);
  visited.set(0);
  frontier.set(0);
  while (frontier.any()) {
    Bitset next(n);
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<Vertex>(v)); });
    next -= visited;
    visited |= next;
    frontier = std::move(next);
  }
  return visited.count() == n;
}

IntersectionArray::IntersectionArray(std::vector<int> b, std::vector<int> c) : b_(std::move(b)), c_(std::move(c)) {
  if (b_.size() != c_.size()) throw Error(Errc::BadParameters, "b and c must both have d entries");
  const int d = diameter();
  if (d >= 1 && c_.front() != 1) throw Error(Errc::BadParameters, "c_1 must be 1");
  for (int v : b_)
    if (v < 0) throw Error(Errc::BadParameters, "negative b_i");
  for (int v : c_)
    if (v < 0) throw Error(Errc::BadParameters, "negative c_i");
  for (int i = 0; i <= d; ++i)
    if (a(i) < 0) throw Error(Errc::BadParameters, "c_i + b_i exceeds k at i = " + std::to_string(i));
  if (d >= 1 && a(0) != 0) throw Error(Errc::BadParameters, "a_0 must be 0");
}

int IntersectionArray::b(int i) const {
  if (i < 0 || i >= diameter()) throw Error(Errc::IndexOutOfRange, "b_" + std::to_string(i));
  return b_[static_cast<std::size_t>(i)];
}

int IntersectionArray::c(int i) const {
  if (i < 1 || i > diameter()) throw Error(Errc::IndexOutOfRange, "c_" + std::to_string(i));
  return c_[static_cast<std::size_t>(i - 1)];
}

int IntersectionArray::a(int i) const {
  const int d = diameter();
  if (i < 0 || i > d) throw Error(Errc::IndexOutOfRange, "a_" + std::to_string(i));
  const int bi = i < d ? b_[static_cast<std::size_t>(i)] : 0;
  const int ci = i > 0 ? c_[static_cast<std::size_t>(i - 1)] : 0;
  return valency() - bi - ci;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << ';';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << '}';
  return os.str();
}

std::optional<SrgParams> srg_parameters(const IntersectionArray& ia, int n) {
  if (ia.diameter() != 2) return std::nullopt;
  return SrgParams{n, ia.valency(), ia.a(1), ia.c(2)};
}

IntersectionArray intersection_array(const Graph& g, const DistanceMatrix& dm) {
  if (!dm.connected()) throw Error(Errc::DisconnectedGraph, "intersection array needs a connected graph");
  const int n = g.order();
  const int d = *dm.diameter();
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> cs(static_cast<std::size_t>(d) + 1, -1);
  std::vector<int> as(static_cast<std::size_t>(d) + 1, -1);
  std::vector<int> bs(static_cast<std::size_t>(d) + 1, -1);
  std::vector<Bitset> layers(static_cast<std::size_t>(d) + 1, Bitset(un));

  for (int u = 0; u < n; ++u) {
    for (Bitset& layer : layers) layer.clear();
    auto row = dm.row(u);
    for (std::size_t w = 0; w < un; ++w) layers[row[w]].set(w);
    for (int w = 0; w < n; ++w) {
      const int i = row[static_cast<std::size_t>(w)];
      const auto ui = static_cast<std::size_t>(i);
      const Bitset& nb = g.neighbors(w);
      const int ci = i > 0 ? static_cast<int>(nb.count_and(layers[ui - 1])) : 0;
      const int ai = static_cast<int>(nb.count_and(layers[ui]));
      const int bi = i < d ? static_cast<int>(nb.count_and(layers[ui + 1])) : 0;
      if (cs[ui] < 0) {
        cs[ui] = ci;
        as[ui] = ai;
        bs[ui] = bi;
      } else if (cs[ui] != ci || as[ui] != ai || bs[ui] != bi) {
        throw NotDrgError(u, w, i);
      }
    }
  }
  std::vector<int> b(bs.begin(), bs.begin() + d);
  std::vector<int> c(cs.begin() + 1, cs.end());
  return IntersectionArray(std::move(b), std::move(c));
}

bool is_distance_regular(const Graph& g, const DistanceMatrix& dm) {
  if (!dm.connected()) return false;
  try {
    (void)intersection_array(g, dm);
    return true;
  } catch (const NotDrgError&) {
    return false;
  }
}

Graph distance_i_graph(const DistanceMatrix& dm, int i) {
  if (i < 1 || i > dm.max_finite())
    throw Error(Errc::IndexOutOfRange, "distance " + std::to_string(i) + " outside 1.." + std::to_string(dm.max_finite()));
  const int n = dm.order();
  std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u) {
    auto row = dm.row(u);
    for (int w = 0; w < n; ++w)
      if (row[static_cast<std::size_t>(w)] == i) rows[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(w));
  }
  return Graph::from_rows(std::move(rows));
}

bool is_primitive(const Graph& g, const DistanceMatrix& dm) {
  const IntersectionArray ia = intersection_array(g, dm);
  for (int i = 1; i <= ia.diameter(); ++i)
    if (!is_connected(distance_i_graph(dm, i))) return false;
  return true;
}

int max_distance_class(const DistanceMatrix& dm) {
  const int n = dm.order();
  int best = 0;
  std::vector<int> counts(256);
  for (int u = 0; u < n; ++u) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint8_t x : dm.row(u)) ++counts[x];
    for (int i = 1; i < static_cast<int>(kUnreachable); ++i) best = std::max(best, counts[static_cast<std::size_t>(i)]);
  }
  return best;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw Error(Errc::BadParameters, "induced subgraph needs at least one vertex");
  const auto m = vertices.size();
  std::vector<Bitset> rows(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(vertices[i]));
    for (std::size_t j = 0; j < m; ++j)
      if (g.adjacent(vertices[i], vertices[j])) rows[i].set(j);
  }
  return Subgraph{Graph::from_rows(std::move(rows)), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

Subgraph induced_neighborhood(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(x));
  const std::vector<int> nb = g.neighbors(x).to_vector();
  return induced_subgraph(g, nb);
}

std::optional<int> odd_girth(const Graph& g, const DistanceMatrix& dm) {
  std::optional<int> best;
  const std::vector<Edge> es = g.edges();
  for (int s = 0; s < g.order(); ++s) {
    auto row = dm.row(s);
    for (const Edge& e : es) {
      const auto du = row[static_cast<std::size_t>(e.u)];
      if (du == kUnreachable || du != row[static_cast<std::size_t>(e.w)]) continue;
      const int len = 2 * du + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

std::optional<int> odd_girth(const Graph& g) { return odd_girth(g, bfs_distances(g)); }

Graph read_graph(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1 || n > 1'000'000) throw Error(Errc::ParseError, "expected a positive vertex count on the first line");
  std::vector<Edge> edges;
  std::vector<Bitset> seen(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  long long u = 0;
  long long w = 0;
  std::size_t line = 1;
  while (in >> u) {
    ++line;
    if (!(in >> w)) throw Error(Errc::ParseError, "edge line " + std::to_string(line) + " has one endpoint");
    if (u < 0 || w < 0 || u >= n || w >= n) throw Error(Errc::ParseError, "edge line " + std::to_string(line) + " is out of range");
    if (u >= w) throw Error(Errc::ParseError, "edge line " + std::to_string(line) + " must satisfy u < w");
    auto& row = seen[static_cast<std::size_t>(u)];
    if (row.test(static_cast<std::size_t>(w))) throw Error(Errc::ParseError, "duplicate edge on line " + std::to_string(line));
    row.set(static_cast<std::size_t>(w));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(w)});
  }
  if (!in.eof()) throw Error(Errc::ParseError, "unexpected token after line " + std::to_string(line));
  return Graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.w << '\n';
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  write_graph(out, g);
}

void write_dot(std::ostream& out, const Graph& g, std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.order()))
    throw Error(Errc::BadParameters, "one label per vertex required");
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[static_cast<std::size_t>(v)] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.w << ";\n";
  out << "}\n";
}

}  // namespace mdimlab
