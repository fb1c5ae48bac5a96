#pragma once

// Immutable simple graphs, all-pairs distances and distance-regularity.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdimlab/bitset.hpp"

namespace mdimlab {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex w;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1, one adjacency bitset
/// per vertex. Vertex order is construction order and is never changed.
class Graph {
 public:
  /// Throws Error(BadParameters) for n < 1, loops or out-of-range endpoints.
  /// Repeated edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<Bitset> rows);

  int order() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex w) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(w)); }
  const Bitset& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).count()); }

  /// Edges with u < w, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// Common degree if the graph is regular.
  std::optional<int> valency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Bitset> adj_;
};

inline constexpr std::uint8_t kUnreachable = 255;

/// All-pairs shortest-path lengths, row-major, kUnreachable for pairs in
/// different components.
class DistanceMatrix {
 public:
  int order() const noexcept { return n_; }
  std::uint8_t operator()(Vertex u, Vertex w) const {
    return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w)];
  }
  std::span<const std::uint8_t> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  bool connected() const noexcept { return connected_; }
  /// Set iff the graph is connected.
  std::optional<int> diameter() const {
    if (!connected_) return std::nullopt;
    return max_finite_;
  }
  /// Largest finite entry.
  int max_finite() const noexcept { return max_finite_; }

 private:
  friend DistanceMatrix bfs_distances(const Graph& g);

  int n_ = 0;
  int max_finite_ = 0;
  bool connected_ = true;
  std::vector<std::uint8_t> dist_;
};

/// Exact BFS distances from every vertex. Throws Error(BadParameters) if
/// some distance would not fit below kUnreachable.
DistanceMatrix bfs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Intersection array {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular
/// graph, with a_i = k - b_i - c_i.
class IntersectionArray {
 public:
  /// Throws Error(BadParameters) if the invariants fail.
  IntersectionArray(std::vector<int> b, std::vector<int> c);

  int diameter() const noexcept { return static_cast<int>(c_.size()); }
  int valency() const noexcept { return b_.empty() ? 0 : b_.front(); }
  /// 0 <= i < d
  int b(int i) const;
  /// 1 <= i <= d
  int c(int i) const;
  /// 0 <= i <= d
  int a(int i) const;

  const std::vector<int>& b_values() const noexcept { return b_; }
  const std::vector<int>& c_values() const noexcept { return c_; }

  /// Formats as "{k,b_1,...;1,c_2,...}".
  std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

 private:
  std::vector<int> b_;
  std::vector<int> c_;
};

struct SrgParams {
  int n;
  int k;
  int a;
  int c;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// The strongly-regular quadruple when the array has diameter 2.
std::optional<SrgParams> srg_parameters(const IntersectionArray& ia, int n);

/// Throws DisconnectedGraph if g is not connected and NotDrgError if the
/// neighbour counts c_i, a_i, b_i are not constant on some distance class.
IntersectionArray intersection_array(const Graph& g, const DistanceMatrix& dm);
bool is_distance_regular(const Graph& g, const DistanceMatrix& dm);

/// u ~ w iff dist(u, w) == i. Requires 1 <= i <= max finite distance.
Graph distance_i_graph(const DistanceMatrix& dm, int i);

/// True iff every distance-i graph, 1 <= i <= d, is connected. Throws
/// NotDrgError when g is not distance-regular.
bool is_primitive(const Graph& g, const DistanceMatrix& dm);

/// Largest |Gamma_i(u)| over all vertices u and i >= 1.
int max_distance_class(const DistanceMatrix& dm);

/// Induced subgraph together with the map back to the parent labels.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// Induced subgraph on `vertices`, keeping their listed order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Induced subgraph on the neighbours of x, in ascending order.
Subgraph induced_neighborhood(const Graph& g, Vertex x);

/// Length of a shortest odd cycle; nullopt when g is bipartite.
std::optional<int> odd_girth(const Graph& g, const DistanceMatrix& dm);
std::optional<int> odd_girth(const Graph& g);

/// Text format: first line n, then one "u w" line per edge with u < w.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

/// Graphviz export. `labels`, if non-empty, must have one entry per vertex.
void write_dot(std::ostream& out, const Graph& g, std::span<const std::string> labels = {});

}  // namespace mdimlab
