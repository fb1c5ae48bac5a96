#pragma once

// Graph families and covering constructions with fixed vertex orders.
//
// Subsets are listed in colex order (increasing bitmask value), field
// elements as 0..q-1, hypercube vertices as integers whose bits are the
// coordinates.

#include <string>
#include <vector>

#include "mdimlab/graph.hpp"

namespace mdimlab {

/// Role of a vertex inside a covering construction.
struct VertexTag {
  enum class Role { Plus, Minus, InfinityPlus, InfinityMinus, Point, Block };

  Role role;
  int base = 0;  ///< underlying vertex, point or block index

  std::string to_string() const;
  friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

/// A constructed graph together with the role of every vertex.
struct LabeledCover {
  Graph graph;
  std::vector<VertexTag> tags;

  /// Vertex carrying `tag`; throws IndexOutOfRange if none does.
  Vertex find(const VertexTag& tag) const;
  std::vector<std::string> labels() const;
};

Graph cycle(int n);
Graph complete(int n);
/// s parts of size t; vertex part * t + j.
Graph complete_multipartite(int s, int t);
/// Points 0..v-1, blocks v..2v-1, i ~ v + j iff i != j.
Graph complete_bipartite_minus_matching(int v);
Graph hypercube(int m);
/// r-subsets of an m-set, adjacent iff they share r - 1 elements.
Graph johnson(int m, int r);
/// r-subsets of an m-set, adjacent iff disjoint.
Graph kneser(int m, int r);
/// kneser(2r - 1, r - 1).
Graph odd_graph(int r);
/// q prime, q = 1 mod 4; x ~ y iff x - y is a nonzero square.
Graph paley(int q);
/// m x n grid, vertex i * n + j, adjacent iff same row or same column.
Graph rook(int m, int n);
/// The Shrikhande graph: Z4 x Z4, vertex 4a + b.
Graph shrikhande();
/// Incidence graph of GQ(2,2) (Tutte-Coxeter graph): the 15 pairs of a
/// 6-set (colex order) then the 15 perfect matchings (lex order).
Graph gq22_incidence();

/// r-subsets of {0..m-1} as bitmasks, in colex order.
std::vector<unsigned> subsets_colex(int m, int r);

bool is_prime(int q);

/// Vertex sets V+ = 0..n-1 and V- = n..2n-1 with u+ ~ w- iff u ~ w.
LabeledCover bipartite_double(const Graph& g);

/// Taylor double cover of a strongly regular graph with parameters
/// (n, 2c, a, c): V+ = 0..n-1, V- = n..2n-1, inf+ = 2n, inf- = 2n+1. The
/// input is checked by its computed intersection array and the output is
/// checked to be 2-antipodal of diameter 3 with antipodes (v+, v-).
/// Throws Error(NotSrgKEquals2c) otherwise.
LabeledCover taylor(const Graph& delta);

}  // namespace mdimlab
