#pragma once

// Bipartite and antipodal structure of distance-regular graphs: halving,
// folding and the thirteen-way classification AH1..AH13.

#include <optional>
#include <string>
#include <vector>

#include "mdimlab/bitset.hpp"
#include "mdimlab/graph.hpp"

namespace mdimlab {

struct Bipartition {
  std::vector<Vertex> plus;   ///< contains vertex 0
  std::vector<Vertex> minus;
  Bitset plus_set;

  bool in_plus(Vertex v) const { return plus_set.test(static_cast<std::size_t>(v)); }
};

/// 2-colouring with vertex 0 in V+. Throws Error(DisconnectedGraph) or
/// NotBipartiteError carrying an odd closed walk.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Antipodal classes (components of the distance-d graph) ordered by their
/// smallest vertex, members ascending. The transversal index of a vertex
/// is its position inside its class, so transversal 0 holds the class
/// minima.
struct AntipodalStructure {
  std::vector<std::vector<Vertex>> classes;
  int t = 0;
  std::vector<int> class_of;
  std::vector<int> transversal;

  Vertex member(int cls, int index) const {
    return classes[static_cast<std::size_t>(cls)][static_cast<std::size_t>(index)];
  }
  /// The other member of v's class; only meaningful when t == 2.
  Vertex antipode(Vertex v) const;
};

/// Throws Error(NotAntipodal) when d < 2 or the distance-d graph is not a
/// disjoint union of equal cliques of size >= 2.
AntipodalStructure antipodal_structure(const Graph& g, const DistanceMatrix& dm);

/// The two halved graphs, V+ (the side of vertex 0) first, each with its
/// map to the labels of g.
struct Halving {
  Subgraph plus;
  Subgraph minus;
};

/// Throws NotBipartiteError when g is not bipartite.
Halving halve(const Graph& g);
Halving halve(const Graph& g, const DistanceMatrix& dm);

/// Folded graph on the antipodal classes; quotient[v] is v's class.
struct Folding {
  Graph folded;
  std::vector<int> quotient;
};

Folding fold(const Graph& g, const AntipodalStructure& structure);

/// True iff non-adjacency is an equivalence relation with equal classes.
bool is_complete_multipartite(const Graph& g);

struct Subclaim {
  std::string claim;
  bool holds;
};

struct GraphSummary {
  int n;
  int d;
  int k;
};

struct AHClass {
  int id = 1;
  int d = 0;
  int k = 0;
  std::optional<Bipartition> bipartition;
  std::optional<AntipodalStructure> antipodal;
  std::vector<GraphSummary> halved;
  std::optional<GraphSummary> folded;
  std::vector<Subclaim> subclaims;

  std::string name() const { return "AH" + std::to_string(id); }
};

/// Decides the class in this order: d <= 1 -> AH3; d = 2 imprimitive -> AH4;
/// k = 2 -> AH2; then by diameter and the bipartite/antipodal flags
/// (AH5..AH13); otherwise AH1. The structural claims attached to the class
/// are checked and listed in `subclaims`; a failing claim raises
/// Error(ClassificationContradiction).
AHClass classify_ah(const Graph& g);

}  // namespace mdimlab
