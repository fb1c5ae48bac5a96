#pragma once

// Symmetric (v, k, lambda) designs and their incidence graphs.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mdimlab/bitset.hpp"
#include "mdimlab/constructors.hpp"
#include "mdimlab/graph.hpp"

namespace mdimlab {

/// v points, v blocks, incidence matrix with rows = points and columns =
/// blocks. Construction validates row/column sums, pairwise intersections
/// and lambda(v - 1) = k(k - 1).
class SymmetricDesign {
 public:
  /// `rows[x]` holds the blocks through point x. Throws Error(InvalidDesign).
  static SymmetricDesign from_incidence(int v, int k, int lambda, std::vector<Bitset> rows);

  int v() const noexcept { return v_; }
  int k() const noexcept { return k_; }
  int lambda() const noexcept { return lambda_; }

  bool incident(int point, int block) const { return rows_[static_cast<std::size_t>(point)].test(static_cast<std::size_t>(block)); }
  /// Blocks through a point.
  const Bitset& blocks_through(int point) const { return rows_[static_cast<std::size_t>(point)]; }
  /// Points on a block.
  const Bitset& points_on(int block) const { return cols_[static_cast<std::size_t>(block)]; }

  friend bool operator==(const SymmetricDesign&, const SymmetricDesign&) = default;

 private:
  SymmetricDesign() = default;

  int v_ = 0;
  int k_ = 0;
  int lambda_ = 0;
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
};

/// PG(2, q) for prime q: points and lines are normalized homogeneous
/// triples (first nonzero coordinate 1) in lexicographic order, point P on
/// line L iff P . L = 0 mod q. Throws Error(NotPrime).
SymmetricDesign pg2(int q);

/// Points 0..v-1, block j = every point except j: the (v, v-1, v-2) design.
SymmetricDesign trivial_design(int v);

/// Transposed incidence matrix.
SymmetricDesign design_dual(const SymmetricDesign& d);

/// Flipped incidence matrix, parameters (v, v-k, v-2k+lambda). Throws
/// Error(DegenerateComplement) when v - 2k + lambda <= 0.
SymmetricDesign design_complement(const SymmetricDesign& d);

/// Points 0..v-1, blocks v..2v-1, x ~ B iff x is on B. For 1 < k the result
/// is checked to be bipartite distance-regular of diameter 3.
LabeledCover incidence_graph(const SymmetricDesign& d);

/// Points are the side of vertex 0, blocks the other side, both in
/// ascending vertex order. Throws Error(NotBipartiteDiameter3DRG).
SymmetricDesign design_from_graph(const Graph& g);

/// sigma maps points to blocks. True iff sigma is incidence-preserving
/// (x on sigma(y) <=> y on sigma(x)) with no absolute point. Throws
/// Error(NotBijection) if sigma is not a permutation of 0..v-1.
bool is_null_polarity(const SymmetricDesign& d, std::span<const int> sigma);

/// Graph on the points with u ~ w iff u is on sigma(w); checked strongly
/// regular with parameters (v, k, lambda, lambda). Throws
/// Error(NotNullPolarity).
Graph srg_from_null_polarity(const SymmetricDesign& d, std::span<const int> sigma);

/// Text format: "v k lambda" then v rows of v characters in {0,1}.
SymmetricDesign read_design(std::istream& in);
void write_design(std::ostream& out, const SymmetricDesign& d);
SymmetricDesign load_design(const std::string& path);
void save_design(const std::string& path, const SymmetricDesign& d);

}  // namespace mdimlab
