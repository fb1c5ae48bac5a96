#pragma once

// Transfers of resolving sets between a graph and its halved, folded,
// doubled and Taylor relatives. Every output is re-checked on the target
// graph; a failed check raises Error(VerificationFailure).

#include <span>

#include "mdimlab/bitset.hpp"
#include "mdimlab/constructors.hpp"
#include "mdimlab/graph.hpp"
#include "mdimlab/imprimitivity.hpp"
#include "mdimlab/mdim.hpp"

namespace mdimlab {

/// R+ and R- are given in the local labels of halve(g).plus and
/// halve(g).minus. The result is their union in g's labels.
/// Throws Error(InputNotResolving) if either half-set fails.
ResolvingCertificate lift_halved(const Graph& g, std::span<const Vertex> r_plus, std::span<const Vertex> r_minus);

enum class FoldCase {
  Direct,     ///< R itself resolves
  WithExtra,  ///< the classes of one extra folded vertex are added
};
const char* to_string(FoldCase c) noexcept;

struct FoldedLift {
  ResolvingCertificate certificate;
  FoldCase fold_case = FoldCase::Direct;
  std::optional<int> extra;  ///< folded vertex added in the WithExtra case
};

/// `r_bar` is a resolving set of fold(g, structure).folded. With the
/// transversals 1..t-1 of `structure`, R = {w^1..w^{t-1} : w in r_bar}.
/// Throws Error(InputNotResolving) if r_bar does not resolve the folded
/// graph.
FoldedLift lift_folded(const Graph& g, const AntipodalStructure& structure, std::span<const int> r_bar);

/// Replaces every member of R outside `plus_side` by its antipode.
/// `plus_side` must meet every antipodal class once. Throws
/// Error(NotTwoAntipodal) if g is not 2-antipodal or the partition is not a
/// transversal, Error(InputNotResolving) if R does not resolve g.
ResolvingCertificate push_to_plus(const Graph& g, const Bitset& plus_side, std::span<const Vertex> r);

/// For g bipartite, 2-antipodal, of odd diameter: the antipodal classes of
/// R, as vertices of the folded graph. Throws Error(HypothesisFailure) when
/// g is not of that kind, Error(InputNotResolving) when R does not resolve.
ResolvingCertificate project_to_folded(const Graph& g, std::span<const Vertex> r);

/// R is given in the local labels of induced_neighborhood(gamma, inf+),
/// which coincide with the labels of the underlying graph. The result is
/// R+ together with inf+.
ResolvingCertificate taylor_lift(const LabeledCover& gamma, std::span<const Vertex> r);

struct DescendantLift {
  Subgraph descendant;                ///< Gamma[x] with its parent labels
  ResolvingCertificate certificate;   ///< in the local labels of `descendant`
};

/// S resolves the Taylor graph gamma and contains x. S is pushed onto the
/// part {x} + N(x) of a 2-antipodal partition and S - {x} is returned as a
/// resolving set of Gamma[x]. Throws Error(NormalizationFailure) if the push
/// leaves a vertex outside N(x).
DescendantLift descendant_extract(const Graph& gamma, std::span<const Vertex> s, Vertex x);

/// For an SRG with a = c: R+ together with R- in bipartite_double(delta).
/// Throws Error(ParameterFailure) for any other graph.
ResolvingCertificate double_lift(const Graph& delta, std::span<const Vertex> r);

}  // namespace mdimlab
