#include "mdimlab/lifting.hpp"

#include <algorithm>

#include "mdimlab/error.hpp"

namespace mdimlab {

const char* to_string(FoldCase c) noexcept { return c == FoldCase::Direct ? "direct" : "with-extra"; }

namespace {

void require_resolving(const DistanceMatrix& dm, std::span<const Vertex> set, const char* what) {
  const ResolveCheck check = is_resolving(dm, set);
  if (!check) {
    throw Error(Errc::InputNotResolving, std::string(what) + " leaves " + std::to_string(check.unresolved->x) + " and " +
                                             std::to_string(check.unresolved->y) + " unresolved");
  }
}

ResolvingCertificate verified(const DistanceMatrix& dm, std::vector<Vertex> set, const char* method) {
  ResolvingCertificate cert = certify(dm, std::move(set), method);
  if (cert.status != CertificateStatus::VerifiedResolving)
    throw Error(Errc::VerificationFailure, std::string(method) + " produced a non-resolving set");
  return cert;
}

std::vector<Vertex> to_parent(const Subgraph& sub, std::span<const Vertex> local) {
  std::vector<Vertex> out;
  for (Vertex v : local) {
    if (v < 0 || v >= sub.graph.order()) throw Error(Errc::IndexOutOfRange, "local vertex " + std::to_string(v) + " out of range");
    out.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
  }
  return out;
}

AntipodalStructure two_antipodal(const Graph& g, const DistanceMatrix& dm) {
  AntipodalStructure s;
  try {
    s = antipodal_structure(g, dm);
  } catch (const Error& e) {
    if (e.code() != Errc::NotAntipodal) throw;
    throw Error(Errc::NotTwoAntipodal, "graph is not antipodal");
  }
  if (s.t != 2) throw Error(Errc::NotTwoAntipodal, "antipodal classes have size " + std::to_string(s.t));
  return s;
}

std::vector<Vertex> push(const AntipodalStructure& s, const Bitset& plus_side, std::span<const Vertex> r) {
  for (const auto& cls : s.classes) {
    const bool a = plus_side.test(static_cast<std::size_t>(cls[0]));
    const bool b = plus_side.test(static_cast<std::size_t>(cls[1]));
    if (a == b) throw Error(Errc::NotTwoAntipodal, "partition does not split the class of " + std::to_string(cls[0]));
  }
  std::vector<Vertex> out;
  for (Vertex v : r) out.push_back(plus_side.test(static_cast<std::size_t>(v)) ? v : s.antipode(v));
  return out;
}

}  // namespace

ResolvingCertificate lift_halved(const Graph& g, std::span<const Vertex> r_plus, std::span<const Vertex> r_minus) {
  const DistanceMatrix dm = bfs_distances(g);
  const Halving h = halve(g, dm);
  require_resolving(bfs_distances(h.plus.graph), r_plus, "R+");
  require_resolving(bfs_distances(h.minus.graph), r_minus, "R-");
  std::vector<Vertex> set = to_parent(h.plus, r_plus);
  for (Vertex v : to_parent(h.minus, r_minus)) set.push_back(v);
  return verified(dm, std::move(set), "lifted-halving");
}

FoldedLift lift_folded(const Graph& g, const AntipodalStructure& structure, std::span<const int> r_bar) {
  const DistanceMatrix dm = bfs_distances(g);
  const Folding f = fold(g, structure);
  const DistanceMatrix fdm = bfs_distances(f.folded);
  require_resolving(fdm, r_bar, "folded set");
  const int d = *dm.diameter();
  const int d_bar = *fdm.diameter();
  const int r = structure.t - 1;

  FoldedLift out;
  std::vector<Vertex> set;
  for (int w : r_bar)
    for (int i = 1; i <= r; ++i) set.push_back(structure.member(w, i));

  if (d % 2 == 0) {
    std::vector<int> far;
    for (int u = 0; u < f.folded.order(); ++u)
      if (std::all_of(r_bar.begin(), r_bar.end(), [&](int w) { return fdm(u, w) == d_bar; })) far.push_back(u);
    if (far.size() > 1) throw Error(Errc::InputNotResolving, "several folded vertices lie at full distance from the set");
    if (far.size() == 1) {
      out.fold_case = FoldCase::WithExtra;
      out.extra = far[0];
      for (int i = 1; i <= r; ++i) set.push_back(structure.member(far[0], i));
    }
  }
  out.certificate = verified(dm, std::move(set), "lifted-folding");
  return out;
}

ResolvingCertificate push_to_plus(const Graph& g, const Bitset& plus_side, std::span<const Vertex> r) {
  const DistanceMatrix dm = bfs_distances(g);
  if (plus_side.size() != static_cast<std::size_t>(g.order())) throw Error(Errc::BadParameters, "partition has the wrong size");
  const AntipodalStructure s = two_antipodal(g, dm);
  require_resolving(dm, r, "input set");
  return verified(dm, push(s, plus_side, r), "pushed-plus");
}

ResolvingCertificate project_to_folded(const Graph& g, std::span<const Vertex> r) {
  const DistanceMatrix dm = bfs_distances(g);
  if (!dm.connected() || !is_bipartite(g)) throw Error(Errc::HypothesisFailure, "graph is not connected and bipartite");
  if (*dm.diameter() % 2 == 0) throw Error(Errc::HypothesisFailure, "diameter is even");
  AntipodalStructure s;
  try {
    s = two_antipodal(g, dm);
  } catch (const Error& e) {
    if (e.code() != Errc::NotTwoAntipodal) throw;
    throw Error(Errc::HypothesisFailure, e.what());
  }
  require_resolving(dm, r, "input set");
  const Folding f = fold(g, s);
  std::vector<Vertex> set;
  for (Vertex v : r) set.push_back(f.quotient[static_cast<std::size_t>(v)]);
  return verified(bfs_distances(f.folded), std::move(set), "projected-folded");
}

ResolvingCertificate taylor_lift(const LabeledCover& gamma, std::span<const Vertex> r) {
  const Vertex inf_plus = gamma.find({VertexTag::Role::InfinityPlus, 0});
  const Subgraph delta = induced_neighborhood(gamma.graph, inf_plus);
  require_resolving(bfs_distances(delta.graph), r, "descendant set");
  std::vector<Vertex> set = to_parent(delta, r);
  set.push_back(inf_plus);
  return verified(bfs_distances(gamma.graph), std::move(set), "lifted-taylor");
}

DescendantLift descendant_extract(const Graph& gamma, std::span<const Vertex> s, Vertex x) {
  const DistanceMatrix dm = bfs_distances(gamma);
  if (std::find(s.begin(), s.end(), x) == s.end()) throw Error(Errc::BadParameters, "x is not in the set");
  require_resolving(dm, s, "input set");
  const AntipodalStructure structure = two_antipodal(gamma, dm);

  Bitset plus = gamma.neighbors(x);
  plus.set(static_cast<std::size_t>(x));
  std::vector<Vertex> pushed;
  try {
    pushed = push(structure, plus, s);
  } catch (const Error& e) {
    if (e.code() != Errc::NotTwoAntipodal) throw;
    throw Error(Errc::NormalizationFailure, "{x} and N(x) do not form a transversal");
  }

  DescendantLift out{induced_neighborhood(gamma, x), {}};
  std::vector<Vertex> local;
  for (Vertex v : pushed) {
    if (v == x) continue;
    const auto& parent = out.descendant.to_parent;
    const auto it = std::find(parent.begin(), parent.end(), v);
    if (it == parent.end()) throw Error(Errc::NormalizationFailure, "vertex " + std::to_string(v) + " is not a neighbour of x");
    local.push_back(static_cast<Vertex>(it - parent.begin()));
  }
  out.certificate = verified(bfs_distances(out.descendant.graph), std::move(local), "descendant");
  return out;
}

ResolvingCertificate double_lift(const Graph& delta, std::span<const Vertex> r) {
  const DistanceMatrix dm = bfs_distances(delta);
  if (!dm.connected()) throw Error(Errc::ParameterFailure, "graph is disconnected");
  std::optional<SrgParams> p;
  try {
    p = srg_parameters(intersection_array(delta, dm), delta.order());
  } catch (const Error&) {
  }
  if (!p || p->a != p->c) throw Error(Errc::ParameterFailure, "expected a strongly regular graph with a = c");
  require_resolving(dm, r, "input set");
  const LabeledCover doubled = bipartite_double(delta);
  std::vector<Vertex> set(r.begin(), r.end());
  for (Vertex v : r) set.push_back(v + delta.order());
  return verified(bfs_distances(doubled.graph), std::move(set), "lifted-double");
}

}  // namespace mdimlab
