#include "mdimlab/error.hpp"

#include <sstream>

namespace mdimlab {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadParameters: return "BadParameters";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::NotDRG: return "NotDRG";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::NotAntipodal: return "NotAntipodal";
    case Errc::NotSrgKEquals2c: return "NotSrgKEquals2c";
    case Errc::NotPrime: return "NotPrime";
    case Errc::InvalidDesign: return "InvalidDesign";
    case Errc::DegenerateComplement: return "DegenerateComplement";
    case Errc::NotBipartiteDiameter3DRG: return "NotBipartiteDiameter3DRG";
    case Errc::NotNullPolarity: return "NotNullPolarity";
    case Errc::NotBijection: return "NotBijection";
    case Errc::NoSuchTriple: return "NoSuchTriple";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InputNotResolving: return "InputNotResolving";
    case Errc::NotTwoAntipodal: return "NotTwoAntipodal";
    case Errc::HypothesisFailure: return "HypothesisFailure";
    case Errc::NormalizationFailure: return "NormalizationFailure";
    case Errc::ParameterFailure: return "ParameterFailure";
    case Errc::ClassificationContradiction: return "ClassificationContradiction";
    case Errc::VerificationFailure: return "VerificationFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string drg_message(int u, int w, int i) {
  std::ostringstream os;
  os << "neighbour counts differ at pair (" << u << ", " << w << ") at distance " << i;
  return os.str();
}

std::string walk_message(const std::vector<int>& walk) {
  std::ostringstream os;
  os << "odd closed walk of length " << (walk.empty() ? 0 : walk.size() - 1);
  return os.str();
}

}  // namespace

NotDrgError::NotDrgError(int u_, int w_, int i_)
    : Error(Errc::NotDRG, drg_message(u_, w_, i_)), u(u_), w(w_), distance(i_) {}

NotBipartiteError::NotBipartiteError(std::vector<int> walk)
    : Error(Errc::NotBipartite, walk_message(walk)), odd_walk(std::move(walk)) {}

}  // namespace mdimlab
