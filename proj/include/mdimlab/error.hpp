#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mdimlab {

enum class Errc {
  BadParameters,
  IndexOutOfRange,
  DisconnectedGraph,
  NotDRG,
  NotPrimitive,
  NotBipartite,
  NotAntipodal,
  NotSrgKEquals2c,
  NotPrime,
  InvalidDesign,
  DegenerateComplement,
  NotBipartiteDiameter3DRG,
  NotNullPolarity,
  NotBijection,
  NoSuchTriple,
  BudgetExceeded,
  InputNotResolving,
  NotTwoAntipodal,
  HypothesisFailure,
  NormalizationFailure,
  ParameterFailure,
  ClassificationContradiction,
  VerificationFailure,
  ParseError,
};

const char* to_string(Errc code) noexcept;

/// Base exception for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when a graph is not distance-regular. Carries the first offending
/// (u, w, i) triple in lexicographic order of (u, w).
class NotDrgError : public Error {
 public:
  NotDrgError(int u, int w, int distance);

  int u;
  int w;
  int distance;
};

/// Raised when a graph has an odd cycle. `odd_walk` is a closed walk of odd
/// length, listed as a vertex sequence whose first and last entries coincide.
class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<int> walk);

  std::vector<int> odd_walk;
};

}  // namespace mdimlab
