#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmbal/complex.hpp"

namespace cmbal {

/// Reduced Betti numbers over Q: reduced[i + 1] = β̃_i for -1 <= i <= dim.
struct BettiProfile {
  std::vector<std::int64_t> reduced;

  std::int64_t at(int i) const {
    const auto k = static_cast<std::size_t>(i + 1);
    return i >= -1 && k < reduced.size() ? reduced[k] : 0;
  }
  bool operator==(const BettiProfile&) const = default;
};

/// Rank over Q of ∂_i : C_i -> C_{i-1}, faces oriented by their sorted vertex
/// lists. ∂_0 is the augmentation onto the empty face. Requires 0 <= i <= dim.
std::size_t boundary_rank(const SimplicialComplex& complex, int i);

/// Throws VerificationError if the Euler–Poincaré relation fails.
BettiProfile reduced_betti(const SimplicialComplex& complex);

struct HomologyViolation {
  VertexSet face;
  std::vector<std::string> labels;
  /// i with β̃_i(lk face) != 0 and i < dim lk face.
  int degree = 0;
  int link_dimension = 0;
};

struct CmResult {
  bool cohen_macaulay = false;
  bool pure = false;
  BettiProfile betti;
  /// First violating face by dimension, then lexicographically.
  std::optional<HomologyViolation> violation;
};

/// Reisner's criterion: every link lk τ (τ = ∅ included) has β̃_i = 0 for
/// i < dim lk τ.
CmResult is_cohen_macaulay(const SimplicialComplex& complex);

}  // namespace cmbal
