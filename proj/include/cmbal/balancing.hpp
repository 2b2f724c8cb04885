#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmbal/complex.hpp"
#include "cmbal/polynomial.hpp"
#include "cmbal/random.hpp"

namespace cmbal {

/// A variable order, a graded automorphism and a partition X_1..X_d of the
/// non-parameter variables.
///
/// `variables` is listed in the term order, so variable k is the k-th
/// smallest and T is the last d of them. The matrix of g is indexed the same
/// way, with g(x_j) = Σ_i g(i, j) x_i.
struct BalancingPair {
  std::vector<std::string> variables;
  int d = 0;
  LinearAutomorphism g;
  std::vector<std::vector<std::size_t>> blocks;

  bool empty() const { return variables.empty(); }
  std::size_t num_variables() const { return variables.size(); }
  std::size_t num_free() const { return variables.size() - static_cast<std::size_t>(d); }
  TermOrder order() const { return TermOrder::natural(variables.size()); }
};

/// Values substituted for the indeterminates z1..z4.
struct Specialization {
  Rational z1 = 1;
  Rational z2 = 2;
  Rational z3 = 3;
  Rational z4 = 5;

  /// Nonzero p/q with |p| <= 9 and 1 <= q <= 4.
  static Specialization random(Rng& rng);
};

struct KindKleinschmidtResult {
  bool passed = true;
  std::optional<VertexSet> failing_facet;
};

/// For every facet F of `complex`, the rows of g^{-1} indexed by F restricted
/// to the last d columns must have rank |F|. Facets are scanned in
/// lexicographic order; vertices are matched to `variables` by label.
KindKleinschmidtResult kind_kleinschmidt(const SimplicialComplex& complex, const std::vector<std::string>& variables,
                                         const LinearAutomorphism& g, int d);

/// d = 1: g is the identity with an all-ones last column.
BalancingPair base_pair_points(const std::vector<std::string>& vertices);

/// d = 2 pair for a triangle-free, non-bipartite graph that becomes bipartite
/// once `removed` is deleted. Throws InputError when the hypotheses fail and
/// DegenerateSpecialization when the chosen z-values make a required minor vanish.
BalancingPair base_pair_near_bipartite(const Graph& graph, const LabelEdge& removed, const Specialization& z);

/// Pair for the join of the two underlying complexes. Each g must have zero
/// lower-left (d × (n - d)) block; throws InputError otherwise.
BalancingPair compose_pairs(const BalancingPair& first, const BalancingPair& second);

/// Returns `pair` after checking that `sub` is a full-dimensional subcomplex of
/// `super` and that Kind–Kleinschmidt holds on `sub`.
BalancingPair inherit_to_subcomplex(const BalancingPair& pair, const SimplicialComplex& super,
                                    const SimplicialComplex& sub);

/// One factor of a join cover.
struct CoverFactor {
  enum class Type { Points, Graph };

  Type type = Type::Points;
  std::vector<std::string> vertices;
  std::vector<LabelEdge> edges;
  /// For non-bipartite graph factors; searched for when absent.
  std::optional<LabelEdge> removed_edge;

  static CoverFactor points(std::vector<std::string> vertices);
  static CoverFactor graph(const Graph& g, std::optional<LabelEdge> removed_edge = std::nullopt);
  Graph as_graph() const;
  SimplicialComplex as_complex() const;
};

using JoinCover = std::vector<CoverFactor>;

/// The join of the factor complexes.
SimplicialComplex cover_complex(const JoinCover& cover);

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PairVerification {
  std::vector<CheckItem> checks;
  std::optional<Multicomplex> basis;
  std::optional<SimplicialComplex> as_complex;
  std::optional<Coloring> coloring;

  bool passed() const;
  /// Names of the failed checks, comma separated.
  std::string failures() const;
};

/// Recomputes B_g(Δ) and checks Kind–Kleinschmidt, termination by degree d,
/// squarefreeness, block degree <= 1, divisibility closure, the colouring of
/// the induced complex and F(B_g) = h(Δ).
PairVerification verify_pair(const SimplicialComplex& complex, const BalancingPair& pair);

struct WitnessOptions {
  std::uint64_t seed = kDefaultSeed;
  int retries = 8;
  bool verify_cm = true;
};

struct BalancedWitness {
  BalancingPair pair;
  Multicomplex basis;
  SimplicialComplex as_complex;
  Coloring coloring;
  HVector verified_h;
  std::vector<CheckItem> checks;
  int attempts = 0;
  Specialization specialization;
};

/// Builds base pairs for the factors of `cover` (bipartite graph factors are
/// split into two point factors), composes them, inherits the result to
/// `complex` and verifies it. Degenerate or failing specializations are
/// resampled up to `retries` times. Throws InputError for a malformed cover
/// or violated hypotheses and VerificationError if no attempt verifies.
BalancedWitness balanced_witness(const SimplicialComplex& complex, const JoinCover& cover,
                                 const WitnessOptions& options = {});

}  // namespace cmbal
