#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cmbal/balancing.hpp"
#include "cmbal/complex.hpp"
#include "cmbal/graph.hpp"
#include "cmbal/homology.hpp"
#include "cmbal/random.hpp"

namespace cmbal::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  /// One line per sub-check, "ok: ..." or "FAILED: ...".
  std::vector<std::string> notes;
};

CriterionResult criterion_1();
CriterionResult criterion_2();
CriterionResult criterion_3();
CriterionResult criterion_4();
CriterionResult criterion_5();
CriterionResult criterion_6();
CriterionResult criterion_7(std::uint64_t seed = kDefaultSeed);
CriterionResult criterion_8(std::uint64_t seed = kDefaultSeed);

/// Runs the listed criteria (all when empty) in order.
std::vector<CriterionResult> run(const std::vector<int>& which = {}, std::uint64_t seed = kDefaultSeed);

/// "PASS criterion 3: ... (1.2 s)".
std::string summary_line(const CriterionResult& r);

namespace oracle {

/// Faces of lk τ by filtering all faces of the complex, as label sets.
std::vector<std::vector<std::string>> brute_force_link(const SimplicialComplex& complex, VertexSet tau);

/// Reduced Betti numbers from dense boundary matrices built from a face list.
std::vector<std::int64_t> dense_reduced_betti(const std::vector<VertexSet>& faces);

/// Reisner's criterion evaluated with brute_force links and dense homology.
bool reisner_by_brute_force(const SimplicialComplex& complex);

/// Cohen–Macaulayness by the algebraic definition: a random integer matrix H
/// satisfying Kind–Kleinschmidt gives g = H^{-1}, and the complex is CM iff
/// the standard monomials of gI + (T) have F = h.
bool cm_by_regular_sequence(const SimplicialComplex& complex, Rng& rng);

/// Isomorphism classes of simplicial complexes on at most 6 vertices (the
/// void complex excluded), as bitmasks over the 64 subsets of {0..5}.
std::vector<std::uint64_t> complexes_up_to_six_vertices();
SimplicialComplex complex_from_mask(std::uint64_t mask);

/// Random complex on at most `max_vertices` vertices with at most `max_faces` faces (∅ included).
SimplicialComplex random_small_complex(Rng& rng, int max_vertices, int max_faces, const std::string& prefix);

/// Random connected graph of girth >= 5 on n vertices.
Graph random_girth5_graph(Rng& rng, int n);
/// Random connected graph in PG built from 5-cycles and pendant pairs.
Graph random_pg_graph(Rng& rng, int max_vertices);

struct CorpusEntry {
  std::string description;
  SimplicialComplex complex;
  JoinCover cover;
};

/// Full-dimensional CM subcomplexes of joins of at most 3 admissible factors.
std::vector<CorpusEntry> witness_corpus(Rng& rng, int size, int max_vertices);

}  // namespace oracle

}  // namespace cmbal::acceptance
