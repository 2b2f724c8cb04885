#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cmbal/balancing.hpp"
#include "cmbal/complex.hpp"
#include "cmbal/graph.hpp"

namespace cmbal {

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
/// Size of a largest independent set.
int beta(const Graph& g);
/// All maximal independent sets have the same size.
bool is_well_covered(const Graph& g);

/// Edges with an endpoint of degree 1, as (u, v) with u < v.
std::vector<Edge> pendant_edges(const Graph& g);
/// Every vertex lies in exactly one pendant edge.
bool pendant_perfect_matching(const Graph& g);

/// Chordless cycles of length at most `max_length` (0 for no bound). Each
/// cycle starts at its smallest vertex and continues toward the smaller neighbour.
std::vector<std::vector<int>> induced_cycles(const Graph& g, int max_length = 0);
std::set<int> induced_cycle_lengths(const Graph& g);
std::vector<std::vector<int>> induced_5_cycles(const Graph& g);
/// Induced 5-cycles with no two adjacent vertices of degree >= 3.
std::vector<std::vector<int>> basic_5_cycles(const Graph& g);

struct PGDecomposition {
  VertexSet pendant_vertices;
  VertexSet cycle_vertices;
  std::vector<Edge> pendant_edges;
  std::vector<std::vector<int>> basic_cycles;

  /// Pendant edges plus twice the number of basic 5-cycles.
  int predicted_beta() const { return static_cast<int>(pendant_edges.size() + 2 * basic_cycles.size()); }
};

/// P is the set of endpoints of pendant edges and C the rest. Returns the
/// decomposition when the pendant edges match P perfectly and the basic
/// 5-cycles partition C.
std::optional<PGDecomposition> pg_decomposition(const Graph& g);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// C7, P10, P13, P14 and Q13, with the figure labels.
std::vector<NamedGraph> exceptional_catalog();
/// Catalog graphs plus K1, C5, "Q14" (alias of Q13), "figure2" and "figure4".
/// Names are case-insensitive.
std::optional<Graph> named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

enum class VerdictKind { PG, K1, Exceptional, NotWellCovered, GirthTooSmall };

std::string to_string(VerdictKind kind);

struct ClassificationVerdict {
  VerdictKind kind = VerdictKind::NotWellCovered;
  std::optional<PGDecomposition> pg;
  std::string exceptional_name;
  std::optional<int> girth;
  int beta = 0;
};

/// Requires a connected graph. Throws VerificationError if a well-covered
/// graph of girth >= 5 is neither K1, exceptional nor in PG.
ClassificationVerdict classify_girth5(const Graph& g);

struct ComponentVerdict {
  std::vector<std::string> labels;
  Graph component;
  ClassificationVerdict verdict;
};

/// Components ordered by their smallest label.
std::vector<ComponentVerdict> classify_components(const Graph& g);

struct JoinEmbedding {
  JoinCover cover;
  SimplicialComplex complex;
  std::vector<ComponentVerdict> components;
  /// Σ (pendant edges + 2 · basic cycles) over the components, K1 counting 1.
  int predicted_beta = 0;
  bool beta_matches = false;
  bool full_dimensional = false;
};

/// Cover of I(G) by I(γ) for each basic 5-cycle γ, I(e) for each pendant
/// edge e and a point for each K1 component. Throws InputError naming the
/// first component that is neither K1 nor in PG.
JoinEmbedding embed_in_join(const Graph& g);

/// Smallest (then lexicographically first) independent set of the
/// 1-skeleton meeting every facet. Requires a pure complex.
std::optional<VertexSet> independent_facet_transversal(const SimplicialComplex& complex);

/// Complete r-partite graph on n vertices with part sizes differing by at most one.
Graph turan_graph(int n, int r);
std::int64_t count_triangles(const Graph& g);
bool has_k4(const Graph& g);
/// Edge count of T(n, 3).
int max_k4_free_edges(int n);

}  // namespace cmbal
