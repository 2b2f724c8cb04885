#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cmbal/graph.hpp"
#include "cmbal/vertex_set.hpp"

namespace cmbal {

/// (f_{-1}, f_0, ..., f_{d-1}).
struct FaceVector {
  std::vector<std::int64_t> entries;

  int d() const { return static_cast<int>(entries.size()) - 1; }
  bool operator==(const FaceVector&) const = default;
};

/// (h_0, ..., h_d).
struct HVector {
  std::vector<std::int64_t> entries;

  int d() const { return static_cast<int>(entries.size()) - 1; }
  bool operator==(const HVector&) const = default;
};

/// A simplicial complex stored by its facets over labelled vertices.
///
/// Every listed vertex lies in some face; vertices that appear in no
/// generating face are dropped at construction. The void complex (no faces
/// at all) is not representable; the empty complex {∅} has dimension -1.
class SimplicialComplex {
 public:
  /// The empty complex {∅}.
  SimplicialComplex();
  /// `faces` may contain non-maximal faces; they are discarded.
  SimplicialComplex(std::vector<std::string> vertices, const std::vector<VertexSet>& faces);

  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex simplex(const std::vector<std::string>& vertices);
  static SimplicialComplex points(const std::vector<std::string>& vertices);

  const std::vector<std::string>& vertices() const { return vertices_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  std::optional<int> find_vertex(std::string_view label) const;
  const std::vector<VertexSet>& facets() const { return facets_; }
  int dimension() const { return dimension_; }

  /// faces_of_dimension(i) for -1 <= i <= dim, in lexicographic order.
  const std::vector<VertexSet>& faces_of_dimension(int i) const;
  /// All faces, by increasing dimension then lexicographically.
  std::vector<VertexSet> all_faces() const;
  std::size_t num_faces() const { return face_lookup_.size(); }
  bool contains(VertexSet face) const { return face_lookup_.count(face) != 0; }

  std::vector<std::string> labels_of(VertexSet face) const;
  /// Throws InputError if a label is not a vertex.
  VertexSet face_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::vector<std::string>> facet_labels() const;

  Graph one_skeleton() const;

  /// Same vertex labels and same faces (vertex order may differ).
  bool same_faces_as(const SimplicialComplex& other) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<VertexSet> facets_;
  int dimension_ = -1;
  std::vector<std::vector<VertexSet>> faces_by_dim_;
  std::unordered_set<VertexSet> face_lookup_;
};

/// Proper colouring of the vertices, in the vertex order of its complex or graph.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;
};

FaceVector f_vector(const SimplicialComplex& complex);
/// Throws InputError unless f_{-1} = 1.
HVector h_from_f(const FaceVector& f);
/// Throws InputError unless h_0 = 1.
FaceVector f_from_h(const HVector& h);
/// Variants that check the length against a declared d.
HVector h_from_f(const FaceVector& f, int d);
FaceVector f_from_h(const HVector& h, int d);
HVector h_vector(const SimplicialComplex& complex);
/// Coefficient convolution, used for joins: f(Δ1 * Δ2) = f(Δ1) ⋆ f(Δ2).
std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// Throws InputError if tau is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet tau);
SimplicialComplex link(const SimplicialComplex& complex, const std::vector<std::string>& tau);
SimplicialComplex skeleton(const SimplicialComplex& complex, int i);
/// Throws InputError if the vertex labels collide.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// The complex generated by the faces of `complex` whose vertices lie in `vertices`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet vertices);

bool is_pure(const SimplicialComplex& complex);
/// Every clique of the 1-skeleton is a face.
bool is_flag(const SimplicialComplex& complex);
/// Inclusion-minimal non-faces over the complex's own vertex set.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

SimplicialComplex independence_complex(const Graph& g);
SimplicialComplex clique_complex(const Graph& g);

/// Deterministic backtracking; vertices are tried by decreasing degree.
std::optional<Coloring> proper_coloring(const Graph& g, int k);
std::optional<Coloring> proper_coloring(const SimplicialComplex& complex, int k);
bool is_proper_coloring(const SimplicialComplex& complex, const Coloring& coloring);
/// A proper (dim + 1)-colouring exists.
bool is_balanced(const SimplicialComplex& complex);

/// Every face of `sub` (matched by label) is a face of `super`, and the dimensions agree.
bool is_full_dimensional_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super);
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super);

/// Isomorphism of complexes (vertex bijection carrying facets to facets).
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

struct ColorableComplex {
  SimplicialComplex complex;
  Coloring coloring;
};

/// Searches for a d-colourable complex with the given f-vector (trailing zeros
/// are ignored). Vertices are labelled "1".."f0". Returns nullopt when no such
/// complex exists or the node budget is exhausted.
std::optional<ColorableComplex> find_colorable_complex(const FaceVector& f, int d,
                                                       std::uint64_t node_budget = 5'000'000);

}  // namespace cmbal
