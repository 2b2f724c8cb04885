#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cmbal/vertex_set.hpp"

namespace cmbal {

using Edge = std::pair<int, int>;
using LabelEdge = std::pair<std::string, std::string>;

/// Undirected simple graph on labelled vertices (at most 64).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);
  Graph(std::vector<std::string> labels, const std::vector<LabelEdge>& edges);
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_edges() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  std::optional<int> find(std::string_view label) const;
  /// Throws InputError on an unknown label.
  int index_of(std::string_view label) const;

  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  VertexSet neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return adjacency_[v].size(); }
  VertexSet all_vertices() const { return VertexSet::first_n(num_vertices()); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<LabelEdge> label_edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Graph complement() const;
  /// Induced subgraph; vertices keep their relative order.
  Graph induced(VertexSet vertices) const;
  std::vector<VertexSet> connected_components() const;
  bool is_connected() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<VertexSet> adjacency_;
};

Graph cycle_graph(int n, const std::string& prefix = "");
Graph path_graph(int n, const std::string& prefix = "");
Graph complete_graph(int n, const std::string& prefix = "");
/// Vertex-disjoint union; labels must not collide.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Proper 2-colouring (0/1 per vertex) if the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool has_triangle(const Graph& g);

/// Bron–Kerbosch with pivoting, restricted to `within`. Results sorted graded-lex.
std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within);
std::vector<VertexSet> maximal_cliques(const Graph& g);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Enumerates isomorphisms a -> b (mapping[v_a] = v_b). The callback returns
/// true to stop the search.
void for_each_isomorphism(const Graph& a, const Graph& b,
                          const std::function<bool(const std::vector<int>&)>& callback);
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace cmbal
