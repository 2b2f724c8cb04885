#include "cmbal/graph.hpp"

#include <algorithm>

#include "cmbal/errors.hpp"

namespace cmbal {

namespace {

void check_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxVertices)) {
    throw InputError("graphs and complexes are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
}

}  // namespace

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)), adjacency_(labels_.size()) {
  check_size(labels_.size());
  for (int i = 0; i < num_vertices(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw InputError("duplicate vertex label '" + labels_[i] + "'");
  }
}

Graph::Graph(std::vector<std::string> labels, const std::vector<LabelEdge>& edges) : Graph(std::move(labels)) {
  for (const auto& [u, v] : edges) add_edge(index_of(u), index_of(v));
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges) : Graph(std::move(labels)) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

int Graph::num_edges() const {
  int twice = 0;
  for (const auto& n : adjacency_) twice += n.size();
  return twice / 2;
}

std::optional<int> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < num_vertices(); ++u) {
    adjacency_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::vector<LabelEdge> Graph::label_edges() const {
  std::vector<LabelEdge> out;
  for (const auto& [u, v] : edges()) out.emplace_back(labels_[u], labels_[v]);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("loop at vertex '" + labels_[u] + "'");
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

Graph Graph::complement() const {
  Graph out(labels_);
  const VertexSet all = all_vertices();
  for (int v = 0; v < num_vertices(); ++v) out.adjacency_[v] = all - adjacency_[v] - VertexSet::single(v);
  return out;
}

Graph Graph::induced(VertexSet vertices) const {
  const std::vector<int> keep = vertices.elements();
  std::vector<std::string> labels;
  std::vector<int> remap(num_vertices(), -1);
  for (int v : keep) {
    remap[v] = static_cast<int>(labels.size());
    labels.push_back(labels_[v]);
  }
  Graph out(std::move(labels));
  for (const auto& [u, v] : edges()) {
    if (remap[u] >= 0 && remap[v] >= 0) out.add_edge(remap[u], remap[v]);
  }
  return out;
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int s = 0; s < num_vertices(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= adjacency_[v]; });
      frontier = next - comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool Graph::is_connected() const { return num_vertices() > 0 && connected_components().size() == 1; }

bool Graph::operator==(const Graph& other) const {
  return labels_ == other.labels_ && adjacency_ == other.adjacency_;
}

namespace {

std::vector<std::string> numbered(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

}  // namespace

Graph cycle_graph(int n, const std::string& prefix) {
  Graph g(numbered(n, prefix));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n, const std::string& prefix) {
  Graph g(numbered(n, prefix));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n, const std::string& prefix) {
  Graph g(numbered(n, prefix));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  Graph out(std::move(labels));
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  const int shift = a.num_vertices();
  for (const auto& [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      bool ok = true;
      g.neighbors(v).for_each([&](int w) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return color;
}

bool has_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.neighbors(u).intersects(g.neighbors(v))) return true;
  }
  return false;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P ∪ X with most neighbours in P.
  int pivot = -1;
  int best = -1;
  (p | x).for_each([&](int u) {
    const int c = (g.neighbors(u) & p).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  (p - g.neighbors(pivot)).for_each([&](int v) {
    const VertexSet nv = g.neighbors(v);
    bron_kerbosch(g, r | VertexSet::single(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  if (within.empty()) {
    out.emplace_back();
    return out;
  }
  bron_kerbosch(g, VertexSet(), within, VertexSet(), out);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) { return maximal_cliques(g, g.all_vertices()); }

std::vector<VertexSet> maximal_independent_sets(const Graph& g) { return maximal_cliques(g.complement()); }

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::function<bool(const std::vector<int>&)>& callback;
  std::vector<int> order;
  std::vector<int> map_ab;
  std::vector<int> map_ba;
  std::vector<std::vector<int>> signature_a;
  std::vector<std::vector<int>> signature_b;
  bool stopped = false;

  static std::vector<std::vector<int>> signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
      sig[v].push_back(g.degree(v));
      std::vector<int> nd;
      g.neighbors(v).for_each([&](int w) { nd.push_back(g.degree(w)); });
      std::sort(nd.begin(), nd.end());
      sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
  }

  void build_order() {
    const int n = a.num_vertices();
    std::vector<bool> placed(n, false);
    VertexSet placed_set;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      std::pair<int, int> best_key{-1, -1};
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        const std::pair<int, int> key{(a.neighbors(v) & placed_set).size(), a.degree(v)};
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = true;
      placed_set.insert(best);
      order.push_back(best);
    }
  }

  void extend(std::size_t depth) {
    if (stopped) return;
    if (depth == order.size()) {
      stopped = callback(map_ab);
      return;
    }
    const int v = order[depth];
    for (int w = 0; w < b.num_vertices() && !stopped; ++w) {
      if (map_ba[w] >= 0 || signature_a[v] != signature_b[w]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const int u = order[i];
        consistent = a.adjacent(v, u) == b.adjacent(w, map_ab[u]);
      }
      if (!consistent) continue;
      map_ab[v] = w;
      map_ba[w] = v;
      extend(depth + 1);
      map_ab[v] = -1;
      map_ba[w] = -1;
    }
  }
};

}  // namespace

void for_each_isomorphism(const Graph& a, const Graph& b,
                          const std::function<bool(const std::vector<int>&)>& callback) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return;
  IsoSearch search{a, b, callback, {}, std::vector<int>(a.num_vertices(), -1), std::vector<int>(b.num_vertices(), -1),
                   IsoSearch::signatures(a), IsoSearch::signatures(b)};
  auto sa = search.signature_a;
  auto sb = search.signature_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return;
  search.build_order();
  search.extend(0);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(a, b, [&](const std::vector<int>& m) {
    found = m;
    return true;
  });
  return found;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace cmbal
