#include "cmbal/graph_classify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>

#include "cmbal/errors.hpp"

namespace cmbal {

std::optional<int> girth(const Graph& g) {
  const int n = g.num_vertices();
  std::optional<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::queue<int> queue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      g.neighbors(u).for_each([&](int v) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (!best || len < *best) best = len;
        }
      });
    }
  }
  return best;
}

int beta(const Graph& g) {
  int best = 0;
  for (VertexSet s : maximal_independent_sets(g)) best = std::max(best, s.size());
  return best;
}

bool is_well_covered(const Graph& g) {
  const auto sets = maximal_independent_sets(g);
  return std::all_of(sets.begin(), sets.end(), [&](VertexSet s) { return s.size() == sets.front().size(); });
}

std::vector<Edge> pendant_edges(const Graph& g) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) == 1 || g.degree(v) == 1) out.emplace_back(u, v);
  }
  return out;
}

bool pendant_perfect_matching(const Graph& g) {
  std::vector<int> count(static_cast<std::size_t>(g.num_vertices()), 0);
  for (auto [u, v] : pendant_edges(g)) {
    ++count[static_cast<std::size_t>(u)];
    ++count[static_cast<std::size_t>(v)];
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

std::vector<std::vector<int>> induced_cycles(const Graph& g, int max_length) {
  const int n = g.num_vertices();
  const int limit = max_length > 0 ? max_length : n;
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  VertexSet on_path;
  // Interior vertices (all but the start and the current end) block later extensions.
  std::function<void(VertexSet)> extend = [&](VertexSet blocked) {
    const int start = path.front();
    const int end = path.back();
    g.neighbors(end).for_each([&](int w) {
      if (w <= start || on_path.contains(w) || blocked.contains(w)) return;
      if (path.size() >= 2 && g.adjacent(w, start)) {
        if (static_cast<int>(path.size()) + 1 <= limit && path[1] < w) {
          out.push_back(path);
          out.back().push_back(w);
        }
        return;
      }
      if (static_cast<int>(path.size()) + 1 >= limit) return;
      const VertexSet next_blocked = path.size() >= 2 ? blocked | g.neighbors(end) : blocked;
      path.push_back(w);
      on_path.insert(w);
      extend(next_blocked);
      on_path.erase(w);
      path.pop_back();
    });
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path = VertexSet::single(s);
    extend(VertexSet());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> induced_cycle_lengths(const Graph& g) {
  std::set<int> out;
  for (const auto& c : induced_cycles(g)) out.insert(static_cast<int>(c.size()));
  return out;
}

std::vector<std::vector<int>> induced_5_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (auto& c : induced_cycles(g, 5)) {
    if (c.size() == 5) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> basic_5_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (auto& c : induced_5_cycles(g)) {
    bool basic = true;
    for (std::size_t k = 0; k < 5; ++k) {
      if (g.degree(c[k]) >= 3 && g.degree(c[(k + 1) % 5]) >= 3) basic = false;
    }
    if (basic) out.push_back(std::move(c));
  }
  return out;
}

std::optional<PGDecomposition> pg_decomposition(const Graph& g) {
  PGDecomposition out;
  out.pendant_edges = pendant_edges(g);
  for (auto [u, v] : out.pendant_edges) {
    if (out.pendant_vertices.contains(u) || out.pendant_vertices.contains(v)) return std::nullopt;
    out.pendant_vertices.insert(u);
    out.pendant_vertices.insert(v);
  }
  const VertexSet c = g.all_vertices() - out.pendant_vertices;
  out.basic_cycles = basic_5_cycles(g);
  for (const auto& cycle : out.basic_cycles) {
    for (int v : cycle) {
      if (!c.contains(v) || out.cycle_vertices.contains(v)) return std::nullopt;
      out.cycle_vertices.insert(v);
    }
  }
  if (out.cycle_vertices != c) return std::nullopt;
  return out;
}

namespace {

Graph letter_graph(int n, const std::vector<std::string>& edges) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('A' + i));
  Graph g(labels);
  for (const auto& e : edges) g.add_edge(e[0] - 'A', e[1] - 'A');
  return g;
}

/// Letter-drawn graph relabelled 1..n in letter order.
Graph numbered_graph(int n, const std::vector<std::string>& edges) {
  const Graph letters = letter_graph(n, edges);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Graph(labels, letters.edges());
}

Graph p14() {
  return letter_graph(14, {"AB", "CB", "CD", "ED", "EF", "FG", "AG", "AH", "BI", "CJ", "DK", "EL", "FM", "GN",
                           "IK", "KM", "MH", "HJ", "JL", "LN", "NI"});
}

Graph p10() {
  return numbered_graph(10, {"AB", "CB", "CD", "DE", "EA", "FC", "FG", "GH", "DH", "IB", "IJ", "HJ"});
}

Graph p13() {
  return numbered_graph(13, {"AG", "AH", "BD", "CB", "DE", "EF", "FC", "DG", "FH", "EJ", "GI", "IJ", "JK", "KH",
                             "KM", "ML", "LI"});
}

Graph q13() {
  return letter_graph(13, {"AB", "AI", "KB", "AD", "CB", "CE", "DG", "EF", "FG", "EI", "GK", "FH", "HJ", "IJ",
                           "JK", "IL", "KM", "LM"});
}

Graph figure2() {
  return letter_graph(12, {"AB", "BC", "AD", "DE", "EC", "FG", "GH", "FI", "IJ", "JH", "EI", "BG", "HK", "KL"});
}

Graph figure4() {
  std::vector<std::string> labels;
  for (int i = 0; i <= 9; ++i) labels.push_back(std::to_string(i));
  Graph g(labels);
  const int edges[][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 9}, {2, 9}, {0, 3}, {3, 9}, {3, 4}, {0, 4},
                          {1, 4}, {4, 5}, {1, 5}, {5, 6}, {1, 6}, {6, 7}, {7, 8}, {8, 9}, {2, 7},
                          {2, 8}, {1, 7}, {8, 6}, {8, 5}, {8, 4}, {8, 3}};
  for (const auto& e : edges) g.add_edge(e[0], e[1]);
  return g;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<NamedGraph> exceptional_catalog() {
  return {{"C7", cycle_graph(7)}, {"P10", p10()}, {"P13", p13()}, {"P14", p14()}, {"Q13", q13()}};
}

std::vector<std::string> named_graph_names() {
  return {"K1", "C5", "C7", "P10", "P13", "P14", "Q13", "Q14", "figure2", "figure4"};
}

std::optional<Graph> named_graph(std::string_view name) {
  const std::string key = lower(name);
  if (key == "k1") return Graph(std::vector<std::string>{"1"});
  if (key == "c5") return cycle_graph(5);
  if (key == "q14") return q13();
  if (key == "figure2") return figure2();
  if (key == "figure4") return figure4();
  for (auto& entry : exceptional_catalog()) {
    if (lower(entry.name) == key) return std::move(entry.graph);
  }
  return std::nullopt;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::PG: return "PG";
    case VerdictKind::K1: return "K1";
    case VerdictKind::Exceptional: return "Exceptional";
    case VerdictKind::NotWellCovered: return "NotWellCovered";
    case VerdictKind::GirthTooSmall: return "GirthTooSmall";
  }
  return "";
}

ClassificationVerdict classify_girth5(const Graph& g) {
  if (!g.is_connected()) throw InputError("classification requires a connected graph");
  ClassificationVerdict out;
  out.girth = girth(g);
  if (out.girth && *out.girth < 5) {
    out.kind = VerdictKind::GirthTooSmall;
    return out;
  }
  out.beta = beta(g);
  if (!is_well_covered(g)) {
    out.kind = VerdictKind::NotWellCovered;
    return out;
  }
  if (g.num_vertices() == 1) {
    out.kind = VerdictKind::K1;
    return out;
  }
  for (const auto& entry : exceptional_catalog()) {
    if (entry.graph.num_vertices() == g.num_vertices() && entry.graph.num_edges() == g.num_edges() &&
        are_isomorphic(entry.graph, g)) {
      out.kind = VerdictKind::Exceptional;
      out.exceptional_name = entry.name;
      return out;
    }
  }
  if (auto pg = pg_decomposition(g)) {
    out.kind = VerdictKind::PG;
    out.pg = std::move(pg);
    return out;
  }
  throw VerificationError("well-covered graph of girth >= 5 is neither K1, exceptional nor in PG");
}

std::vector<ComponentVerdict> classify_components(const Graph& g) {
  std::vector<ComponentVerdict> out;
  for (VertexSet component : g.connected_components()) {
    ComponentVerdict cv;
    cv.component = g.induced(component);
    cv.labels = cv.component.labels();
    cv.verdict = classify_girth5(cv.component);
    out.push_back(std::move(cv));
  }
  std::sort(out.begin(), out.end(), [](const ComponentVerdict& a, const ComponentVerdict& b) {
    return *std::min_element(a.labels.begin(), a.labels.end()) < *std::min_element(b.labels.begin(), b.labels.end());
  });
  return out;
}

JoinEmbedding embed_in_join(const Graph& g) {
  JoinEmbedding out;
  out.components = classify_components(g);
  for (const auto& cv : out.components) {
    const Graph& h = cv.component;
    const VerdictKind kind = cv.verdict.kind;
    if (kind == VerdictKind::K1) {
      out.cover.push_back(CoverFactor::points({h.label(0)}));
      out.predicted_beta += 1;
      continue;
    }
    if (kind != VerdictKind::PG) {
      std::string labels;
      for (const auto& l : cv.labels) labels += (labels.empty() ? "" : ",") + l;
      std::string what = kind == VerdictKind::Exceptional ? "exceptional (" + cv.verdict.exceptional_name + ")"
                         : kind == VerdictKind::NotWellCovered ? "not well-covered"
                                                               : "of girth < 5";
      throw InputError("component {" + labels + "} is " + what);
    }
    const PGDecomposition& pg = *cv.verdict.pg;
    for (const auto& cycle : pg.basic_cycles) {
      std::vector<std::string> vertices;
      for (int v : cycle) vertices.push_back(h.label(v));
      Graph complement(vertices);
      for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) {
          if (!h.adjacent(cycle[static_cast<std::size_t>(a)], cycle[static_cast<std::size_t>(b)])) complement.add_edge(a, b);
        }
      }
      out.cover.push_back(CoverFactor::graph(complement));
    }
    for (auto [u, v] : pg.pendant_edges) out.cover.push_back(CoverFactor::points({h.label(u), h.label(v)}));
    out.predicted_beta += pg.predicted_beta();
  }
  out.complex = independence_complex(g);
  out.beta_matches = out.predicted_beta == out.complex.dimension() + 1;
  out.full_dimensional = is_full_dimensional_subcomplex(out.complex, cover_complex(out.cover));
  return out;
}

std::optional<VertexSet> independent_facet_transversal(const SimplicialComplex& complex) {
  if (!is_pure(complex)) throw InputError("facet transversal search requires a pure complex");
  const Graph skeleton = complex.one_skeleton();
  const int n = complex.num_vertices();
  const auto& facets = complex.facets();
  if (facets.size() == 1 && facets.front().empty()) return std::nullopt;
  std::optional<VertexSet> found;
  std::function<void(int, VertexSet, VertexSet, int)> search = [&](int next, VertexSet chosen, VertexSet forbidden,
                                                                   int remaining) {
    if (found) return;
    if (remaining == 0) {
      if (std::all_of(facets.begin(), facets.end(), [&](VertexSet f) { return f.intersects(chosen); })) found = chosen;
      return;
    }
    for (int v = next; v < n && !found; ++v) {
      if (forbidden.contains(v)) continue;
      VertexSet with = chosen;
      with.insert(v);
      search(v + 1, with, forbidden | skeleton.neighbors(v), remaining - 1);
    }
  };
  for (int size = 1; size <= n && !found; ++size) search(0, VertexSet(), VertexSet(), size);
  return found;
}

Graph turan_graph(int n, int r) {
  if (r < 1 || n < r) throw InputError("Turán graph needs 1 <= r <= n");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<int> part(static_cast<std::size_t>(n));
  int v = 0;
  for (int p = 0; p < r; ++p) {
    const int size = n / r + (p < n % r ? 1 : 0);
    for (int k = 0; k < size; ++k) part[static_cast<std::size_t>(v++)] = p;
  }
  Graph g(labels);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)]) g.add_edge(a, b);
    }
  }
  return g;
}

std::int64_t count_triangles(const Graph& g) {
  std::int64_t count = 0;
  for (auto [u, v] : g.edges()) {
    const VertexSet common = g.neighbors(u) & g.neighbors(v);
    common.for_each([&](int w) {
      if (w > v) ++count;
    });
  }
  return count;
}

bool has_k4(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const VertexSet common = g.neighbors(u) & g.neighbors(v);
    bool found = false;
    common.for_each([&](int w) {
      if ((g.neighbors(w) & common).size() > 0) found = true;
    });
    if (found) return true;
  }
  return false;
}

int max_k4_free_edges(int n) {
  if (n < 3) return n * (n - 1) / 2;
  return turan_graph(n, 3).num_edges();
}

}  // namespace cmbal
