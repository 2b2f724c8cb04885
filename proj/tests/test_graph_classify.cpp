#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cmbal/acceptance.hpp"
#include "cmbal/errors.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/homology.hpp"

using namespace cmbal;

namespace {

bool independent(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

// Sizes of all maximal independent sets, by brute force.
std::set<int> maximal_sizes(const Graph& g) {
  std::set<int> out;
  const int n = g.num_vertices();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!independent(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(s >> v & 1) && independent(g, s | std::uint64_t{1} << v)) maximal = false;
    }
    if (maximal) out.insert(std::popcount(s));
  }
  return out;
}

// Shortest cycle through each edge uv is 1 + dist(u, v) in G - uv.
std::optional<int> girth_oracle(const Graph& g) {
  std::optional<int> best;
  for (const auto& [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      h.neighbors(x).for_each([&](int y) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push(y);
        }
      });
    }
    if (dist[static_cast<std::size_t>(v)] >= 0) {
      const int len = dist[static_cast<std::size_t>(v)] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

// Vertex subsets inducing a connected 2-regular subgraph.
std::multiset<int> induced_cycle_oracle(const Graph& g) {
  std::multiset<int> out;
  const int n = g.num_vertices();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) < 3) continue;
    const VertexSet vs(s);
    bool two_regular = true;
    vs.for_each([&](int v) {
      if ((g.neighbors(v) & vs).size() != 2) two_regular = false;
    });
    if (two_regular && g.induced(vs).is_connected()) out.insert(vs.size());
  }
  return out;
}

Graph whiskered(const Graph& base) {
  std::vector<std::string> labels = base.labels();
  for (const auto& l : base.labels()) labels.push_back("w" + l);
  Graph w(labels);
  for (const auto& [u, v] : base.edges()) w.add_edge(u, v);
  for (int i = 0; i < base.num_vertices(); ++i) w.add_edge(i, base.num_vertices() + i);
  return w;
}

Graph with_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = complete_graph(n).complement();
  for (const auto& [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

}  // namespace

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK_FALSE(girth(path_graph(6)).has_value());
  CHECK(girth(*named_graph("figure2")) == 5);
  CHECK(girth(*named_graph("figure2")) == girth_oracle(*named_graph("figure2")));
  CHECK(girth(*named_graph("figure4")) == 3);
  for (const auto& e : exceptional_catalog()) {
    CHECK(girth(e.graph) == girth_oracle(e.graph));
    CHECK(girth(e.graph) == (e.name == "C7" ? 7 : 5));
  }
}

TEST_CASE("independence number and well-coveredness") {
  CHECK(beta(cycle_graph(7)) == 3);
  CHECK(is_well_covered(cycle_graph(7)));
  CHECK(maximal_sizes(cycle_graph(7)) == std::set<int>{3});
  CHECK(beta(path_graph(2)) == 1);
  CHECK(is_well_covered(path_graph(2)));
  CHECK(maximal_sizes(path_graph(3)) == std::set<int>{1, 2});
  CHECK_FALSE(is_well_covered(path_graph(3)));
  CHECK(maximal_sizes(cycle_graph(6)) == std::set<int>{2, 3});
  CHECK_FALSE(is_well_covered(cycle_graph(6)));
  for (const auto& e : exceptional_catalog()) {
    CHECK(is_well_covered(e.graph));
    CHECK(maximal_sizes(e.graph).size() == 1);
    CHECK(beta(e.graph) == *maximal_sizes(e.graph).begin());
  }
  const Graph fig2 = *named_graph("figure2");
  CHECK(beta(fig2) == *maximal_sizes(fig2).rbegin());
  CHECK(beta(fig2) == 5);
  CHECK(is_well_covered(fig2) == (maximal_sizes(fig2).size() == 1));
}

TEST_CASE("pendant edges") {
  CHECK(pendant_edges(path_graph(2)).size() == 1);
  CHECK(pendant_perfect_matching(path_graph(2)));
  CHECK(pendant_edges(cycle_graph(5)).empty());
  CHECK_FALSE(pendant_perfect_matching(cycle_graph(5)));
  const Graph fig2 = *named_graph("figure2");
  const auto pe = pendant_edges(fig2);
  REQUIRE(pe.size() == 1);
  const std::set<std::string> kl = {fig2.label(pe[0].first), fig2.label(pe[0].second)};
  CHECK(kl == std::set<std::string>{"K", "L"});
}

TEST_CASE("basic 5-cycles") {
  CHECK(basic_5_cycles(cycle_graph(5)).size() == 1);
  // Pendant vertices on two adjacent cycle vertices make both degree 3.
  const Graph adj = with_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}});
  CHECK(induced_5_cycles(adj).size() == 1);
  CHECK(basic_5_cycles(adj).empty());
  const Graph apart = with_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {3, 7}});
  CHECK(basic_5_cycles(apart).size() == 1);
}

TEST_CASE("figure-2 graph as encoded") {
  const Graph g = *named_graph("figure2");
  CHECK(g.num_vertices() == 12);
  CHECK(g.num_edges() == 14);
  // Both pentagons are induced 5-cycles, but G and H are adjacent and
  // both have degree 3, so only the A-B-C-E-D pentagon is basic.
  CHECK(induced_5_cycles(g).size() == 2);
  const int gv = g.index_of("G");
  const int hv = g.index_of("H");
  CHECK(g.adjacent(gv, hv));
  CHECK(g.degree(gv) == 3);
  CHECK(g.degree(hv) == 3);
  const auto basic = basic_5_cycles(g);
  REQUIRE(basic.size() == 1);
  std::set<std::string> labels;
  for (int v : basic[0]) labels.insert(g.label(v));
  CHECK(labels == std::set<std::string>{"A", "B", "C", "D", "E"});
  CHECK_FALSE(pg_decomposition(g).has_value());
  CHECK_FALSE(is_well_covered(g));
  CHECK(classify_girth5(g).kind == VerdictKind::NotWellCovered);
  CHECK_THROWS_WITH_AS(embed_in_join(g), doctest::Contains("not well-covered"), InputError);
}

TEST_CASE("induced cycle lengths") {
  CHECK(induced_cycle_lengths(cycle_graph(5)) == std::set<int>{5});
  CHECK(induced_cycle_lengths(cycle_graph(6)) == std::set<int>{6});
  for (const Graph& g : {*named_graph("figure2"), *named_graph("P10"), *named_graph("figure4"), cycle_graph(8)}) {
    const auto oracle = induced_cycle_oracle(g);
    CHECK(induced_cycle_lengths(g) == std::set<int>(oracle.begin(), oracle.end()));
    CHECK(induced_cycles(g).size() == oracle.size());
  }
  CHECK(induced_cycle_lengths(*named_graph("figure2")) == std::set<int>{5, 6, 7, 8});
}

TEST_CASE("PG decompositions") {
  const auto k2 = pg_decomposition(path_graph(2));
  REQUIRE(k2.has_value());
  CHECK(k2->pendant_vertices == VertexSet::first_n(2));
  CHECK(k2->cycle_vertices.empty());
  CHECK_FALSE(pg_decomposition(cycle_graph(7)).has_value());

  Graph twin = disjoint_union(disjoint_union(cycle_graph(5, "a"), cycle_graph(5, "b")), path_graph(2, "p"));
  twin.add_edge(twin.index_of("a1"), twin.index_of("b1"));
  twin.add_edge(twin.index_of("b3"), twin.index_of("p1"));
  const auto d = pg_decomposition(twin);
  REQUIRE(d.has_value());
  CHECK(d->pendant_edges.size() == 1);
  CHECK(d->basic_cycles.size() == 2);
  CHECK(d->predicted_beta() == 5);
  CHECK(beta(twin) == 5);
  CHECK((d->pendant_vertices | d->cycle_vertices) == twin.all_vertices());
  CHECK_FALSE(d->pendant_vertices.intersects(d->cycle_vertices));
}

TEST_CASE("exceptional catalog") {
  std::map<std::string, std::pair<int, int>> sizes;
  for (const auto& e : exceptional_catalog()) sizes[e.name] = {e.graph.num_vertices(), e.graph.num_edges()};
  CHECK(sizes["C7"] == std::pair{7, 7});
  CHECK(sizes["P10"] == std::pair{10, 12});
  CHECK(sizes["P13"].first == 13);
  CHECK(sizes["P14"] == std::pair{14, 21});
  CHECK(sizes["Q13"] == std::pair{13, 18});
  const Graph p13 = *named_graph("P13");
  CHECK(p13.adjacent(p13.index_of("1"), p13.index_of("7")));
  CHECK(p13.adjacent(p13.index_of("1"), p13.index_of("8")));
  CHECK(*named_graph("Q14") == *named_graph("Q13"));
  CHECK(*named_graph("p10") == *named_graph("P10"));
  CHECK_FALSE(named_graph("P11").has_value());
  for (const auto& e : exceptional_catalog()) {
    for (const auto& f : exceptional_catalog()) CHECK(are_isomorphic(e.graph, f.graph) == (e.name == f.name));
  }
}

TEST_CASE("classification verdicts") {
  const auto c7 = classify_girth5(cycle_graph(7));
  CHECK(c7.kind == VerdictKind::Exceptional);
  CHECK(c7.exceptional_name == "C7");
  CHECK(classify_girth5(cycle_graph(6)).kind == VerdictKind::NotWellCovered);
  CHECK(classify_girth5(*named_graph("K1")).kind == VerdictKind::K1);
  CHECK(classify_girth5(cycle_graph(4)).kind == VerdictKind::GirthTooSmall);
  CHECK(classify_girth5(cycle_graph(5)).kind == VerdictKind::PG);
  CHECK(classify_girth5(*named_graph("Q14")).exceptional_name == "Q13");
  for (const auto& e : exceptional_catalog()) {
    // A relabelled copy is still recognised.
    std::vector<std::string> labels;
    for (int v = 0; v < e.graph.num_vertices(); ++v) labels.push_back("x" + std::to_string(e.graph.num_vertices() - v));
    const Graph copy(labels, e.graph.edges());
    const auto v = classify_girth5(copy);
    CHECK(v.kind == VerdictKind::Exceptional);
    CHECK(v.exceptional_name == e.name);
  }
  CHECK_THROWS(classify_girth5(disjoint_union(cycle_graph(5, "a"), cycle_graph(5, "b"))));
}

TEST_CASE("components are classified in order of their smallest label") {
  const Graph g = disjoint_union(cycle_graph(7, "z"), disjoint_union(path_graph(2, "m"), cycle_graph(5, "a")));
  const auto comps = classify_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].labels.front().front() == 'a');
  CHECK(comps[1].labels.front().front() == 'm');
  CHECK(comps[2].verdict.kind == VerdictKind::Exceptional);
}

TEST_CASE("girth at least 8 well-covered graphs have a pendant perfect matching") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    // Random tree or long cycle, then whiskered.
    const int n = static_cast<int>(rng.uniform(2, 8));
    Graph base = trial % 3 == 0 ? cycle_graph(8 + n % 3) : complete_graph(n).complement();
    if (trial % 3 != 0) {
      for (int v = 1; v < n; ++v) base.add_edge(static_cast<int>(rng.uniform(0, v - 1)), v);
    }
    const Graph w = whiskered(base);
    REQUIRE(w.is_connected());
    CHECK((!girth(w) || *girth(w) >= 8));
    CHECK(is_well_covered(w));
    CHECK(pendant_perfect_matching(w));
    CHECK(2 * beta(w) == w.num_vertices());
    CHECK(classify_girth5(w).kind == VerdictKind::PG);
  }
}

TEST_CASE("beta formula on PG verdicts and trichotomy on random graphs") {
  Rng rng(73);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = trial % 2 == 0 ? acceptance::oracle::random_pg_graph(rng, 14)
                                   : acceptance::oracle::random_girth5_graph(rng, static_cast<int>(rng.uniform(1, 14)));
    REQUIRE(g.is_connected());
    const auto v = classify_girth5(g);
    CHECK(v.kind != VerdictKind::GirthTooSmall);
    if (trial % 2 == 0) CHECK(v.kind == VerdictKind::PG);
    CHECK((v.kind == VerdictKind::NotWellCovered) == !is_well_covered(g));
    if (v.kind == VerdictKind::PG) {
      CHECK(v.pg->predicted_beta() == beta(g));
      CHECK(*maximal_sizes(g).rbegin() == beta(g));
      const JoinEmbedding e = embed_in_join(g);
      CHECK(e.full_dimensional);
      CHECK(e.beta_matches);
      CHECK(is_full_dimensional_subcomplex(independence_complex(g), cover_complex(e.cover)));
    }
  }
}

TEST_CASE("join embeddings") {
  const JoinEmbedding c5 = embed_in_join(cycle_graph(5));
  REQUIRE(c5.cover.size() == 1);
  CHECK(c5.cover[0].type == CoverFactor::Type::Graph);
  CHECK(are_isomorphic(c5.cover[0].as_graph(), cycle_graph(5)));

  const Graph two_k2 = disjoint_union(path_graph(2, "a"), path_graph(2, "b"));
  const JoinEmbedding e = embed_in_join(two_k2);
  REQUIRE(e.cover.size() == 2);
  for (const auto& f : e.cover) CHECK(f.type == CoverFactor::Type::Points);
  CHECK(e.complex.same_faces_as(cover_complex(e.cover)));
  CHECK(f_vector(e.complex).entries == std::vector<std::int64_t>{1, 4, 4});

  CHECK_THROWS_WITH_AS(embed_in_join(cycle_graph(7)), doctest::Contains("exceptional"), InputError);
  CHECK_THROWS_WITH_AS(embed_in_join(cycle_graph(4)), doctest::Contains("girth"), InputError);
  CHECK(embed_in_join(*named_graph("K1")).full_dimensional);
}

TEST_CASE("independent facet transversals") {
  CHECK_FALSE(independent_facet_transversal(clique_complex(*named_graph("figure4"))).has_value());
  const SimplicialComplex single = SimplicialComplex::simplex({"a", "b", "c"});
  const auto t = independent_facet_transversal(single);
  REQUIRE(t.has_value());
  CHECK(t->size() == 1);
  const SimplicialComplex cone = join(SimplicialComplex::points({"p", "q"}), independence_complex(cycle_graph(5)));
  const auto tc = independent_facet_transversal(cone);
  REQUIRE(tc.has_value());
  const Graph skel = cone.one_skeleton();
  tc->for_each([&](int u) { tc->for_each([&](int v) { CHECK_FALSE(skel.adjacent(u, v)); }); });
  for (VertexSet f : cone.facets()) CHECK(f.intersects(*tc));
  CHECK_THROWS_AS(independent_facet_transversal(SimplicialComplex::from_facets({{"a", "b"}, {"c"}})), InputError);
}

TEST_CASE("Turán graphs") {
  const Graph t = turan_graph(7, 3);
  CHECK(t.num_edges() == 16);
  CHECK(count_triangles(t) == 12);
  CHECK_FALSE(has_k4(t));
  CHECK(count_triangles(turan_graph(3, 3)) == 1);
  CHECK(max_k4_free_edges(7) == 16);
  CHECK(has_k4(complete_graph(4)));
}
