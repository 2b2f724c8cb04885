#include <doctest.h>

#include <algorithm>
#include <set>

#include "cmbal/complex.hpp"
#include "cmbal/errors.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/random.hpp"

using namespace cmbal;

namespace {

using Faces = std::set<std::set<std::string>>;

Faces faces_of(const SimplicialComplex& c) {
  Faces out;
  for (VertexSet f : c.all_faces()) {
    auto labels = c.labels_of(f);
    out.insert({labels.begin(), labels.end()});
  }
  return out;
}

// Independent sets by brute force over all vertex subsets.
std::vector<std::int64_t> independent_set_counts(const Graph& g) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.num_vertices()) + 2, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.num_vertices()); ++s) {
    bool independent = true;
    for (int u = 0; u < g.num_vertices() && independent; ++u) {
      for (int v = u + 1; v < g.num_vertices(); ++v) {
        if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) {
          independent = false;
          break;
        }
      }
    }
    if (independent) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

Graph random_graph(Rng& rng, int n, const std::string& prefix = "") {
  Graph g = complete_graph(n, prefix).complement();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin()) g.add_edge(u, v);
    }
  }
  return g;
}

SimplicialComplex random_complex(Rng& rng, int n, int facets, const std::string& prefix = "v") {
  std::vector<std::vector<std::string>> list;
  for (int k = 0; k < facets; ++k) {
    std::vector<std::string> f;
    for (int v = 0; v < n; ++v) {
      if (rng.coin()) f.push_back(prefix + std::to_string(v));
    }
    list.push_back(f);
  }
  return SimplicialComplex::from_facets(list);
}

}  // namespace

TEST_CASE("f-vector examples") {
  CHECK(f_vector(SimplicialComplex::simplex({"a", "b", "c"})).entries == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(f_vector(clique_complex(*named_graph("figure4"))).entries == std::vector<std::int64_t>{1, 10, 24, 16});
  const Graph c5 = cycle_graph(5);
  CHECK(f_vector(independence_complex(c5)).entries == independent_set_counts(c5));
  CHECK(f_vector(independence_complex(c5)).entries == std::vector<std::int64_t>{1, 5, 5});
  CHECK(f_vector(SimplicialComplex()).entries == std::vector<std::int64_t>{1});
}

TEST_CASE("h-vector examples") {
  CHECK(h_from_f(FaceVector{{1, 10, 24, 16}}).entries == std::vector<std::int64_t>{1, 7, 7, 1});
  CHECK(h_from_f(FaceVector{{1, 7, 16, 11}}).entries == std::vector<std::int64_t>{1, 4, 5, 1});
  CHECK(h_from_f(FaceVector{{1, 3, 3}}).entries == std::vector<std::int64_t>{1, 1, 1});
  CHECK(h_from_f(FaceVector{{1, 1}}).entries == std::vector<std::int64_t>{1, 0});
  CHECK(f_from_h(HVector{{1, 7, 7, 1}}).entries == std::vector<std::int64_t>{1, 10, 24, 16});
  CHECK_THROWS_AS(h_from_f(FaceVector{{2, 3}}), InputError);
  CHECK_THROWS_AS(f_from_h(HVector{{0, 1}}), InputError);
  CHECK_THROWS_AS(h_from_f(FaceVector{{1, 3, 3}}, 3), InputError);
  CHECK_NOTHROW(h_from_f(FaceVector{{1, 3, 3}}, 2));
}

TEST_CASE("h-vector matches the defining polynomial identity") {
  // Σ h_i x^i = Σ f_{i-1} x^i (1-x)^{d-i}, evaluated at small integers.
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    FaceVector f{{1}};
    const int d = static_cast<int>(rng.uniform(0, 7));
    for (int i = 0; i < d; ++i) f.entries.push_back(rng.uniform(0, 300));
    const HVector h = h_from_f(f);
    REQUIRE(h.entries.size() == f.entries.size());
    for (std::int64_t x = -3; x <= 3; ++x) {
      std::int64_t lhs = 0;
      std::int64_t rhs = 0;
      std::int64_t xi = 1;
      for (int i = 0; i <= d; ++i) {
        lhs += h.entries[static_cast<std::size_t>(i)] * xi;
        std::int64_t term = f.entries[static_cast<std::size_t>(i)] * xi;
        for (int k = 0; k < d - i; ++k) term *= 1 - x;
        rhs += term;
        xi *= x;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("f/h round trip on random vectors") {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    FaceVector f{{1}};
    const int d = static_cast<int>(rng.uniform(0, 12));
    for (int i = 0; i < d; ++i) f.entries.push_back(rng.uniform(0, 100000));
    CHECK(f_from_h(h_from_f(f)) == f);
  }
}

TEST_CASE("links") {
  const SimplicialComplex c = SimplicialComplex::from_facets({{"a", "b", "c"}, {"c", "d"}});
  CHECK(link(c, VertexSet{}).same_faces_as(c));
  const SimplicialComplex lc = link(c, std::vector<std::string>{"c"});
  CHECK(faces_of(lc) == Faces{{}, {"a"}, {"b"}, {"d"}, {"a", "b"}});
  CHECK(faces_of(link(c, std::vector<std::string>{"a", "b"})) == Faces{{}, {"c"}});
  CHECK_THROWS_AS(link(c, std::vector<std::string>{"a", "d"}), InputError);

  const SimplicialComplex c7 = independence_complex(cycle_graph(7));
  CHECK(are_isomorphic(link(independence_complex(*named_graph("P10")), std::vector<std::string>{"5"}), c7));
  CHECK(are_isomorphic(link(independence_complex(*named_graph("P13")), std::vector<std::string>{"10", "12"}), c7));
}

TEST_CASE("link agrees with the defining filter") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const SimplicialComplex c = random_complex(rng, 7, 4);
    const Faces all = faces_of(c);
    for (VertexSet tau : c.all_faces()) {
      const auto t = c.labels_of(tau);
      const std::set<std::string> ts(t.begin(), t.end());
      Faces expected;
      for (const auto& gamma : all) {
        std::set<std::string> uni = gamma;
        bool disjoint = true;
        for (const auto& v : ts) {
          if (gamma.count(v)) disjoint = false;
          uni.insert(v);
        }
        if (disjoint && all.count(uni)) expected.insert(gamma);
      }
      CHECK(faces_of(link(c, tau)) == expected);
    }
  }
}

TEST_CASE("skeletons") {
  const SimplicialComplex tet = SimplicialComplex::simplex({"1", "2", "3", "4"});
  const SimplicialComplex s1 = skeleton(tet, 1);
  CHECK(s1.dimension() == 1);
  CHECK(s1.one_skeleton() == complete_graph(4, ""));
  CHECK(f_vector(s1).entries == std::vector<std::int64_t>{1, 4, 6});
  CHECK(skeleton(tet, 3).same_faces_as(tet));
  CHECK(skeleton(tet, -1).dimension() == -1);
  CHECK_THROWS_AS(skeleton(tet, 4), InputError);
  CHECK_THROWS_AS(skeleton(tet, -2), InputError);

  const Graph g = *named_graph("figure4");
  CHECK(clique_complex(g).one_skeleton() == g);
}

TEST_CASE("joins") {
  const SimplicialComplex edge = join(SimplicialComplex::points({"a"}), SimplicialComplex::points({"b"}));
  CHECK(f_vector(edge).entries == std::vector<std::int64_t>{1, 2, 1});
  CHECK_THROWS_AS(join(SimplicialComplex::points({"a"}), SimplicialComplex::points({"a"})), InputError);

  const Graph two = disjoint_union(cycle_graph(5, "a"), cycle_graph(5, "b"));
  const SimplicialComplex i2 = independence_complex(two);
  CHECK(f_vector(i2).entries == independent_set_counts(two));
  CHECK(f_vector(i2).entries == std::vector<std::int64_t>{1, 10, 35, 50, 25});
  const SimplicialComplex j =
      join(independence_complex(cycle_graph(5, "a")), independence_complex(cycle_graph(5, "b")));
  CHECK(j.same_faces_as(i2));
  CHECK(j.dimension() == 3);
  CHECK(join(SimplicialComplex(), i2).same_faces_as(i2));
}

TEST_CASE("f-vector of a join is the convolution, by direct enumeration") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SimplicialComplex a = random_complex(rng, 5, 3, "a");
    const SimplicialComplex b = random_complex(rng, 5, 3, "b");
    const SimplicialComplex j = join(a, b);
    std::vector<std::int64_t> direct(static_cast<std::size_t>(a.dimension() + b.dimension() + 3), 0);
    const Faces fa = faces_of(a);
    const Faces fb = faces_of(b);
    const Faces fj = faces_of(j);
    std::size_t unions = 0;
    for (const auto& x : fa) {
      for (const auto& y : fb) {
        std::set<std::string> u = x;
        u.insert(y.begin(), y.end());
        CHECK(fj.count(u) == 1);
        ++direct[u.size()];
        ++unions;
      }
    }
    CHECK(unions == fj.size());
    CHECK(f_vector(j).entries == direct);
    CHECK(convolve(f_vector(a).entries, f_vector(b).entries) == direct);
  }
}

TEST_CASE("independence complex of a graph is the join over its components") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = disjoint_union(random_graph(rng, 4, "p"), random_graph(rng, 4, "q"));
    SimplicialComplex joined;
    for (VertexSet comp : g.connected_components()) joined = join(joined, independence_complex(g.induced(comp)));
    CHECK(joined.same_faces_as(independence_complex(g)));
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(SimplicialComplex::simplex({"a", "b", "c"})));
  CHECK_FALSE(is_pure(SimplicialComplex::from_facets({{"a", "b"}, {"c"}})));
  for (const auto& entry : exceptional_catalog()) CHECK(is_pure(independence_complex(entry.graph)));
  CHECK(is_pure(independence_complex(*named_graph("C5"))));
}

TEST_CASE("flagness") {
  const SimplicialComplex hollow = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_FALSE(is_flag(hollow));
  CHECK(is_flag(clique_complex(*named_graph("figure4"))));
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) CHECK(is_flag(independence_complex(random_graph(rng, 7))));
}

TEST_CASE("flagness is equivalent to all minimal non-faces being edges") {
  Rng rng(17);
  int flags = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const SimplicialComplex c = random_complex(rng, 6, static_cast<int>(rng.uniform(1, 6)));
    const auto mnf = minimal_nonfaces(c);
    const bool all_edges = std::all_of(mnf.begin(), mnf.end(), [](VertexSet s) { return s.size() == 2; });
    // Independent check: compare with the clique complex of the 1-skeleton.
    const bool same_as_clique = clique_complex(c.one_skeleton()).same_faces_as(c);
    CHECK(is_flag(c) == all_edges);
    CHECK(is_flag(c) == same_as_clique);
    flags += is_flag(c) ? 1 : 0;
  }
  CHECK(flags > 0);
}

TEST_CASE("minimal non-faces") {
  const SimplicialComplex hollow = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const auto mnf = minimal_nonfaces(hollow);
  REQUIRE(mnf.size() == 1);
  CHECK(mnf[0] == VertexSet::first_n(3));
  CHECK(minimal_nonfaces(SimplicialComplex::simplex({"a", "b"})).empty());
}

TEST_CASE("independence and clique complexes") {
  CHECK(f_vector(independence_complex(*named_graph("K1"))).entries == std::vector<std::int64_t>{1, 1});
  const Graph c7 = cycle_graph(7);
  CHECK(f_vector(independence_complex(c7)).entries == independent_set_counts(c7));
  CHECK(f_vector(independence_complex(c7)).entries == std::vector<std::int64_t>{1, 7, 14, 7});
  for (const auto& entry : exceptional_catalog()) {
    CHECK(independence_complex(entry.graph).dimension() == beta(entry.graph) - 1);
  }
}

TEST_CASE("independence complex equals clique complex of the complement, all graphs on at most 6 vertices") {
  std::size_t graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    const Graph kn = complete_graph(n);
    const auto edges = kn.edges();
    for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
      Graph g(kn.labels());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (mask >> i & 1) g.add_edge(edges[i].first, edges[i].second);
      }
      REQUIRE(independence_complex(g).same_faces_as(clique_complex(g.complement())));
      ++graphs;
    }
  }
  CHECK(graphs == 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("independence complex equals clique complex of the complement, random graphs on 7 and 8 vertices") {
  Rng rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = random_graph(rng, 7 + trial % 2);
    REQUIRE(independence_complex(g).same_faces_as(clique_complex(g.complement())));
  }
}

TEST_CASE("proper colourings") {
  for (int d = 1; d <= 5; ++d) {
    std::vector<std::string> v;
    for (int i = 0; i < d + 1; ++i) v.push_back(std::to_string(i));
    const SimplicialComplex s = SimplicialComplex::simplex(v);
    const auto c = proper_coloring(s, d + 1);
    REQUIRE(c.has_value());
    CHECK(is_proper_coloring(s, *c));
    CHECK_FALSE(proper_coloring(s, d).has_value());
    CHECK(is_balanced(s));
  }
  CHECK_FALSE(proper_coloring(*named_graph("figure4"), 3).has_value());
  CHECK(proper_coloring(*named_graph("figure4"), 4).has_value());
  CHECK_FALSE(is_balanced(clique_complex(*named_graph("figure4"))));
}

TEST_CASE("whiskered girth-8 graphs are balanced by their pendant pairs") {
  // An 8-cycle with a pendant vertex at each cycle vertex.
  Graph g = cycle_graph(8, "c");
  std::vector<std::string> labels = g.labels();
  for (int i = 1; i <= 8; ++i) labels.push_back("w" + std::to_string(i));
  Graph w(labels);
  for (const auto& [u, v] : g.edges()) w.add_edge(u, v);
  for (int i = 0; i < 8; ++i) w.add_edge(i, 8 + i);
  const SimplicialComplex ic = independence_complex(w);
  Coloring pairs;
  for (const auto& v : ic.vertices()) {
    pairs.colors.push_back(std::stoi(v.substr(1)) - 1);
  }
  pairs.num_colors = 8;
  CHECK(beta(w) == 8);
  CHECK(is_proper_coloring(ic, pairs));
  CHECK(is_balanced(ic));
}

TEST_CASE("full-dimensional subcomplexes") {
  const SimplicialComplex g = independence_complex(*named_graph("C5"));
  CHECK(is_full_dimensional_subcomplex(g, g));
  CHECK_FALSE(is_full_dimensional_subcomplex(skeleton(g, 0), g));
  CHECK(is_subcomplex(skeleton(g, 0), g));
  const Graph pg = [] {
    Graph a = disjoint_union(cycle_graph(5, "a"), path_graph(2, "p"));
    a.add_edge(*a.find("a1"), *a.find("p1"));
    return a;
  }();
  const SimplicialComplex joined =
      join(independence_complex(cycle_graph(5, "a")), independence_complex(path_graph(2, "p")));
  CHECK(is_full_dimensional_subcomplex(independence_complex(pg), joined));
}

TEST_CASE("colourable complexes by search") {
  for (const auto& [f, d] : std::vector<std::pair<FaceVector, int>>{
           {FaceVector{{1, 7, 7, 1}}, 3}, {FaceVector{{1, 4, 5, 1}}, 3}, {FaceVector{{1, 1}}, 1}}) {
    const auto found = find_colorable_complex(f, d);
    REQUIRE(found.has_value());
    CHECK(f_vector(found->complex) == f);
    CHECK(found->coloring.num_colors <= d);
    CHECK(is_proper_coloring(found->complex, found->coloring));
  }
  CHECK(f_vector(find_colorable_complex(FaceVector{{1, 1}}, 1)->complex).entries == std::vector<std::int64_t>{1, 1});
  // Three pairwise adjacent vertices cannot be 2-coloured.
  CHECK_FALSE(find_colorable_complex(FaceVector{{1, 3, 3, 1}}, 2).has_value());
}

TEST_CASE("void complex is rejected and empty complex has dimension -1") {
  const SimplicialComplex empty;
  CHECK(empty.dimension() == -1);
  CHECK(empty.num_faces() == 1);
  CHECK(h_vector(empty).entries == std::vector<std::int64_t>{1});
}
