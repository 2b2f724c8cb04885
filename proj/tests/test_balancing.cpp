#include <doctest.h>

#include <algorithm>
#include <set>

#include "cmbal/balancing.hpp"
#include "cmbal/errors.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/homology.hpp"

using namespace cmbal;

namespace {

std::vector<std::int64_t> padded_h(const SimplicialComplex& c, std::size_t size) {
  auto h = h_vector(c).entries;
  h.resize(std::max(h.size(), size), 0);
  return h;
}

void check_verifies(const SimplicialComplex& c, const BalancingPair& pair) {
  const PairVerification v = verify_pair(c, pair);
  CHECK_MESSAGE(v.passed(), v.failures());
  REQUIRE(v.basis.has_value());
  auto f = f_vector_of_multicomplex(*v.basis);
  f.resize(std::max(f.size(), h_vector(c).entries.size()), 0);
  CHECK(f == padded_h(c, f.size()));
}

std::vector<Polynomial> twisted_generators(const SimplicialComplex& c, const BalancingPair& pair) {
  std::vector<Polynomial> out;
  for (const auto& m : stanley_reisner_generators(c, pair.variables)) {
    out.push_back(apply_automorphism(pair.g, Polynomial(m)));
  }
  return out;
}

std::size_t var(const BalancingPair& p, const std::string& label) {
  return static_cast<std::size_t>(std::find(p.variables.begin(), p.variables.end(), label) - p.variables.begin());
}

}  // namespace

TEST_CASE("Kind–Kleinschmidt on identity automorphisms") {
  const std::vector<std::string> vars = {"a", "b", "c", "d"};
  const auto g = LinearAutomorphism::identity(4);
  CHECK(kind_kleinschmidt(SimplicialComplex::simplex({"c", "d"}), vars, g, 2).passed);
  const SimplicialComplex two = SimplicialComplex::from_facets({{"c", "d"}, {"a", "b"}});
  const KindKleinschmidtResult bad = kind_kleinschmidt(two, vars, g, 2);
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.failing_facet.has_value());
  CHECK(two.labels_of(*bad.failing_facet) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("points pair") {
  const BalancingPair one = base_pair_points({"p"});
  CHECK(one.d == 1);
  CHECK(one.blocks == std::vector<std::vector<std::size_t>>{{}});
  check_verifies(SimplicialComplex::points({"p"}), one);

  const BalancingPair three = base_pair_points({"a", "b", "c"});
  const RationalMatrix inv = three.g.inverse().matrix;
  for (std::size_t i = 0; i < 3; ++i) CHECK(inv(i, 2) == (i == 2 ? 1 : -1));
  const SimplicialComplex pts = SimplicialComplex::points({"a", "b", "c"});
  check_verifies(pts, three);
  const PairVerification v = verify_pair(pts, three);
  CHECK(f_vector_of_multicomplex(*v.basis) == std::vector<std::int64_t>{1, 2});

  // x_a x_b is fixed by g and leads; so does every x_v^2 for v not last.
  const auto gens = twisted_generators(pts, three);
  const DegreePiece d2 = initial_ideal_by_degree(gens, three.order(), 2);
  const std::set<Monomial> lead(d2.leading.begin(), d2.leading.end());
  CHECK(lead.count(Monomial::squarefree(3, VertexSet::of({0, 1}))) == 1);
  CHECK(std::count(gens.begin(), gens.end(), Polynomial(Monomial::squarefree(3, VertexSet::of({0, 1})))) == 1);
  CHECK(lead.count(Monomial::variable(3, 0) * Monomial::variable(3, 0)) == 1);
  CHECK(lead.count(Monomial::variable(3, 1) * Monomial::variable(3, 1)) == 1);
  CHECK_THROWS_AS(base_pair_points({}), InputError);
}

TEST_CASE("near-bipartite pair on the pentagon") {
  const Graph c5 = cycle_graph(5);
  const CoverFactor factor = CoverFactor::graph(c5);
  const SimplicialComplex gamma = factor.as_complex();
  for (const auto& [u, v] : c5.label_edges()) {
    const BalancingPair p = base_pair_near_bipartite(c5, {u, v}, Specialization{});
    CHECK(p.variables[3] == u);
    CHECK(p.variables[4] == v);
    CHECK(kind_kleinschmidt(gamma, p.variables, p.g, 2).passed);
    check_verifies(gamma, p);
    CHECK(f_vector_of_multicomplex(*verify_pair(gamma, p).basis) == std::vector<std::int64_t>{1, 3, 1});

    const auto gens = twisted_generators(gamma, p);
    const DegreePiece d2 = initial_ideal_by_degree(gens, p.order(), 2);
    const std::set<Monomial> lead(d2.leading.begin(), d2.leading.end());
    for (std::size_t i : p.blocks[0]) CHECK(lead.count(Monomial::variable(5, i) * Monomial::variable(5, i)) == 1);
    // v in B: one of {v, y}, {v, z} is a non-edge of Γ, i.e. a generator.
    const auto sr = stanley_reisner_generators(gamma, p.variables);
    const std::set<Monomial> srs(sr.begin(), sr.end());
    for (std::size_t b : p.blocks[1]) {
      CHECK((srs.count(Monomial::squarefree(5, VertexSet::of({static_cast<int>(b), 3}))) +
             srs.count(Monomial::squarefree(5, VertexSet::of({static_cast<int>(b), 4})))) >= 1);
    }
  }
}

TEST_CASE("near-bipartite pair rejects bad input") {
  const Graph c5 = cycle_graph(5);
  Specialization singular;
  singular.z3 = 2;
  singular.z4 = 4;
  CHECK_THROWS_AS(base_pair_near_bipartite(c5, {"1", "2"}, singular), DegenerateSpecialization);
  CHECK_THROWS_AS(base_pair_near_bipartite(c5, {"1", "3"}, Specialization{}), InputError);
  CHECK_THROWS_AS(base_pair_near_bipartite(cycle_graph(3), {"1", "2"}, Specialization{}), InputError);
  CHECK_THROWS_AS(base_pair_near_bipartite(cycle_graph(6), {"1", "2"}, Specialization{}), InputError);
  const Graph two_pentagons = disjoint_union(cycle_graph(5, "a"), cycle_graph(5, "b"));
  CHECK_THROWS_AS(base_pair_near_bipartite(two_pentagons, {"a1", "a2"}, Specialization{}), InputError);
}

TEST_CASE("every odd cycle is a near-bipartite factor") {
  for (int n : {7, 9}) {
    const Graph c = cycle_graph(n);
    const SimplicialComplex gamma = CoverFactor::graph(c).as_complex();
    const BalancingPair p = base_pair_near_bipartite(c, {"1", "2"}, Specialization{});
    check_verifies(gamma, p);
    CHECK(f_vector_of_multicomplex(*verify_pair(gamma, p).basis) ==
          std::vector<std::int64_t>{1, n - 2, 1});
  }
}

TEST_CASE("random specializations still verify") {
  Rng rng(61);
  const Graph c5 = cycle_graph(5);
  const SimplicialComplex gamma = CoverFactor::graph(c5).as_complex();
  int verified = 0;
  for (int trial = 0; trial < 20; ++trial) {
    try {
      check_verifies(gamma, base_pair_near_bipartite(c5, {"2", "3"}, Specialization::random(rng)));
      ++verified;
    } catch (const DegenerateSpecialization&) {
    }
  }
  CHECK(verified > 10);
}

TEST_CASE("composition") {
  const BalancingPair p2 = base_pair_points({"a", "b"});
  const BalancingPair p3 = base_pair_points({"c", "d", "e"});
  const BalancingPair both = compose_pairs(p2, p3);
  CHECK(both.variables == std::vector<std::string>{"a", "c", "d", "b", "e"});
  CHECK(both.d == 2);
  const SimplicialComplex k23 = join(SimplicialComplex::points({"a", "b"}), SimplicialComplex::points({"c", "d", "e"}));
  check_verifies(k23, both);
  CHECK(h_vector(k23).entries == h_from_f(FaceVector{convolve({1, 2}, {1, 3})}).entries);

  const BalancingPair c5 = base_pair_near_bipartite(cycle_graph(5, "a"), {"a1", "a2"}, Specialization{});
  const BalancingPair c5b = base_pair_near_bipartite(cycle_graph(5, "b"), {"b1", "b2"}, Specialization{});
  const SimplicialComplex jj = join(CoverFactor::graph(cycle_graph(5, "a")).as_complex(),
                                    CoverFactor::graph(cycle_graph(5, "b")).as_complex());
  const BalancingPair cc = compose_pairs(c5, c5b);
  check_verifies(jj, cc);
  CHECK(f_vector_of_multicomplex(*verify_pair(jj, cc).basis) == std::vector<std::int64_t>{1, 6, 11, 6, 1});
  CHECK(h_vector(jj).entries == std::vector<std::int64_t>{1, 6, 11, 6, 1});

  const BalancingPair empty;
  CHECK(compose_pairs(empty, c5).variables == c5.variables);
  CHECK(compose_pairs(empty, c5).g.matrix == c5.g.matrix);
  CHECK(compose_pairs(c5, empty).blocks == c5.blocks);

  BalancingPair bent = p2;
  bent.g.matrix(1, 0) = 1;
  CHECK_THROWS_AS(compose_pairs(bent, p3), InputError);
  CHECK_THROWS_AS(compose_pairs(p2, p2), InputError);
}

TEST_CASE("composition is associative") {
  const BalancingPair a = base_pair_points({"a1", "a2"});
  const BalancingPair b = base_pair_near_bipartite(cycle_graph(5, "b"), {"b1", "b2"}, Specialization{});
  const BalancingPair c = base_pair_points({"c1", "c2", "c3"});
  const BalancingPair left = compose_pairs(compose_pairs(a, b), c);
  const BalancingPair right = compose_pairs(a, compose_pairs(b, c));
  CHECK(left.variables == right.variables);
  CHECK(left.g.matrix == right.g.matrix);
  CHECK(left.blocks == right.blocks);
  CHECK(left.d == right.d);
}

TEST_CASE("inheritance to subcomplexes") {
  const Graph c5 = cycle_graph(5);
  const SimplicialComplex gamma = CoverFactor::graph(c5).as_complex();
  const BalancingPair p = base_pair_near_bipartite(c5, {"1", "2"}, Specialization{});
  const BalancingPair same = inherit_to_subcomplex(p, gamma, gamma);
  CHECK(same.g.matrix == p.g.matrix);
  CHECK(same.variables == p.variables);

  // Remove one edge: still full-dimensional and Cohen–Macaulay (a path).
  auto facets = gamma.facet_labels();
  facets.pop_back();
  const SimplicialComplex path = SimplicialComplex::from_facets(facets);
  REQUIRE(is_cohen_macaulay(path).cohen_macaulay);
  check_verifies(path, inherit_to_subcomplex(p, gamma, path));
  CHECK(h_vector(path).entries == std::vector<std::int64_t>{1, 3, 0});

  CHECK_THROWS_AS(inherit_to_subcomplex(p, gamma, skeleton(gamma, 0)), InputError);
}

TEST_CASE("balanced witness for I(C5)") {
  const Graph c5 = cycle_graph(5);
  const SimplicialComplex delta = independence_complex(c5);
  const BalancedWitness w = balanced_witness(delta, {CoverFactor::graph(c5.complement())});
  CHECK(f_vector_of_multicomplex(w.basis) == std::vector<std::int64_t>{1, 3, 1});
  CHECK(w.verified_h.entries == std::vector<std::int64_t>{1, 3, 1});
  CHECK(w.attempts == 1);
  CHECK(w.checks.size() == 7);
  for (const auto& c : w.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(is_proper_coloring(w.as_complex, w.coloring));
  CHECK(w.coloring.num_colors <= 2);
}

TEST_CASE("balanced witness for a join of point sets uses the join partition") {
  const JoinCover cover = {CoverFactor::points({"a", "b"}), CoverFactor::points({"c", "d", "e"})};
  const SimplicialComplex delta = cover_complex(cover);
  const BalancedWitness w = balanced_witness(delta, cover);
  for (const auto& c : w.checks) CHECK_MESSAGE(c.passed, c.name);
  const auto& verts = w.as_complex.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = 0; j < verts.size(); ++j) {
      const bool same_factor = (verts[i] < "c") == (verts[j] < "c");
      CHECK((w.coloring.colors[i] == w.coloring.colors[j]) == same_factor);
    }
  }
}

TEST_CASE("balanced witnesses on joins with bipartite factors and subcomplexes") {
  Graph bip = path_graph(4, "q");
  const JoinCover cover = {CoverFactor::graph(bip), CoverFactor::graph(cycle_graph(5, "r")), CoverFactor::points({"s1", "s2"})};
  const SimplicialComplex full = cover_complex(cover);
  const BalancedWitness w = balanced_witness(full, cover);
  for (const auto& c : w.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(w.pair.d == full.dimension() + 1);
  auto f = f_vector_of_multicomplex(w.basis);
  f.resize(static_cast<std::size_t>(full.dimension() + 2), 0);
  CHECK(f == h_from_f(f_vector(full)).entries);
  CHECK(f_vector(w.as_complex).entries == f_vector_of_multicomplex(w.basis));
  CHECK(is_proper_coloring(w.as_complex, w.coloring));
}

TEST_CASE("balanced witness rejects violated hypotheses") {
  const JoinCover triangle = {CoverFactor::points({"x"}), CoverFactor::graph(cycle_graph(3, "t"))};
  try {
    balanced_witness(cover_complex({CoverFactor::points({"x"})}), triangle);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("factor 2 has a triangle") != std::string::npos);
  }
  const JoinCover twins = {CoverFactor::graph(disjoint_union(cycle_graph(5, "a"), cycle_graph(5, "b")))};
  CHECK_THROWS_WITH_AS(balanced_witness(cover_complex(twins), twins), doctest::Contains("neither bipartite"),
                       InputError);

  const JoinCover c5 = {CoverFactor::graph(cycle_graph(5))};
  CHECK_THROWS_WITH_AS(balanced_witness(SimplicialComplex::points({"1", "2"}), c5),
                       doctest::Contains("not a full-dimensional subcomplex"), InputError);

  const SimplicialComplex two_edges = SimplicialComplex::from_facets({{"1", "3"}, {"2", "4"}});
  CHECK_THROWS_WITH_AS(balanced_witness(two_edges, {CoverFactor::graph(cycle_graph(5).complement())}),
                       doctest::Contains("not Cohen–Macaulay"), InputError);
}

TEST_CASE("Kind–Kleinschmidt implies standard monomials stop by degree d") {
  // H is the identity with random last d columns; g = H^{-1}.
  Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<std::string>> facets;
    for (int k = 0; k < 3; ++k) {
      std::vector<std::string> f;
      for (int v = 0; v < 5; ++v) {
        if (rng.coin()) f.push_back(std::to_string(v));
      }
      facets.push_back(f);
    }
    const SimplicialComplex c = SimplicialComplex::from_facets(facets);
    if (c.dimension() < 0) continue;
    const std::size_t n = static_cast<std::size_t>(c.num_vertices());
    const int d = c.dimension() + 1;
    RationalMatrix h = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = n - static_cast<std::size_t>(d); j < n; ++j) h(i, j) = rng.uniform(-20, 20);
    }
    const auto inv = inverse(h);
    if (!inv) continue;
    const LinearAutomorphism g{*inv};
    if (!kind_kleinschmidt(c, c.vertices(), g, d).passed) continue;
    const Multicomplex b = standard_monomial_basis(c, c.vertices(), g, TermOrder::natural(n));
    CHECK(static_cast<int>(f_vector_of_multicomplex(b).size()) <= d + 1);
  }
}
