#include <doctest.h>

#include "cmbal/exact_linalg.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/homology.hpp"
#include "cmbal/random.hpp"

using namespace cmbal;

namespace {

// Dense boundary matrix ∂_i : C_i -> C_{i-1} with sign (-1)^position.
RationalMatrix dense_boundary(const SimplicialComplex& c, int i) {
  const auto& rows = c.faces_of_dimension(i - 1);
  const auto& cols = c.faces_of_dimension(i);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t col = 0; col < cols.size(); ++col) {
    const auto verts = cols[col].elements();
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const VertexSet facet = cols[col] - VertexSet::single(verts[k]);
      for (std::size_t row = 0; row < rows.size(); ++row) {
        if (rows[row] == facet) m(row, col) = k % 2 == 0 ? 1 : -1;
      }
    }
  }
  return m;
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

TEST_CASE("boundary ranks") {
  CHECK(boundary_rank(SimplicialComplex::simplex({"a", "b"}), 1) == 1);
  const SimplicialComplex hollow = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(boundary_rank(hollow, 1) == 2);
  CHECK(boundary_rank(hollow, 0) == 1);
  const SimplicialComplex c5 = independence_complex(cycle_graph(5));
  CHECK(boundary_rank(c5, 1) == 4);
}

TEST_CASE("boundary of a boundary vanishes and ranks match a dense computation") {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const SimplicialComplex c = random_complex(rng, 6, 4);
    for (int i = 0; i <= c.dimension(); ++i) {
      const RationalMatrix d = dense_boundary(c, i);
      CHECK(rank(d) == boundary_rank(c, i));
      if (i + 1 <= c.dimension()) CHECK((d * dense_boundary(c, i + 1)).is_zero());
    }
  }
}

TEST_CASE("reduced Betti numbers") {
  CHECK(reduced_betti(SimplicialComplex::simplex({"a", "b", "c", "d"})).reduced ==
        std::vector<std::int64_t>{0, 0, 0, 0, 0});
  const BettiProfile c5 = reduced_betti(independence_complex(cycle_graph(5)));
  CHECK(c5.at(0) == 0);
  CHECK(c5.at(1) == 1);
  CHECK(reduced_betti(clique_complex(*named_graph("figure4"))).reduced == std::vector<std::int64_t>{0, 0, 0, 1});
  CHECK(reduced_betti(SimplicialComplex()).reduced == std::vector<std::int64_t>{1});
  CHECK(reduced_betti(SimplicialComplex::points({"a", "b", "c"})).at(0) == 2);
}

TEST_CASE("Euler–Poincaré relation") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const SimplicialComplex c = random_complex(rng, 7, 5);
    const BettiProfile b = reduced_betti(c);
    const auto f = f_vector(c).entries;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    for (int i = -1; i <= c.dimension(); ++i) {
      const std::int64_t sign = i % 2 == 0 ? 1 : -1;
      lhs += sign * b.at(i);
      rhs += sign * f[static_cast<std::size_t>(i + 1)];
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Cohen–Macaulay verdicts") {
  CHECK(is_cohen_macaulay(independence_complex(cycle_graph(5))).cohen_macaulay);
  CHECK(is_cohen_macaulay(SimplicialComplex::simplex({"a", "b", "c"})).cohen_macaulay);
  CHECK(is_cohen_macaulay(SimplicialComplex()).cohen_macaulay);
  const CmResult c7 = is_cohen_macaulay(independence_complex(cycle_graph(7)));
  CHECK_FALSE(c7.cohen_macaulay);
  REQUIRE(c7.violation.has_value());
  CHECK(c7.violation->face.empty());
  CHECK(c7.violation->degree == 1);

  for (const char* name : {"P14", "Q13"}) {
    const SimplicialComplex ic = independence_complex(*named_graph(name));
    const CmResult r = is_cohen_macaulay(ic);
    CHECK(ic.dimension() == 4);
    CHECK_FALSE(r.cohen_macaulay);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->degree == 3);
    CHECK(r.betti.at(3) != 0);
  }
  for (const auto& entry : exceptional_catalog()) {
    CHECK_FALSE(is_cohen_macaulay(independence_complex(entry.graph)).cohen_macaulay);
  }
}

TEST_CASE("two disjoint edges are not Cohen–Macaulay; the violation is at the empty face") {
  const CmResult r = is_cohen_macaulay(SimplicialComplex::from_facets({{"a", "b"}, {"c", "d"}}));
  CHECK_FALSE(r.cohen_macaulay);
  REQUIRE(r.violation.has_value());
  CHECK(r.violation->degree == 0);
  CHECK(r.violation->link_dimension == 1);
}

TEST_CASE("non-pure complexes are not Cohen–Macaulay") {
  const CmResult r = is_cohen_macaulay(SimplicialComplex::from_facets({{"a", "b"}, {"c"}}));
  CHECK_FALSE(r.cohen_macaulay);
  CHECK_FALSE(r.pure);
}

TEST_CASE("join of complexes is Cohen–Macaulay iff both factors are") {
  Rng rng(53);
  int both = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const SimplicialComplex a = random_complex(rng, 4, 2, "a");
    const SimplicialComplex b = random_complex(rng, 4, 2, "b");
    const bool ca = is_cohen_macaulay(a).cohen_macaulay;
    const bool cb = is_cohen_macaulay(b).cohen_macaulay;
    both += ca && cb ? 1 : 0;
    CHECK(is_cohen_macaulay(join(a, b)).cohen_macaulay == (ca && cb));
  }
  CHECK(both > 0);
}

TEST_CASE("Cohen–Macaulay implies pure") {
  Rng rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const SimplicialComplex c = random_complex(rng, 6, static_cast<int>(rng.uniform(1, 5)));
    const CmResult r = is_cohen_macaulay(c);
    if (r.cohen_macaulay) CHECK(is_pure(c));
  }
}
