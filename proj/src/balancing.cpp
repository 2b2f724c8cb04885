#include "cmbal/balancing.hpp"

#include <algorithm>
#include <numeric>

#include "cmbal/errors.hpp"
#include "cmbal/homology.hpp"

namespace cmbal {

Specialization Specialization::random(Rng& rng) {
  auto draw = [&]() {
    std::int64_t p = 0;
    while (p == 0) p = rng.uniform(-9, 9);
    return Rational(p, rng.uniform(1, 4));
  };
  Specialization z;
  z.z1 = draw();
  z.z2 = draw();
  z.z3 = draw();
  z.z4 = draw();
  return z;
}

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : ",") + l;
  return "{" + s + "}";
}

std::vector<std::size_t> variable_positions(const SimplicialComplex& complex,
                                            const std::vector<std::string>& variables, VertexSet face) {
  std::vector<std::size_t> rows;
  for (const auto& label : complex.labels_of(face)) {
    auto it = std::find(variables.begin(), variables.end(), label);
    if (it == variables.end()) throw InputError("vertex '" + label + "' is not a variable of the pair");
    rows.push_back(static_cast<std::size_t>(it - variables.begin()));
  }
  return rows;
}

KindKleinschmidtResult kind_kleinschmidt_with_inverse(const SimplicialComplex& complex,
                                                      const std::vector<std::string>& variables,
                                                      const RationalMatrix& g_inverse, int d) {
  const std::size_t n = variables.size();
  if (d < 0 || static_cast<std::size_t>(d) > n) throw InputError("parameter count out of range");
  std::vector<std::size_t> last(static_cast<std::size_t>(d));
  std::iota(last.begin(), last.end(), n - static_cast<std::size_t>(d));
  for (VertexSet facet : complex.facets()) {
    const auto rows = variable_positions(complex, variables, facet);
    if (rank(g_inverse.submatrix(rows, last)) != rows.size()) return {false, facet};
  }
  return {};
}

}  // namespace

KindKleinschmidtResult kind_kleinschmidt(const SimplicialComplex& complex, const std::vector<std::string>& variables,
                                         const LinearAutomorphism& g, int d) {
  return kind_kleinschmidt_with_inverse(complex, variables, g.inverse().matrix, d);
}

BalancingPair base_pair_points(const std::vector<std::string>& vertices) {
  const std::size_t n = vertices.size();
  if (n == 0) throw InputError("a point factor needs at least one vertex");
  BalancingPair pair;
  pair.variables = vertices;
  pair.d = 1;
  pair.g = LinearAutomorphism::identity(n);
  for (std::size_t i = 0; i < n; ++i) pair.g.matrix(i, n - 1) = 1;
  std::vector<std::size_t> block(n - 1);
  std::iota(block.begin(), block.end(), 0);
  pair.blocks = {block};
  return pair;
}

BalancingPair base_pair_near_bipartite(const Graph& graph, const LabelEdge& removed, const Specialization& z) {
  const int y = graph.index_of(removed.first);
  const int w = graph.index_of(removed.second);
  if (!graph.adjacent(y, w)) throw InputError("removed edge " + removed.first + "-" + removed.second + " is not an edge");
  if (has_triangle(graph)) throw InputError("graph has a triangle");
  if (two_coloring(graph)) throw InputError("graph is bipartite; split it into two point factors instead");
  Graph rest = graph;
  rest.remove_edge(y, w);
  auto color = two_coloring(rest);
  if (!color) {
    throw InputError("removing " + removed.first + "-" + removed.second + " does not leave a bipartite graph");
  }
  if ((*color)[y] != (*color)[w]) {
    for (VertexSet component : rest.connected_components()) {
      if (component.contains(w)) component.for_each([&](int v) { (*color)[v] ^= 1; });
    }
  }
  const int a_class = (*color)[y];

  std::vector<int> b_side;
  std::vector<int> a_side;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (v == y || v == w) continue;
    ((*color)[v] == a_class ? a_side : b_side).push_back(v);
  }

  // The rows of g^{-1} on the last two columns are -(z1+z3, z2+z4) for B,
  // -(z1, z2) for A - {y, z} and the rows of Z for y, z; every edge minor is ±det Z.
  if (z.z1 * z.z4 - z.z2 * z.z3 == 0) throw DegenerateSpecialization("specialization makes Z singular");

  const std::size_t n = static_cast<std::size_t>(graph.num_vertices());
  BalancingPair pair;
  for (int v : b_side) pair.variables.push_back(graph.label(v));
  for (int v : a_side) pair.variables.push_back(graph.label(v));
  pair.variables.push_back(graph.label(y));
  pair.variables.push_back(graph.label(w));
  pair.d = 2;

  RationalMatrix zm(2, 2);
  zm(0, 0) = z.z1;
  zm(0, 1) = z.z2;
  zm(1, 0) = z.z3;
  zm(1, 1) = z.z4;
  RationalMatrix g = RationalMatrix::identity(n);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    g(i, n - 2) = 1;
    g(i, n - 1) = i < b_side.size() ? 1 : 0;
  }
  g.set_block(n - 2, n - 2, *inverse(zm));
  pair.g = {g};

  std::vector<std::size_t> x1(a_side.size());
  std::iota(x1.begin(), x1.end(), b_side.size());
  std::vector<std::size_t> x2(b_side.size());
  std::iota(x2.begin(), x2.end(), 0);
  pair.blocks = {x1, x2};
  return pair;
}

BalancingPair compose_pairs(const BalancingPair& first, const BalancingPair& second) {
  if (first.empty()) return second;
  if (second.empty()) return first;
  for (const BalancingPair* p : {&first, &second}) {
    const std::size_t m = p->num_free();
    if (p->g.size() != p->num_variables() || !p->g.matrix.block(m, 0, static_cast<std::size_t>(p->d), m).is_zero()) {
      throw InputError("balancing pair is not block upper triangular with respect to T");
    }
  }
  const std::size_t m1 = first.num_free();
  const std::size_t m2 = second.num_free();
  const auto d1 = static_cast<std::size_t>(first.d);
  const auto d2 = static_cast<std::size_t>(second.d);
  const std::size_t n = m1 + m2 + d1 + d2;

  BalancingPair out;
  out.d = first.d + second.d;
  auto append = [&](const BalancingPair& p, std::size_t from, std::size_t count) {
    out.variables.insert(out.variables.end(), p.variables.begin() + static_cast<long>(from),
                         p.variables.begin() + static_cast<long>(from + count));
  };
  append(first, 0, m1);
  append(second, 0, m2);
  append(first, m1, d1);
  append(second, m2, d2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (out.variables[i] == out.variables[j]) throw InputError("pairs share the variable '" + out.variables[i] + "'");
    }
  }

  const RationalMatrix& g1 = first.g.matrix;
  const RationalMatrix& g2 = second.g.matrix;
  RationalMatrix g(n, n);
  g.set_block(0, 0, g1.block(0, 0, m1, m1));
  g.set_block(0, m1 + m2, g1.block(0, m1, m1, d1));
  g.set_block(m1 + m2, m1 + m2, g1.block(m1, m1, d1, d1));
  g.set_block(m1, m1, g2.block(0, 0, m2, m2));
  g.set_block(m1, m1 + m2 + d1, g2.block(0, m2, m2, d2));
  g.set_block(m1 + m2 + d1, m1 + m2 + d1, g2.block(m2, m2, d2, d2));
  out.g = {g};

  out.blocks = first.blocks;
  for (const auto& block : second.blocks) {
    std::vector<std::size_t> shifted;
    for (std::size_t v : block) shifted.push_back(v + m1);
    out.blocks.push_back(std::move(shifted));
  }
  return out;
}

BalancingPair inherit_to_subcomplex(const BalancingPair& pair, const SimplicialComplex& super,
                                    const SimplicialComplex& sub) {
  if (!is_full_dimensional_subcomplex(sub, super)) throw InputError("not a full-dimensional subcomplex");
  const auto kk = kind_kleinschmidt(sub, pair.variables, pair.g, pair.d);
  if (!kk.passed) {
    throw VerificationError("Kind–Kleinschmidt fails on the subcomplex at facet " +
                            join_labels(sub.labels_of(*kk.failing_facet)));
  }
  return pair;
}

CoverFactor CoverFactor::points(std::vector<std::string> vertices) {
  CoverFactor f;
  f.type = Type::Points;
  f.vertices = std::move(vertices);
  return f;
}

CoverFactor CoverFactor::graph(const Graph& g, std::optional<LabelEdge> removed_edge) {
  CoverFactor f;
  f.type = Type::Graph;
  f.vertices = g.labels();
  f.edges = g.label_edges();
  f.removed_edge = std::move(removed_edge);
  return f;
}

Graph CoverFactor::as_graph() const {
  if (type == Type::Points) return Graph(vertices);
  return Graph(vertices, edges);
}

SimplicialComplex CoverFactor::as_complex() const {
  if (vertices.empty()) throw InputError("cover factor has no vertices");
  if (type == Type::Points) return SimplicialComplex::points(vertices);
  const Graph g = as_graph();
  std::vector<VertexSet> faces;
  for (auto [u, v] : g.edges()) faces.push_back(VertexSet::of({u, v}));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) faces.push_back(VertexSet::single(v));
  }
  return SimplicialComplex(vertices, faces);
}

SimplicialComplex cover_complex(const JoinCover& cover) {
  SimplicialComplex out;
  for (const auto& factor : cover) out = join(out, factor.as_complex());
  return out;
}

bool PairVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.passed; });
}

std::string PairVerification::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (!c.passed) out += (out.empty() ? "" : ", ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  }
  return out;
}

PairVerification verify_pair(const SimplicialComplex& complex, const BalancingPair& pair) {
  PairVerification out;
  const int d = complex.dimension() + 1;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    out.checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  };
  auto skip_rest = [&](std::size_t from) {
    static const char* const names[] = {"kind_kleinschmidt", "terminates_by_degree_d", "squarefree", "block_degree",
                                        "divisibility_closed", "coloring_proper", "f_equals_h"};
    for (std::size_t k = from; k < std::size(names); ++k) add(names[k], false, "not run");
  };

  if (pair.d != d) {
    add("kind_kleinschmidt", false, "pair has " + std::to_string(pair.d) + " parameters, complex needs " +
                                        std::to_string(d));
    skip_rest(1);
    return out;
  }
  const auto g_inverse = inverse(pair.g.matrix);
  if (!g_inverse) {
    add("kind_kleinschmidt", false, "automorphism is singular");
    skip_rest(1);
    return out;
  }
  const auto kk = kind_kleinschmidt_with_inverse(complex, pair.variables, *g_inverse, pair.d);
  if (!add("kind_kleinschmidt", kk.passed,
           kk.passed ? "" : "rank deficient at facet " + join_labels(complex.labels_of(*kk.failing_facet)))) {
    skip_rest(1);
    return out;
  }

  Multicomplex basis;
  try {
    basis = standard_monomial_basis(complex, pair.variables, pair.g, pair.order());
    add("terminates_by_degree_d", true);
  } catch (const VerificationError& e) {
    add("terminates_by_degree_d", false, e.what());
    skip_rest(2);
    return out;
  }

  add("squarefree", basis.is_squarefree());

  std::vector<int> block_of(pair.num_variables(), -1);
  for (std::size_t b = 0; b < pair.blocks.size(); ++b) {
    for (std::size_t v : pair.blocks[b]) block_of[v] = static_cast<int>(b);
  }
  bool block_ok = true;
  for (const auto& m : basis.monomials()) {
    std::vector<int> per_block(pair.blocks.size(), 0);
    for (std::size_t v = 0; v < m.num_variables(); ++v) {
      if (m.exponent(v) == 0) continue;
      if (block_of[v] < 0) {
        block_ok = false;
        continue;
      }
      per_block[static_cast<std::size_t>(block_of[v])] += m.exponent(v);
    }
    if (std::any_of(per_block.begin(), per_block.end(), [](int e) { return e > 1; })) block_ok = false;
  }
  add("block_degree", block_ok);
  add("divisibility_closed", basis.is_divisibility_closed() && basis.contains_unit());

  if (basis.is_squarefree() && block_ok) {
    std::vector<int> used;
    basis.support().for_each([&](int v) { used.push_back(v); });
    std::vector<std::string> labels;
    Coloring coloring;
    coloring.num_colors = static_cast<int>(pair.blocks.size());
    for (int v : used) {
      labels.push_back(pair.variables[static_cast<std::size_t>(v)]);
      coloring.colors.push_back(block_of[static_cast<std::size_t>(v)]);
    }
    std::vector<VertexSet> faces;
    for (const auto& m : basis.monomials()) {
      VertexSet face;
      for (std::size_t k = 0; k < used.size(); ++k) {
        if (m.exponent(static_cast<std::size_t>(used[k])) > 0) face.insert(static_cast<int>(k));
      }
      faces.push_back(face);
    }
    SimplicialComplex as_complex = labels.empty() ? SimplicialComplex() : SimplicialComplex(labels, faces);
    add("coloring_proper", is_proper_coloring(as_complex, coloring));
    out.as_complex = std::move(as_complex);
    out.coloring = std::move(coloring);
  } else {
    add("coloring_proper", false, "basis is not a properly coloured complex");
  }

  std::vector<std::int64_t> f = f_vector_of_multicomplex(basis);
  const HVector h = h_vector(complex);
  f.resize(std::max(f.size(), h.entries.size()), 0);
  std::vector<std::int64_t> h_padded = h.entries;
  h_padded.resize(f.size(), 0);
  add("f_equals_h", f == h_padded);
  out.basis = std::move(basis);
  return out;
}

namespace {

/// A base pair that does not depend on the specialization, or a
/// near-bipartite graph with its removed edge.
struct BaseUnit {
  std::vector<std::string> points;
  std::optional<Graph> graph;
  LabelEdge removed;
};

std::vector<BaseUnit> base_units(const JoinCover& cover) {
  std::vector<BaseUnit> units;
  for (std::size_t k = 0; k < cover.size(); ++k) {
    const CoverFactor& factor = cover[k];
    const std::string name = "factor " + std::to_string(k + 1);
    if (factor.vertices.empty()) throw InputError(name + " has no vertices");
    if (factor.type == CoverFactor::Type::Points) {
      if (!factor.edges.empty()) throw InputError(name + " is a point factor with edges");
      units.push_back({factor.vertices, std::nullopt, {}});
      continue;
    }
    const Graph g = factor.as_graph();
    if (has_triangle(g)) throw InputError(name + " has a triangle");
    if (g.num_edges() == 0) {
      units.push_back({factor.vertices, std::nullopt, {}});
      continue;
    }
    if (auto color = two_coloring(g)) {
      std::vector<std::string> sides[2];
      for (int v = 0; v < g.num_vertices(); ++v) sides[(*color)[static_cast<std::size_t>(v)]].push_back(g.label(v));
      units.push_back({sides[0], std::nullopt, {}});
      units.push_back({sides[1], std::nullopt, {}});
      continue;
    }
    std::optional<LabelEdge> removed = factor.removed_edge;
    if (removed) {
      const int u = g.index_of(removed->first);
      const int v = g.index_of(removed->second);
      if (!g.adjacent(u, v)) throw InputError(name + ": removed edge " + removed->first + "-" + removed->second + " is not an edge");
      Graph rest = g;
      rest.remove_edge(u, v);
      if (!two_coloring(rest)) {
        throw InputError(name + ": removing " + removed->first + "-" + removed->second +
                         " does not leave a bipartite graph");
      }
    } else {
      for (auto [u, v] : g.edges()) {
        Graph rest = g;
        rest.remove_edge(u, v);
        if (two_coloring(rest)) {
          removed = LabelEdge{g.label(u), g.label(v)};
          break;
        }
      }
      if (!removed) throw InputError(name + " is neither bipartite nor bipartite after removing one edge");
    }
    units.push_back({{}, g, *removed});
  }
  return units;
}

}  // namespace

BalancedWitness balanced_witness(const SimplicialComplex& complex, const JoinCover& cover,
                                 const WitnessOptions& options) {
  if (cover.empty()) throw InputError("cover has no factors");
  const std::vector<BaseUnit> units = base_units(cover);
  const SimplicialComplex gamma = cover_complex(cover);
  if (!is_full_dimensional_subcomplex(complex, gamma)) {
    throw InputError("complex is not a full-dimensional subcomplex of the cover join");
  }
  if (options.verify_cm) {
    const CmResult cm = is_cohen_macaulay(complex);
    if (!cm.cohen_macaulay) {
      throw InputError("complex is not Cohen–Macaulay: the link of " + join_labels(cm.violation->labels) +
                       " has reduced homology in degree " +
                       std::to_string(cm.violation->degree));
    }
  }
  const bool uses_z = std::any_of(units.begin(), units.end(), [](const BaseUnit& u) { return u.graph.has_value(); });

  Rng rng(options.seed);
  std::string last_failure;
  const int max_attempts = uses_z ? 1 + std::max(0, options.retries) : 1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const Specialization z = attempt == 1 ? Specialization{} : Specialization::random(rng);
    try {
      BalancingPair pair;
      for (const BaseUnit& unit : units) {
        pair = compose_pairs(pair, unit.graph ? base_pair_near_bipartite(*unit.graph, unit.removed, z)
                                              : base_pair_points(unit.points));
      }
      pair = inherit_to_subcomplex(pair, gamma, complex);
      PairVerification v = verify_pair(complex, pair);
      if (!v.passed()) {
        last_failure = v.failures();
        continue;
      }
      return BalancedWitness{std::move(pair), std::move(*v.basis), std::move(*v.as_complex), std::move(*v.coloring),
                             h_vector(complex), std::move(v.checks), attempt, z};
    } catch (const VerificationError& e) {
      last_failure = e.what();
    }
  }
  throw VerificationError("no verified balancing pair after " + std::to_string(max_attempts) +
                          " attempt(s); last failure: " + last_failure);
}

}  // namespace cmbal
