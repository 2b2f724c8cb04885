#include "cmbal/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cmbal/errors.hpp"

namespace cmbal {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw InputError("face-number arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<VertexSet> maximal_only(std::vector<VertexSet> faces) {
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : faces) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return f.is_subset_of(k); });
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : SimplicialComplex({}, {VertexSet()}) {}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, const std::vector<VertexSet>& faces) {
  if (vertices.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InputError("complexes are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  if (faces.empty()) throw InputError("the void complex (no faces, not even the empty face) is not supported");
  const VertexSet declared = VertexSet::first_n(static_cast<int>(vertices.size()));
  VertexSet used;
  for (VertexSet f : faces) {
    if (!f.is_subset_of(declared)) throw InputError("face uses an undeclared vertex index");
    used |= f;
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& v : vertices) {
      if (!seen.insert(v).second) throw InputError("duplicate vertex label '" + v + "'");
    }
  }

  std::vector<int> remap(vertices.size(), -1);
  used.for_each([&](int v) {
    remap[v] = static_cast<int>(vertices_.size());
    vertices_.push_back(vertices[v]);
  });
  std::vector<VertexSet> renumbered;
  renumbered.reserve(faces.size());
  for (VertexSet f : faces) {
    VertexSet g;
    f.for_each([&](int v) { g.insert(remap[v]); });
    renumbered.push_back(g);
  }
  facets_ = maximal_only(std::move(renumbered));

  for (VertexSet f : facets_) dimension_ = std::max(dimension_, f.size() - 1);
  for (VertexSet f : facets_) for_each_subset(f, [&](VertexSet s) { face_lookup_.insert(s); });
  faces_by_dim_.assign(dimension_ + 2, {});
  for (VertexSet s : face_lookup_) faces_by_dim_[s.size()].push_back(s);
  for (auto& level : faces_by_dim_) std::sort(level.begin(), level.end(), lex_less);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> index;
  std::vector<VertexSet> faces;
  for (const auto& facet : facets) {
    VertexSet f;
    for (const auto& label : facet) {
      auto [it, inserted] = index.emplace(label, static_cast<int>(vertices.size()));
      if (inserted) {
        if (vertices.size() == static_cast<std::size_t>(kMaxVertices)) {
          throw InputError("complexes are limited to " + std::to_string(kMaxVertices) + " vertices");
        }
        vertices.push_back(label);
      }
      if (f.contains(it->second)) throw InputError("repeated vertex '" + label + "' in a face");
      f.insert(it->second);
    }
    faces.push_back(f);
  }
  return SimplicialComplex(std::move(vertices), faces);
}

SimplicialComplex SimplicialComplex::simplex(const std::vector<std::string>& vertices) {
  return SimplicialComplex(vertices, {VertexSet::first_n(static_cast<int>(vertices.size()))});
}

SimplicialComplex SimplicialComplex::points(const std::vector<std::string>& vertices) {
  std::vector<VertexSet> faces;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) faces.push_back(VertexSet::single(i));
  if (faces.empty()) faces.emplace_back();
  return SimplicialComplex(vertices, faces);
}

std::optional<int> SimplicialComplex::find_vertex(std::string_view label) const {
  for (int i = 0; i < num_vertices(); ++i) {
    if (vertices_[i] == label) return i;
  }
  return std::nullopt;
}

const std::vector<VertexSet>& SimplicialComplex::faces_of_dimension(int i) const {
  if (i < -1 || i > dimension_) throw InputError("dimension " + std::to_string(i) + " out of range");
  return faces_by_dim_[i + 1];
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
  std::vector<VertexSet> out;
  out.reserve(face_lookup_.size());
  for (const auto& level : faces_by_dim_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<std::string> SimplicialComplex::labels_of(VertexSet face) const {
  std::vector<std::string> out;
  face.for_each([&](int v) { out.push_back(vertices_[v]); });
  return out;
}

VertexSet SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
  VertexSet f;
  for (const auto& l : labels) {
    auto v = find_vertex(l);
    if (!v) throw InputError("'" + l + "' is not a vertex of the complex");
    f.insert(*v);
  }
  return f;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  for (VertexSet f : facets_) out.push_back(labels_of(f));
  return out;
}

Graph SimplicialComplex::one_skeleton() const {
  Graph g(vertices_);
  if (dimension_ >= 1) {
    for (VertexSet e : faces_by_dim_[2]) g.add_edge(e.min(), e.max());
  }
  return g;
}

bool SimplicialComplex::same_faces_as(const SimplicialComplex& other) const {
  if (num_vertices() != other.num_vertices() || num_faces() != other.num_faces()) return false;
  return is_subcomplex(*this, other);
}

FaceVector f_vector(const SimplicialComplex& complex) {
  FaceVector f;
  for (int i = -1; i <= complex.dimension(); ++i) {
    f.entries.push_back(static_cast<std::int64_t>(complex.faces_of_dimension(i).size()));
  }
  return f;
}

HVector h_from_f(const FaceVector& f) {
  if (f.entries.empty() || f.entries[0] != 1) throw InputError("f-vector must start with f_{-1} = 1");
  const int d = f.d();
  HVector h;
  for (int k = 0; k <= d; ++k) {
    __int128 sum = 0;
    for (int i = 0; i <= k; ++i) {
      const __int128 term = static_cast<__int128>(binomial(d - i, k - i)) * f.entries[i];
      sum += ((k - i) % 2 == 0) ? term : -term;
    }
    h.entries.push_back(narrow(sum));
  }
  return h;
}

FaceVector f_from_h(const HVector& h) {
  if (h.entries.empty() || h.entries[0] != 1) throw InputError("h-vector must start with h_0 = 1");
  const int d = h.d();
  FaceVector f;
  for (int j = 0; j <= d; ++j) {
    __int128 sum = 0;
    for (int i = 0; i <= j; ++i) sum += static_cast<__int128>(binomial(d - i, j - i)) * h.entries[i];
    f.entries.push_back(narrow(sum));
  }
  return f;
}

HVector h_from_f(const FaceVector& f, int d) {
  if (f.d() != d) {
    throw InputError("f-vector has " + std::to_string(f.entries.size()) + " entries but d = " + std::to_string(d));
  }
  return h_from_f(f);
}

FaceVector f_from_h(const HVector& h, int d) {
  if (h.d() != d) {
    throw InputError("h-vector has " + std::to_string(h.entries.size()) + " entries but d = " + std::to_string(d));
  }
  return f_from_h(h);
}

HVector h_vector(const SimplicialComplex& complex) { return h_from_f(f_vector(complex)); }

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet tau) {
  if (!complex.contains(tau)) throw InputError("link: the given vertex set is not a face");
  std::vector<VertexSet> faces;
  for (VertexSet f : complex.facets()) {
    if (tau.is_subset_of(f)) faces.push_back(f - tau);
  }
  return SimplicialComplex(complex.vertices(), faces);
}

SimplicialComplex link(const SimplicialComplex& complex, const std::vector<std::string>& tau) {
  return link(complex, complex.face_from_labels(tau));
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int i) {
  if (i < -1 || i > complex.dimension()) {
    throw InputError("skeleton dimension " + std::to_string(i) + " outside [-1, " +
                     std::to_string(complex.dimension()) + "]");
  }
  std::vector<VertexSet> faces = complex.faces_of_dimension(i);
  for (VertexSet f : complex.facets()) {
    if (f.size() - 1 < i) faces.push_back(f);
  }
  return SimplicialComplex(complex.vertices(), faces);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& v : b.vertices()) {
    if (a.find_vertex(v)) throw InputError("join: vertex label '" + v + "' occurs in both complexes");
  }
  std::vector<std::string> vertices = a.vertices();
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  if (vertices.size() > static_cast<std::size_t>(kMaxVertices)) throw InputError("join has too many vertices");
  const int shift = a.num_vertices();
  std::vector<VertexSet> faces;
  for (VertexSet fa : a.facets()) {
    for (VertexSet fb : b.facets()) faces.push_back(fa | VertexSet(fb.bits() << shift));
  }
  SimplicialComplex out(std::move(vertices), faces);
  if (f_vector(out).entries != convolve(f_vector(a).entries, f_vector(b).entries)) {
    throw VerificationError("join: f-vector is not the convolution of the factors' f-vectors");
  }
  return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet vertices) {
  std::vector<VertexSet> faces;
  for (VertexSet f : complex.facets()) faces.push_back(f & vertices);
  return SimplicialComplex(complex.vertices(), faces);
}

bool is_pure(const SimplicialComplex& complex) {
  const auto& facets = complex.facets();
  return std::all_of(facets.begin(), facets.end(),
                     [&](VertexSet f) { return f.size() == facets.front().size(); });
}

bool is_flag(const SimplicialComplex& complex) {
  const Graph g = complex.one_skeleton();
  for (VertexSet clique : maximal_cliques(g)) {
    if (!complex.contains(clique)) return false;
  }
  return true;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
  std::unordered_set<VertexSet> found;
  const VertexSet all = VertexSet::first_n(complex.num_vertices());
  for (VertexSet f : complex.all_faces()) {
    (all - f).for_each([&](int v) {
      VertexSet s = f | VertexSet::single(v);
      if (complex.contains(s) || found.count(s)) return;
      bool minimal = true;
      s.for_each([&](int u) { minimal = minimal && complex.contains(s - VertexSet::single(u)); });
      if (minimal) found.insert(s);
    });
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex(g.labels(), maximal_independent_sets(g));
}

SimplicialComplex clique_complex(const Graph& g) { return SimplicialComplex(g.labels(), maximal_cliques(g)); }

namespace {

bool color_from(const Graph& g, const std::vector<int>& order, std::size_t pos, int k, int used,
                std::vector<int>& colors) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  // New colours are introduced in increasing order, so colour classes are
  // never permuted uselessly.
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    g.neighbors(v).for_each([&](int w) { ok = ok && colors[w] != c; });
    if (!ok) continue;
    colors[v] = c;
    if (color_from(g, order, pos + 1, k, std::max(used, c + 1), colors)) return true;
    colors[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<Coloring> proper_coloring(const Graph& g, int k) {
  if (k < 1) throw InputError("number of colours must be at least 1");
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colors(g.num_vertices(), -1);
  if (!color_from(g, order, 0, k, 0, colors)) return std::nullopt;
  return Coloring{std::move(colors), k};
}

std::optional<Coloring> proper_coloring(const SimplicialComplex& complex, int k) {
  return proper_coloring(complex.one_skeleton(), k);
}

bool is_proper_coloring(const SimplicialComplex& complex, const Coloring& coloring) {
  if (static_cast<int>(coloring.colors.size()) != complex.num_vertices()) return false;
  for (int c : coloring.colors) {
    if (c < 0 || c >= coloring.num_colors) return false;
  }
  for (const auto& [u, v] : complex.one_skeleton().edges()) {
    if (coloring.colors[u] == coloring.colors[v]) return false;
  }
  return true;
}

bool is_balanced(const SimplicialComplex& complex) {
  if (complex.dimension() < 0) return true;
  return proper_coloring(complex, complex.dimension() + 1).has_value();
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super) {
  std::vector<int> map(sub.num_vertices());
  for (int v = 0; v < sub.num_vertices(); ++v) {
    auto w = super.find_vertex(sub.vertices()[v]);
    if (!w) return false;
    map[v] = *w;
  }
  for (VertexSet f : sub.facets()) {
    VertexSet image;
    f.for_each([&](int v) { image.insert(map[v]); });
    if (!super.contains(image)) return false;
  }
  return true;
}

bool is_full_dimensional_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super) {
  return sub.dimension() == super.dimension() && is_subcomplex(sub, super);
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (f_vector(a) != f_vector(b) || a.facets().size() != b.facets().size()) return false;
  std::unordered_set<VertexSet> target(b.facets().begin(), b.facets().end());
  bool found = false;
  for_each_isomorphism(a.one_skeleton(), b.one_skeleton(), [&](const std::vector<int>& m) {
    for (VertexSet f : a.facets()) {
      VertexSet image;
      f.for_each([&](int v) { image.insert(m[v]); });
      if (!target.count(image)) return false;
    }
    found = true;
    return true;
  });
  return found;
}

namespace {

/// Non-increasing partitions of n into at most `parts` parts, padded with zeros.
void partitions(int n, int parts, int cap, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == parts) {
    if (n == 0) out.push_back(current);
    return;
  }
  for (int s = std::min(n, cap); s >= 0; --s) {
    current.push_back(s);
    partitions(n - s, parts, s, current, out);
    current.pop_back();
  }
}

struct ColorableSearch {
  const std::vector<std::int64_t>& f;
  std::vector<int> color;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<VertexSet>> chosen;  // chosen[j] = faces with j vertices

  std::vector<VertexSet> candidates(std::size_t size) const {
    const std::unordered_set<VertexSet> below(chosen[size - 1].begin(), chosen[size - 1].end());
    std::vector<VertexSet> out;
    const int n = static_cast<int>(color.size());
    for (VertexSet s : chosen[size - 1]) {
      for (int v = s.max() + 1; v < n; ++v) {
        bool colorful = true;
        s.for_each([&](int u) { colorful = colorful && color[u] != color[v]; });
        if (!colorful) continue;
        VertexSet t = s | VertexSet::single(v);
        bool closed = true;
        s.for_each([&](int u) { closed = closed && below.count(t - VertexSet::single(u)) != 0; });
        if (closed) out.push_back(t);
      }
    }
    // Colex order: compressed choices come first and leave the most room above.
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return out;
  }

  bool level(std::size_t size) {
    if (size == f.size()) return true;
    const auto need = static_cast<std::size_t>(f[size]);
    const std::vector<VertexSet> cands = candidates(size);
    if (cands.size() < need) return false;
    std::vector<VertexSet> pick;
    return choose(size, cands, 0, need, pick);
  }

  bool choose(std::size_t size, const std::vector<VertexSet>& cands, std::size_t from, std::size_t need,
              std::vector<VertexSet>& pick) {
    if (++nodes > budget) return false;
    if (pick.size() == need) {
      chosen[size] = pick;
      if (level(size + 1)) return true;
      chosen[size].clear();
      return false;
    }
    for (std::size_t i = from; i + (need - pick.size()) <= cands.size(); ++i) {
      pick.push_back(cands[i]);
      if (choose(size, cands, i + 1, need, pick)) return true;
      pick.pop_back();
      if (nodes > budget) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<ColorableComplex> find_colorable_complex(const FaceVector& f_in, int d, std::uint64_t node_budget) {
  std::vector<std::int64_t> f = f_in.entries;
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  if (f.empty() || f[0] != 1) throw InputError("f-vector must start with f_{-1} = 1");
  for (auto x : f) {
    if (x < 0) throw InputError("f-vector entries must be nonnegative");
  }
  if (d < 0) throw InputError("number of colours must be nonnegative");
  if (static_cast<int>(f.size()) - 1 > d) return std::nullopt;
  if (f.size() == 1) return ColorableComplex{SimplicialComplex(), Coloring{{}, d}};
  if (f[1] > kMaxVertices) return std::nullopt;
  const int n = static_cast<int>(f[1]);

  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));

  std::vector<std::vector<int>> shapes;
  std::vector<int> current;
  partitions(n, d, n, current, shapes);
  std::stable_sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
    auto sq = [](const std::vector<int>& v) {
      return std::accumulate(v.begin(), v.end(), 0L, [](long acc, int x) { return acc + long{x} * x; });
    };
    return sq(a) < sq(b);
  });

  std::uint64_t spent = 0;
  for (const auto& shape : shapes) {
    ColorableSearch search{f, {}, node_budget - spent, 0, {}};
    for (int c = 0; c < d; ++c)
      for (int k = 0; k < shape[c]; ++k) search.color.push_back(c);
    search.chosen.assign(f.size(), {});
    search.chosen[0] = {VertexSet()};
    for (int v = 0; v < n; ++v) search.chosen[1].push_back(VertexSet::single(v));
    const bool ok = search.level(2);
    spent += search.nodes;
    if (ok) {
      std::vector<VertexSet> faces;
      for (const auto& level : search.chosen) faces.insert(faces.end(), level.begin(), level.end());
      SimplicialComplex complex(labels, faces);
      Coloring coloring{search.color, d};
      if (f_vector(complex).entries != f || !is_proper_coloring(complex, coloring)) {
        throw VerificationError("colourable-complex search produced an inconsistent witness");
      }
      return ColorableComplex{std::move(complex), std::move(coloring)};
    }
    if (spent >= node_budget) break;
  }
  return std::nullopt;
}

}  // namespace cmbal
