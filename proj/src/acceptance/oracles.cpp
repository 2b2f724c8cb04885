#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "cmbal/acceptance.hpp"
#include "cmbal/errors.hpp"
#include "cmbal/exact_linalg.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/polynomial.hpp"

namespace cmbal::acceptance::oracle {

std::vector<std::vector<std::string>> brute_force_link(const SimplicialComplex& complex, VertexSet tau) {
  std::vector<std::vector<std::string>> out;
  for (VertexSet gamma : complex.all_faces()) {
    if (!gamma.intersects(tau) && complex.contains(gamma | tau)) out.push_back(complex.labels_of(gamma));
  }
  for (auto& face : out) std::sort(face.begin(), face.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> dense_reduced_betti(const std::vector<VertexSet>& faces) {
  int top = -1;
  for (VertexSet f : faces) top = std::max(top, f.size() - 1);
  // chains[k] holds the faces of dimension k - 1.
  std::vector<std::vector<VertexSet>> chains(static_cast<std::size_t>(top + 2));
  for (VertexSet f : faces) chains[static_cast<std::size_t>(f.size())].push_back(f);
  for (auto& c : chains) std::sort(c.begin(), c.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });

  // ranks[k] = rank of the map from chains[k] to chains[k - 1].
  std::vector<std::size_t> ranks(chains.size() + 1, 0);
  for (std::size_t k = 1; k < chains.size(); ++k) {
    const auto& rows = chains[k];
    const auto& cols = chains[k - 1];
    if (rows.empty() || cols.empty()) continue;
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int sign = 1;
      rows[r].for_each([&](int v) {
        VertexSet boundary = rows[r];
        boundary.erase(v);
        const auto c = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), boundary) - cols.begin());
        m(r, c) = sign;
        sign = -sign;
      });
    }
    ranks[k] = rank(m);
  }
  std::vector<std::int64_t> betti;
  for (std::size_t k = 0; k < chains.size(); ++k) {
    betti.push_back(static_cast<std::int64_t>(chains[k].size()) - static_cast<std::int64_t>(ranks[k]) -
                    static_cast<std::int64_t>(ranks[k + 1]));
  }
  return betti;
}

bool reisner_by_brute_force(const SimplicialComplex& complex) {
  const auto faces = complex.all_faces();
  for (VertexSet tau : faces) {
    std::vector<VertexSet> link_faces;
    for (VertexSet gamma : faces) {
      if (!gamma.intersects(tau) && complex.contains(gamma | tau)) link_faces.push_back(gamma);
    }
    const auto betti = dense_reduced_betti(link_faces);
    const int link_dim = static_cast<int>(betti.size()) - 2;
    for (int i = -1; i < link_dim; ++i) {
      if (betti[static_cast<std::size_t>(i + 1)] != 0) return false;
    }
  }
  return true;
}

bool cm_by_regular_sequence(const SimplicialComplex& complex, Rng& rng) {
  const auto n = static_cast<std::size_t>(complex.num_vertices());
  const auto d = static_cast<std::size_t>(complex.dimension() + 1);
  if (n == 0) return true;
  std::vector<std::size_t> last(d);
  std::iota(last.begin(), last.end(), n - d);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RationalMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = rng.uniform(-9, 9);
    auto g = inverse(h);
    if (!g) continue;
    bool kk = true;
    for (VertexSet facet : complex.facets()) {
      std::vector<std::size_t> rows;
      facet.for_each([&](int v) { rows.push_back(static_cast<std::size_t>(v)); });
      if (rank(h.submatrix(rows, last)) != rows.size()) kk = false;
    }
    if (!kk) continue;
    const Multicomplex basis =
        standard_monomial_basis(complex, complex.vertices(), LinearAutomorphism{*g}, TermOrder::natural(n));
    std::vector<std::int64_t> f = f_vector_of_multicomplex(basis);
    std::vector<std::int64_t> hv = h_vector(complex).entries;
    const std::size_t len = std::max(f.size(), hv.size());
    f.resize(len, 0);
    hv.resize(len, 0);
    return f == hv;
  }
  throw VerificationError("no random matrix satisfied Kind–Kleinschmidt");
}

namespace {

constexpr int kSix = 6;

std::vector<std::array<int, kSix>> all_permutations() {
  std::array<int, kSix> p{};
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::array<int, kSix>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<std::uint64_t> complexes_up_to_six_vertices() {
  const auto perms = all_permutations();
  // table[p][k][b]: image under p of the subsets 8k..8k+7 selected by b.
  std::vector<std::array<std::array<std::uint64_t, 256>, 8>> table(perms.size());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    std::array<std::uint64_t, 64> image{};
    for (int s = 0; s < 64; ++s) {
      int t = 0;
      for (int i = 0; i < kSix; ++i) {
        if ((s >> i) & 1) t |= 1 << perms[p][static_cast<std::size_t>(i)];
      }
      image[static_cast<std::size_t>(s)] = std::uint64_t{1} << t;
    }
    for (int k = 0; k < 8; ++k) {
      for (int b = 0; b < 256; ++b) {
        std::uint64_t bits = 0;
        for (int j = 0; j < 8; ++j) {
          if ((b >> j) & 1) bits |= image[static_cast<std::size_t>(8 * k + j)];
        }
        table[p][static_cast<std::size_t>(k)][static_cast<std::size_t>(b)] = bits;
      }
    }
  }
  auto canonical = [&](std::uint64_t mask) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& t : table) {
      std::uint64_t img = 0;
      for (std::size_t k = 0; k < 8; ++k) img |= t[k][(mask >> (8 * k)) & 0xFF];
      best = std::min(best, img);
    }
    return best;
  };

  std::vector<std::uint64_t> out{1};
  std::unordered_set<std::uint64_t> seen{1};
  for (std::size_t next = 0; next < out.size(); ++next) {
    const std::uint64_t mask = out[next];
    for (int s = 1; s < 64; ++s) {
      if ((mask >> s) & 1) continue;
      bool addable = true;
      for (int i = 0; i < kSix && addable; ++i) {
        if (((s >> i) & 1) && !((mask >> (s & ~(1 << i))) & 1)) addable = false;
      }
      if (!addable) continue;
      const std::uint64_t c = canonical(mask | (std::uint64_t{1} << s));
      if (seen.insert(c).second) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex complex_from_mask(std::uint64_t mask) {
  std::vector<std::string> labels;
  for (int i = 1; i <= kSix; ++i) labels.push_back(std::to_string(i));
  std::vector<VertexSet> faces;
  for (int s = 0; s < 64; ++s) {
    if ((mask >> s) & 1) faces.emplace_back(static_cast<std::uint64_t>(s));
  }
  return SimplicialComplex(labels, faces);
}

SimplicialComplex random_small_complex(Rng& rng, int max_vertices, int max_faces, const std::string& prefix) {
  const int n = static_cast<int>(rng.uniform(1, max_vertices));
  const int target = static_cast<int>(rng.uniform(2, max_faces));
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  std::unordered_set<VertexSet> faces{VertexSet()};
  while (static_cast<int>(faces.size()) < target) {
    std::vector<VertexSet> addable;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      const VertexSet f(s);
      if (faces.count(f)) continue;
      bool ok = true;
      f.for_each([&](int v) {
        VertexSet sub = f;
        sub.erase(v);
        if (!faces.count(sub)) ok = false;
      });
      if (ok) addable.push_back(f);
    }
    if (addable.empty()) break;
    std::sort(addable.begin(), addable.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    faces.insert(addable[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(addable.size()) - 1))]);
  }
  std::vector<VertexSet> list(faces.begin(), faces.end());
  std::sort(list.begin(), list.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return SimplicialComplex(labels, list);
}

namespace {

/// Distance in g, or -1 when disconnected.
int distance(const Graph& g, int u, int v) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(u)] = 0;
  queue.push(u);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    if (x == v) return dist[static_cast<std::size_t>(x)];
    g.neighbors(x).for_each([&](int y) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push(y);
      }
    });
  }
  return -1;
}

std::vector<std::string> numbered_labels(int n, const std::string& prefix = "") {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

Graph random_tree(Rng& rng, int n, const std::string& prefix) {
  Graph g(numbered_labels(n, prefix));
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng.uniform(0, v - 1)));
  return g;
}

}  // namespace

Graph random_girth5_graph(Rng& rng, int n) {
  Graph g = random_tree(rng, n, "");
  const int extra = n < 2 ? 0 : static_cast<int>(rng.uniform(0, n));
  for (int k = 0; k < extra; ++k) {
    const int u = static_cast<int>(rng.uniform(0, n - 1));
    const int v = static_cast<int>(rng.uniform(0, n - 1));
    if (u == v || g.adjacent(u, v)) continue;
    const int dist = distance(g, u, v);
    if (dist < 0 || dist >= 4) g.add_edge(u, v);
  }
  return g;
}

Graph random_pg_graph(Rng& rng, int max_vertices) {
  while (true) {
    // piece[v]: index of the piece holding v; cycle pieces list their vertices in cyclic order.
    std::vector<std::vector<int>> pieces;
    std::vector<bool> is_cycle;
    int n = 0;
    while (true) {
      const int room = max_vertices - n;
      if (room < 2 || (!pieces.empty() && rng.coin(1, 3))) break;
      const bool cycle = room >= 5 && rng.coin();
      std::vector<int> piece;
      for (int k = 0; k < (cycle ? 5 : 2); ++k) piece.push_back(n++);
      pieces.push_back(piece);
      is_cycle.push_back(cycle);
    }
    Graph g(numbered_labels(n));
    std::vector<int> piece_of(static_cast<std::size_t>(n));
    std::vector<bool> eligible(static_cast<std::size_t>(n), false);
    std::vector<bool> has_extra(static_cast<std::size_t>(n), false);
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      const auto& piece = pieces[p];
      for (int v : piece) piece_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
      if (is_cycle[p]) {
        for (int k = 0; k < 5; ++k) {
          g.add_edge(piece[static_cast<std::size_t>(k)], piece[static_cast<std::size_t>((k + 1) % 5)]);
          eligible[static_cast<std::size_t>(piece[static_cast<std::size_t>(k)])] = true;
        }
      } else {
        g.add_edge(piece[0], piece[1]);
        eligible[static_cast<std::size_t>(piece[0])] = true;  // piece[1] stays a leaf
      }
    }
    auto usable = [&](int v) {
      if (!eligible[static_cast<std::size_t>(v)]) return false;
      const auto p = static_cast<std::size_t>(piece_of[static_cast<std::size_t>(v)]);
      if (!is_cycle[p]) return true;
      const auto& c = pieces[p];
      const auto k = static_cast<std::size_t>(std::find(c.begin(), c.end(), v) - c.begin());
      return !has_extra[static_cast<std::size_t>(c[(k + 1) % 5])] && !has_extra[static_cast<std::size_t>(c[(k + 4) % 5])];
    };
    auto try_connect = [&](int u, int v) {
      if (piece_of[static_cast<std::size_t>(u)] == piece_of[static_cast<std::size_t>(v)] || g.adjacent(u, v)) return false;
      if (!usable(u) || !usable(v)) return false;
      const int dist = distance(g, u, v);
      if (dist >= 0 && dist < 4) return false;
      g.add_edge(u, v);
      has_extra[static_cast<std::size_t>(u)] = true;
      has_extra[static_cast<std::size_t>(v)] = true;
      return true;
    };
    bool connected = true;
    for (std::size_t p = 1; p < pieces.size() && connected; ++p) {
      bool joined = false;
      for (int attempt = 0; attempt < 60 && !joined; ++attempt) {
        const auto q = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p) - 1));
        const int u = pieces[p][static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pieces[p].size()) - 1))];
        const int v = pieces[q][static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pieces[q].size()) - 1))];
        joined = try_connect(u, v);
      }
      connected = joined;
    }
    if (!connected) continue;
    const int extra = static_cast<int>(rng.uniform(0, 3));
    for (int k = 0; k < extra && n > 1; ++k) {
      try_connect(static_cast<int>(rng.uniform(0, n - 1)), static_cast<int>(rng.uniform(0, n - 1)));
    }
    return g;
  }
}

namespace {

Graph random_connected_bipartite(Rng& rng, int n, const std::string& prefix) {
  Graph g = random_tree(rng, n, prefix);
  const auto color = *two_coloring(g);
  const int extra = static_cast<int>(rng.uniform(0, n));
  for (int k = 0; k < extra; ++k) {
    const int u = static_cast<int>(rng.uniform(0, n - 1));
    const int v = static_cast<int>(rng.uniform(0, n - 1));
    if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  }
  return g;
}

/// Bipartite graph plus one edge between same-class vertices at distance >= 4.
std::optional<Graph> random_near_bipartite(Rng& rng, int n, const std::string& prefix) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Graph g = random_connected_bipartite(rng, n, prefix);
    std::vector<Edge> candidates;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (distance(g, u, v) >= 4 && distance(g, u, v) % 2 == 0) candidates.emplace_back(u, v);
      }
    }
    if (candidates.empty()) continue;
    const auto [u, v] = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(candidates.size()) - 1))];
    g.add_edge(u, v);
    return g;
  }
  return std::nullopt;
}

}  // namespace

std::vector<CorpusEntry> witness_corpus(Rng& rng, int size, int max_vertices) {
  std::vector<CorpusEntry> out;
  while (static_cast<int>(out.size()) < size) {
    const int factors = static_cast<int>(rng.uniform(1, 3));
    JoinCover cover;
    std::string description;
    int total = 0;
    for (int k = 0; k < factors; ++k) {
      const std::string prefix(1, static_cast<char>('a' + k));
      const int kind = static_cast<int>(rng.uniform(0, 2));
      std::string name;
      if (kind == 0) {
        const int n = static_cast<int>(rng.uniform(1, 4));
        cover.push_back(CoverFactor::points(numbered_labels(n, prefix)));
        name = "points(" + std::to_string(n) + ")";
        total += n;
      } else if (kind == 1) {
        const int n = static_cast<int>(rng.uniform(2, 6));
        cover.push_back(CoverFactor::graph(random_connected_bipartite(rng, n, prefix)));
        name = "bipartite(" + std::to_string(n) + ")";
        total += n;
      } else {
        const int n = static_cast<int>(rng.uniform(5, 7));
        auto g = random_near_bipartite(rng, n, prefix);
        if (!g) g = cycle_graph(5, prefix);
        cover.push_back(CoverFactor::graph(*g));
        name = "near-bipartite(" + std::to_string(g->num_vertices()) + ")";
        total += g->num_vertices();
      }
      description += (description.empty() ? "" : " * ") + name;
    }
    if (total > max_vertices) continue;
    const SimplicialComplex gamma = cover_complex(cover);
    std::vector<VertexSet> facets = gamma.facets();
    int removed = 0;
    const int deletions = static_cast<int>(rng.uniform(0, 6));
    for (int k = 0; k < deletions && facets.size() > 1; ++k) {
      const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(facets.size()) - 1));
      std::vector<VertexSet> trial = facets;
      trial.erase(trial.begin() + static_cast<long>(i));
      const SimplicialComplex candidate(gamma.vertices(), trial);
      if (candidate.dimension() == gamma.dimension() && is_cohen_macaulay(candidate).cohen_macaulay) {
        facets = std::move(trial);
        ++removed;
      }
    }
    SimplicialComplex delta(gamma.vertices(), facets);
    if (!is_cohen_macaulay(delta).cohen_macaulay) continue;
    description += ", " + std::to_string(removed) + " facet(s) removed";
    out.push_back({description, std::move(delta), std::move(cover)});
  }
  return out;
}

}  // namespace cmbal::acceptance::oracle
