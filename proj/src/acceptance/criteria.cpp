#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "cmbal/acceptance.hpp"
#include "cmbal/errors.hpp"
#include "cmbal/graph_classify.hpp"

namespace cmbal::acceptance {

namespace {

/// Collects sub-checks and times the criterion.
class Recorder {
 public:
  Recorder(int id, std::string title, double limit_seconds) : start_(std::chrono::steady_clock::now()) {
    result_.id = id;
    result_.title = std::move(title);
    result_.limit_seconds = limit_seconds;
    result_.passed = true;
  }

  bool check(bool ok, const std::string& what) {
    result_.notes.push_back((ok ? "ok: " : "FAILED: ") + what);
    if (!ok) result_.passed = false;
    return ok;
  }

  void note(const std::string& what) { result_.notes.push_back("info: " + what); }

  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + " threw: " + e.what());
    }
  }

  CriterionResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (result_.seconds > result_.limit_seconds) {
      check(false, "runtime " + std::to_string(result_.seconds) + " s exceeds " +
                       std::to_string(result_.limit_seconds) + " s");
    }
    return result_;
  }

 private:
  CriterionResult result_;
  std::chrono::steady_clock::time_point start_;
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::vector<std::int64_t> padded(std::vector<std::int64_t> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

bool same_entries(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  const std::size_t n = std::max(a.size(), b.size());
  return padded(std::move(a), n) == padded(std::move(b), n);
}

/// The 1-complex I(γ) of a graph γ, given as a cover factor.
CoverFactor independence_factor(const Graph& g) { return CoverFactor::graph(g.complement()); }

}  // namespace

CriterionResult criterion_1() {
  Recorder r(1, "h/f conversion and round trip", 1.0);
  r.guarded("conversion", [&] {
    const auto h1 = h_from_f(FaceVector{{1, 10, 24, 16}}).entries;
    r.check(h1 == std::vector<std::int64_t>{1, 7, 7, 1}, "h(1,10,24,16) = " + show(h1) + ", expected (1,7,7,1)");
    const auto h2 = h_from_f(FaceVector{{1, 7, 16, 11}}).entries;
    r.check(h2 == std::vector<std::int64_t>{1, 4, 5, 1}, "h(1,7,16,11) = " + show(h2) + ", expected (1,4,5,1)");
    Rng rng(kDefaultSeed);
    int failures = 0;
    for (int k = 0; k < 1000; ++k) {
      FaceVector f;
      f.entries.push_back(1);
      const int d = static_cast<int>(rng.uniform(0, 10));
      for (int i = 0; i < d; ++i) f.entries.push_back(rng.uniform(0, 5000));
      const HVector h = h_from_f(f);
      if (f_from_h(h) != f || h_from_f(f_from_h(h)) != h) ++failures;
    }
    r.check(failures == 0, "f_from_h(h_from_f(f)) = f on 1000 random vectors (" + std::to_string(failures) + " failures)");
  });
  return r.finish();
}

CriterionResult criterion_2() {
  Recorder r(2, "Turán graph T(7,3) and K4-free 7-vertex graphs", 300.0);
  r.guarded("Turán", [&] {
    const Graph t = turan_graph(7, 3);
    r.check(t.num_edges() == 16, "T(7,3) has " + std::to_string(t.num_edges()) + " edges");
    r.check(count_triangles(t) == 12, "T(7,3) has " + std::to_string(count_triangles(t)) + " triangles");
    r.check(max_k4_free_edges(7) == 16, "max_k4_free_edges(7) = " + std::to_string(max_k4_free_edges(7)));

    const Graph k7 = complete_graph(7);
    const std::vector<Edge> all = k7.edges();
    std::vector<std::string> labels = k7.labels();
    int graphs16 = 0;
    int k4_free16 = 0;
    int non_turan = 0;
    int k4_free17 = 0;
    for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
      const int count = std::popcount(mask);
      if (count != 16 && count != 17) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(all[i]);
      }
      const Graph g(labels, edges);
      if (count == 17) {
        if (!has_k4(g)) ++k4_free17;
        continue;
      }
      ++graphs16;
      if (has_k4(g)) continue;
      ++k4_free16;
      if (!are_isomorphic(g, t)) ++non_turan;
    }
    r.check(graphs16 == 20349, "enumerated " + std::to_string(graphs16) + " labelled graphs with 16 edges");
    r.check(k4_free16 > 0 && non_turan == 0, std::to_string(k4_free16) + " are K4-free, " +
                                                 std::to_string(non_turan) + " of them not isomorphic to T(7,3)");
    r.check(k4_free17 == 0, "no 17-edge graph on 7 vertices is K4-free (" + std::to_string(k4_free17) + " found)");
  });
  return r.finish();
}

CriterionResult criterion_3() {
  Recorder r(3, "Cohen–Macaulay verdicts for C5 and the exceptional graphs", 120.0);
  r.guarded("verdicts", [&] {
    const auto c5 = is_cohen_macaulay(independence_complex(cycle_graph(5)));
    r.check(c5.cohen_macaulay, "I(C5) is CM");
    for (const auto& entry : exceptional_catalog()) {
      const SimplicialComplex ic = independence_complex(entry.graph);
      const CmResult cm = is_cohen_macaulay(ic);
      r.check(!cm.cohen_macaulay, "I(" + entry.name + ") is not CM");
      if (entry.name == "P14" || entry.name == "Q13") {
        const bool witness = cm.violation && cm.violation->face.empty() && cm.violation->degree == 3 &&
                             cm.betti.at(3) != 0;
        r.check(ic.dimension() == 4 && witness,
                "I(" + entry.name + ") has dimension " + std::to_string(ic.dimension()) +
                    " and reduced Betti numbers " + show(cm.betti.reduced) + " (β̃_3 = " +
                    std::to_string(cm.betti.at(3)) + ")");
      }
    }
    const SimplicialComplex c7 = independence_complex(cycle_graph(7));
    const SimplicialComplex l10 = link(independence_complex(*named_graph("P10")), std::vector<std::string>{"5"});
    r.check(are_isomorphic(l10, c7) && are_isomorphic(l10.one_skeleton(), c7.one_skeleton()),
            "link of 5 in I(P10) is isomorphic to I(C7)");
    const SimplicialComplex l13 =
        link(independence_complex(*named_graph("P13")), std::vector<std::string>{"10", "12"});
    r.check(are_isomorphic(l13, c7) && are_isomorphic(l13.one_skeleton(), c7.one_skeleton()),
            "link of {10,12} in I(P13) is isomorphic to I(C7)");
  });
  return r.finish();
}

CriterionResult criterion_4() {
  Recorder r(4, "balancing witness for I(C5)", 5.0);
  r.guarded("witness", [&] {
    const Graph c5 = cycle_graph(5);
    const SimplicialComplex delta = independence_complex(c5);
    const BalancedWitness w = balanced_witness(delta, {independence_factor(c5)});
    const auto f = f_vector_of_multicomplex(w.basis);
    r.check(f == std::vector<std::int64_t>{1, 3, 1}, "F(B_g) = " + show(f));
    r.check(same_entries(f, h_from_f(f_vector(delta)).entries), "F(B_g) equals h from the enumerated f-vector");
    for (const auto& c : w.checks) r.check(c.passed, "check " + c.name);
    r.check(w.attempts == 1, "default specialization used (attempts = " + std::to_string(w.attempts) + ")");
  });
  return r.finish();
}

CriterionResult criterion_5() {
  Recorder r(5, "Figure-2 graph: classification and balancing pipeline", 120.0);
  r.guarded("figure 2", [&] {
    const Graph g = *named_graph("figure2");
    const auto basic = basic_5_cycles(g);
    const auto pendant = pendant_edges(g);
    const int b = beta(g);
    r.check(basic.size() == 2, "basic 5-cycles: " + std::to_string(basic.size()) + " (2 expected)");
    r.check(pendant.size() == 1, "pendant edges: " + std::to_string(pendant.size()) + " (1 expected)");
    r.check(b == 5, "beta = " + std::to_string(b) + " (5 expected)");
    const ClassificationVerdict verdict = classify_girth5(g);
    r.note("classification verdict: " + to_string(verdict.kind));
    const SimplicialComplex ig = independence_complex(g);
    const CmResult cm = is_cohen_macaulay(ig);
    r.note(std::string("I(G) is ") + (cm.cohen_macaulay ? "" : "not ") + "Cohen–Macaulay");
    if (cm.cohen_macaulay) {
      const JoinEmbedding embedding = embed_in_join(g);
      const BalancedWitness w = balanced_witness(ig, embedding.cover);
      r.check(same_entries(f_vector_of_multicomplex(w.basis), h_from_f(f_vector(ig)).entries),
              "F(B_g) equals h(I(G)) from face enumeration");
    } else {
      std::string reported;
      try {
        embed_in_join(g);
      } catch (const InputError& e) {
        reported = e.what();
      }
      const std::string expected = verdict.kind == VerdictKind::NotWellCovered ? "not well-covered"
                                   : verdict.kind == VerdictKind::Exceptional   ? "exceptional"
                                                                                : "girth";
      r.check(reported.find(expected) != std::string::npos,
              "pipeline reports the failed hypothesis: \"" + reported + "\"");
    }
  });
  return r.finish();
}

CriterionResult criterion_6() {
  Recorder r(6, "Figure-4 flag complex", 120.0);
  r.guarded("figure 4", [&] {
    const Graph g = *named_graph("figure4");
    const SimplicialComplex delta = clique_complex(g);
    const auto f = f_vector(delta).entries;
    r.check(f == std::vector<std::int64_t>{1, 10, 24, 16}, "f = " + show(f));
    r.check(h_vector(delta).entries == std::vector<std::int64_t>{1, 7, 7, 1}, "h = " + show(h_vector(delta).entries));
    r.check(delta.one_skeleton() == g, "1-skeleton equals the Figure-4 graph");
    r.check(is_flag(delta), "complex is flag");
    const CmResult cm = is_cohen_macaulay(delta);
    r.check(cm.cohen_macaulay, "complex is CM");
    r.check(cm.betti.reduced == std::vector<std::int64_t>{0, 0, 0, 1}, "reduced Betti numbers " + show(cm.betti.reduced));
    r.check(!proper_coloring(g, 3).has_value(), "graph is not 3-colourable");
    r.check(!independent_facet_transversal(delta).has_value(), "no independent set meets every facet");
    const auto found = find_colorable_complex(FaceVector{{1, 7, 7, 1}}, 3);
    r.check(found && f_vector(found->complex).entries == std::vector<std::int64_t>{1, 7, 7, 1} &&
                found->coloring.num_colors <= 3 && is_proper_coloring(found->complex, found->coloring),
            "3-colourable complex with f = (1,7,7,1) found and verified");
  });
  return r.finish();
}

CriterionResult criterion_7(std::uint64_t seed) {
  Recorder r(7, "property suites", 600.0);
  Rng rng(seed);

  r.guarded("join properties", [&] {
    int cm_mismatch = 0;
    int conv_mismatch = 0;
    const int pairs = 300;
    for (int k = 0; k < pairs; ++k) {
      const SimplicialComplex a = oracle::random_small_complex(rng, 4, 10, "a");
      const SimplicialComplex b = oracle::random_small_complex(rng, 4, 10, "b");
      const SimplicialComplex j = join(a, b);
      if (is_cohen_macaulay(j).cohen_macaulay != (is_cohen_macaulay(a).cohen_macaulay && is_cohen_macaulay(b).cohen_macaulay)) {
        ++cm_mismatch;
      }
      std::vector<std::int64_t> direct(static_cast<std::size_t>(a.dimension() + b.dimension() + 3), 0);
      for (VertexSet x : a.all_faces()) {
        for (VertexSet y : b.all_faces()) {
          std::vector<std::string> labels = a.labels_of(x);
          for (const auto& l : b.labels_of(y)) labels.push_back(l);
          if (!j.contains(j.face_from_labels(labels))) ++conv_mismatch;
          ++direct[labels.size()];
        }
      }
      if (static_cast<std::int64_t>(j.num_faces()) != std::accumulate(direct.begin(), direct.end(), std::int64_t{0}) ||
          direct != f_vector(j).entries || direct != convolve(f_vector(a).entries, f_vector(b).entries)) {
        ++conv_mismatch;
      }
    }
    r.check(cm_mismatch == 0, "CM(Δ1 * Δ2) = CM(Δ1) and CM(Δ2) on " + std::to_string(pairs) + " random pairs");
    r.check(conv_mismatch == 0, "f(Δ1 * Δ2) equals the convolution and direct enumeration on " +
                                    std::to_string(pairs) + " random pairs");
  });

  r.guarded("all complexes on at most 6 vertices", [&] {
    const auto masks = oracle::complexes_up_to_six_vertices();
    r.check(masks.size() == 16352, "isomorphism classes enumerated: " + std::to_string(masks.size()));
    int cm_count = 0;
    int homology_mismatch = 0;
    int algebra_mismatch = 0;
    int link_mismatch = 0;
    int impure_cm = 0;
    for (std::uint64_t mask : masks) {
      const SimplicialComplex delta = oracle::complex_from_mask(mask);
      const bool reisner = is_cohen_macaulay(delta).cohen_macaulay;
      cm_count += reisner ? 1 : 0;
      if (reisner && !is_pure(delta)) ++impure_cm;
      if (reisner != oracle::reisner_by_brute_force(delta)) ++homology_mismatch;
      if (reisner != oracle::cm_by_regular_sequence(delta, rng)) ++algebra_mismatch;
      for (VertexSet tau : delta.all_faces()) {
        const SimplicialComplex lk = link(delta, tau);
        std::vector<std::vector<std::string>> faces;
        for (VertexSet f : lk.all_faces()) {
          auto labels = lk.labels_of(f);
          std::sort(labels.begin(), labels.end());
          faces.push_back(labels);
        }
        std::sort(faces.begin(), faces.end());
        if (faces != oracle::brute_force_link(delta, tau)) ++link_mismatch;
      }
    }
    r.note(std::to_string(cm_count) + " of them are Cohen–Macaulay");
    r.check(link_mismatch == 0, "link() agrees with the brute-force filter on every face");
    r.check(homology_mismatch == 0, "Reisner verdicts agree with dense brute-force link homology");
    r.check(algebra_mismatch == 0, "Reisner verdicts agree with F(B_g) = h under a random l.s.o.p.");
    r.check(impure_cm == 0, "every CM complex is pure");
  });

  r.guarded("girth >= 5 classification", [&] {
    int well_covered = 0;
    int pg = 0;
    int beta_mismatch = 0;
    int unclassified = 0;
    const int total = 200;
    for (int k = 0; k < total; ++k) {
      const Graph g = k % 2 == 0 ? oracle::random_girth5_graph(rng, static_cast<int>(rng.uniform(1, 12)))
                                 : oracle::random_pg_graph(rng, 12);
      ClassificationVerdict v;
      try {
        v = classify_girth5(g);
      } catch (const VerificationError&) {
        ++unclassified;
        continue;
      }
      if (v.kind == VerdictKind::GirthTooSmall) ++unclassified;
      if (v.kind != VerdictKind::NotWellCovered && v.kind != VerdictKind::GirthTooSmall) ++well_covered;
      if (v.kind == VerdictKind::PG) {
        ++pg;
        if (v.pg->predicted_beta() != beta(g)) ++beta_mismatch;
      }
    }
    r.check(unclassified == 0, std::to_string(total) + " random connected girth >= 5 graphs classified; " +
                                   std::to_string(well_covered) + " well-covered, " + std::to_string(pg) + " in PG");
    r.check(beta_mismatch == 0, "beta = pendant edges + 2 · basic 5-cycles on every PG verdict");
  });
  return r.finish();
}

CriterionResult criterion_8(std::uint64_t seed) {
  Recorder r(8, "witness soundness on a generated corpus", 900.0);
  Rng rng(seed);
  r.guarded("corpus", [&] {
    struct Case {
      std::string description;
      SimplicialComplex complex;
      JoinCover cover;
    };
    std::vector<Case> cases;
    for (auto& e : oracle::witness_corpus(rng, 40, 14)) cases.push_back({e.description, e.complex, e.cover});
    int graphs = 0;
    while (graphs < 10) {
      const Graph g = oracle::random_pg_graph(rng, 14);
      const SimplicialComplex ig = independence_complex(g);
      if (!is_cohen_macaulay(ig).cohen_macaulay) continue;
      cases.push_back({"I(G) for a PG graph on " + std::to_string(g.num_vertices()) + " vertices", ig,
                       embed_in_join(g).cover});
      ++graphs;
    }
    int failures = 0;
    for (const auto& c : cases) {
      try {
        const BalancedWitness w = balanced_witness(c.complex, c.cover);
        const int d = c.complex.dimension() + 1;
        const bool checks = std::all_of(w.checks.begin(), w.checks.end(), [](const CheckItem& i) { return i.passed; });
        const bool colorable = w.coloring.num_colors <= d && is_proper_coloring(w.as_complex, w.coloring);
        const bool f_is_h = same_entries(f_vector(w.as_complex).entries, h_from_f(f_vector(c.complex)).entries);
        if (!checks || !colorable || !f_is_h) {
          ++failures;
          r.check(false, c.description);
        }
      } catch (const std::exception& e) {
        ++failures;
        r.check(false, c.description + ": " + e.what());
      }
    }
    r.check(failures == 0, std::to_string(cases.size() - static_cast<std::size_t>(failures)) + " of " +
                               std::to_string(cases.size()) + " witnesses verified");
  });
  return r.finish();
}

std::vector<CriterionResult> run(const std::vector<int>& which, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) {
    if (!which.empty() && std::find(which.begin(), which.end(), id) == which.end()) continue;
    switch (id) {
      case 1: out.push_back(criterion_1()); break;
      case 2: out.push_back(criterion_2()); break;
      case 3: out.push_back(criterion_3()); break;
      case 4: out.push_back(criterion_4()); break;
      case 5: out.push_back(criterion_5()); break;
      case 6: out.push_back(criterion_6()); break;
      case 7: out.push_back(criterion_7(seed)); break;
      case 8: out.push_back(criterion_8(seed)); break;
    }
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title + " (" +
         timing + ")";
}

}  // namespace cmbal::acceptance
