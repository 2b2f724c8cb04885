#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cmbal/balancing.hpp"
#include "cmbal/cli.hpp"
#include "cmbal/errors.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/homology.hpp"
#include "cmbal/io.hpp"

namespace py = pybind11;
using namespace cmbal;

namespace {

using Facets = std::vector<std::vector<std::string>>;
using Edges = std::vector<std::pair<std::string, std::string>>;

SimplicialComplex complex_of(const Facets& facets) {
  if (facets.empty()) throw InputError("the void complex is not supported; pass [[]] for {∅}");
  return SimplicialComplex::from_facets(facets);
}

Graph graph_of(const Edges& edges, const std::vector<std::string>& vertices) {
  std::vector<std::string> labels = vertices;
  for (const auto& [u, v] : edges) {
    for (const auto& l : {u, v}) {
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    }
  }
  Graph g(labels);
  for (const auto& [u, v] : edges) g.add_edge(g.index_of(u), g.index_of(v));
  return g;
}

}  // namespace

PYBIND11_MODULE(_cmbal, m) {
  m.doc() = "Face numbers, Cohen–Macaulay tests and balancing witnesses";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  m.def("f_vector", [](const Facets& f) { return f_vector(complex_of(f)).entries; }, py::arg("facets"));
  m.def("h_vector", [](const Facets& f) { return h_vector(complex_of(f)).entries; }, py::arg("facets"));
  m.def("h_from_f", [](const std::vector<std::int64_t>& f) { return h_from_f(FaceVector{f}).entries; }, py::arg("f"));
  m.def("f_from_h", [](const std::vector<std::int64_t>& h) { return f_from_h(HVector{h}).entries; }, py::arg("h"));
  m.def("reduced_betti", [](const Facets& f) { return reduced_betti(complex_of(f)).reduced; }, py::arg("facets"));
  m.def("cm_report", [](const Facets& f) { return cm_json(is_cohen_macaulay(complex_of(f))).dump(); },
        py::arg("facets"));
  m.def("link", [](const Facets& f, const std::vector<std::string>& tau) {
    return link(complex_of(f), tau).facet_labels();
  }, py::arg("facets"), py::arg("face"));
  m.def("independence_complex", [](const Edges& e, const std::vector<std::string>& v) {
    return independence_complex(graph_of(e, v)).facet_labels();
  }, py::arg("edges"), py::arg("vertices") = std::vector<std::string>{});
  m.def("clique_complex", [](const Edges& e, const std::vector<std::string>& v) {
    return clique_complex(graph_of(e, v)).facet_labels();
  }, py::arg("edges"), py::arg("vertices") = std::vector<std::string>{});
  m.def("named_graph", [](const std::string& name) {
    const auto g = named_graph(name);
    if (!g) throw InputError("unknown graph name \"" + name + "\"");
    return std::make_pair(g->labels(), g->label_edges());
  }, py::arg("name"));
  m.def("classify_report", [](const Edges& e, const std::vector<std::string>& v) {
    const Graph g = graph_of(e, v);
    Json out = Json::array();
    for (const auto& c : classify_components(g)) {
      Json entry = verdict_json(c.verdict, c.component);
      entry["vertices"] = c.labels;
      out.push_back(entry);
    }
    return out.dump();
  }, py::arg("edges"), py::arg("vertices") = std::vector<std::string>{});
  m.def("embed_report", [](const Edges& e, const std::vector<std::string>& v) {
    const JoinEmbedding emb = embed_in_join(graph_of(e, v));
    return Json{{"cover", cover_to_json(emb.cover)},
                {"facets", emb.complex.facet_labels()},
                {"predicted_beta", emb.predicted_beta},
                {"full_dimensional", emb.full_dimensional}}
        .dump();
  }, py::arg("edges"), py::arg("vertices") = std::vector<std::string>{});
  m.def("balance_report", [](const Facets& f, const std::string& cover_json, std::uint64_t seed, int retries) {
    WitnessOptions options;
    options.seed = seed;
    options.retries = retries;
    return witness_json(balanced_witness(complex_of(f), parse_cover(Json::parse(cover_json)), options)).dump();
  }, py::arg("facets"), py::arg("cover_json"), py::arg("seed") = kDefaultSeed, py::arg("retries") = 8);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
