#include "cmbal/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <openssl/evp.h>

#include "cmbal/errors.hpp"

namespace cmbal {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> index;
  std::vector<VertexSet> faces;
  int empty_marker_line = 0;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("dim:", 0) == 0) {
      if (trim(line.substr(4)) != "-1") fail_at(line_no, "only \"dim: -1\" is accepted");
      empty_marker_line = line_no;
      continue;
    }
    VertexSet face;
    for (const auto& label : tokens(line)) {
      auto [it, inserted] = index.emplace(label, static_cast<int>(vertices.size()));
      if (inserted) {
        if (vertices.size() == kMaxVertices) fail_at(line_no, "more than 64 vertices");
        vertices.push_back(label);
      }
      if (face.contains(it->second)) fail_at(line_no, "vertex '" + label + "' repeated in a facet");
      face.insert(it->second);
    }
    faces.push_back(face);
  }
  if (empty_marker_line != 0) {
    if (!faces.empty()) fail_at(empty_marker_line, "\"dim: -1\" cannot be combined with facets");
    return SimplicialComplex();
  }
  if (faces.empty()) throw InputError("the void complex (no faces) is not accepted");
  return SimplicialComplex(vertices, faces);
}

SimplicialComplex parse_complex_text(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

Graph parse_graph(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_set<std::string> known;
  std::vector<std::pair<LabelEdge, int>> edges;
  auto declare = [&](const std::string& label) {
    if (known.insert(label).second) labels.push_back(label);
  };
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("vertex:", 0) == 0) {
      const auto t = tokens(line.substr(7));
      if (t.size() != 1) fail_at(line_no, "expected \"vertex: <label>\"");
      declare(t[0]);
      continue;
    }
    const auto t = tokens(line);
    if (t.size() != 2) fail_at(line_no, "expected an edge \"u v\"");
    if (t[0] == t[1]) fail_at(line_no, "loop at '" + t[0] + "'");
    declare(t[0]);
    declare(t[1]);
    edges.push_back({{t[0], t[1]}, line_no});
  }
  if (labels.size() > kMaxVertices) throw InputError("more than 64 vertices");
  Graph g(labels);
  for (const auto& [e, line] : edges) {
    const int u = g.index_of(e.first);
    const int v = g.index_of(e.second);
    if (g.adjacent(u, v)) fail_at(line, "duplicate edge " + e.first + " " + e.second);
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

namespace {

std::string label_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(where + ": vertex labels must be strings or integers");
}

LabelEdge edge_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": an edge is a list of two labels");
  return {label_of(j[0], where), label_of(j[1], where)};
}

}  // namespace

JoinCover parse_cover(const Json& json) {
  if (!json.is_array()) throw InputError("cover must be a JSON list of factors");
  JoinCover cover;
  for (std::size_t k = 0; k < json.size(); ++k) {
    const Json& f = json[k];
    const std::string where = "cover factor " + std::to_string(k + 1);
    if (!f.is_object() || !f.contains("type") || !f["type"].is_string()) throw InputError(where + ": missing \"type\"");
    CoverFactor factor;
    const std::string type = f["type"].get<std::string>();
    if (type == "points") {
      factor.type = CoverFactor::Type::Points;
    } else if (type == "graph") {
      factor.type = CoverFactor::Type::Graph;
    } else {
      throw InputError(where + ": unknown type '" + type + "'");
    }
    if (!f.contains("vertices") || !f["vertices"].is_array()) throw InputError(where + ": missing \"vertices\"");
    for (const auto& v : f["vertices"]) factor.vertices.push_back(label_of(v, where));
    if (f.contains("edges") && !f["edges"].is_null()) {
      if (!f["edges"].is_array()) throw InputError(where + ": \"edges\" must be a list");
      for (const auto& e : f["edges"]) factor.edges.push_back(edge_of(e, where));
    }
    if (f.contains("removed_edge") && !f["removed_edge"].is_null()) {
      factor.removed_edge = edge_of(f["removed_edge"], where);
    }
    if (factor.type == CoverFactor::Type::Points && (!factor.edges.empty() || factor.removed_edge)) {
      throw InputError(where + ": a points factor has no edges");
    }
    try {
      factor.as_graph();
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    cover.push_back(std::move(factor));
  }
  return cover;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
  if (complex.dimension() < 0) {
    out << "dim: -1\n";
    return;
  }
  for (const auto& facet : complex.facet_labels()) {
    for (std::size_t i = 0; i < facet.size(); ++i) out << (i ? " " : "") << facet[i];
    out << "\n";
  }
}

void write_graph(std::ostream& out, const Graph& graph) {
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (graph.degree(v) == 0) out << "vertex: " << graph.label(v) << "\n";
  }
  for (const auto& [u, v] : graph.label_edges()) out << u << " " << v << "\n";
}

Json cover_to_json(const JoinCover& cover) {
  Json out = Json::array();
  for (const auto& f : cover) {
    Json j;
    j["type"] = f.type == CoverFactor::Type::Points ? "points" : "graph";
    j["vertices"] = f.vertices;
    Json edges = Json::array();
    for (const auto& [u, v] : f.edges) edges.push_back({u, v});
    j["edges"] = edges;
    j["removed_edge"] = f.removed_edge ? Json{f.removed_edge->first, f.removed_edge->second} : Json(nullptr);
    out.push_back(j);
  }
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Json face_numbers_json(const SimplicialComplex& complex) {
  return {{"f", f_vector(complex).entries}, {"h", h_vector(complex).entries}, {"dim", complex.dimension()}};
}

Json facets_json(const SimplicialComplex& complex) {
  Json out = Json::array();
  for (const auto& facet : complex.facet_labels()) out.push_back(facet);
  return out;
}

Json multicomplex_json(const Multicomplex& m, const std::vector<std::string>& universe) {
  Json basis = Json::array();
  for (const auto& mono : m.monomials()) {
    Json entry = Json::object();
    for (std::size_t v = 0; v < mono.num_variables(); ++v) {
      if (mono.exponent(v) > 0) entry[universe[v]] = mono.exponent(v);
    }
    basis.push_back(entry);
  }
  return {{"basis", basis}, {"F", f_vector_of_multicomplex(m)}};
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json cm_json(const CmResult& result) {
  Json out{{"cm", result.cohen_macaulay}, {"pure", result.pure}, {"betti", result.betti.reduced}};
  if (result.violation) {
    out["violation"] = {{"face", result.violation->labels},
                        {"degree", result.violation->degree},
                        {"link_dim", result.violation->link_dimension}};
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

Json witness_json(const BalancedWitness& w) {
  const BalancingPair& p = w.pair;
  Json coloring = Json::object();
  for (int v = 0; v < w.as_complex.num_vertices(); ++v) {
    coloring[w.as_complex.vertices()[static_cast<std::size_t>(v)]] = w.coloring.colors[static_cast<std::size_t>(v)];
  }
  Json blocks = Json::array();
  for (const auto& block : p.blocks) {
    Json labels = Json::array();
    for (std::size_t v : block) labels.push_back(p.variables[v]);
    blocks.push_back(labels);
  }
  Json checks = Json::object();
  Json details = Json::object();
  for (const auto& c : w.checks) {
    checks[c.name] = c.passed;
    if (!c.detail.empty()) details[c.name] = c.detail;
  }
  const Json basis = multicomplex_json(w.basis, p.variables);
  // F is padded with zeros to the length of h.
  auto f = f_vector_of_multicomplex(w.basis);
  f.resize(std::max(f.size(), w.verified_h.entries.size()), 0);
  return {{"h", w.verified_h.entries},
          {"F", f},
          {"d", p.d},
          {"coloring", coloring},
          {"basis", basis["basis"]},
          {"variables", p.variables},
          {"T", std::vector<std::string>(p.variables.end() - p.d, p.variables.end())},
          {"blocks", blocks},
          {"g", matrix_json(p.g.matrix)},
          {"specialization",
           {{"z1", to_string(w.specialization.z1)},
            {"z2", to_string(w.specialization.z2)},
            {"z3", to_string(w.specialization.z3)},
            {"z4", to_string(w.specialization.z4)}}},
          {"attempts", w.attempts},
          {"checks", checks},
          {"check_details", details},
          {"complex", facets_json(w.as_complex)}};
}

Json pg_json(const PGDecomposition& pg, const Graph& g) {
  Json pendant = Json::array();
  for (auto [u, v] : pg.pendant_edges) pendant.push_back({g.label(u), g.label(v)});
  Json cycles = Json::array();
  for (const auto& c : pg.basic_cycles) {
    Json labels = Json::array();
    for (int v : c) labels.push_back(g.label(v));
    cycles.push_back(labels);
  }
  return {{"pendant_edges", pendant}, {"basic_cycles", cycles}, {"predicted_beta", pg.predicted_beta()}};
}

Json verdict_json(const ClassificationVerdict& verdict, const Graph& g) {
  Json out{{"verdict", to_string(verdict.kind)}, {"girth", verdict.girth ? Json(*verdict.girth) : Json("infinity")}};
  if (verdict.kind != VerdictKind::GirthTooSmall) out["beta"] = verdict.beta;
  if (verdict.kind == VerdictKind::Exceptional) out["name"] = verdict.exceptional_name;
  if (verdict.pg) out["decomposition"] = pg_json(*verdict.pg, g);
  return out;
}

}  // namespace cmbal
