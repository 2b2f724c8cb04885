#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cmbal/balancing.hpp"
#include "cmbal/complex.hpp"
#include "cmbal/graph.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/homology.hpp"
#include "cmbal/polynomial.hpp"

namespace cmbal {

using Json = nlohmann::json;

/// One facet per line; '#' lines and blank lines are skipped; "dim: -1"
/// alone denotes {∅}. Throws InputError with the line number on bad input.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_text(const std::string& text);
/// "u v" edge lines and "vertex: u" declarations.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
/// JSON list of {"type": "points" | "graph", "vertices", "edges", "removed_edge"}.
JoinCover parse_cover(const Json& json);

/// Whole file as bytes; throws InputError if it cannot be read.
std::string read_file(const std::string& path);

void write_complex(std::ostream& out, const SimplicialComplex& complex);
void write_graph(std::ostream& out, const Graph& graph);
Json cover_to_json(const JoinCover& cover);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

/// {"f": [...], "h": [...], "dim": d}
Json face_numbers_json(const SimplicialComplex& complex);
Json facets_json(const SimplicialComplex& complex);
/// {"basis": [{label: exponent}], "F": [...]}
Json multicomplex_json(const Multicomplex& m, const std::vector<std::string>& universe);
/// Dense matrix of "p/q" strings.
Json matrix_json(const RationalMatrix& m);
/// {"cm": bool, "betti": [...], "violation": {"face", "degree", "link_dim"} | null}
Json cm_json(const CmResult& result);
Json witness_json(const BalancedWitness& witness);
Json pg_json(const PGDecomposition& pg, const Graph& g);
Json verdict_json(const ClassificationVerdict& verdict, const Graph& g);

}  // namespace cmbal
