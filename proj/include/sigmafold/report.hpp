#pragma once

// JSON views shared by the command-line tool and the HTTP service.

#include "json.hpp"
#include "sigmafold/complex.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/topology.hpp"
#include "sigmafold/vertex_types.hpp"

namespace sigma {

nlohmann::json to_json(const Coord4& c);
nlohmann::json to_json(const Facet& f);  // {"anchor": [...], "type": [i, j]}, 1-based
nlohmann::json to_json(const Edge& e);   // {"tail": [...], "dir": k}, 1-based
nlohmann::json to_json(const VertexCensus& census);
nlohmann::json to_json(const PolyhedronReport& report);
nlohmann::json to_json(const CollisionReport& report);
nlohmann::json to_json(const QuotientEuler& q);

// {vertices: [{coord, position}], quads: [[i,j,k,l]], facets, vertex_types}
nlohmann::json mesh_json(const SigmaComplex& complex, const Mesh& mesh);

// Throws ParseError on malformed input.
Coord4 coord_from_json(const nlohmann::json& j);
Facet facet_from_json(const nlohmann::json& j);

// Per canonical vertex: catalog name, "boundary", "non-manifold" or
// "unrecognized".
std::map<Coord4, std::string> vertex_labels(const SigmaComplex& complex);

}  // namespace sigma
