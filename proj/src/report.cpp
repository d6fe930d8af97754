#include "sigmafold/report.hpp"

#include "sigmafold/error.hpp"

namespace sigma {

using nlohmann::json;

json to_json(const Coord4& c) { return json::array({c[0], c[1], c[2], c[3]}); }

json to_json(const Facet& f) {
  return {{"anchor", to_json(f.anchor)}, {"type", {f.type.i + 1, f.type.j + 1}}};
}

json to_json(const Edge& e) { return {{"tail", to_json(e.tail)}, {"dir", e.dir + 1}}; }

json to_json(const VertexCensus& c) {
  json types = json::object();
  for (const auto& [name, n] : c.types) types[name] = n;
  json at = json::array();
  for (const auto& v : c.unrecognized_at) at.push_back(to_json(v));
  return {{"types", types},
          {"interior", c.interior()},
          {"boundary", c.boundary},
          {"non_manifold", c.non_manifold},
          {"unrecognized", c.unrecognized},
          {"unrecognized_at", at}};
}

json to_json(const PolyhedronReport& r) {
  json edges = json::array(), verts = json::array();
  for (const auto& e : r.bad_edges) edges.push_back(to_json(e));
  for (const auto& v : r.bad_vertices) verts.push_back(to_json(v));
  return {{"ok", r.ok}, {"bad_edges", edges}, {"bad_vertices", verts}};
}

json to_json(const CollisionReport& r) {
  json hits = json::array();
  for (const auto& h : r.hits)
    hits.push_back({{"a", to_json(h.a)}, {"b", to_json(h.b)}, {"t_lo", h.t_lo}, {"t_hi", h.t_hi}});
  return {{"steps", r.steps},
          {"t_lo", r.t_lo},
          {"t_hi", r.t_hi},
          {"resolution", r.resolution},
          {"empty", r.empty()},
          {"hits", hits}};
}

json to_json(const QuotientEuler& q) {
  json j{{"vertices", q.vertices},
         {"edges", q.edges},
         {"faces", q.faces},
         {"chi", q.chi},
         {"orientable", q.orientable},
         {"odd_chi", q.odd_chi},
         {"curvature_sum", q.curvature_sum},
         {"gauss_bonnet_residual", q.gauss_bonnet_residual}};
  j["genus"] = q.genus ? json(*q.genus) : json(nullptr);
  return j;
}

std::map<Coord4, std::string> vertex_labels(const SigmaComplex& complex) {
  std::map<Coord4, std::string> out;
  for (const auto& v : complex.vertices()) {
    switch (link_shape(complex, v)) {
      case LinkShape::Path:
        out[v] = "boundary";
        continue;
      case LinkShape::NonManifold:
        out[v] = "non-manifold";
        continue;
      case LinkShape::Cycle:
        break;
    }
    try {
      out[v] = classify_vertex(complex, v).name;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unrecognized) throw;
      out[v] = "unrecognized";
    }
  }
  return out;
}

json mesh_json(const SigmaComplex& complex, const Mesh& mesh) {
  auto labels = vertex_labels(complex);
  std::map<Coord4, std::size_t> index;
  json verts = json::array(), types = json::array();
  for (const auto& [c, p] : mesh.vertices) {
    index.emplace(c, index.size());
    verts.push_back({{"coord", to_json(c)}, {"position", {p.x, p.y, p.z}}});
    types.push_back(labels[complex.canonical(c)]);
  }
  json quads = json::array(), facets = json::array();
  for (std::size_t k = 0; k < mesh.quads.size(); ++k) {
    json q = json::array();
    for (const auto& c : mesh.quads[k]) q.push_back(index.at(c));
    quads.push_back(q);
    facets.push_back(to_json(mesh.facets[k]));
  }
  return {{"alpha", mesh.star.alpha()},
          {"vertices", verts},
          {"quads", quads},
          {"facets", facets},
          {"vertex_types", types}};
}

Coord4 coord_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::ParseError, "expected an array of 4 integers");
  Coord4 c;
  for (int k = 0; k < 4; ++k) {
    if (!j[k].is_number_integer()) throw Error(ErrorCode::ParseError, "expected an array of 4 integers");
    c[k] = j[k].get<std::int64_t>();
  }
  return c;
}

Facet facet_from_json(const json& j) {
  if (!j.is_object() || !j.contains("anchor") || !j.contains("type"))
    throw Error(ErrorCode::ParseError, "facet needs \"anchor\" and \"type\"");
  const auto& t = j["type"];
  if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
    throw Error(ErrorCode::ParseError, "facet type must be [i, j]");
  int a = t[0].get<int>(), b = t[1].get<int>();
  if (a < 1 || a > 4 || b < 1 || b > 4 || a == b)
    throw Error(ErrorCode::ParseError, "facet type indices must be distinct, 1..4");
  return {coord_from_json(j["anchor"]), make_facet_type(a - 1, b - 1)};
}

}  // namespace sigma
