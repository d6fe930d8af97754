#include "sigmafold/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sigmafold/error.hpp"

namespace sigma {

using nlohmann::json;

namespace {

json coord_json(const Coord4& c) { return json::array({c[0], c[1], c[2], c[3]}); }

[[noreturn]] void bad(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::ParseError, "at " + where + ": " + why);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<std::int64_t>();
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) bad(where, "expected a number");
  return v.get<double>();
}

Coord4 coord(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 4) bad(where, "expected an array of 4 integers");
  Coord4 c;
  for (int k = 0; k < 4; ++k) c[k] = integer(v[k], where + "/" + std::to_string(k));
  return c;
}

std::string fmt12(double x) {
  if (x == 0.0) x = 0.0;  // no negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string serialize(const SigmaComplex& complex, const StarParams& params) {
  json doc;
  doc["format"] = "sigmafold-complex";
  doc["version"] = kDocumentVersion;
  doc["star"] = {{"r", params.r}, {"lambda", params.lambda}};
  json facets = json::array();
  for (const auto& f : complex.facets())
    facets.push_back({{"anchor", coord_json(f.anchor)}, {"type", {f.type.i + 1, f.type.j + 1}}});
  doc["facets"] = std::move(facets);
  json periods = json::array();
  for (const auto& p : complex.periods().generators()) periods.push_back(coord_json(p));
  doc["periods"] = std::move(periods);
  const auto& m = complex.meta();
  doc["meta"] = {{"generator", m.generator},
                 {"extent", m.extent},
                 {"requires", {{"r1_eq_r2", m.requires_.r12_equal}, {"r3_eq_r4", m.requires_.r34_equal}}}};
  return doc.dump(2) + "\n";
}

Document parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) bad("/", "expected an object");
  auto version = integer(field(doc, "version", "/"), "/version");
  if (version != kDocumentVersion)
    throw Error(ErrorCode::VersionMismatch, "document version " + std::to_string(version) +
                                                ", expected " + std::to_string(kDocumentVersion));

  StarParams params;
  if (doc.contains("star")) {
    const auto& star = doc["star"];
    const auto& r = field(star, "r", "/star");
    if (!r.is_array() || r.size() != 4) bad("/star/r", "expected an array of 4 numbers");
    for (int k = 0; k < 4; ++k) params.r[k] = number(r[k], "/star/r/" + std::to_string(k));
    params.lambda = number(field(star, "lambda", "/star"), "/star/lambda");
    params.validate();
  }

  const auto& fs = field(doc, "facets", "/");
  if (!fs.is_array()) bad("/facets", "expected an array");
  std::vector<Facet> facets;
  for (std::size_t n = 0; n < fs.size(); ++n) {
    std::string where = "/facets/" + std::to_string(n);
    Coord4 anchor = coord(field(fs[n], "anchor", where), where + "/anchor");
    const auto& t = field(fs[n], "type", where);
    if (!t.is_array() || t.size() != 2) bad(where + "/type", "expected [i, j]");
    auto i = integer(t[0], where + "/type/0"), j = integer(t[1], where + "/type/1");
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) bad(where + "/type", "indices must be distinct, 1..4");
    FacetType type = make_facet_type(static_cast<StarIndex>(i - 1), static_cast<StarIndex>(j - 1));
    if (!type.admissible())
      throw Error(ErrorCode::ForbiddenFacet, "at " + where + ": type " + to_string(type) + " is forbidden");
    facets.push_back({anchor, type});
  }

  std::vector<Coord4> periods;
  if (doc.contains("periods")) {
    const auto& ps = doc["periods"];
    if (!ps.is_array()) bad("/periods", "expected an array");
    for (std::size_t n = 0; n < ps.size(); ++n) periods.push_back(coord(ps[n], "/periods/" + std::to_string(n)));
  }

  auto complex = build(facets, periods);
  if (doc.contains("meta")) {
    const auto& m = doc["meta"];
    if (!m.is_object()) bad("/meta", "expected an object");
    auto& meta = complex.meta();
    if (m.contains("generator")) {
      if (!m["generator"].is_string()) bad("/meta/generator", "expected a string");
      meta.generator = m["generator"].get<std::string>();
    }
    if (m.contains("extent")) meta.extent = static_cast<int>(integer(m["extent"], "/meta/extent"));
    if (m.contains("requires")) {
      const auto& rq = m["requires"];
      auto flag = [&](const char* key) {
        if (!rq.contains(key)) return false;
        if (!rq[key].is_boolean()) bad(std::string("/meta/requires/") + key, "expected a boolean");
        return rq[key].get<bool>();
      };
      meta.requires_.r12_equal = flag("r1_eq_r2");
      meta.requires_.r34_equal = flag("r3_eq_r4");
    }
  }
  return {std::move(complex), params};
}

std::string export_obj(const Mesh& mesh) {
  std::ostringstream out;
  std::map<Coord4, std::size_t> index;
  for (const auto& [c, p] : mesh.vertices) {
    index.emplace(c, index.size() + 1);
    out << "v " << fmt12(p.x) << ' ' << fmt12(p.y) << ' ' << fmt12(p.z) << '\n';
  }
  for (const auto& q : mesh.quads) {
    out << 'f';
    for (const auto& c : q) out << ' ' << index.at(c);
    out << '\n';
  }
  return out.str();
}

QuadMesh import_obj(std::string_view text) {
  QuadMesh mesh;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto where = "line " + std::to_string(lineno);
    if (tag == "v") {
      Vec3 p;
      if (!(ls >> p.x >> p.y >> p.z)) throw Error(ErrorCode::ParseError, where + ": bad vertex");
      mesh.points.push_back(p);
    } else if (tag == "f") {
      std::vector<std::size_t> ids;
      std::string tok;
      while (ls >> tok) {
        long long k = 0;
        try {
          k = std::stoll(tok.substr(0, tok.find('/')));
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, where + ": bad face index '" + tok + "'");
        }
        if (k < 0) k += static_cast<long long>(mesh.points.size()) + 1;
        if (k < 1 || k > static_cast<long long>(mesh.points.size()))
          throw Error(ErrorCode::ParseError, where + ": face index out of range");
        ids.push_back(static_cast<std::size_t>(k - 1));
      }
      if (ids.size() != 4)
        throw Error(ErrorCode::ParseError, where + ": expected a quad, got " + std::to_string(ids.size()) + " vertices");
      mesh.faces.push_back({ids[0], ids[1], ids[2], ids[3]});
    }
  }
  return mesh;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

std::vector<AnimationFrame> export_animation(const SigmaComplex& complex, const StarParams& params,
                                             int frames, const std::filesystem::path& dir,
                                             double margin, int extent) {
  if (frames < 2) throw DomainError("an animation needs at least two frames");
  if (!(margin >= 0.0 && margin < 0.5)) throw DomainError("margin must lie in [0, 0.5)");
  std::vector<double> ts;
  for (int k = 0; k < frames; ++k) ts.push_back(margin + (1.0 - 2.0 * margin) * k / (frames - 1));
  return export_animation(complex, params, ts, dir, extent);
}

std::vector<AnimationFrame> export_animation(const SigmaComplex& complex, const StarParams& params,
                                             const std::vector<double>& ts,
                                             const std::filesystem::path& dir, int extent) {
  if (ts.size() < 2) throw DomainError("an animation needs at least two frames");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw Error(ErrorCode::IoError, "cannot create " + dir.string());
  std::vector<AnimationFrame> out;
  json manifest = json::array();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    auto mesh = realize(complex, params, ts[k], {}, extent);
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.obj", k);
    write_file(dir / name, export_obj(mesh));
    AnimationFrame fr{static_cast<int>(k), ts[k], mesh.star.alpha(), dir / name};
    manifest.push_back({{"frame", fr.frame}, {"t", fr.t}, {"alpha_radians", fr.alpha}, {"file", name}});
    out.push_back(fr);
  }
  write_file(dir / "manifest.json", json{{"frames", manifest}}.dump(2) + "\n");
  return out;
}

}  // namespace sigma
