#include "sigmafold/service.hpp"

#include <httplib.h>

#include <charconv>
#include <sstream>

#include "sigmafold/error.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/io.hpp"
#include "sigmafold/report.hpp"
#include "sigmafold/vertex_types.hpp"

namespace sigma {

using nlohmann::json;

namespace {

struct HttpError {
  int status;
  std::string code;
  std::string message;
};

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_document(httplib::Response& res, const Session& s, int status = 200) {
  res.status = status;
  res.set_content(serialize(s.history.back(), s.params), "application/json");
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    auto j = json::parse(req.body);
    if (!j.is_object()) throw HttpError{400, "ParseError", "body must be a JSON object"};
    return j;
  } catch (const json::parse_error& e) {
    throw HttpError{400, "ParseError", e.what()};
  }
}

double number_param(const httplib::Request& req, const char* key, double fallback) {
  if (!req.has_param(key)) return fallback;
  auto text = req.get_param_value(key);
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw HttpError{400, "ParseError", std::string("bad value for ") + key};
  }
}

int int_param(const httplib::Request& req, const char* key, int fallback) {
  if (!req.has_param(key)) return fallback;
  auto text = req.get_param_value(key);
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw HttpError{400, "ParseError", std::string("bad value for ") + key};
  return v;
}

double fold_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw HttpError{400, "Domain", "t must lie in [0, 1]"};
  return t;
}

StarParams star_from_json(const json& j) {
  StarParams p;
  try {
    if (j.contains("r")) p.r = j.at("r").get<std::array<double, 4>>();
    if (j.contains("lambda")) p.lambda = j.at("lambda").get<double>();
  } catch (const json::exception& e) {
    throw HttpError{400, "ParseError", e.what()};
  }
  p.validate();
  return p;
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::Domain:
    case ErrorCode::VersionMismatch:
    case ErrorCode::NotBoundaryEdge:
      return 400;
    default:
      return 409;
  }
}

// Wraps a handler so that failures become JSON error bodies.
template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const HttpError& e) {
      send_json(res, {{"error", e.code}, {"message", e.message}}, e.status);
    } catch (const Error& e) {
      send_json(res, {{"error", std::string(to_string(e.code()))}, {"message", e.what()}},
                status_for(e.code()));
    } catch (const std::exception& e) {
      send_json(res, {{"error", "Internal"}, {"message", e.what()}}, 500);
    }
  };
}

}  // namespace

bool placement_collides(const SigmaComplex& after, const Facet& placed, const StarParams& params,
                        double t) {
  auto mesh = realize(after, params, t, {}, after.periodic() ? 2 : 1);
  const Facet key = after.canonical(placed);
  auto pairs = intersecting_pairs(mesh, 1e-9 * diameter(mesh));
  for (const auto& [a, b] : pairs)
    if (after.canonical(mesh.facets[a]) == key || after.canonical(mesh.facets[b]) == key) return true;
  return false;
}

std::shared_ptr<Session> Service::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t Service::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::shared_ptr<Session> Service::create(StarParams params, double t, SigmaComplex seed) {
  auto s = std::make_shared<Session>();
  s->params = params;
  s->t = t;
  s->history.push_back(std::move(seed));
  std::lock_guard lock(mutex_);
  s->id = "s" + std::to_string(next_id_++);
  sessions_[s->id] = s;
  return s;
}

void Service::attach(httplib::Server& server) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty())
      send_json(res, {{"error", res.status == 404 ? "NotFound" : "HttpError"}, {"message", "no such route"}},
                res.status);
  });

  auto session_of = [this](const httplib::Request& req) {
    auto s = find(req.matches[1]);
    if (!s) throw HttpError{404, "NotFound", "unknown session " + std::string(req.matches[1])};
    return s;
  };

  server.Post("/api/session", guarded([this](const httplib::Request& req, httplib::Response& res) {
    auto body = parse_body(req);
    StarParams params = body.contains("star") ? star_from_json(body["star"]) : StarParams{};
    double t = 0.5;
    if (body.contains("t")) {
      if (!body["t"].is_number()) throw HttpError{400, "ParseError", "t must be a number"};
      t = fold_t(body["t"].get<double>());
    }
    std::optional<SigmaComplex> seed;
    if (body.contains("document")) {
      auto doc = parse(body["document"].is_string() ? body["document"].get<std::string>()
                                                    : body["document"].dump());
      seed = std::move(doc.complex);
      if (!body.contains("star")) params = doc.params;
    } else if (body.contains("vertex_type")) {
      if (!body["vertex_type"].is_string()) throw HttpError{400, "ParseError", "vertex_type must be a string"};
      auto name = body["vertex_type"].get<std::string>();
      const auto* vt = find_vertex_type(name);
      if (!vt) throw HttpError{400, "Unrecognized", "no vertex type named " + name};
      seed = build(vertex_figure(vt->signature));
      seed->meta().generator = "vertex figure " + name;
    } else {
      Facet f = body.contains("facet") ? facet_from_json(body["facet"]) : Facet{{}, FacetType{0, 2}};
      std::vector<Facet> one{f};
      seed = build(one);
    }
    auto s = create(params, t, std::move(*seed));
    json out{{"id", s->id}, {"t", s->t}, {"document", json::parse(serialize(s->history.back(), s->params))}};
    send_json(res, out, 201);
  }));

  server.Get(R"(/api/session/([^/]+)/complex)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    std::shared_lock lock(s->mutex);
    send_document(res, *s);
  }));

  server.Get(R"(/api/session/([^/]+)/legal-moves)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    if (!req.has_param("tail") || !req.has_param("dir"))
      throw HttpError{400, "ParseError", "legal-moves needs tail=a,b,c,d and dir=k"};
    Coord4 tail;
    {
      std::stringstream ss(req.get_param_value("tail"));
      std::string part;
      int k = 0;
      while (std::getline(ss, part, ',')) {
        if (k == 4) throw HttpError{400, "ParseError", "tail needs 4 integers"};
        try {
          std::size_t used = 0;
          tail[k++] = std::stoll(part, &used);
          if (used != part.size()) throw std::invalid_argument("tail");
        } catch (const std::exception&) {
          throw HttpError{400, "ParseError", "tail needs 4 integers"};
        }
      }
      if (k != 4) throw HttpError{400, "ParseError", "tail needs 4 integers"};
    }
    int dir = int_param(req, "dir", 0);
    if (dir < 1 || dir > 4) throw HttpError{400, "ParseError", "dir must be 1..4"};
    std::shared_lock lock(s->mutex);
    const auto& c = s->history.back();
    double t = fold_t(number_param(req, "t", s->t));
    Edge edge{tail, dir - 1};
    json candidates = json::array();
    for (const auto& f : legal_extensions(c, edge)) {
      json item{{"facet", to_json(f)}};
      try {
        auto next = extend(c, f);
        item["legal"] = true;
        item["collision"] = placement_collides(next, f, s->params, t);
        item["reason"] = item["collision"].get<bool>() ? json("Collision") : json(nullptr);
      } catch (const Error& e) {
        item["legal"] = false;
        item["collision"] = false;
        item["reason"] = std::string(to_string(e.code()));
      }
      candidates.push_back(item);
    }
    send_json(res, {{"edge", to_json(edge)}, {"t", t}, {"candidates", candidates}});
  }));

  server.Post(R"(/api/session/([^/]+)/extend)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    auto body = parse_body(req);
    if (!body.contains("facet")) throw HttpError{400, "ParseError", "body needs \"facet\""};
    Facet f = facet_from_json(body["facet"]);
    std::unique_lock lock(s->mutex);
    double t = s->t;
    if (body.contains("t")) {
      if (!body["t"].is_number()) throw HttpError{400, "ParseError", "t must be a number"};
      t = fold_t(body["t"].get<double>());
    }
    auto next = extend(s->history.back(), f);
    if (placement_collides(next, f, s->params, t))
      throw HttpError{409, "Collision", to_string(f) + " cuts through the complex at t=" + std::to_string(t)};
    s->history.push_back(std::move(next));
    send_document(res, *s);
  }));

  server.Post(R"(/api/session/([^/]+)/undo)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    std::unique_lock lock(s->mutex);
    if (s->history.size() < 2) throw HttpError{409, "NothingToUndo", "already at the first state"};
    s->history.pop_back();
    send_document(res, *s);
  }));

  server.Post(R"(/api/session/([^/]+)/preview)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    auto body = parse_body(req);
    if (!body.contains("t") || !body["t"].is_number()) throw HttpError{400, "ParseError", "body needs numeric \"t\""};
    double t = fold_t(body["t"].get<double>());
    std::unique_lock lock(s->mutex);
    s->t = t;
    send_json(res, {{"id", s->id}, {"t", s->t}});
  }));

  server.Get(R"(/api/session/([^/]+)/mesh)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    std::shared_lock lock(s->mutex);
    double t = fold_t(number_param(req, "t", s->t));
    int extent = int_param(req, "extent", 1);
    if (extent < 1 || extent > 8) throw HttpError{400, "Domain", "extent must be 1..8"};
    const auto& c = s->history.back();
    auto out = mesh_json(c, realize(c, s->params, t, {}, extent));
    out["t"] = t;
    send_json(res, out);
  }));

  server.Get(R"(/api/session/([^/]+)/collisions)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    std::shared_lock lock(s->mutex);
    SweepOptions opt;
    opt.steps = int_param(req, "steps", 50);
    opt.extent = int_param(req, "extent", 1);
    opt.t_lo = number_param(req, "t_lo", opt.t_lo);
    opt.t_hi = number_param(req, "t_hi", opt.t_hi);
    if (opt.extent < 1 || opt.extent > 8) throw HttpError{400, "Domain", "extent must be 1..8"};
    send_json(res, to_json(collision_sweep(s->history.back(), s->params, opt)));
  }));

  server.Get(R"(/api/session/([^/]+)/classify)", guarded([session_of](const httplib::Request& req, httplib::Response& res) {
    auto s = session_of(req);
    std::shared_lock lock(s->mutex);
    const auto& c = s->history.back();
    json out = to_json(vertex_census(c));
    json verts = json::array();
    for (const auto& [v, name] : vertex_labels(c)) verts.push_back({{"vertex", to_json(v)}, {"type", name}});
    out["vertices"] = verts;
    out["polyhedron"] = to_json(is_polyhedron(c));
    send_json(res, out);
  }));
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  Service service;
  service.attach(server);
  return server.listen(host, port);
}

}  // namespace sigma
