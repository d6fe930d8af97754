#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "sigmafold/complex.hpp"
#include "sigmafold/star.hpp"

namespace httplib {
class Server;
}

namespace sigma {

// One design session: the current complex on top of its undo history.
struct Session {
  std::string id;
  StarParams params;
  double t = 0.5;  // preview fold parameter used to veto colliding moves
  std::vector<SigmaComplex> history;

  mutable std::shared_mutex mutex;
};

// In-memory design sessions behind a JSON/HTTP surface:
//   POST /api/session                       {star?, vertex_type?, facet?, document?, t?}
//   GET  /api/session/{id}/complex
//   GET  /api/session/{id}/legal-moves?tail=a,b,c,d&dir=k
//   POST /api/session/{id}/extend           {facet, t?}
//   POST /api/session/{id}/undo
//   POST /api/session/{id}/preview          {t}
//   GET  /api/session/{id}/mesh?t=&extent=
//   GET  /api/session/{id}/collisions?steps=&extent=
//   GET  /api/session/{id}/classify
// Star indices are 1-based on the wire.
class Service {
 public:
  void attach(httplib::Server& server);

  std::shared_ptr<Session> find(const std::string& id) const;
  std::size_t session_count() const;

 private:
  std::shared_ptr<Session> create(StarParams params, double t, SigmaComplex seed);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

// True when some copy of `placed` realized at t cuts through another facet of
// `after`.
bool placement_collides(const SigmaComplex& after, const Facet& placed, const StarParams& params,
                        double t);

// Blocking; returns false if the port could not be bound.
bool serve(const std::string& host, int port);

}  // namespace sigma
