#include "sigmafold/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>
#include <thread>

#include "sigmafold/error.hpp"

namespace sigma {

namespace {

Vec3 position(const Coord4& c, const std::array<Vec3, 4>& v, const Vec3& base) {
  Vec3 p = base;
  for (int k = 0; k < 4; ++k) p += static_cast<double>(c[k]) * v[k];
  return p;
}

Quad quad_of(const Facet& f, const std::array<Vec3, 4>& v) {
  const auto cs = f.corners();
  return {position(cs[0], v, {}), position(cs[1], v, {}), position(cs[2], v, {}), position(cs[3], v, {})};
}

}  // namespace

Quad Mesh::quad(std::size_t k) const {
  const auto& q = quads[k];
  return {vertices.at(q[0]), vertices.at(q[1]), vertices.at(q[2]), vertices.at(q[3])};
}

std::vector<Facet> replicate(const SigmaComplex& complex, int extent) {
  if (!complex.periodic()) return complex.facets();
  if (extent < 1) throw DomainError("replication extent must be at least 1");

  // Develop the representatives into one patch, connected across shared
  // edges where the complex allows it and through shared corners otherwise.
  std::map<Facet, Facet> placed;  // representative -> lift
  std::deque<Facet> queue{complex.facets().front()};
  placed.emplace(complex.facets().front(), complex.facets().front());
  auto grow_by_edges = [&] {
    while (!queue.empty()) {
      const Facet f = queue.front();
      queue.pop_front();
      for (const auto& e : facet_edges(f)) {
        for (const auto& inc : complex.facets_on_edge(e)) {
          const Facet rep = complex.canonical(inc.facet);
          if (placed.emplace(rep, inc.facet).second) queue.push_back(inc.facet);
        }
      }
    }
  };
  grow_by_edges();
  while (placed.size() < complex.size()) {
    for (const auto& [rep, lift] : std::map<Facet, Facet>(placed)) {
      for (const auto& corner : lift.corners()) {
        for (const auto& inc : complex.facets_at(corner)) {
          const Facet r = complex.canonical(inc.facet);
          if (placed.emplace(r, inc.facet).second) queue.push_back(inc.facet);
        }
      }
      if (!queue.empty()) break;
    }
    grow_by_edges();
  }
  std::vector<Facet> patch;
  for (const auto& [rep, lift] : placed) patch.push_back(lift);

  const auto& gens = complex.periods().generators();
  std::vector<Facet> out;
  std::vector<int> idx(gens.size(), 0);
  while (true) {
    Coord4 shift;
    for (std::size_t k = 0; k < gens.size(); ++k) shift += static_cast<std::int64_t>(idx[k]) * gens[k];
    for (const auto& f : patch) out.push_back({f.anchor + shift, f.type});
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == extent) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

Mesh realize(const SigmaComplex& complex, const StarState& star, Vec3 base, int extent) {
  Mesh m;
  m.star = star;
  m.base = base;
  m.facets = replicate(complex, extent);
  const auto v = star.vectors();
  for (const auto& f : m.facets) {
    const auto cs = f.corners();
    m.quads.push_back(cs);
    for (const auto& c : cs) m.vertices.try_emplace(c, position(c, v, base));
  }
  return m;
}

Mesh realize(const SigmaComplex& complex, const StarParams& params, double t, Vec3 base, int extent) {
  return realize(complex, StarState::at(params, t), base, extent);
}

double diameter(const Mesh& mesh) {
  if (mesh.vertices.empty()) return 0.0;
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi = -lo;
  for (const auto& [c, p] : mesh.vertices) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return norm(hi - lo);
}

double reference_diameter(const SigmaComplex& complex, const StarParams& params, int extent) {
  return diameter(realize(complex, params, 0.5, {}, extent));
}

CongruenceReport congruence_check(const Mesh& a, const Mesh& b, double tol) {
  CongruenceReport rep;
  if (a.facets != b.facets) {
    rep.ok = false;
    rep.max_deviation = std::numeric_limits<double>::infinity();
    return rep;
  }
  for (std::size_t k = 0; k < a.facets.size(); ++k) {
    const Quad qa = a.quad(k), qb = b.quad(k);
    double worst = 0.0;
    for (int c : {1, 2, 3}) {
      const double la = norm(qa[c] - qa[0]), lb = norm(qb[c] - qb[0]);
      worst = std::max(worst, std::abs(la - lb) / std::max({la, lb, 1e-300}));
    }
    rep.max_deviation = std::max(rep.max_deviation, worst);
    if (!(worst < tol)) rep.failing.push_back(a.facets[k]);
  }
  rep.ok = rep.failing.empty();
  return rep;
}

CongruenceReport congruence_check(const SigmaComplex& complex, const StarParams& params, double t1,
                                  double t2, double tol, int extent) {
  return congruence_check(realize(complex, params, t1, {}, extent), realize(complex, params, t2, {}, extent),
                          tol);
}

double collapse_extent(const SigmaComplex& complex, const StarParams& params, CollapsePlane plane,
                       int extent) {
  const Mesh m = realize(complex, params, plane == CollapsePlane::X0 ? 1.0 : 0.0, {}, extent);
  double worst = 0.0;
  for (const auto& [c, p] : m.vertices) {
    worst = std::max(worst, std::abs(plane == CollapsePlane::X0 ? p.x : p.y));
  }
  return worst;
}

namespace {

// Open parameter interval of the line o + s d that lies inside the quad,
// shrunk by eps. Empty optional if there is none.
std::optional<std::pair<double, double>> inside_interval(const Quad& q, const Vec3& n, const Vec3& o,
                                                         const Vec3& d, double eps) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) {
    const Vec3& a = q[k];
    const Vec3 e = q[(k + 1) % 4] - a;
    Vec3 in = cross(n, e);
    if (dot(in, q[(k + 2) % 4] - a) < 0) in = -in;
    in = in * (1.0 / norm(in));
    const double f0 = dot(in, o - a);
    const double f1 = dot(in, d);
    if (std::abs(f1) < 1e-15) {
      if (f0 <= eps) return std::nullopt;
      continue;
    }
    const double s = (eps - f0) / f1;
    if (f1 > 0) lo = std::max(lo, s);
    else hi = std::min(hi, s);
  }
  if (lo >= hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool coplanar_overlap(const Quad& p, const Quad& q, const Vec3& n, double eps) {
  for (const Quad* poly : {&p, &q}) {
    for (int k = 0; k < 4; ++k) {
      const Vec3 axis = cross(n, (*poly)[(k + 1) % 4] - (*poly)[k]);
      const double len = norm(axis);
      if (len == 0.0) continue;
      double pmin = std::numeric_limits<double>::infinity(), pmax = -pmin;
      double qmin = pmin, qmax = -pmin;
      for (int c = 0; c < 4; ++c) {
        const double a = dot(p[c], axis) / len, b = dot(q[c], axis) / len;
        pmin = std::min(pmin, a);
        pmax = std::max(pmax, a);
        qmin = std::min(qmin, b);
        qmax = std::max(qmax, b);
      }
      if (pmax <= qmin + eps || qmax <= pmin + eps) return false;
    }
  }
  return true;
}

}  // namespace

bool facets_intersect(const Quad& a, const Quad& b, double tol) {
  Vec3 na = cross(a[1] - a[0], a[3] - a[0]);
  Vec3 nb = cross(b[1] - b[0], b[3] - b[0]);
  const double area_a = norm(na), area_b = norm(nb);
  if (area_a <= tol * tol || area_b <= tol * tol) {
    throw Error(ErrorCode::DegenerateQuad, "parallelogram area below tolerance");
  }
  na = na * (1.0 / area_a);
  nb = nb * (1.0 / area_b);
  Vec3 d = cross(na, nb);
  const double dn = norm(d);
  if (dn < 1e-9) {
    if (std::abs(dot(na, b[0] - a[0])) > tol) return false;
    return coplanar_overlap(a, b, na, tol);
  }
  d = d * (1.0 / dn);
  // The point of the intersection line closest to the origin solves
  // [na; nb; d] x = [na.a0; nb.b0; 0].
  const double ha = dot(na, a[0]), hb = dot(nb, b[0]);
  const Vec3 o = (cross(nb, d) * ha + cross(d, na) * hb) * (1.0 / det3(na, nb, d));
  const auto ia = inside_interval(a, na, o, d, tol);
  if (!ia) return false;
  const auto ib = inside_interval(b, nb, o, d, tol);
  if (!ib) return false;
  return std::max(ia->first, ib->first) < std::min(ia->second, ib->second) - tol;
}

namespace {

struct Box {
  Vec3 lo, hi;
};

Box box_of(const Quad& q) {
  Box b{q[0], q[0]};
  for (const auto& p : q) {
    b.lo = {std::min(b.lo.x, p.x), std::min(b.lo.y, p.y), std::min(b.lo.z, p.z)};
    b.hi = {std::max(b.hi.x, p.x), std::max(b.hi.y, p.y), std::max(b.hi.z, p.z)};
  }
  return b;
}

bool share_edge(const std::array<Coord4, 4>& a, const std::array<Coord4, 4>& b) {
  int shared = 0;
  for (const auto& p : a) {
    for (const auto& q : b) shared += p == q;
  }
  return shared >= 2;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_in(const std::vector<Quad>& quads,
                                                          const std::vector<std::array<Coord4, 4>>& corners,
                                                          double tol) {
  std::vector<Box> boxes;
  boxes.reserve(quads.size());
  for (const auto& q : quads) boxes.push_back(box_of(q));
  std::vector<std::size_t> order(quads.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return boxes[x].lo.x < boxes[y].lo.x; });

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order.size(); ++u) {
    const std::size_t i = order[u];
    for (std::size_t w = u + 1; w < order.size(); ++w) {
      const std::size_t j = order[w];
      if (boxes[j].lo.x > boxes[i].hi.x + tol) break;
      if (boxes[j].lo.y > boxes[i].hi.y + tol || boxes[i].lo.y > boxes[j].hi.y + tol) continue;
      if (boxes[j].lo.z > boxes[i].hi.z + tol || boxes[i].lo.z > boxes[j].hi.z + tol) continue;
      if (share_edge(corners[i], corners[j])) continue;
      if (facets_intersect(quads[i], quads[j], tol)) out.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> intersecting_pairs(const Mesh& mesh, double tol) {
  std::vector<Quad> quads;
  quads.reserve(mesh.quads.size());
  for (std::size_t k = 0; k < mesh.quads.size(); ++k) quads.push_back(mesh.quad(k));
  return pairs_in(quads, mesh.quads, tol);
}

int thread_budget() {
  if (const char* env = std::getenv("SIGMAFOLD_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CollisionReport collision_sweep(const SigmaComplex& complex, const StarParams& params,
                                const SweepOptions& opt) {
  if (opt.steps < 2) throw DomainError("a sweep needs at least two samples");
  if (!(opt.t_lo > 0.0 && opt.t_lo < opt.t_hi && opt.t_hi < 1.0)) {
    throw DomainError("sweep range must satisfy 0 < t_lo < t_hi < 1");
  }
  CollisionReport rep;
  rep.steps = opt.steps;
  rep.t_lo = opt.t_lo;
  rep.t_hi = opt.t_hi;
  rep.resolution = opt.resolution;

  const std::vector<Facet> facets = replicate(complex, opt.extent);
  std::vector<std::array<Coord4, 4>> corners;
  for (const auto& f : facets) corners.push_back(f.corners());
  const double tol = 1e-9 * reference_diameter(complex, params, opt.extent);

  auto t_at = [&](int k) { return opt.t_lo + (opt.t_hi - opt.t_lo) * k / (opt.steps - 1); };
  auto quads_at = [&](double t) {
    const auto v = StarState::at(params, t).vectors();
    std::vector<Quad> qs;
    qs.reserve(facets.size());
    for (const auto& f : facets) qs.push_back(quad_of(f, v));
    return qs;
  };
  auto pair_hits = [&](std::size_t i, std::size_t j, double t) {
    const auto v = StarState::at(params, t).vectors();
    return facets_intersect(quad_of(facets[i], v), quad_of(facets[j], v), tol);
  };

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> per_sample(opt.steps);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < opt.steps; k = next++) per_sample[k] = pairs_in(quads_at(t_at(k)), corners, tol);
  };
  const int nthreads = std::min(opt.threads > 0 ? opt.threads : thread_budget(), opt.steps);
  std::vector<std::thread> pool;
  for (int k = 1; k < nthreads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Bisect the boundary between a clear sample and a colliding one.
  auto refine = [&](std::size_t i, std::size_t j, double clear, double hit) {
    while (std::abs(hit - clear) > opt.resolution) {
      const double mid = 0.5 * (clear + hit);
      (pair_hits(i, j, mid) ? hit : clear) = mid;
    }
    return hit;
  };

  std::set<std::pair<std::size_t, std::size_t>> all;
  for (const auto& s : per_sample) all.insert(s.begin(), s.end());
  for (const auto& [i, j] : all) {
    int k = 0;
    while (k < opt.steps) {
      auto has = [&](int s) {
        return std::binary_search(per_sample[s].begin(), per_sample[s].end(), std::make_pair(i, j));
      };
      if (!has(k)) {
        ++k;
        continue;
      }
      const int first = k;
      while (k + 1 < opt.steps && has(k + 1)) ++k;
      const int last = k;
      CollisionHit h{facets[i], facets[j], t_at(first), t_at(last)};
      if (first > 0) h.t_lo = refine(i, j, t_at(first - 1), t_at(first));
      if (last + 1 < opt.steps) h.t_hi = refine(i, j, t_at(last + 1), t_at(last));
      if (h.b < h.a) std::swap(h.a, h.b);
      rep.hits.push_back(h);
      ++k;
    }
  }
  std::sort(rep.hits.begin(), rep.hits.end(), [](const CollisionHit& x, const CollisionHit& y) {
    if (x.t_lo != y.t_lo) return x.t_lo < y.t_lo;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return rep;
}

QuadMesh anonymous(const Mesh& mesh) {
  QuadMesh out;
  std::map<Coord4, std::size_t> index;
  for (const auto& [c, p] : mesh.vertices) {
    index.emplace(c, out.points.size());
    out.points.push_back(p);
  }
  for (const auto& q : mesh.quads) out.faces.push_back({index.at(q[0]), index.at(q[1]), index.at(q[2]), index.at(q[3])});
  return out;
}

SigmaComplex lift_geometry(const QuadMesh& mesh, const StarState& star, double tol) {
  const auto v = star.vectors();
  struct Step {
    std::size_t to;
    Coord4 delta;
  };
  std::vector<std::vector<Step>> adj(mesh.points.size());

  auto match = [&](const Vec3& e, std::size_t a, std::size_t b) {
    for (int k = 0; k < 4; ++k) {
      for (int s : {1, -1}) {
        if (norm(e - static_cast<double>(s) * v[k]) <= tol) return static_cast<std::int64_t>(s) * Coord4::unit(k);
      }
    }
    throw Error(ErrorCode::EdgeUnmatched, "edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) +
                                              " matches no star vector");
  };

  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& q = mesh.faces[f];
    const Vec3& p0 = mesh.points[q[0]];
    const Vec3& p1 = mesh.points[q[1]];
    const Vec3& p2 = mesh.points[q[2]];
    const Vec3& p3 = mesh.points[q[3]];
    if (norm(p0 + p2 - p1 - p3) > tol) {
      throw Error(ErrorCode::NonParallelogramFace, "face " + std::to_string(f + 1) + " is not a parallelogram");
    }
    for (int k = 0; k < 4; ++k) {
      const std::size_t a = q[k], b = q[(k + 1) % 4];
      const Coord4 d = match(mesh.points[b] - mesh.points[a], a, b);
      adj[a].push_back({b, d});
      adj[b].push_back({a, -d});
    }
  }

  std::vector<std::optional<Coord4>> label(mesh.points.size());
  std::vector<std::size_t> parent(mesh.points.size(), 0);
  bool seeded = false;
  for (std::size_t root = 0; root < mesh.points.size(); ++root) {
    if (label[root] || adj[root].empty()) continue;
    if (seeded) throw Error(ErrorCode::Disconnected, "mesh has more than one connected component");
    seeded = true;
    label[root] = Coord4{};
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (const auto& s : adj[a]) {
        const Coord4 want = *label[a] + s.delta;
        if (!label[s.to]) {
          label[s.to] = want;
          parent[s.to] = a;
          queue.push_back(s.to);
        } else if (*label[s.to] != want) {
          // the loop root ... a -> s.to -> ... root is not generically closed
          std::string loop = std::to_string(s.to + 1);
          for (std::size_t x = a; x != root; x = parent[x]) loop += " " + std::to_string(x + 1);
          throw Error(ErrorCode::NonGeneric, "loop through vertices " + loop + " " + std::to_string(root + 1) +
                                                 " is not generically closed");
        }
      }
    }
  }

  std::vector<Facet> facets;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& q = mesh.faces[f];
    const Coord4 l0 = *label[q[0]];
    const Coord4 d1 = *label[q[1]] - l0;
    const Coord4 d3 = *label[q[3]] - l0;
    auto axis = [](const Coord4& d) {
      for (int k = 0; k < 4; ++k) {
        if (d[k] != 0) return std::make_pair(k, static_cast<int>(d[k]));
      }
      return std::make_pair(0, 0);
    };
    const auto [i, si] = axis(d1);
    const auto [j, sj] = axis(d3);
    if (i == j || *label[q[2]] != l0 + d1 + d3) {
      throw Error(ErrorCode::NonParallelogramFace, "face " + std::to_string(f + 1) + " is not a star parallelogram");
    }
    Coord4 anchor = l0;
    if (si < 0) anchor += d1;
    if (sj < 0) anchor += d3;
    facets.push_back({anchor, make_facet_type(i, j)});
  }
  return SigmaComplex::build(facets);
}

}  // namespace sigma

namespace sigma {

namespace {

std::vector<Vec3> solid_points(const Parallelepiped& p) {
  std::vector<Vec3> out;
  for (int m = 0; m < 8; ++m) {
    Vec3 x = p.origin;
    for (int k = 0; k < 3; ++k) {
      if (m & (1 << k)) x += p.edges[k];
    }
    out.push_back(x);
  }
  return out;
}

// True if some axis separates the two point sets (touching counts as
// separated).
bool separated(const std::vector<Vec3>& a, const std::vector<Vec3>& b, const std::vector<Vec3>& axes, double tol) {
  for (const auto& raw : axes) {
    const double len = norm(raw);
    if (len < 1e-12) continue;
    const Vec3 ax = raw * (1.0 / len);
    double amin = std::numeric_limits<double>::infinity(), amax = -amin, bmin = amin, bmax = -amin;
    for (const auto& p : a) {
      amin = std::min(amin, dot(p, ax));
      amax = std::max(amax, dot(p, ax));
    }
    for (const auto& p : b) {
      bmin = std::min(bmin, dot(p, ax));
      bmax = std::max(bmax, dot(p, ax));
    }
    if (amax <= bmin + tol || bmax <= amin + tol) return true;
  }
  return false;
}

}  // namespace

Parallelepiped realize_cell(const Coord4& anchor, StarIndex excluded, const StarState& star) {
  const auto v = star.vectors();
  Parallelepiped p;
  for (int k = 0; k < 4; ++k) p.origin += static_cast<double>(anchor[k]) * v[k];
  int m = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != excluded) p.edges[m++] = v[k];
  }
  return p;
}

bool solids_overlap(const Parallelepiped& a, const Parallelepiped& b, double tol) {
  std::vector<Vec3> axes;
  for (const auto* s : {&a, &b}) {
    for (int k = 0; k < 3; ++k) axes.push_back(cross(s->edges[k], s->edges[(k + 1) % 3]));
  }
  for (const auto& x : a.edges) {
    for (const auto& y : b.edges) axes.push_back(cross(x, y));
  }
  return !separated(solid_points(a), solid_points(b), axes, tol);
}

bool quad_meets_solid(const Quad& q, const Parallelepiped& p, double tol) {
  const Vec3 e1 = q[1] - q[0], e2 = q[3] - q[0];
  std::vector<Vec3> axes{cross(e1, e2)};
  for (int k = 0; k < 3; ++k) axes.push_back(cross(p.edges[k], p.edges[(k + 1) % 3]));
  for (const auto& x : p.edges) {
    axes.push_back(cross(x, e1));
    axes.push_back(cross(x, e2));
  }
  return !separated({q.begin(), q.end()}, solid_points(p), axes, tol);
}

}  // namespace sigma
