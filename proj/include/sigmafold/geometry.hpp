#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "sigmafold/complex.hpp"
#include "sigmafold/star.hpp"
#include "sigmafold/vec3.hpp"

namespace sigma {

using Quad = std::array<Vec3, 4>;

// A complex realized at one fold state. `facets[k]` is the lifted facet whose
// corners are `quads[k]`.
struct Mesh {
  std::map<Coord4, Vec3> vertices;
  std::vector<Facet> facets;
  std::vector<std::array<Coord4, 4>> quads;
  StarState star = StarState(StarParams{}, 1.0);
  Vec3 base;

  Quad quad(std::size_t k) const;
};

// An anonymous quad mesh, as read back from an OBJ file.
struct QuadMesh {
  std::vector<Vec3> points;
  std::vector<std::array<std::size_t, 4>> faces;
};

// Lifted facets of a complex. Finite complexes come back unchanged. For
// periodic complexes one connected lift of the representatives is developed
// first, then copied `extent` times along every period.
std::vector<Facet> replicate(const SigmaComplex& complex, int extent = 1);

Mesh realize(const SigmaComplex& complex, const StarState& star, Vec3 base = {}, int extent = 1);
Mesh realize(const SigmaComplex& complex, const StarParams& params, double t, Vec3 base = {},
             int extent = 1);

double diameter(const Mesh& mesh);

// Diameter at t = 0.5, the length scale every geometric tolerance refers to.
double reference_diameter(const SigmaComplex& complex, const StarParams& params, int extent = 1);

struct CongruenceReport {
  bool ok = true;
  double max_deviation = 0.0;  // relative to the reference diameter
  std::vector<Facet> failing;
};

// Compares the two edge lengths and the anchor diagonal of every facet.
CongruenceReport congruence_check(const Mesh& a, const Mesh& b, double tol);
CongruenceReport congruence_check(const SigmaComplex& complex, const StarParams& params, double t1,
                                  double t2, double tol, int extent = 1);

enum class CollapsePlane { X0, Y0 };

// max |x| at t = 1 (X0) or max |y| at t = 0 (Y0).
double collapse_extent(const SigmaComplex& complex, const StarParams& params, CollapsePlane plane,
                       int extent = 1);

// True iff the relative interiors of two parallelograms meet. Contact along
// shared edges or at shared corners does not count. Throws DegenerateQuad
// when either area is below tol^2.
bool facets_intersect(const Quad& a, const Quad& b, double tol);

// Index pairs (i < j) of quads of `mesh` whose interiors meet; pairs sharing
// an edge are skipped.
std::vector<std::pair<std::size_t, std::size_t>> intersecting_pairs(const Mesh& mesh, double tol);

struct CollisionHit {
  Facet a;
  Facet b;
  double t_lo = 0.0;
  double t_hi = 0.0;
};

struct CollisionReport {
  std::vector<CollisionHit> hits;  // sorted by (t_lo, a, b)
  int steps = 0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double resolution = 0.0;

  bool empty() const { return hits.empty(); }
};

struct SweepOptions {
  int steps = 50;
  double t_lo = 0.02;
  double t_hi = 0.98;
  double resolution = 1e-4;
  int extent = 1;
  int threads = 0;  // 0: SIGMAFOLD_THREADS or hardware concurrency
};

// Throws DomainError unless steps >= 2 and 0 < t_lo < t_hi < 1.
CollisionReport collision_sweep(const SigmaComplex& complex, const StarParams& params,
                                const SweepOptions& options = {});

// Recovers Coord4 labels from positions. Throws NonParallelogramFace,
// EdgeUnmatched or NonGeneric, and whatever build() throws on the result.
SigmaComplex lift_geometry(const QuadMesh& mesh, const StarState& star, double tol);
QuadMesh anonymous(const Mesh& mesh);

int thread_budget();

}  // namespace sigma

namespace sigma {

// A solid parallelepiped: origin plus the cube spanned by three edges.
struct Parallelepiped {
  Vec3 origin;
  std::array<Vec3, 3> edges;
};

Parallelepiped realize_cell(const Coord4& anchor, StarIndex excluded, const StarState& star);

// Interiors overlap (separating-axis test; touching faces do not count).
bool solids_overlap(const Parallelepiped& a, const Parallelepiped& b, double tol);

// The open parallelogram meets the open solid.
bool quad_meets_solid(const Quad& q, const Parallelepiped& p, double tol);

}  // namespace sigma
