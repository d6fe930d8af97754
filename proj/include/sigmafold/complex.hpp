#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigmafold/coord.hpp"
#include "sigmafold/lattice.hpp"

namespace sigma {

// Conditions under which a combinatorial construction is congruent to the
// intended geometric object (mirrored pieces need equal radii).
struct RealizationRequirements {
  bool r12_equal = false;
  bool r34_equal = false;

  friend bool operator==(const RealizationRequirements&, const RealizationRequirements&) = default;
};

struct ComplexMeta {
  std::string generator;  // e.g. "miura m=2 n=2 periodic"
  RealizationRequirements requires_;
  int extent = 1;  // suggested copies per period when realizing

  friend bool operator==(const ComplexMeta&, const ComplexMeta&) = default;
};

struct BuildDiagnostics {
  std::vector<Facet> duplicates;  // dropped after reduction modulo periods
};

// A facet lifted into Z^4 together with which of its corners / edges is meant.
struct Incidence {
  Facet facet;
  int index = 0;  // corner index (0..3) or edge index (0..3)
};

// A Sigma-complex: admissible facets on the integer lattice over the star
// basis, optionally periodic. Periodic complexes keep one representative per
// lattice orbit; every query is answered modulo the period lattice.
class SigmaComplex {
 public:
  // Throws Error with ForbiddenFacet, Disconnected or BadLattice. Exact
  // duplicates are dropped and reported through `diag`.
  static SigmaComplex build(std::span<const Facet> facets, std::vector<Coord4> periods = {},
                            BuildDiagnostics* diag = nullptr);

  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t size() const { return facets_.size(); }
  const PeriodLattice& periods() const { return periods_; }
  bool periodic() const { return !periods_.trivial(); }

  Facet canonical(const Facet& f) const { return periods_.reduce(f); }
  Edge canonical(const Edge& e) const { return periods_.reduce(e); }
  Coord4 canonical(const Coord4& v) const { return periods_.reduce(v); }

  bool contains(const Facet& f) const;

  // Canonical edge -> number of incident facets.
  const std::map<Edge, int>& edge_counts() const { return edge_counts_; }
  int edge_count(const Edge& e) const;

  // Facets containing edge e, lifted so that their edge `index` equals e.
  std::vector<Incidence> facets_on_edge(const Edge& e) const;

  // Facets having v as a corner, lifted so that corner `index` equals v.
  std::vector<Incidence> facets_at(const Coord4& v) const;

  // Canonical vertex representatives.
  std::vector<Coord4> vertices() const;

  ComplexMeta& meta() { return meta_; }
  const ComplexMeta& meta() const { return meta_; }

  // Same facets and lattice (metadata ignored).
  bool same_complex(const SigmaComplex& other) const;

 private:
  SigmaComplex() = default;

  std::vector<Facet> facets_;  // canonical, sorted
  PeriodLattice periods_;
  std::map<Edge, int> edge_counts_;
  std::map<Edge, std::vector<Incidence>> edge_index_;
  std::map<Coord4, std::vector<Incidence>> vertex_index_;
  ComplexMeta meta_;
};

SigmaComplex build(std::span<const Facet> facets, std::vector<Coord4> periods = {},
                   BuildDiagnostics* diag = nullptr);

const std::map<Edge, int>& edges(const SigmaComplex& complex);

struct PolyhedronReport {
  bool ok = true;
  std::vector<Edge> bad_edges;       // more than two facets
  std::vector<Coord4> bad_vertices;  // link is not a single cycle or path
};

PolyhedronReport is_polyhedron(const SigmaComplex& complex);

// Incidence-1 edges, each loop ordered head-to-tail where the boundary is a
// closed curve (always the case for polyhedra).
struct BoundaryLoops {
  std::vector<std::vector<Edge>> loops;
  std::vector<Edge> unordered;  // leftovers that could not be chained
  std::size_t edge_count() const;
};

std::vector<Edge> boundary(const SigmaComplex& complex);
BoundaryLoops boundary_loops(const SigmaComplex& complex);

struct CycleEntry {
  Facet facet;
  Corner corner;
  bool obtuse() const { return corner.obtuse(); }
};

// Facets around an interior manifold vertex in shared-edge order, starting at
// the lexicographically smallest facet and continuing toward its smaller
// neighbour. Throws NotManifold or BoundaryVertex.
std::vector<CycleEntry> vertex_cycle(const SigmaComplex& complex, const Coord4& vertex);

// The edge directions leaving the vertex, in the order of vertex_cycle:
// facet k spans directions k and k+1.
std::vector<SignedDir> link_directions(const std::vector<CycleEntry>& cycle);

enum class LinkShape { Cycle, Path, NonManifold };
LinkShape link_shape(const SigmaComplex& complex, const Coord4& vertex);

// Candidate facets that could be glued onto a boundary edge (at most three).
// Throws NotBoundaryEdge.
std::vector<Facet> legal_extensions(const SigmaComplex& complex, const Edge& edge);

// Persistent update; throws ForbiddenFacet, DuplicateFacet, NonManifoldEdge or
// Disconnected (facet shares no edge with the complex).
SigmaComplex extend(const SigmaComplex& complex, const Facet& facet);

enum class MirrorAxis { Swap12, Swap34 };

SigmaComplex mirror(const SigmaComplex& complex, MirrorAxis axis);
Facet mirror(const Facet& f, MirrorAxis axis);

// Point reflection v -> -v; keeps every facet type and is an isometry for any
// radii.
SigmaComplex point_reflect(const SigmaComplex& complex);
Facet point_reflect(const Facet& f);

SigmaComplex translate(const SigmaComplex& complex, const Coord4& offset);

}  // namespace sigma
