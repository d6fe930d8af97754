#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sigmafold/complex.hpp"

namespace sigma {

// One of the vertex figures a Sigma-polyhedron can have. The signature is the
// cyclic sequence of edge directions leaving the vertex; consecutive
// directions span one facet.
struct VertexType {
  std::string name;
  int valency = 0;
  int acute = 0;
  int obtuse = 0;
  std::vector<SignedDir> signature;  // canonical representative
  int orbit = 0;  // distinct cyclic sequences under the star symmetries

  double curvature(double gamma) const;
};

// kappa = 2 pi - a gamma - o (pi - gamma)
double vertex_curvature(double gamma, int acute, int obtuse);

// Fresh exhaustive enumeration (closed link cycles of length 4, 6, 8 that
// embed at the tetrahedral star), deduplicated by rotation, reversal and the
// symmetries 1<->2, 3<->4, v -> -v and {1,2}<->{3,4}.
std::vector<VertexType> enumerate_vertex_types();

// Cached result of enumerate_vertex_types().
const std::vector<VertexType>& vertex_catalog();

const VertexType* find_vertex_type(std::string_view name);

std::vector<SignedDir> canonical_signature(const std::vector<SignedDir>& dirs);

// Throws Unrecognized if the signature is not in the catalog.
const VertexType& classify_signature(const std::vector<SignedDir>& dirs);

// Throws BoundaryVertex, NotManifold or Unrecognized.
const VertexType& classify_vertex(const SigmaComplex& complex, const Coord4& vertex);

// Facets around `at` whose corners there span consecutive directions.
std::vector<Facet> vertex_figure(const std::vector<SignedDir>& dirs, const Coord4& at = {});

// "-1 -3 +2 +4" <-> directions (1-based in text).
std::vector<SignedDir> parse_signature(std::string_view text);
std::string format_signature(const std::vector<SignedDir>& dirs);

struct VertexCensus {
  std::map<std::string, int> types;  // catalog name -> count
  int boundary = 0;
  int non_manifold = 0;
  int unrecognized = 0;
  std::vector<Coord4> unrecognized_at;

  int interior() const;
};

// Over all vertex classes (one per lattice orbit for periodic complexes).
VertexCensus vertex_census(const SigmaComplex& complex);

}  // namespace sigma
