#pragma once

#include <optional>
#include <vector>

#include "sigmafold/complex.hpp"

namespace sigma {

struct QuotientEuler {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::int64_t chi = 0;
  std::optional<std::int64_t> genus;  // only for orientable quotients with even chi
  bool orientable = false;
  bool odd_chi = false;
  double curvature_sum = 0.0;
  double gauss_bonnet_residual = 0.0;  // |curvature_sum - 2 pi chi|
};

// Cell counts of the quotient of a closed periodic complex by `sublattice`
// (generators must lie in the period lattice and have full rank). Throws
// NotSublattice or NotClosed.
QuotientEuler quotient_euler(const SigmaComplex& complex, const std::vector<Coord4>& sublattice,
                             double lambda = 1.0 / 3.0);

// For every period generator, whether translating by it reverses the
// orientation of the surface. Throws NonOrientable if the lifted surface
// itself cannot be oriented.
std::vector<bool> orientation_character(const SigmaComplex& complex);

// Largest sublattice of the period lattice made of orientation-preserving
// translations (one generator doubled when needed).
std::vector<Coord4> orientation_preserving_sublattice(const SigmaComplex& complex);

}  // namespace sigma
