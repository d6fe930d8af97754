#pragma once

#include <optional>
#include <vector>

#include "sigmafold/coord.hpp"

namespace sigma {

// A translation lattice of rank 0..3 inside Z^4. Canonical representatives
// come from a row echelon basis: after reduction every pivot coordinate lies
// in [0, pivot).
class PeriodLattice {
 public:
  PeriodLattice() = default;

  // Throws Error(BadLattice) when the generators are linearly dependent over
  // the rationals or more than three are given.
  explicit PeriodLattice(std::vector<Coord4> generators);

  const std::vector<Coord4>& generators() const { return generators_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  bool trivial() const { return generators_.empty(); }

  Coord4 reduce(const Coord4& v) const;
  Facet reduce(const Facet& f) const { return {reduce(f.anchor), f.type}; }
  Edge reduce(const Edge& e) const { return {reduce(e.tail), e.dir}; }

  bool contains(const Coord4& v) const;

  // Integer coefficients of v in terms of generators(), if v is a lattice vector.
  std::optional<std::vector<std::int64_t>> coefficients(const Coord4& v) const;

  // True when every generator of `sub` lies in this lattice.
  bool contains(const PeriodLattice& sub) const;

  // Index [this : sub]; requires sub to be a full-rank sublattice.
  std::int64_t index_of(const PeriodLattice& sub) const;

  // One representative per coset of this lattice modulo `sub`.
  std::vector<Coord4> coset_representatives(const PeriodLattice& sub) const;

  Coord4 combination(const std::vector<std::int64_t>& coeffs) const;

 private:
  std::vector<Coord4> generators_;
  std::vector<Coord4> echelon_;                      // rows
  std::vector<int> pivots_;                          // pivot column per row
  std::vector<std::vector<std::int64_t>> transform_;  // echelon_[r] = sum transform_[r][k] * generators_[k]
};

}  // namespace sigma
