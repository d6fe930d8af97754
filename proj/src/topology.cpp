#include "sigmafold/topology.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>

#include "sigmafold/error.hpp"
#include "sigmafold/star.hpp"
#include "sigmafold/vertex_types.hpp"

namespace sigma {

namespace {

// Traversal direction of edge k of a facet with orientation +1: the boundary
// runs anchor -> +e_i -> +e_i+e_j -> +e_j.
constexpr std::array<int, 4> kEdgeSense{1, 1, -1, -1};

}  // namespace

std::vector<bool> orientation_character(const SigmaComplex& complex) {
  const auto& lat = complex.periods();
  struct Placed {
    Facet lift;
    int sign;
  };
  std::map<Facet, Placed> placed;
  std::vector<std::pair<Coord4, int>> relations;  // translation, character

  const Facet start = complex.facets().front();
  placed.emplace(start, Placed{start, 1});
  std::deque<Facet> queue{start};
  while (!queue.empty()) {
    const Facet f = queue.front();
    queue.pop_front();
    const Placed& pf = placed.at(lat.reduce(f));
    const auto es = facet_edges(f);
    for (int k = 0; k < 4; ++k) {
      for (const auto& inc : complex.facets_on_edge(es[k])) {
        if (inc.facet == f && inc.index == k) continue;
        const int want = -pf.sign * kEdgeSense[k] * kEdgeSense[inc.index];
        const Facet rep = lat.reduce(inc.facet);
        auto it = placed.find(rep);
        if (it == placed.end()) {
          placed.emplace(rep, Placed{inc.facet, want});
          queue.push_back(inc.facet);
          continue;
        }
        const Coord4 shift = inc.facet.anchor - it->second.lift.anchor;
        const int chi = want * it->second.sign;
        if (shift.is_zero()) {
          if (chi < 0) throw Error(ErrorCode::NonOrientable, "the surface is not orientable");
          continue;
        }
        relations.emplace_back(shift, chi);
      }
    }
  }

  // Solve sum c_k x_k = [chi < 0] (mod 2) for the generator characters x.
  const int rank = lat.rank();
  std::vector<std::pair<std::vector<std::int64_t>, int>> rows;
  for (const auto& [shift, chi] : relations) {
    auto coeffs = lat.coefficients(shift);
    if (!coeffs) throw Error(ErrorCode::BadLattice, "translation outside the period lattice");
    rows.emplace_back(*coeffs, chi < 0 ? 1 : 0);
  }
  for (int mask = 0; mask < (1 << rank); ++mask) {
    bool fits = true;
    for (const auto& [c, rhs] : rows) {
      std::int64_t s = 0;
      for (int k = 0; k < rank; ++k) s += ((mask >> k) & 1) * c[k];
      if (((s % 2) + 2) % 2 != rhs) {
        fits = false;
        break;
      }
    }
    if (fits) {
      std::vector<bool> out(rank);
      for (int k = 0; k < rank; ++k) out[k] = (mask >> k) & 1;
      return out;
    }
  }
  throw Error(ErrorCode::NonOrientable, "no consistent orientation character");
}

std::vector<Coord4> orientation_preserving_sublattice(const SigmaComplex& complex) {
  std::vector<Coord4> gens = complex.periods().generators();
  const auto reverse = orientation_character(complex);
  int pivot = -1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (reverse[k] && pivot < 0) pivot = static_cast<int>(k);
  }
  if (pivot < 0) return gens;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (static_cast<int>(k) != pivot && reverse[k]) gens[k] = gens[k] - gens[pivot];
  }
  gens[pivot] = 2 * gens[pivot];
  return gens;
}

QuotientEuler quotient_euler(const SigmaComplex& complex, const std::vector<Coord4>& sublattice,
                             double lambda) {
  const auto& full = complex.periods();
  const PeriodLattice sub(sublattice);
  if (sub.rank() != full.rank() || !full.contains(sub)) {
    throw Error(ErrorCode::NotSublattice, "sublattice must be a full-rank sublattice of the periods");
  }
  const auto cosets = full.coset_representatives(sub);

  std::set<Facet> faces;
  std::map<Edge, int> edge_count;
  std::map<Coord4, std::vector<Corner>> corners;
  for (const auto& f : complex.facets()) {
    for (const auto& c : cosets) {
      const Facet g = sub.reduce(Facet{f.anchor + c, f.type});
      if (!faces.insert(g).second) continue;
      for (const auto& e : facet_edges(g)) edge_count[sub.reduce(e)] += 1;
      for (const auto& corner : facet_corners(g)) corners[sub.reduce(corner.vertex)].push_back(corner);
    }
  }
  for (const auto& [e, n] : edge_count) {
    if (n != 2) throw Error(ErrorCode::NotClosed, "edge " + to_string(e) + " has " + std::to_string(n) + " facets");
  }

  const double gamma = facet_angle_gamma(lambda);
  QuotientEuler q;
  q.vertices = static_cast<std::int64_t>(corners.size());
  q.edges = static_cast<std::int64_t>(edge_count.size());
  q.faces = static_cast<std::int64_t>(faces.size());
  q.chi = q.vertices - q.edges + q.faces;
  for (const auto& [v, cs] : corners) {
    double angle = 0.0;
    for (const auto& c : cs) angle += c.obtuse() ? std::numbers::pi - gamma : gamma;
    q.curvature_sum += 2 * std::numbers::pi - angle;
  }
  q.gauss_bonnet_residual = std::abs(q.curvature_sum - 2 * std::numbers::pi * static_cast<double>(q.chi));

  try {
    q.orientable = true;
    const auto reverse = orientation_character(complex);
    for (const auto& g : sub.generators()) {
      const auto c = full.coefficients(g);
      std::int64_t s = 0;
      for (std::size_t k = 0; k < reverse.size(); ++k) s += reverse[k] ? (*c)[k] : 0;
      if (s % 2 != 0) q.orientable = false;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonOrientable) throw;
    q.orientable = false;
  }
  q.odd_chi = q.chi % 2 != 0;
  if (q.orientable && !q.odd_chi) q.genus = (2 - q.chi) / 2;
  return q;
}

}  // namespace sigma
