#include "sigmafold/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <utility>

#include "sigmafold/error.hpp"

namespace sigma {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

PeriodLattice::PeriodLattice(std::vector<Coord4> generators) : generators_(std::move(generators)) {
  const int k = static_cast<int>(generators_.size());
  if (k > 3) throw Error(ErrorCode::BadLattice, "at most three period generators are supported");

  std::vector<Coord4> rows = generators_;
  std::vector<std::vector<std::int64_t>> u(k, std::vector<std::int64_t>(k, 0));
  for (int r = 0; r < k; ++r) u[r][r] = 1;

  auto axpy = [&](int dst, std::int64_t q, int src) {
    for (int c = 0; c < 4; ++c) rows[dst][c] -= q * rows[src][c];
    for (int c = 0; c < k; ++c) u[dst][c] -= q * u[src][c];
  };

  int p = 0;
  for (int col = 0; col < 4 && p < k; ++col) {
    while (true) {
      int best = -1;
      for (int r = p; r < k; ++r) {
        if (rows[r][col] != 0 && (best < 0 || std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) {
          best = r;
        }
      }
      if (best < 0) break;
      std::swap(rows[p], rows[best]);
      std::swap(u[p], u[best]);
      bool done = true;
      for (int r = p + 1; r < k; ++r) {
        if (rows[r][col] != 0) {
          axpy(r, rows[r][col] / rows[p][col], p);
          if (rows[r][col] != 0) done = false;
        }
      }
      if (done) break;
    }
    if (rows[p][col] == 0) continue;
    if (rows[p][col] < 0) {
      rows[p] = -rows[p];
      for (auto& x : u[p]) x = -x;
    }
    pivots_.push_back(col);
    ++p;
  }
  if (p < k) {
    throw Error(ErrorCode::BadLattice, "period generators are linearly dependent");
  }
  echelon_.assign(rows.begin(), rows.begin() + p);
  transform_.assign(u.begin(), u.begin() + p);
}

Coord4 PeriodLattice::reduce(const Coord4& v) const {
  Coord4 out = v;
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    const int c = pivots_[r];
    const std::int64_t q = floor_div(out[c], echelon_[r][c]);
    if (q != 0) out -= q * echelon_[r];
  }
  return out;
}

std::optional<std::vector<std::int64_t>> PeriodLattice::coefficients(const Coord4& v) const {
  const int k = rank();
  Coord4 rest = v;
  std::vector<std::int64_t> ech(echelon_.size(), 0);
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    const int c = pivots_[r];
    if (rest[c] % echelon_[r][c] != 0) return std::nullopt;
    ech[r] = rest[c] / echelon_[r][c];
    rest -= ech[r] * echelon_[r];
  }
  if (!rest.is_zero()) return std::nullopt;
  std::vector<std::int64_t> coeffs(k, 0);
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    for (int g = 0; g < k; ++g) coeffs[g] += ech[r] * transform_[r][g];
  }
  return coeffs;
}

bool PeriodLattice::contains(const Coord4& v) const { return reduce(v).is_zero(); }

bool PeriodLattice::contains(const PeriodLattice& sub) const {
  for (const auto& g : sub.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

Coord4 PeriodLattice::combination(const std::vector<std::int64_t>& coeffs) const {
  Coord4 out;
  for (std::size_t g = 0; g < generators_.size() && g < coeffs.size(); ++g) {
    out += coeffs[g] * generators_[g];
  }
  return out;
}

std::int64_t PeriodLattice::index_of(const PeriodLattice& sub) const {
  if (!contains(sub) || sub.rank() != rank()) {
    throw Error(ErrorCode::NotSublattice, "lattice is not a full-rank sublattice of the periods");
  }
  const int k = rank();
  if (k == 0) return 1;
  std::vector<std::vector<long double>> m(k, std::vector<long double>(k));
  for (int a = 0; a < k; ++a) {
    const auto c = *coefficients(sub.generators()[a]);
    for (int b = 0; b < k; ++b) m[a][b] = static_cast<long double>(c[b]);
  }
  long double det = 1;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::abs(static_cast<double>(m[r][col])) > std::abs(static_cast<double>(m[piv][col]))) piv = r;
    }
    if (m[piv][col] == 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < k; ++r) {
      const long double f = m[r][col] / m[col][col];
      for (int c = col; c < k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return std::llround(static_cast<double>(det < 0 ? -det : det));
}

std::vector<Coord4> PeriodLattice::coset_representatives(const PeriodLattice& sub) const {
  const std::int64_t idx = index_of(sub);
  const int k = rank();
  std::set<Coord4> seen;
  std::vector<Coord4> reps;
  std::vector<std::int64_t> x(k, 0);
  // Coefficients in [0, idx) per generator reach every coset since idx * L lies in sub.
  while (true) {
    const Coord4 v = combination(x);
    if (seen.insert(sub.reduce(v)).second) reps.push_back(v);
    if (static_cast<std::int64_t>(reps.size()) == idx) break;
    int pos = 0;
    while (pos < k && ++x[pos] == idx) x[pos++] = 0;
    if (pos == k) break;
  }
  return reps;
}

}  // namespace sigma
