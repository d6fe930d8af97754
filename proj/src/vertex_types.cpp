#include "sigmafold/vertex_types.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>

#include "sigmafold/error.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/star.hpp"

namespace sigma {

namespace {

using Cycle = std::vector<SignedDir>;

constexpr bool linked(const SignedDir& a, const SignedDir& b) { return (a.index < 2) != (b.index < 2); }

// Smallest rotation of the cycle or of its reversal.
Cycle dihedral_min(const Cycle& c) {
  const std::size_t n = c.size();
  Cycle best;
  for (int rev = 0; rev < 2; ++rev) {
    Cycle seq = c;
    if (rev) std::reverse(seq.begin(), seq.end());
    for (std::size_t k = 0; k < n; ++k) {
      Cycle rot(seq.begin() + k, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + k);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

// The 16 star symmetries as maps on signed directions.
SignedDir apply(int g, SignedDir d) {
  if ((g & 1) && d.index < 2) d.index = 1 - d.index;
  if ((g & 2) && d.index >= 2) d.index = 5 - d.index;
  if (g & 4) d.sign = -d.sign;
  if (g & 8) d.index = (d.index + 2) % 4;
  return d;
}

std::set<Cycle> orbit_of(const Cycle& c) {
  std::set<Cycle> out;
  for (int g = 0; g < 16; ++g) {
    Cycle img;
    for (const auto& d : c) img.push_back(apply(g, d));
    out.insert(dihedral_min(img));
  }
  return out;
}

std::pair<int, int> corner_counts(const Cycle& c) {
  int a = 0, o = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    (c[k].sign == c[(k + 1) % c.size()].sign ? o : a) += 1;
  }
  return {a, o};
}

std::vector<FacetType> facet_types(const Cycle& c) {
  std::vector<FacetType> out;
  for (std::size_t k = 0; k < c.size(); ++k) out.push_back(make_facet_type(c[k].index, c[(k + 1) % c.size()].index));
  return out;
}

bool embeds(const Cycle& c, const StarState& star) {
  const auto fig = vertex_figure(c);
  const auto v = star.vectors();
  std::vector<Quad> quads;
  for (const auto& f : fig) {
    Quad q;
    const auto cs = f.corners();
    for (int k = 0; k < 4; ++k) {
      q[k] = {};
      for (int m = 0; m < 4; ++m) q[k] += static_cast<double>(cs[k][m]) * v[m];
    }
    quads.push_back(q);
  }
  const std::size_t n = quads.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 2; y < n; ++y) {
      if (x == 0 && y == n - 1) continue;
      if (facets_intersect(quads[x], quads[y], 1e-9)) return false;
    }
  }
  return true;
}

void extend_paths(Cycle& path, std::size_t len, std::set<Cycle>& out) {
  static const std::array<SignedDir, 8> nodes{SignedDir{0, -1}, SignedDir{0, 1}, SignedDir{1, -1}, SignedDir{1, 1},
                                              SignedDir{2, -1}, SignedDir{2, 1}, SignedDir{3, -1}, SignedDir{3, 1}};
  if (path.size() == len) {
    if (linked(path.back(), path.front())) out.insert(dihedral_min(path));
    return;
  }
  for (const auto& d : nodes) {
    if (!linked(path.back(), d) || std::find(path.begin(), path.end(), d) != path.end()) continue;
    path.push_back(d);
    extend_paths(path, len, out);
    path.pop_back();
  }
}

int longest_run(const std::vector<FacetType>& types) {
  const std::size_t n = types.size();
  int best = 1;
  for (std::size_t s = 0; s < n; ++s) {
    int run = 1;
    while (run < static_cast<int>(n) && types[(s + run) % n] == types[s]) ++run;
    best = std::max(best, run);
  }
  return best;
}

// Three consecutive coplanar facets of which two meet the vertex obtusely.
bool obtuse_l(const Cycle& c) {
  const auto types = facet_types(c);
  const std::size_t n = c.size();
  auto obtuse = [&](std::size_t k) { return c[k % n].sign == c[(k + 1) % n].sign; };
  for (std::size_t k = 0; k < n; ++k) {
    if (types[k] == types[(k + 1) % n] && types[k] == types[(k + 2) % n] &&
        obtuse(k) + obtuse(k + 1) + obtuse(k + 2) >= 2) {
      return true;
    }
  }
  return false;
}

bool acute_x(const Cycle& c) {
  const auto types = facet_types(c);
  std::map<FacetType, int> count;
  for (const auto& t : types) count[t] += 1;
  return count.size() == 3 && std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

// Names follow combinatorial features of the canonical signature; each rule
// is invariant under the symmetry group, so the name is well defined.
std::string name_for(const Cycle& c, int orbit, int other_orbit) {
  const auto [a, o] = corner_counts(c);
  const auto types = facet_types(c);
  const std::set<FacetType> distinct(types.begin(), types.end());
  const std::size_t n = c.size();
  if (n == 4) {
    if (o == 4) return "Saddle";
    if (a == 4) return "Peak";
    if (distinct.size() == 1) return "Unfold";
    if (distinct.size() == 4) return "Miura";
    for (std::size_t k = 0; k < n; ++k) {
      const bool here = c[k].sign == c[(k + 1) % n].sign;
      const bool next = c[(k + 1) % n].sign == c[(k + 2) % n].sign;
      if (here && next) return "Obtuse";
    }
    return "Acute";
  }
  if (n == 6) {
    if (o == 4) return "Obtuse X";
    if (obtuse_l(c)) return "Obtuse L";
    if (acute_x(c)) return "Acute X";
    return orbit < other_orbit ? "Crown" : "Broken Crown";
  }
  if (o == 4) return "Double L";
  return longest_run(types) >= 2 ? "Double X" : "Star";
}

const std::vector<std::string> kOrder{"Unfold",       "Obtuse",      "Acute",   "Saddle",   "Peak",
                                      "Miura",        "Crown",       "Acute X", "Obtuse L", "Broken Crown",
                                      "Obtuse X",     "Double X",    "Star",    "Double L"};

}  // namespace

double vertex_curvature(double gamma, int acute, int obtuse) {
  return 2 * std::numbers::pi - acute * gamma - obtuse * (std::numbers::pi - gamma);
}

double VertexType::curvature(double gamma) const { return vertex_curvature(gamma, acute, obtuse); }

std::vector<SignedDir> canonical_signature(const std::vector<SignedDir>& dirs) {
  const auto orb = orbit_of(dirs);
  return *orb.begin();
}

std::vector<VertexType> enumerate_vertex_types() {
  const StarState ref = tetrahedral_star();
  std::set<Cycle> classes;
  for (std::size_t len : {4u, 6u, 8u}) {
    std::set<Cycle> cycles;
    for (int start = 0; start < 8; ++start) {
      Cycle path{SignedDir{start / 2, start % 2 ? 1 : -1}};
      extend_paths(path, len, cycles);
    }
    for (const auto& c : cycles) {
      if (embeds(c, ref)) classes.insert(canonical_signature(c));
    }
  }

  std::vector<VertexType> out;
  for (const auto& c : classes) {
    const auto [a, o] = corner_counts(c);
    VertexType t;
    t.valency = static_cast<int>(c.size());
    t.acute = a;
    t.obtuse = o;
    t.signature = c;
    t.orbit = static_cast<int>(orbit_of(c).size());
    out.push_back(t);
  }
  // Crown and Broken Crown differ only in symmetry: compare orbit sizes among
  // the (4,2) figures that the other rules leave unnamed.
  for (auto& t : out) {
    int other = t.orbit;
    for (const auto& u : out) {
      if (&u == &t || u.valency != 6 || u.obtuse != 2) continue;
      if (obtuse_l(u.signature) || acute_x(u.signature)) continue;
      other = u.orbit;
    }
    t.name = name_for(t.signature, t.orbit, other);
  }
  auto rank = [](const VertexType& t) {
    auto it = std::find(kOrder.begin(), kOrder.end(), t.name);
    return it - kOrder.begin();
  };
  std::stable_sort(out.begin(), out.end(), [&](const VertexType& x, const VertexType& y) {
    if (x.valency != y.valency) return x.valency < y.valency;
    return rank(x) < rank(y);
  });
  return out;
}

const std::vector<VertexType>& vertex_catalog() {
  static const std::vector<VertexType> catalog = enumerate_vertex_types();
  return catalog;
}

const VertexType* find_vertex_type(std::string_view name) {
  for (const auto& t : vertex_catalog()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const VertexType& classify_signature(const std::vector<SignedDir>& dirs) {
  const auto canon = canonical_signature(dirs);
  for (const auto& t : vertex_catalog()) {
    if (t.signature == canon) return t;
  }
  throw Error(ErrorCode::Unrecognized, "vertex figure " + format_signature(dirs) + " is not in the catalog");
}

const VertexType& classify_vertex(const SigmaComplex& complex, const Coord4& vertex) {
  return classify_signature(link_directions(vertex_cycle(complex, vertex)));
}

std::vector<Facet> vertex_figure(const std::vector<SignedDir>& dirs, const Coord4& at) {
  std::vector<Facet> out;
  const std::size_t n = dirs.size();
  for (std::size_t k = 0; k < n; ++k) {
    const SignedDir a = dirs[k], b = dirs[(k + 1) % n];
    Coord4 anchor = at;
    if (a.sign < 0) anchor -= Coord4::unit(a.index);
    if (b.sign < 0) anchor -= Coord4::unit(b.index);
    out.push_back({anchor, make_facet_type(a.index, b.index)});
  }
  return out;
}

std::vector<SignedDir> parse_signature(std::string_view text) {
  std::vector<SignedDir> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 2 || (tok[0] != '+' && tok[0] != '-') || tok[1] < '1' || tok[1] > '4') {
      throw Error(ErrorCode::ParseError, "bad direction token '" + tok + "'");
    }
    out.push_back({tok[1] - '1', tok[0] == '+' ? 1 : -1});
  }
  return out;
}

std::string format_signature(const std::vector<SignedDir>& dirs) {
  std::string out;
  for (const auto& d : dirs) {
    if (!out.empty()) out += ' ';
    out += to_string(d);
  }
  return out;
}

int VertexCensus::interior() const {
  int n = unrecognized;
  for (const auto& [name, k] : types) n += k;
  return n;
}

VertexCensus vertex_census(const SigmaComplex& complex) {
  VertexCensus census;
  for (const auto& v : complex.vertices()) {
    switch (link_shape(complex, v)) {
      case LinkShape::Path:
        ++census.boundary;
        continue;
      case LinkShape::NonManifold:
        ++census.non_manifold;
        continue;
      case LinkShape::Cycle:
        break;
    }
    try {
      census.types[classify_vertex(complex, v).name] += 1;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unrecognized) throw;
      ++census.unrecognized;
      census.unrecognized_at.push_back(v);
    }
  }
  return census;
}

}  // namespace sigma
