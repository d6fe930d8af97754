#include "sigmafold/coord.hpp"

#include "sigmafold/error.hpp"

namespace sigma {

std::string to_string(const Coord4& c) {
  std::string s = "(";
  for (int k = 0; k < 4; ++k) {
    if (k) s += ",";
    s += std::to_string(c.n[k]);
  }
  return s + ")";
}

std::string to_string(const SignedDir& d) {
  return (d.sign > 0 ? "+" : "-") + std::to_string(d.index + 1);
}

FacetType make_facet_type(StarIndex a, StarIndex b) {
  if (a < 0 || a > 3 || b < 0 || b > 3 || a == b) {
    throw Error(ErrorCode::ParseError, "facet type needs two distinct star indices");
  }
  return a < b ? FacetType{a, b} : FacetType{b, a};
}

std::string to_string(const FacetType& t) {
  return "P" + std::to_string(t.i + 1) + std::to_string(t.j + 1);
}

std::array<Coord4, 4> Facet::corners() const {
  const Coord4 ei = Coord4::unit(type.i), ej = Coord4::unit(type.j);
  return {anchor, anchor + ei, anchor + ei + ej, anchor + ej};
}

std::string to_string(const Facet& f) { return to_string(f.type) + "@" + to_string(f.anchor); }

std::string to_string(const Edge& e) {
  return to_string(e.tail) + "+e" + std::to_string(e.dir + 1);
}

std::array<Edge, 4> facet_edges(const Facet& f) {
  const Coord4 ei = Coord4::unit(f.type.i), ej = Coord4::unit(f.type.j);
  return {Edge{f.anchor, f.type.i}, Edge{f.anchor + ei, f.type.j}, Edge{f.anchor + ej, f.type.i},
          Edge{f.anchor, f.type.j}};
}

std::array<Corner, 4> facet_corners(const Facet& f) {
  const auto c = f.corners();
  const StarIndex i = f.type.i, j = f.type.j;
  return {Corner{c[0], {i, +1}, {j, +1}}, Corner{c[1], {i, -1}, {j, +1}},
          Corner{c[2], {i, -1}, {j, -1}}, Corner{c[3], {i, +1}, {j, -1}}};
}

}  // namespace sigma
