#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace sigma {

// Star indices are 0-based in code (0..3 stand for v1..v4); anything printed
// for humans or written to documents is 1-based.
using StarIndex = int;

// Integer coordinates of a vertex in the basis of star vectors.
struct Coord4 {
  std::array<std::int64_t, 4> n{0, 0, 0, 0};

  constexpr std::int64_t operator[](int k) const { return n[k]; }
  constexpr std::int64_t& operator[](int k) { return n[k]; }

  static constexpr Coord4 unit(StarIndex k) {
    Coord4 c;
    c.n[k] = 1;
    return c;
  }

  constexpr Coord4& operator+=(const Coord4& o) {
    for (int k = 0; k < 4; ++k) n[k] += o.n[k];
    return *this;
  }
  constexpr Coord4& operator-=(const Coord4& o) {
    for (int k = 0; k < 4; ++k) n[k] -= o.n[k];
    return *this;
  }
  friend constexpr Coord4 operator+(Coord4 a, const Coord4& b) { return a += b; }
  friend constexpr Coord4 operator-(Coord4 a, const Coord4& b) { return a -= b; }
  friend constexpr Coord4 operator-(Coord4 a) {
    for (auto& x : a.n) x = -x;
    return a;
  }
  friend constexpr Coord4 operator*(std::int64_t s, Coord4 a) {
    for (auto& x : a.n) x *= s;
    return a;
  }
  friend constexpr auto operator<=>(const Coord4&, const Coord4&) = default;

  constexpr bool is_zero() const { return n[0] == 0 && n[1] == 0 && n[2] == 0 && n[3] == 0; }
};

std::string to_string(const Coord4& c);

// An edge direction as seen from a vertex: +v_index or -v_index.
struct SignedDir {
  StarIndex index = 0;
  int sign = 1;

  friend constexpr auto operator<=>(const SignedDir&, const SignedDir&) = default;
  constexpr SignedDir flipped() const { return {index, -sign}; }
};

std::string to_string(const SignedDir& d);

// The two star vectors spanning a parallelogram, i < j.
struct FacetType {
  StarIndex i = 0;
  StarIndex j = 2;

  // (v1,v2) and (v3,v4) are forbidden; the other four pairs are admissible.
  constexpr bool admissible() const { return (i < 2) != (j < 2); }
  constexpr bool contains(StarIndex k) const { return i == k || j == k; }
  constexpr StarIndex other(StarIndex k) const { return k == i ? j : i; }

  friend constexpr auto operator<=>(const FacetType&, const FacetType&) = default;
};

inline constexpr std::array<FacetType, 4> kAdmissibleTypes{
    FacetType{0, 2}, FacetType{0, 3}, FacetType{1, 2}, FacetType{1, 3}};

// Normalizes (a,b) into i < j; a == b or out-of-range indices throw.
FacetType make_facet_type(StarIndex a, StarIndex b);

std::string to_string(const FacetType& t);

// A translated parallelogram with corners anchor, anchor+e_i, anchor+e_i+e_j,
// anchor+e_j.
struct Facet {
  Coord4 anchor;
  FacetType type;

  std::array<Coord4, 4> corners() const;

  friend constexpr auto operator<=>(const Facet&, const Facet&) = default;
};

std::string to_string(const Facet& f);

// The edge from tail to tail + e_dir.
struct Edge {
  Coord4 tail;
  StarIndex dir = 0;

  Coord4 head() const { return tail + Coord4::unit(dir); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

std::array<Edge, 4> facet_edges(const Facet& f);

// The corner of a facet at a given vertex, described by the two edges leaving
// that vertex along the facet boundary.
struct Corner {
  Coord4 vertex;
  SignedDir first;   // along v_i
  SignedDir second;  // along v_j

  // Obtuse iff both edges point the same way (dot product -r_i r_j lambda).
  bool obtuse() const { return first.sign == second.sign; }
};

std::array<Corner, 4> facet_corners(const Facet& f);

struct Coord4Hash {
  std::size_t operator()(const Coord4& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : c.n) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct FacetHash {
  std::size_t operator()(const Facet& f) const noexcept {
    return Coord4Hash{}(f.anchor) * 31 + static_cast<std::size_t>(f.type.i * 4 + f.type.j);
  }
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return Coord4Hash{}(e.tail) * 7 + static_cast<std::size_t>(e.dir);
  }
};

}  // namespace sigma
