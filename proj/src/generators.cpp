#include "sigmafold/generators.hpp"

#include <algorithm>
#include <set>

#include "sigmafold/error.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/star.hpp"
#include "sigmafold/vertex_types.hpp"

namespace sigma {

namespace {

Facet facet(StarIndex i, StarIndex j, const Coord4& at = {}) { return {at, make_facet_type(i, j)}; }

Coord4 c4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return Coord4{{a, b, c, d}}; }

void require_size(int v, int lo, const char* what) {
  if (v < lo) throw DomainError(std::string(what) + " must be >= " + std::to_string(lo));
}

std::vector<Facet> shifted(const std::vector<Facet>& fs, const Coord4& by) {
  std::vector<Facet> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back({f.anchor + by, f.type});
  return out;
}

void append(std::vector<Facet>& to, const std::vector<Facet>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// m x n copies of a piece along two period vectors.
SigmaComplex grid(const std::vector<Facet>& piece, const Coord4& p, const Coord4& q, int m, int n,
                  bool periodic, const std::string& name) {
  require_size(m, 1, "m");
  require_size(n, 1, "n");
  std::vector<Facet> fs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) append(fs, shifted(piece, a * p + b * q));
  std::vector<Coord4> periods;
  if (periodic) periods = {m * p, n * q};
  auto c = build(fs, periods);
  c.meta().generator = name + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                       (periodic ? " periodic" : "");
  return c;
}

SigmaComplex named(SigmaComplex c, std::string name) {
  c.meta().generator = std::move(name);
  return c;
}

std::vector<Facet> link_facets() {
  auto fs = hollowped_facets(1);
  append(fs, hollowped_facets(3));
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

}  // namespace

SigmaComplex eggbox(int m, int n, bool periodic) {
  std::vector<Facet> saddle;
  for (auto t : kAdmissibleTypes) saddle.push_back({{}, t});
  return grid(saddle, c4(1, -1, 0, 0), c4(0, 0, 1, -1), m, n, periodic, "eggbox");
}

SigmaComplex miura(int m, int n, bool periodic) {
  Coord4 down = -Coord4::unit(1);
  std::vector<Facet> piece{facet(0, 2), facet(0, 3), facet(1, 2, down), facet(1, 3, down)};
  return grid(piece, c4(1, 1, 0, 0), c4(0, 0, 1, -1), m, n, periodic, "miura");
}

SigmaComplex tube(int n) {
  require_size(n, 1, "n");
  const Coord4 e1 = Coord4::unit(0), e2 = Coord4::unit(1);
  const Coord4 shift = c4(0, 0, 1, -1);
  std::vector<Facet> piece{facet(0, 2), facet(1, 2, e1), facet(0, 2, e2), facet(1, 2),
                           facet(0, 3, shift), facet(1, 3, shift + e1), facet(0, 3, shift + e2),
                           facet(1, 3, shift)};
  std::vector<Facet> fs;
  for (int k = 0; k < n; ++k) append(fs, shifted(piece, k * shift));
  return named(build(fs), "tube n=" + std::to_string(n));
}

std::vector<Facet> hollowped_facets(StarIndex excluded, const Coord4& at) {
  if (excluded < 0 || excluded > 3) throw DomainError("star index out of range");
  std::vector<StarIndex> rest;
  for (StarIndex k = 0; k < 4; ++k)
    if (k != excluded) rest.push_back(k);
  std::vector<Facet> out;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      FacetType t{rest[a], rest[b]};
      if (!t.admissible()) continue;
      StarIndex c = rest[3 - a - b];
      out.push_back({at, t});
      out.push_back({at + Coord4::unit(c), t});
    }
  std::sort(out.begin(), out.end());
  return out;
}

SigmaComplex hollowped(StarIndex excluded) {
  return named(build(hollowped_facets(excluded)), "hollowped i=" + std::to_string(excluded + 1));
}

namespace {

std::vector<Facet> fractal_seed() {
  std::set<Facet> fs;
  for (StarIndex l = 0; l < 4; ++l)
    for (const auto& f : hollowped_facets(l)) fs.insert(f);
  return {fs.begin(), fs.end()};
}

}  // namespace

SigmaComplex fractal(int generation) {
  require_size(generation, 0, "generation");
  const auto seed = fractal_seed();
  const Coord4 one = c4(1, 1, 1, 1);
  std::vector<Facet> fs = seed;
  Coord4 centre;
  // The central saddle alternates between the outer form (four facets
  // anchored at the centre) and the inner form (four facets ending there).
  bool outer = true;
  for (int g = 0; g < generation; ++g) {
    std::vector<Facet> doubled;
    for (const auto& f : fs) {
      Coord4 a = 2 * f.anchor;
      for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj)
          doubled.push_back({a + di * Coord4::unit(f.type.i) + dj * Coord4::unit(f.type.j), f.type});
    }
    centre = 2 * centre;
    std::set<Facet> hole;
    for (auto t : kAdmissibleTypes) {
      Coord4 a = outer ? centre : centre - Coord4::unit(t.i) - Coord4::unit(t.j);
      hole.insert({a, t});
    }
    std::set<Facet> next;
    for (const auto& f : doubled)
      if (!hole.count(f)) next.insert(f);
    if (outer) {
      for (const auto& f : seed)
        next.insert({centre + one - f.anchor - Coord4::unit(f.type.i) - Coord4::unit(f.type.j), f.type});
      centre = centre + one;
    } else {
      for (const auto& f : seed) next.insert({f.anchor + centre - one, f.type});
      centre = centre - one;
    }
    outer = !outer;
    fs.assign(next.begin(), next.end());
  }
  return named(build(fs), "fractal generation=" + std::to_string(generation));
}

std::vector<SignedDir> double_l_signature() { return parse_signature("-1 -4 +1 +3 -2 -3 +2 +4"); }

SigmaComplex double_l() { return named(build(vertex_figure(double_l_signature())), "double_l"); }

SigmaComplex miura_weave(int m, int n, bool periodic) {
  auto dl = vertex_figure(double_l_signature());
  std::vector<Facet> dm;
  for (const auto& f : dl) dm.push_back(mirror(f, MirrorAxis::Swap12));
  std::vector<Facet> piece = dl;
  append(piece, shifted(dm, c4(1, -1, 0, 0)));
  append(piece, shifted(dl, c4(1, -1, 1, -1)));
  append(piece, shifted(dm, c4(0, 0, 1, -1)));
  auto c = grid(piece, c4(2, -2, 0, 0), c4(0, 0, 2, -2), m, n, periodic, "miura_weave");
  c.meta().requires_.r12_equal = true;
  return c;
}

SigmaComplex link() { return named(build(link_facets()), "link"); }

std::vector<Coord4> link_lattice() { return {c4(1, 0, -1, 0), c4(0, 1, 0, -1), c4(1, 0, 1, 0)}; }

SigmaComplex link_field(int extent) {
  require_size(extent, 1, "extent");
  auto c = named(build(link_facets(), link_lattice()), "link_field extent=" + std::to_string(extent));
  c.meta().extent = extent;
  return c;
}

namespace {

std::vector<Facet> butterfly_facets() {
  auto fs = link_facets();
  for (const auto& f : link_facets()) fs.push_back({point_reflect(f).anchor + c4(0, 1, 0, 1), f.type});
  fs.push_back(facet(1, 3));
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

}  // namespace

SigmaComplex butterfly() { return named(build(butterfly_facets()), "butterfly"); }

std::vector<Coord4> butterfly_lattice() { return {c4(1, 0, -1, 0), c4(2, -1, 2, 0), c4(2, 0, 2, -1)}; }

SigmaComplex butterfly_field(int extent) {
  require_size(extent, 1, "extent");
  auto c = named(build(butterfly_facets(), butterfly_lattice()),
                 "butterfly_field extent=" + std::to_string(extent));
  c.meta().extent = extent;
  return c;
}

std::vector<SignedDir> double_x_signature() { return parse_signature("-1 -3 +1 -4 +2 +3 -2 +4"); }

namespace {

// X, its 1<->2 mirror stacked above it, and the same pair with the order
// switched one column over.
std::vector<Facet> dos_equis_piece() {
  auto x = vertex_figure(double_x_signature());
  std::vector<Facet> xm;
  for (const auto& f : x) xm.push_back(mirror(f, MirrorAxis::Swap12));
  std::vector<Facet> piece = x;
  append(piece, shifted(xm, c4(1, -1, 0, 0)));
  append(piece, shifted(x, c4(1, -1, 2, 0)));
  append(piece, shifted(xm, c4(0, 0, 2, 0)));
  return piece;
}

const Coord4 kLayerUp = c4(2, -2, 0, 0);
const Coord4 kLayerAcross = c4(0, 0, 4, 0);

// The two translations taking a layer onto a neighbour; they differ by half
// the across period. L keeps the orientation, R reverses it.
Coord4 gluing(char letter) { return letter == 'L' ? c4(0, 1, 2, -2) : c4(0, 1, 0, -2); }

}  // namespace

SigmaComplex dos_equis_layer(int m, int n) {
  auto c = grid(dos_equis_piece(), kLayerUp, kLayerAcross, m, n, true, "dos_equis_layer");
  c.meta().requires_.r12_equal = true;
  return c;
}

SigmaComplex dos_equis_stack(std::string_view word, bool periodic) {
  if (word.empty()) throw Error(ErrorCode::InvalidWord, "empty gluing word");
  for (char ch : word)
    if (ch != 'L' && ch != 'R')
      throw Error(ErrorCode::InvalidWord, std::string("gluing word letters are L and R, got '") + ch + "'");
  const auto piece = dos_equis_piece();
  // Every letter is one gluing: an open stack has one layer more than the
  // word has letters, a periodic one closes up after the last letter.
  std::vector<Facet> fs = piece;
  Coord4 offset;
  for (std::size_t k = 0; k < word.size(); ++k) {
    offset = offset + gluing(word[k]);
    if (k + 1 < word.size() || !periodic) append(fs, shifted(piece, offset));
  }
  std::vector<Coord4> periods{kLayerUp, kLayerAcross};
  if (periodic) periods.push_back(offset);
  auto c = build(fs, periods);
  c.meta().generator = "dos_equis_stack word=" + std::string(word) + (periodic ? " periodic" : "");
  c.meta().requires_.r12_equal = true;
  return c;
}

std::vector<Cell> dodecahedron_cells(const Coord4& at) {
  std::vector<Cell> out;
  for (StarIndex l = 0; l < 4; ++l) out.push_back({at, l});
  return out;
}

SigmaComplex tiling_to_complex(const std::vector<Cell>& cells) {
  if (cells.empty()) throw DomainError("no cells");
  const auto star = StarState::at(StarParams{}, 0.5);
  std::vector<Parallelepiped> solids;
  for (const auto& c : cells) solids.push_back(realize_cell(c.anchor, c.excluded, star));
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (cells[a].anchor == cells[b].anchor && cells[a].excluded == cells[b].excluded)
        throw Error(ErrorCode::OverlappingCells, "cell listed twice");
      if (solids_overlap(solids[a], solids[b], 1e-9))
        throw Error(ErrorCode::OverlappingCells,
                    "cells " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
    }
  std::vector<Facet> fs;
  for (const auto& c : cells) append(fs, hollowped_facets(c.excluded, c.anchor));
  return named(build(fs), "tiling cells=" + std::to_string(cells.size()));
}

SigmaComplex generate(const GeneratorSpec& s) {
  const auto& n = s.name;
  if (n == "eggbox") return eggbox(s.m, s.n, s.periodic);
  if (n == "miura") return miura(s.m, s.n, s.periodic);
  if (n == "tube") return tube(s.n);
  if (n == "hollowped") {
    if (s.index < 1 || s.index > 4) throw DomainError("hollowped index must be 1..4");
    return hollowped(s.index - 1);
  }
  if (n == "fractal") return fractal(s.generation);
  if (n == "double_l") return double_l();
  if (n == "miura_weave") return miura_weave(s.m, s.n, s.periodic);
  if (n == "link") return link();
  if (n == "link_field") return link_field(s.extent);
  if (n == "butterfly") return butterfly();
  if (n == "butterfly_field") return butterfly_field(s.extent);
  if (n == "dos_equis_layer") return dos_equis_layer(s.m, s.n);
  if (n == "dos_equis_stack") return dos_equis_stack(s.word, s.periodic);
  throw DomainError("unknown generator: " + n);
}

std::vector<std::string> generator_names() {
  return {"eggbox", "miura",     "tube",       "hollowped",       "fractal",
          "double_l", "miura_weave", "link",   "link_field",      "butterfly",
          "butterfly_field", "dos_equis_layer", "dos_equis_stack"};
}

}  // namespace sigma
