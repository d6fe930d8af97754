#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigmafold/complex.hpp"

namespace sigma {

// Star indices in this header are 0-based like everywhere else in the code.

// Saddle of all four admissible facets at the origin, copied m x n times by
// (1,-1,0,0) and (0,0,1,-1). Periodic output uses m(1,-1,0,0), n(0,0,1,-1).
SigmaComplex eggbox(int m, int n, bool periodic);

// P13, P14 at the origin and P23, P24 at -e2, copied by (1,1,0,0) and
// (0,0,1,-1).
SigmaComplex miura(int m, int n, bool periodic);

// Parallelogram cross-section 0, e1, e1+e2, e2 extruded along +e3, then
// along -e4; n periods of (0,0,1,-1), 8 facets each.
SigmaComplex tube(int n);

// 2-skeleton of the parallelepiped on the three star vectors other than
// v_excluded, forbidden facets removed.
std::vector<Facet> hollowped_facets(StarIndex excluded, const Coord4& at = {});
SigmaComplex hollowped(StarIndex excluded);

// Generation 0 is the union of all four hollowpeds at the origin. Each
// generation doubles the lattice, removes the central saddle and inserts a
// fresh generation-0 piece there.
SigmaComplex fractal(int generation);

// Eight facets around one vertex: two L-shapes of three coplanar facets
// joined by one P13 and one P24.
SigmaComplex double_l();
std::vector<SignedDir> double_l_signature();

// Four Double L figures (two mirrored by 1<->2) closing up modulo
// 2(e1-e2), 2(e3-e4).
SigmaComplex miura_weave(int m, int n, bool periodic);

// H2 and H4 (hollowpeds without v2 and v4) sharing P13 at the origin.
SigmaComplex link();
std::vector<Coord4> link_lattice();
SigmaComplex link_field(int extent = 2);

// A link, its point reflection shifted by (0,1,0,1), and the P24 at the
// origin joining them.
SigmaComplex butterfly();
std::vector<Coord4> butterfly_lattice();
SigmaComplex butterfly_field(int extent = 1);

// Doubly periodic layer of Double X vertices; finite copies m x n of the
// fundamental piece, with the two in-layer periods attached.
SigmaComplex dos_equis_layer(int m, int n);
std::vector<SignedDir> double_x_signature();

// Layers glued by the L or R translation, one letter per layer. A periodic
// stack also attaches the translation that closes the word. Throws
// InvalidWord.
SigmaComplex dos_equis_stack(std::string_view word, bool periodic = true);

struct Cell {
  Coord4 anchor;
  StarIndex excluded = 0;
};

// Union of the hollowpeds of the given parallelepipeds. Throws
// OverlappingCells when two solids overlap (checked at the tetrahedral star).
SigmaComplex tiling_to_complex(const std::vector<Cell>& cells);

// The four parallelepipeds at one anchor tile a standard dodecahedron.
std::vector<Cell> dodecahedron_cells(const Coord4& at = {});

struct GeneratorSpec {
  std::string name;
  int m = 1;
  int n = 1;
  int generation = 0;
  int extent = 1;
  std::string word;
  bool periodic = false;
  int index = 1;  // hollowped, 1-based as in H_1..H_4
};

// Dispatch by name; throws DomainError for unknown names or bad sizes.
SigmaComplex generate(const GeneratorSpec& spec);
std::vector<std::string> generator_names();

}  // namespace sigma
