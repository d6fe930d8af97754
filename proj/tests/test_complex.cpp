#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "sigmafold/complex.hpp"
#include "sigmafold/error.hpp"
#include "sigmafold/generators.hpp"

using namespace sigma;

namespace {

Coord4 c4(int a, int b, int c, int d) { return Coord4{{a, b, c, d}}; }
Facet F(int i, int j, Coord4 at = {}) { return {at, make_facet_type(i - 1, j - 1)}; }

// Edge counts recomputed from scratch: walk each facet's four sides.
std::map<Edge, int> count_edges(const std::vector<Facet>& fs) {
  std::map<Edge, int> out;
  for (const auto& f : fs) {
    const auto c = f.corners();
    const StarIndex d[4] = {f.type.i, f.type.j, f.type.i, f.type.j};
    // sides anchor->+e_i, +e_i->+e_i+e_j, +e_j->+e_i+e_j, anchor->+e_j
    out[{c[0], d[0]}]++;
    out[{c[1], d[1]}]++;
    out[{c[3], d[2]}]++;
    out[{c[0], d[3]}]++;
  }
  return out;
}

int code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("build basics and errors") {
    std::vector<Facet> one{F(1, 3)};
    auto c = build(one);
    CHECK(c.size() == 1);
    CHECK(boundary(c).size() == 4);
    CHECK(!c.periodic());

    std::vector<Facet> bad{F(1, 2)};
    CHECK(code_of([&] { build(bad); }) == static_cast<int>(ErrorCode::ForbiddenFacet));
    std::vector<Facet> bad34{F(3, 4)};
    CHECK(code_of([&] { build(bad34); }) == static_cast<int>(ErrorCode::ForbiddenFacet));

    std::vector<Facet> apart{F(1, 3), F(1, 3, c4(5, 0, 0, 0))};
    CHECK(code_of([&] { build(apart); }) == static_cast<int>(ErrorCode::Disconnected));

    std::vector<Facet> none;
    CHECK_THROWS_AS(build(none), DomainError);

    std::vector<Coord4> dependent{c4(1, -1, 0, 0), c4(2, -2, 0, 0)};
    std::vector<Facet> saddle{F(1, 3), F(1, 4), F(2, 3), F(2, 4)};
    CHECK(code_of([&] { build(saddle, dependent); }) == static_cast<int>(ErrorCode::BadLattice));

    // exact duplicates are dropped and reported, also after reduction
    BuildDiagnostics diag;
    std::vector<Facet> twice{F(1, 3), F(1, 3), F(1, 3, c4(1, -1, 0, 0))};
    auto d = build(twice, {c4(1, -1, 0, 0)}, &diag);
    CHECK(d.size() == 1);
    CHECK(diag.duplicates.size() == 2);
  }

  TEST_CASE("edges match a from-scratch count") {
    std::vector<Facet> one{F(1, 3)};
    auto e1 = edges(build(one));
    CHECK(e1.size() == 4);
    for (const auto& [e, n] : e1) CHECK(n == 1);

    std::vector<Facet> strip{F(1, 3), F(1, 3, c4(0, 0, 1, 0))};
    auto s = build(strip);
    CHECK(s.edge_count({c4(0, 0, 1, 0), 0}) == 2);

    for (const auto& cx : {fractal(1), miura(3, 2, false), double_l(), butterfly()}) {
      CHECK(edges(cx) == count_edges(cx.facets()));
    }
    auto m = miura(2, 2, true);
    for (const auto& [e, n] : edges(m)) CHECK(n == 2);
  }

  TEST_CASE("is_polyhedron") {
    auto m = miura(2, 2, true);
    CHECK(is_polyhedron(m).ok);
    CHECK(boundary(m).empty());

    auto f0 = fractal(0);
    CHECK(is_polyhedron(f0).ok);

    std::vector<Facet> fan{F(1, 3), F(1, 3, c4(0, 0, -1, 0))};
    auto ok3 = build(fan);
    CHECK(is_polyhedron(ok3).ok);
    std::vector<Facet> three{F(1, 3), F(1, 3, c4(0, 0, -1, 0)), F(1, 4)};
    auto bad = is_polyhedron(build(three));
    CHECK(!bad.ok);
    REQUIRE(bad.bad_edges.size() == 1);
    CHECK(bad.bad_edges[0] == Edge{{}, 0});

    // two facets touching at one vertex only: a bow tie
    std::vector<Facet> bow{F(1, 3), F(1, 3, c4(-1, 0, -1, 0))};
    auto b = is_polyhedron(build(bow));
    CHECK(!b.ok);
    CHECK(b.bad_vertices == std::vector<Coord4>{Coord4{}});
  }

  TEST_CASE("boundary loops") {
    std::vector<Facet> one{F(1, 3)};
    auto l = boundary_loops(build(one));
    REQUIRE(l.loops.size() == 1);
    CHECK(l.loops[0].size() == 4);
    CHECK(l.unordered.empty());

    auto f0 = boundary_loops(fractal(0));
    REQUIRE(f0.loops.size() == 1);
    CHECK(f0.loops[0].size() == 8);

    auto t = boundary_loops(tube(1));
    CHECK(t.loops.size() == 2);
    CHECK(boundary(miura(2, 2, true)).empty());

    // loops are chained head to tail (as undirected segments)
    for (const auto& loop : f0.loops[0].empty() ? std::vector<std::vector<Edge>>{} : f0.loops) {
      for (std::size_t k = 0; k < loop.size(); ++k) {
        const auto& a = loop[k];
        const auto& b = loop[(k + 1) % loop.size()];
        std::set<Coord4> ea{a.tail, a.head()}, eb{b.tail, b.head()};
        std::vector<Coord4> common;
        std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
        CHECK(common.size() == 1);
      }
    }
  }

  TEST_CASE("vertex cycles") {
    auto m = miura(3, 3, false);
    // an interior vertex of the 3x3 patch
    auto cyc = vertex_cycle(m, c4(1, 1, 1, -1));
    REQUIRE(cyc.size() == 4);
    int obtuse = 0;
    for (const auto& e : cyc) obtuse += e.obtuse();
    CHECK(obtuse == 2);
    // the two obtuse corners are adjacent in a Miura vertex
    bool adjacent = false;
    for (std::size_t k = 0; k < 4; ++k) adjacent |= cyc[k].obtuse() && cyc[(k + 1) % 4].obtuse();
    CHECK(adjacent);

    auto egg = eggbox(1, 1, true);
    auto sad = vertex_cycle(egg, Coord4{});
    REQUIRE(sad.size() == 4);
    for (const auto& e : sad) CHECK(e.obtuse());

    auto dl = vertex_cycle(double_l(), Coord4{});
    REQUIRE(dl.size() == 8);
    CHECK(std::count_if(dl.begin(), dl.end(), [](auto& e) { return e.obtuse(); }) == 4);
    // consecutive entries share an edge
    auto dirs = link_directions(dl);
    for (std::size_t k = 0; k < dl.size(); ++k) {
      const auto& c = dl[k].corner;
      std::set<SignedDir> mine{c.first, c.second};
      CHECK(mine.count(dirs[k]) == 1);
      CHECK(mine.count(dirs[(k + 1) % dl.size()]) == 1);
    }
    // the cycle starts at the smallest facet
    std::vector<Facet> around;
    for (const auto& e : dl) around.push_back(e.facet);
    CHECK(dl[0].facet == *std::min_element(around.begin(), around.end()));

    std::vector<Facet> one{F(1, 3)};
    CHECK(code_of([&] { vertex_cycle(build(one), Coord4{}); }) == static_cast<int>(ErrorCode::BoundaryVertex));
    std::vector<Facet> bow{F(1, 3), F(1, 3, c4(-1, 0, -1, 0))};
    CHECK(code_of([&] { vertex_cycle(build(bow), Coord4{}); }) == static_cast<int>(ErrorCode::NotManifold));
  }

  TEST_CASE("legal extensions against brute force") {
    std::vector<Facet> one{F(1, 3)};
    auto lone = build(one);
    for (const auto& e : boundary(lone)) {
      auto got = legal_extensions(lone, e);
      // oracle: every admissible facet near the edge that has it as a side
      std::set<Facet> want;
      for (auto t : kAdmissibleTypes)
        for (int a = -1; a <= 1; ++a)
          for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
              for (int d = -1; d <= 1; ++d) {
                Facet f{e.tail + c4(a, b, c, d), t};
                if (f == F(1, 3)) continue;
                auto sides = facet_edges(f);
                if (std::find(sides.begin(), sides.end(), e) != sides.end()) want.insert(f);
              }
      CHECK(std::set<Facet>(got.begin(), got.end()) == want);
      CHECK(got.size() == 3);
    }
    auto e1 = legal_extensions(lone, Edge{{}, 0});
    std::multiset<std::string> types;
    for (const auto& f : e1) types.insert(to_string(f.type));
    CHECK(types == std::multiset<std::string>{"P13", "P14", "P14"});
    auto e3 = legal_extensions(lone, Edge{{}, 2});
    types.clear();
    for (const auto& f : e3) types.insert(to_string(f.type));
    CHECK(types == std::multiset<std::string>{"P13", "P23", "P23"});

    std::vector<Facet> strip{F(1, 3), F(1, 3, c4(0, 0, -1, 0))};
    CHECK(code_of([&] { legal_extensions(build(strip), Edge{{}, 0}); }) ==
          static_cast<int>(ErrorCode::NotBoundaryEdge));
  }

  TEST_CASE("extend") {
    std::vector<Facet> one{F(1, 3)};
    auto lone = build(one);
    auto two = extend(lone, F(1, 3, c4(0, 0, -1, 0)));
    CHECK(two.size() == 2);
    CHECK(lone.size() == 1);  // persistent
    CHECK(code_of([&] { extend(two, F(1, 3)); }) == static_cast<int>(ErrorCode::DuplicateFacet));
    CHECK(code_of([&] { extend(two, F(1, 4)); }) == static_cast<int>(ErrorCode::NonManifoldEdge));
    CHECK(code_of([&] { extend(two, F(1, 2)); }) == static_cast<int>(ErrorCode::ForbiddenFacet));
    CHECK(code_of([&] { extend(two, F(1, 3, c4(4, 0, 0, 0))); }) == static_cast<int>(ErrorCode::Disconnected));
    CHECK(to_string(ErrorCode::DuplicateFacet) == "Duplicate");
  }

  TEST_CASE("mirror and point reflection") {
    CHECK(mirror(F(1, 3), MirrorAxis::Swap12) == F(2, 3));
    CHECK(mirror(F(1, 3, c4(1, 2, 3, 4)), MirrorAxis::Swap34) == F(1, 4, c4(1, 2, 4, 3)));
    auto l = link();
    CHECK(mirror(mirror(l, MirrorAxis::Swap12), MirrorAxis::Swap12).same_complex(l));
    auto ml = mirror(l, MirrorAxis::Swap12);
    CHECK(ml.meta().requires_.r12_equal);
    CHECK(!ml.meta().requires_.r34_equal);
    std::map<std::string, int> census;
    for (const auto& f : ml.facets()) census[to_string(f.type)]++;
    // H2 u H4 sharing P13 becomes H1 u H4 sharing P23
    CHECK(census == std::map<std::string, int>{{"P13", 2}, {"P23", 3}, {"P24", 2}});

    auto pr = point_reflect(F(1, 3, c4(1, 0, 0, 0)));
    CHECK(pr == F(1, 3, c4(-2, 0, -1, 0)));
    CHECK(point_reflect(point_reflect(l)).same_complex(l));
    CHECK(translate(l, c4(1, 2, 3, 4)).size() == l.size());
  }

  TEST_CASE("periodic reduction is canonical") {
    auto m = miura(1, 1, true);
    for (const auto& f : m.facets()) {
      CHECK(m.canonical(f) == f);
      CHECK(m.contains({f.anchor + c4(1, 1, 0, 0), f.type}));
      CHECK(m.contains({f.anchor - c4(0, 0, 3, -3), f.type}));
    }
  }

  TEST_CASE("period lattice") {
    PeriodLattice L({c4(2, 0, -2, 0), c4(0, 1, 0, -1), c4(0, 0, 2, 0)});
    CHECK(L.rank() == 3);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        Coord4 v = c4(a, b, a - b, 2 * a);
        auto r = L.reduce(v);
        CHECK(L.reduce(r) == r);
        CHECK(L.contains(v - r));
        CHECK(L.reduce(v + c4(2, 0, -2, 0)) == r);
      }
    auto k = L.coefficients(c4(2, 3, 2, -3));
    REQUIRE(k.has_value());
    CHECK(L.combination(*k) == c4(2, 3, 2, -3));
    CHECK(!L.coefficients(c4(1, 0, 0, 0)).has_value());

    PeriodLattice sub({c4(4, 0, -4, 0), c4(0, 1, 0, -1), c4(0, 0, 2, 0)});
    CHECK(L.contains(sub));
    CHECK(!sub.contains(L));
    CHECK(L.index_of(sub) == 2);
    CHECK(L.coset_representatives(sub).size() == 2);

    CHECK_THROWS_AS(PeriodLattice({c4(1, 0, 0, 0), c4(0, 1, 0, 0), c4(0, 0, 1, 0), c4(0, 0, 0, 1)}),
                    Error);
  }
}
