#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "sigmafold/error.hpp"
#include "sigmafold/generators.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/io.hpp"
#include "sigmafold/vertex_types.hpp"

using namespace sigma;

namespace {

// Grows a complex from one facet by random legal moves.
SigmaComplex grow(std::mt19937_64& rng, int steps) {
  std::vector<Facet> seed{{Coord4{}, kAdmissibleTypes[rng() % 4]}};
  auto cx = build(seed);
  for (int k = 0; k < steps; ++k) {
    auto b = boundary(cx);
    if (b.empty()) break;
    const Edge e = b[rng() % b.size()];
    auto cands = legal_extensions(cx, e);
    REQUIRE(!cands.empty());
    REQUIRE(cands.size() <= 3);
    for (const auto& f : cands) {
      CHECK(f.type.admissible());
      auto sides = facet_edges(f);
      CHECK(std::find(sides.begin(), sides.end(), e) != sides.end());
    }
    cx = extend(cx, cands[rng() % cands.size()]);
  }
  return cx;
}

std::vector<SigmaComplex> every_generator() {
  std::vector<SigmaComplex> out;
  for (const auto& name : generator_names()) {
    GeneratorSpec s;
    s.name = name;
    s.word = "LRR";
    for (bool periodic : {false, true}) {
      s.periodic = periodic;
      try {
        out.push_back(generate(s));
      } catch (const DomainError&) {
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("random growth keeps every invariant") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
      auto cx = grow(rng, 3 + static_cast<int>(rng() % 25));
      for (const auto& [e, n] : edges(cx)) CHECK(n <= 2);
      CHECK(!boundary(cx).empty());

      // valency is even wherever a vertex is interior
      for (const auto& v : cx.vertices()) {
        if (link_shape(cx, v) != LinkShape::Cycle) continue;
        CHECK(vertex_cycle(cx, v).size() % 2 == 0);
      }

      auto text = serialize(cx);
      CHECK(serialize(parse(text).complex) == text);

      auto moved = translate(cx, Coord4{{static_cast<std::int64_t>(rng() % 7) - 3, 1, -2, 0}});
      CHECK(vertex_census(moved).types == vertex_census(cx).types);
      CHECK(vertex_census(mirror(cx, MirrorAxis::Swap34)).types == vertex_census(cx).types);
    }
  }

  TEST_CASE("random complexes survive the geometry round trip") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> t(0.1, 0.9);
    for (int trial = 0; trial < 15; ++trial) {
      auto cx = grow(rng, 12);
      auto s = StarState::at(StarParams{}, t(rng));
      auto back = lift_geometry(anonymous(realize(cx, s)), s, 1e-9);
      auto a = cx.facets();
      auto b = back.facets();
      const Coord4 shift = b.front().anchor - a.front().anchor;
      CHECK(translate(cx, shift).same_complex(back));
      CHECK(congruence_check(cx, StarParams{}, t(rng), t(rng), 1e-9).ok);
    }
  }

  TEST_CASE("generator outputs") {
    for (const auto& cx : every_generator()) {
      CAPTURE(cx.meta().generator);
      for (const auto& f : cx.facets()) CHECK(f.type.admissible());
      auto census = vertex_census(cx);
      CHECK(census.unrecognized == 0);
      CHECK(census.non_manifold == 0);
      for (const auto& v : cx.vertices()) {
        if (link_shape(cx, v) == LinkShape::Cycle) CHECK(vertex_cycle(cx, v).size() % 2 == 0);
      }
      if (!cx.periodic()) CHECK(!boundary(cx).empty());
      if (cx.periodic() && boundary(cx).empty()) CHECK(is_polyhedron(cx).ok);
      CHECK(is_polyhedron(cx).ok);
    }
  }

  TEST_CASE("folding keeps every facet congruent") {
    StarParams p{{1.3, 1.3, 0.9, 0.9}, 0.3};
    for (const auto& cx : every_generator()) {
      CAPTURE(cx.meta().generator);
      for (const auto& params : {StarParams{}, p}) {
        double worst = 0;
        for (int k = 0; k <= 10; ++k) {
          auto r = congruence_check(cx, params, 0.5, k / 10.0, 1e-9);
          worst = std::max(worst, r.max_deviation);
        }
        CHECK(worst < 1e-9);
        const double d = reference_diameter(cx, params);
        CHECK(collapse_extent(cx, params, CollapsePlane::X0) <= 1e-12 * d);
        CHECK(collapse_extent(cx, params, CollapsePlane::Y0) <= 1e-12 * d);
      }
    }
  }
}
