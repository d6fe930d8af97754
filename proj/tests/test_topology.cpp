#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <set>

#include "doctest.h"
#include "sigmafold/error.hpp"
#include "sigmafold/generators.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/topology.hpp"

using namespace sigma;

namespace {

constexpr double kPi = std::numbers::pi;

Coord4 c4(int a, int b, int c, int d) { return Coord4{{a, b, c, d}}; }

// Orients a finite lifted patch by walking across shared edges, requiring
// every shared edge to be traversed in opposite directions by its two facets.
// Returns facet -> +1/-1 relative to the corner order anchor, +e_i, +e_i+e_j, +e_j.
std::map<Facet, int> orient_patch(const std::vector<Facet>& patch) {
  std::map<std::pair<Coord4, Coord4>, std::vector<std::pair<Facet, int>>> by_edge;
  for (const auto& f : patch) {
    auto c = f.corners();
    for (int k = 0; k < 4; ++k) {
      Coord4 u = c[k], v = c[(k + 1) % 4];
      int dir = u < v ? 1 : -1;
      by_edge[{std::min(u, v), std::max(u, v)}].push_back({f, dir});
    }
  }
  std::map<Facet, int> sign;
  for (const auto& seed : patch) {
    if (sign.count(seed)) continue;
    sign[seed] = 1;
    std::queue<Facet> q;
    q.push(seed);
    while (!q.empty()) {
      Facet f = q.front();
      q.pop();
      auto c = f.corners();
      for (int k = 0; k < 4; ++k) {
        Coord4 u = c[k], v = c[(k + 1) % 4];
        const auto& inc = by_edge[{std::min(u, v), std::max(u, v)}];
        if (inc.size() != 2) continue;
        int mine = 0, theirs = 0;
        Facet other;
        for (const auto& [g, d] : inc) {
          if (g == f) mine = d;
          else {
            other = g;
            theirs = d;
          }
        }
        int want = -sign[f] * mine * theirs;
        auto it = sign.find(other);
        if (it == sign.end()) {
          sign[other] = want;
          q.push(other);
        } else {
          REQUIRE(it->second == want);
        }
      }
    }
  }
  return sign;
}

// Whether translating by g reverses the patch orientation.
bool reverses(const std::map<Facet, int>& sign, const Coord4& g) {
  for (const auto& [f, s] : sign) {
    auto it = sign.find({f.anchor + g, f.type});
    if (it != sign.end()) return it->second != s;
  }
  FAIL("no facet and its translate are both in the patch");
  return false;
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("tori") {
    for (const auto& cx : {miura(1, 1, true), miura(2, 3, true), eggbox(1, 1, true), eggbox(2, 2, true)}) {
      auto q = quotient_euler(cx, cx.periods().generators());
      CHECK(q.chi == 0);
      CHECK(q.orientable);
      REQUIRE(q.genus.has_value());
      CHECK(*q.genus == 1);
      CHECK(std::abs(q.curvature_sum) < 1e-9);
    }
    auto m = quotient_euler(miura(1, 1, true), miura(1, 1, true).periods().generators());
    CHECK(m.faces == 4);
    CHECK(m.edges == 8);
    CHECK(m.vertices == 4);
  }

  TEST_CASE("link field quotient") {
    auto lf = link_field();
    auto full = quotient_euler(lf, lf.periods().generators());
    CHECK(!full.orientable);
    CHECK(full.chi == -2);
    CHECK(!full.genus.has_value());

    auto sub = orientation_preserving_sublattice(lf);
    auto q = quotient_euler(lf, sub);
    CHECK(q.orientable);
    CHECK(q.vertices == 8);
    CHECK(q.edges == 24);
    CHECK(q.faces == 12);
    CHECK(q.chi == -4);
    CHECK(*q.genus == 3);
    CHECK(q.curvature_sum == doctest::Approx(-8 * kPi).epsilon(1e-12));
    CHECK(q.gauss_bonnet_residual < 1e-9);
  }

  TEST_CASE("butterfly field quotient") {
    auto bf = butterfly_field();
    auto full = quotient_euler(bf, bf.periods().generators());
    CHECK(!full.orientable);
    CHECK(full.chi == -4);
    auto q = quotient_euler(bf, orientation_preserving_sublattice(bf));
    CHECK(q.orientable);
    CHECK(q.chi == -8);
    CHECK(*q.genus == 5);
    CHECK(q.gauss_bonnet_residual < 1e-9);
  }

  TEST_CASE("dos equis stacks") {
    auto l = dos_equis_stack("L");
    auto ql = quotient_euler(l, l.periods().generators());
    CHECK(ql.orientable);
    CHECK(ql.chi == -4);
    CHECK(*ql.genus == 3);
    auto r = dos_equis_stack("R");
    auto qr = quotient_euler(r, orientation_preserving_sublattice(r));
    CHECK(*qr.genus == 5);
    auto lr = dos_equis_stack("LR");
    auto qlr = quotient_euler(lr, orientation_preserving_sublattice(lr));
    CHECK(qlr.chi == -16);
    CHECK(*qlr.genus == 9);
  }

  TEST_CASE("weave") {
    auto w = miura_weave(1, 1, true);
    auto q = quotient_euler(w, orientation_preserving_sublattice(w));
    CHECK(q.gauss_bonnet_residual < 1e-9);
    CHECK(q.chi % 4 == 0);
    CHECK(q.chi < 0);
  }

  TEST_CASE("Gauss-Bonnet on sublattices and other star parameters") {
    auto m = miura(1, 1, true);
    std::vector<Coord4> doubled{c4(2, 2, 0, 0), c4(0, 0, 3, -3)};
    auto q = quotient_euler(m, doubled);
    CHECK(q.faces == 24);
    CHECK(q.chi == 0);
    for (double lambda : {0.2, 0.5, 0.8}) {
      for (const auto& cx : {link_field(), butterfly_field(), dos_equis_stack("LLR")}) {
        auto s = quotient_euler(cx, orientation_preserving_sublattice(cx), lambda);
        CHECK(s.curvature_sum == doctest::Approx(2 * kPi * static_cast<double>(s.chi)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("errors") {
    auto layer = dos_equis_layer(1, 1);
    try {
      quotient_euler(layer, layer.periods().generators());
      FAIL("expected NotClosed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotClosed);
    }
    auto m = miura(1, 1, true);
    try {
      quotient_euler(m, {c4(1, 0, 0, 0), c4(0, 0, 1, -1)});
      FAIL("expected NotSublattice");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSublattice);
    }
    try {
      quotient_euler(m, {c4(1, 1, 0, 0)});
      FAIL("expected NotSublattice for a rank-deficient sublattice");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSublattice);
    }
  }

  TEST_CASE("orientation character against a finite-patch oracle") {
    for (const auto& cx : {miura(1, 1, true), eggbox(1, 1, true), miura_weave(1, 1, true), link_field(),
                           butterfly_field(), dos_equis_stack("L"), dos_equis_stack("R"),
                           dos_equis_stack("LR"), dos_equis_layer(1, 1)}) {
      CAPTURE(cx.meta().generator);
      auto sign = orient_patch(replicate(cx, 3));
      auto ch = orientation_character(cx);
      const auto& gens = cx.periods().generators();
      REQUIRE(ch.size() == gens.size());
      for (std::size_t k = 0; k < gens.size(); ++k) CHECK(ch[k] == reverses(sign, gens[k]));
      for (const auto& g : orientation_preserving_sublattice(cx)) CHECK(!reverses(sign, g));
    }
  }
}
