#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "sigmafold/error.hpp"
#include "sigmafold/generators.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/star.hpp"
#include "sigmafold/vertex_types.hpp"

using namespace sigma;

namespace {

constexpr double kPi = std::numbers::pi;

struct Caption {
  const char* name;
  int a, o;
};

// (a,o) as printed under each vertex figure.
const Caption kCaptions[] = {
    {"Unfold", 2, 2},  {"Obtuse", 2, 2},       {"Acute", 2, 2},    {"Saddle", 0, 4},
    {"Peak", 4, 0},    {"Miura", 2, 2},        {"Crown", 4, 2},    {"Acute X", 4, 2},
    {"Obtuse L", 4, 2}, {"Broken Crown", 4, 2}, {"Obtuse X", 2, 4}, {"Double X", 6, 2},
    {"Star", 6, 2},    {"Double L", 4, 4},
};

bool admissible_pair(const SignedDir& a, const SignedDir& b) {
  return a.index != b.index && (a.index < 2) != (b.index < 2);
}

// Brute force: every cyclic direction sequence whose consecutive pairs span
// admissible facets, one per class under rotation and reversal.
std::vector<std::vector<SignedDir>> raw_cycles(int len) {
  std::vector<SignedDir> all;
  for (int i = 0; i < 4; ++i) {
    all.push_back({i, 1});
    all.push_back({i, -1});
  }
  std::set<std::vector<SignedDir>> seen;
  std::vector<std::vector<SignedDir>> out;
  std::vector<SignedDir> cur;
  std::vector<bool> used(8, false);
  auto key = [&](std::vector<SignedDir> s) {
    std::vector<SignedDir> best = s;
    for (int rev = 0; rev < 2; ++rev) {
      for (int r = 0; r < len; ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        best = std::min(best, s);
      }
      std::reverse(s.begin(), s.end());
    }
    return best;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      if (!admissible_pair(cur.back(), cur.front())) return;
      auto k = key(cur);
      if (seen.insert(k).second) out.push_back(k);
      return;
    }
    for (int d = 0; d < 8; ++d) {
      if (used[d]) continue;
      if (!cur.empty() && !admissible_pair(cur.back(), all[d])) continue;
      used[d] = true;
      cur.push_back(all[d]);
      self(self);
      cur.pop_back();
      used[d] = false;
    }
  };
  rec(rec);
  return out;
}

bool embeds(const std::vector<SignedDir>& dirs) {
  auto facets = vertex_figure(dirs);
  auto cx = build(facets);
  auto mesh = realize(cx, tetrahedral_star());
  return intersecting_pairs(mesh, 1e-9).empty();
}

}  // namespace

TEST_SUITE("vertex_types") {
  TEST_CASE("catalog shape") {
    const auto& cat = vertex_catalog();
    CHECK(cat.size() == 14);
    int four = 0;
    std::set<std::string> names;
    for (const auto& v : cat) {
      CHECK((v.valency == 4 || v.valency == 6 || v.valency == 8));
      CHECK(v.acute + v.obtuse == v.valency);
      CHECK(static_cast<int>(v.signature.size()) == v.valency);
      four += v.valency == 4;
      names.insert(v.name);
    }
    CHECK(four == 6);
    CHECK(names.size() == 14);
  }

  TEST_CASE("captions") {
    const double g = std::acos(1.0 / 3.0);
    for (const auto& c : kCaptions) {
      CAPTURE(c.name);
      const auto* v = find_vertex_type(c.name);
      REQUIRE(v != nullptr);
      CHECK(v->acute == c.a);
      CHECK(v->obtuse == c.o);
      CHECK(v->curvature(g) == doctest::Approx(2 * kPi - c.a * g - c.o * (kPi - g)).epsilon(1e-12));
    }
    CHECK(find_vertex_type("Miura")->curvature(g) == 0.0);
    CHECK(find_vertex_type("Saddle")->curvature(g) == doctest::Approx(-1.3594).epsilon(1e-4));
    CHECK(find_vertex_type("Double L")->curvature(g) == doctest::Approx(-2 * kPi).epsilon(1e-12));
    CHECK(find_vertex_type("Double X")->curvature(g) == doctest::Approx(-4 * g).epsilon(1e-12));
    CHECK(vertex_curvature(g, 2, 2) == 0.0);
    CHECK(find_vertex_type("Nonsense") == nullptr);
  }

  TEST_CASE("enumeration agrees with brute force") {
    int total_orbits = 0;
    for (const auto& v : vertex_catalog()) total_orbits += v.orbit;
    int embedded = 0, lengths_seen = 0;
    std::set<std::string> hit;
    for (int len : {4, 6, 8}) {
      int here = 0;
      for (const auto& dirs : raw_cycles(len)) {
        if (!embeds(dirs)) continue;
        ++embedded;
        ++here;
        hit.insert(classify_signature(dirs).name);
      }
      lengths_seen += here > 0;
    }
    CHECK(lengths_seen == 3);
    CHECK(embedded == total_orbits);
    CHECK(hit.size() == 14);
  }

  TEST_CASE("signatures") {
    auto s = parse_signature("-1 -3 +1 -4 +2 +3 -2 +4");
    CHECK(s == double_x_signature());
    CHECK(format_signature(s) == "-1 -3 +1 -4 +2 +3 -2 +4");
    CHECK(classify_signature(s).name == "Double X");
    CHECK(classify_signature(double_l_signature()).name == "Double L");
    CHECK_THROWS_AS(parse_signature("+5 -1"), Error);
    int rejected = 0;
    for (int len : {4, 6}) {
      for (const auto& dirs : raw_cycles(len)) {
        if (embeds(dirs)) continue;
        ++rejected;
        CHECK_THROWS_AS(classify_signature(dirs), Error);
      }
    }
    CHECK(rejected > 0);
  }

  TEST_CASE("classify_vertex examples") {
    auto egg = eggbox(2, 2, true);
    auto census = vertex_census(egg);
    CHECK(census.types.at("Peak") > 0);
    CHECK(census.types.at("Saddle") > 0);
    CHECK(census.types.size() == 2);
    CHECK(classify_vertex(dos_equis_layer(1, 1), Coord4{}).name == "Double X");
    std::vector<Facet> one{{Coord4{}, make_facet_type(0, 2)}};
    try {
      classify_vertex(build(one), Coord4{});
      FAIL("expected BoundaryVertex");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BoundaryVertex);
    }
  }

  TEST_CASE("classification is invariant under translation and mirror") {
    for (const auto& cx : {miura_weave(1, 1, true), butterfly_field(), dos_equis_layer(1, 1), fractal(1)}) {
      auto base = vertex_census(cx);
      CHECK(vertex_census(translate(cx, Coord4{{3, -1, 2, 5}})).types == base.types);
      CHECK(vertex_census(mirror(cx, MirrorAxis::Swap12)).types == base.types);
      CHECK(vertex_census(mirror(cx, MirrorAxis::Swap34)).types == base.types);
      CHECK(vertex_census(point_reflect(cx)).types == base.types);
    }
  }

  TEST_CASE("vertex figures of every catalog type") {
    for (const auto& v : vertex_catalog()) {
      CAPTURE(v.name);
      auto cx = build(vertex_figure(v.signature));
      CHECK(cx.size() == static_cast<std::size_t>(v.valency));
      CHECK(is_polyhedron(cx).ok);
      CHECK(classify_vertex(cx, Coord4{}).name == v.name);
    }
  }
}
