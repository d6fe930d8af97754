#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sigmafold/cli.hpp"
#include "sigmafold/io.hpp"

using namespace sigma;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sigmafold");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path dir() {
  static const fs::path d = [] {
    auto p = fs::temp_directory_path() / "sigmafold_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string at(const std::string& name) { return (dir() / name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate then validate") {
    auto g = run({"generate", "miura", "--m", "2", "--n", "2", "-o", at("m.json")});
    CHECK(g.code == 0);
    CHECK(fs::exists(at("m.json")));
    auto v = run({"validate", at("m.json")});
    CHECK(v.code == 0);
    auto j = run({"validate", at("m.json"), "--json"});
    CHECK(j.code == 0);
    auto doc = json::parse(j.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "validate");
    CHECK(doc["facets"] == 16);
  }

  TEST_CASE("classify eggbox") {
    run({"generate", "eggbox", "--m", "2", "--n", "2", "--periodic", "-o", at("e.json")});
    auto c = run({"classify", at("e.json")});
    CHECK(c.code == 0);
    CHECK(c.out.find("Peak") != std::string::npos);
    CHECK(c.out.find("Saddle") != std::string::npos);
    auto j = json::parse(run({"--json", "classify", at("e.json")}).out);
    CHECK(j["census"]["types"]["Peak"] == 8);
  }

  TEST_CASE("fold to a collapsed OBJ") {
    run({"generate", "miura", "--m", "2", "--n", "2", "-o", at("m2.json")});
    auto f = run({"fold", at("m2.json"), "--t", "1.0", "--obj", at("out.obj")});
    CHECK(f.code == 0);
    auto mesh = import_obj(read_file(at("out.obj")));
    REQUIRE(!mesh.points.empty());
    for (const auto& p : mesh.points) CHECK(p.x == 0.0);
    CHECK(mesh.faces.size() == 16);
  }

  TEST_CASE("sweep, genus and animate") {
    run({"generate", "link_field", "-o", at("lf.json")});
    auto g = run({"genus", at("lf.json"), "--json"});
    CHECK(g.code == 0);
    auto j = json::parse(g.out);
    CHECK(j["quotient"]["chi"] == -2);
    CHECK(j["orientable_cover"]["quotient"]["genus"] == 3);

    auto s = run({"sweep", at("lf.json"), "--steps", "10", "--extent", "2"});
    CHECK(s.code == 0);

    auto a = run({"animate", at("lf.json"), "--frames", "3", "--dir", at("anim")});
    CHECK(a.code == 0);
    CHECK(fs::exists(dir() / "anim" / "manifest.json"));
    CHECK(fs::exists(dir() / "anim" / "frame_002.obj"));

    std::vector<Facet> sp{{{}, {0, 2}}, {Coord4{{0, 0, 0, -1}}, {0, 3}}, {Coord4{{1, 0, 0, 0}}, {1, 2}}};
    write_file(at("side.json"), serialize(build(sp)));
    CHECK(run({"sweep", at("side.json")}).code == 1);
  }

  TEST_CASE("failures and usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"generate", "teapot", "-o", at("x.json")}).code == 2);
    run({"generate", "miura", "-o", at("u.json")});
    CHECK(run({"fold", at("u.json"), "--t", "1.5", "--obj", at("bad.obj")}).code == 2);
    CHECK(run({"animate", at("u.json"), "--frames", "1", "--dir", at("a1")}).code == 2);
    CHECK(run({"validate", at("missing.json")}).code == 1);
    write_file(at("broken.json"), "{\"format\": ");
    auto b = run({"validate", at("broken.json"), "--json"});
    CHECK(b.code == 1);
    CHECK(json::parse(b.out)["error"] == "ParseError");
    run({"generate", "miura", "-o", at("flat.json")});
    CHECK(run({"genus", at("flat.json")}).code == 1);
    std::vector<Facet> bow{{{}, {0, 2}}, {Coord4{{-1, 0, -1, 0}}, {0, 2}}};
    write_file(at("bow.json"), serialize(build(bow)));
    CHECK(run({"validate", at("bow.json")}).code == 1);
  }

  TEST_CASE("deterministic output") {
    CHECK(run({"generate", "fractal", "--gen", "1", "-o", at("f1a.json")}).code == 0);
    CHECK(run({"generate", "fractal", "--gen", "1", "-o", at("f1b.json")}).code == 0);
    CHECK(read_file(at("f1a.json")) == read_file(at("f1b.json")));
    run({"fold", at("f1a.json"), "--t", "0.3", "--obj", at("f1a.obj")});
    run({"fold", at("f1b.json"), "--t", "0.3", "--obj", at("f1b.obj")});
    CHECK(read_file(at("f1a.obj")) == read_file(at("f1b.obj")));
    CHECK(run({"classify", at("f1a.json"), "--json"}).out == run({"classify", at("f1b.json"), "--json"}).out);
    auto w = run({"generate", "dos_equis_stack", "--word", "LR", "--periodic", "-o", at("dx.json")});
    CHECK(w.code == 0);
    CHECK(run({"classify", at("dx.json")}).out.find("Double X") != std::string::npos);
  }
}
