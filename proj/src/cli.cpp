#include "sigmafold/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "sigmafold/error.hpp"
#include "sigmafold/generators.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/io.hpp"
#include "sigmafold/report.hpp"
#include "sigmafold/service.hpp"
#include "sigmafold/topology.hpp"
#include "sigmafold/vertex_types.hpp"

namespace sigma {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  bool json = false;
  std::string file;
  std::string output;

  GeneratorSpec spec;
  double lambda = 1.0 / 3.0;
  std::vector<double> r;

  double t = 0.5;
  std::string obj;
  int extent = 0;  // 0: the document's suggestion

  int steps = 50;
  double margin = 0.02;

  int frames = 3;
  std::string dir;

  std::string host = "127.0.0.1";
  int port = 8080;
};

// A validation failure: reported, exit code 1.
struct Failure {
  std::string message;
  json detail;
};

json stamp(json j, const char* command) {
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void print_census(std::ostream& out, const VertexCensus& c) {
  for (const auto& [name, n] : c.types) out << "  " << std::left << std::setw(14) << name << n << '\n';
  out << "  interior " << c.interior() << ", boundary " << c.boundary;
  if (c.non_manifold) out << ", non-manifold " << c.non_manifold;
  if (c.unrecognized) out << ", unrecognized " << c.unrecognized;
  out << '\n';
}

int extent_for(const Options& o, const SigmaComplex& c) { return o.extent > 0 ? o.extent : c.meta().extent; }

int cmd_generate(const Options& o, std::ostream& out) {
  StarParams params;
  params.lambda = o.lambda;
  if (!o.r.empty()) {
    if (o.r.size() != 4) throw DomainError("--r takes four radii");
    std::copy(o.r.begin(), o.r.end(), params.r.begin());
  }
  params.validate();
  auto c = generate(o.spec);
  auto text = serialize(c, params);
  if (o.output.empty() || o.output == "-") {
    out << text;
    return 0;
  }
  write_file(o.output, text);
  if (o.json)
    out << stamp({{"file", o.output}, {"facets", c.size()}, {"periodic", c.periodic()}}, "generate").dump(2) << '\n';
  else
    out << "wrote " << o.output << ": " << c.meta().generator << ", " << c.size() << " facets\n";
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto doc = parse(read_file(o.file));
  const auto& c = doc.complex;
  auto poly = is_polyhedron(c);
  auto census = vertex_census(c);
  auto bd = boundary(c);
  bool ok = poly.ok && census.unrecognized == 0 && census.non_manifold == 0;
  if (o.json) {
    out << stamp({{"ok", ok},
                  {"facets", c.size()},
                  {"periodic", c.periodic()},
                  {"boundary_edges", bd.size()},
                  {"polyhedron", to_json(poly)},
                  {"census", to_json(census)}},
                 "validate")
               .dump(2)
        << '\n';
  } else {
    out << o.file << ": " << c.size() << " facets" << (c.periodic() ? ", periodic" : "") << ", "
        << bd.size() << " boundary edges\n";
    if (!poly.ok)
      out << "  not a polyhedron: " << poly.bad_edges.size() << " edges with more than two facets, "
          << poly.bad_vertices.size() << " singular vertices\n";
    if (census.unrecognized) out << "  " << census.unrecognized << " vertices of unknown type\n";
    out << (ok ? "valid Sigma-polyhedron\n" : "INVALID\n");
  }
  return ok ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto doc = parse(read_file(o.file));
  auto census = vertex_census(doc.complex);
  if (o.json) {
    out << stamp({{"census", to_json(census)}}, "classify").dump(2) << '\n';
  } else {
    out << o.file << ": vertex types\n";
    print_census(out, census);
  }
  return census.unrecognized ? 1 : 0;
}

int cmd_fold(const Options& o, std::ostream& out) {
  if (!(o.t >= 0.0 && o.t <= 1.0)) throw DomainError("--t must lie in [0, 1]");
  auto doc = parse(read_file(o.file));
  auto mesh = realize(doc.complex, doc.params, o.t, {}, extent_for(o, doc.complex));
  auto text = export_obj(mesh);
  if (o.obj.empty() || o.obj == "-") {
    out << text;
    return 0;
  }
  write_file(o.obj, text);
  if (o.json)
    out << stamp({{"file", o.obj},
                  {"t", o.t},
                  {"alpha_radians", mesh.star.alpha()},
                  {"vertices", mesh.vertices.size()},
                  {"quads", mesh.quads.size()}},
                 "fold")
               .dump(2)
        << '\n';
  else
    out << "wrote " << o.obj << ": t=" << o.t << " alpha=" << mesh.star.alpha() << " rad, "
        << mesh.vertices.size() << " vertices, " << mesh.quads.size() << " quads\n";
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (!(o.margin > 0.0 && o.margin < 0.5)) throw DomainError("--margin must lie in (0, 0.5)");
  auto doc = parse(read_file(o.file));
  SweepOptions opt;
  opt.steps = o.steps;
  opt.t_lo = o.margin;
  opt.t_hi = 1.0 - o.margin;
  opt.extent = extent_for(o, doc.complex);
  auto rep = collision_sweep(doc.complex, doc.params, opt);
  if (o.json) {
    out << stamp({{"report", to_json(rep)}}, "sweep").dump(2) << '\n';
  } else {
    out << o.file << ": " << rep.steps << " steps over t in [" << rep.t_lo << ", " << rep.t_hi << "]\n";
    if (rep.empty()) out << "  no collisions\n";
    for (const auto& h : rep.hits)
      out << "  " << to_string(h.a) << " x " << to_string(h.b) << " for t in [" << h.t_lo << ", " << h.t_hi
          << "]\n";
  }
  return rep.empty() ? 0 : 1;
}

int cmd_genus(const Options& o, std::ostream& out) {
  auto doc = parse(read_file(o.file));
  const auto& c = doc.complex;
  if (!c.periodic()) throw Failure{"genus needs a periodic complex", {}};
  const double lambda = doc.params.lambda;
  auto whole = quotient_euler(c, c.periods().generators(), lambda);
  json j{{"lattice", json::array()}, {"quotient", to_json(whole)}};
  for (const auto& g : c.periods().generators()) j["lattice"].push_back(to_json(g));
  std::optional<QuotientEuler> cover;
  std::vector<Coord4> sub;
  try {
    auto ch = orientation_character(c);
    j["reverses_orientation"] = ch;
    sub = orientation_preserving_sublattice(c);
    cover = quotient_euler(c, sub, lambda);
    j["orientable_cover"] = {{"sublattice", json::array()}, {"quotient", to_json(*cover)}};
    for (const auto& g : sub) j["orientable_cover"]["sublattice"].push_back(to_json(g));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonOrientable) throw;
    j["reverses_orientation"] = nullptr;
    j["orientable_cover"] = nullptr;
  }
  if (o.json) {
    out << stamp(j, "genus").dump(2) << '\n';
    return 0;
  }
  auto line = [&](const char* label, const QuotientEuler& q) {
    out << label << ": V=" << q.vertices << " E=" << q.edges << " F=" << q.faces << " chi=" << q.chi;
    if (q.genus) out << " genus=" << *q.genus;
    out << (q.orientable ? " orientable" : " non-orientable") << ", total curvature " << q.curvature_sum
        << " (2 pi chi " << 2 * M_PI * static_cast<double>(q.chi) << ")\n";
  };
  line("quotient by the period lattice", whole);
  if (cover) {
    out << "orientation-preserving sublattice:";
    for (const auto& g : sub) out << ' ' << to_string(g);
    out << '\n';
    line("orientable quotient", *cover);
  } else {
    out << "the lifted surface is not orientable\n";
  }
  return 0;
}

int cmd_animate(const Options& o, std::ostream& out) {
  auto doc = parse(read_file(o.file));
  auto frames = export_animation(doc.complex, doc.params, o.frames, o.dir, o.margin, extent_for(o, doc.complex));
  if (o.json) {
    json fs = json::array();
    for (const auto& f : frames)
      fs.push_back({{"frame", f.frame}, {"t", f.t}, {"alpha_radians", f.alpha}, {"file", f.file.string()}});
    out << stamp({{"frames", fs}}, "animate").dump(2) << '\n';
  } else {
    out << "wrote " << frames.size() << " frames and manifest.json to " << o.dir << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sigma-polyhedra: generate, check and fold"};
  app.name("sigmafold");
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto* gen = app.add_subcommand("generate", "write a generator's complex as a document");
  gen->add_option("name", o.spec.name, "generator name")->required()->check(CLI::IsMember(generator_names()));
  gen->add_option("--m", o.spec.m, "copies along the first period")->check(CLI::PositiveNumber);
  gen->add_option("--n", o.spec.n, "copies along the second period / tube segments")->check(CLI::PositiveNumber);
  gen->add_option("--gen", o.spec.generation, "fractal generation")->check(CLI::NonNegativeNumber);
  gen->add_option("--word", o.spec.word, "Dos Equis gluing word over {L,R}");
  gen->add_option("--extent", o.spec.extent, "suggested copies per period")->check(CLI::PositiveNumber);
  gen->add_option("--index", o.spec.index, "hollowped index 1..4")->check(CLI::Range(1, 4));
  gen->add_flag("--periodic", o.spec.periodic, "attach the period lattice");
  gen->add_option("--lambda", o.lambda, "fold invariant lambda")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--r", o.r, "radii r1 r2 r3 r4")->expected(4);
  gen->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* val = app.add_subcommand("validate", "check that a document is a Sigma-polyhedron");
  val->add_option("file", o.file)->required();
  auto* cls = app.add_subcommand("classify", "vertex-type census");
  cls->add_option("file", o.file)->required();

  auto* fold = app.add_subcommand("fold", "realize at one fold state and export OBJ");
  fold->add_option("file", o.file)->required();
  fold->add_option("--t", o.t, "fold parameter in [0, 1]");
  fold->add_option("--obj", o.obj, "OBJ output (default stdout)");
  fold->add_option("--extent", o.extent, "copies per period")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "look for self-intersections along the fold path");
  sweep->add_option("file", o.file)->required();
  sweep->add_option("--steps", o.steps)->check(CLI::Range(2, 100000));
  sweep->add_option("--margin", o.margin, "sweep t over [margin, 1 - margin]");
  sweep->add_option("--extent", o.extent, "copies per period")->check(CLI::PositiveNumber);

  auto* genus = app.add_subcommand("genus", "Euler characteristic and genus of a periodic quotient");
  genus->add_option("file", o.file)->required();

  auto* anim = app.add_subcommand("animate", "write OBJ frames along the fold path");
  anim->add_option("file", o.file)->required();
  anim->add_option("--frames", o.frames)->check(CLI::PositiveNumber);
  anim->add_option("--dir", o.dir)->required();
  anim->add_option("--margin", o.margin);
  anim->add_option("--extent", o.extent, "copies per period")->check(CLI::PositiveNumber);

  auto* srv = app.add_subcommand("serve", "run the design-session HTTP service");
  srv->add_option("--host", o.host);
  srv->add_option("--port", o.port)->check(CLI::Range(1, 65535));

  for (auto* sub : app.get_subcommands({}))
    sub->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(o, out);
    if (val->parsed()) return cmd_validate(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (fold->parsed()) return cmd_fold(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (genus->parsed()) return cmd_genus(o, out);
    if (anim->parsed()) return cmd_animate(o, out);
    if (srv->parsed()) {
      err << "serving on http://" << o.host << ':' << o.port << '\n';
      return serve(o.host, o.port) ? 0 : 1;
    }
  } catch (const Failure& f) {
    if (o.json)
      out << json{{"ok", false}, {"error", "Failure"}, {"message", f.message}}.dump(2) << '\n';
    else
      err << "sigmafold: " << f.message << '\n';
    return 1;
  } catch (const Error& e) {
    if (o.json)
      out << json{{"ok", false}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump(2)
          << '\n';
    else
      err << "sigmafold: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::Domain ? 2 : 1;
  }
  return 2;
}

}  // namespace sigma
