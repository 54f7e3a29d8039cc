// swl: command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "swl/census.hpp"
#include "swl/cover_oracle.hpp"
#include "swl/error.hpp"
#include "swl/geodesic_engine.hpp"
#include "swl/lambda_system.hpp"
#include "swl/surface_complex.hpp"

namespace {

using nlohmann::ordered_json;
using namespace swl;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Complex load(const std::string& path) { return build_complex(parse_surface_spec(read_file(path))); }

std::size_t vertex_cap() {
  if (const char* env = std::getenv("SWL_VERTEX_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw Error(ErrorKind::parse, std::string("SWL_VERTEX_CAP is not a positive integer: ") + env);
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultVertexCap;
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct Options {
  std::string spec;
  std::string word;
  std::string predicate = "any";
  std::string mode = "fast";
  std::string dot;
  std::string out;
  std::string basis_first;
  std::string basis_second;
  std::vector<long long> Ls;
  std::size_t n = 3;
  std::size_t radius = 0;
  unsigned jobs = 1;
  bool json = false;
  bool csv = false;
  bool mirror = false;
};

void emit(std::ostringstream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

void run_complex(const Options& o, std::ostringstream& out) {
  const Complex c = load(o.spec);
  if (o.json) return emit(out, complex_to_json(c));
  out << "genus " << c.genus() << ", boundary " << c.boundary_count() << ", euler "
      << c.euler_characteristic() << "\n";
  for (const Face& f : c.faces()) {
    out << "face " << f.id << " (" << (f.is_disk() ? "disk" : "holed") << ", " << f.size()
        << " sides): " << c.alphabet().format(face_boundary_word(c, f.id)) << "\n";
  }
}

void run_lambda(const Options& o, std::ostringstream& out) {
  const Complex c = load(o.spec);
  const auto lam = build_lambda(c, o.mirror ? SlotConvention::mirrored : SlotConvention::standard);
  const auto census = trace_components(lam);
  bool involutions = true;
  for (std::size_t p = 0; p < lam.num_points(); ++p) {
    const auto id = static_cast<LambdaSystem::PointId>(p);
    if (lam.intra(id) == id || lam.intra(lam.intra(id)) != id) involutions = false;
    if (p < lam.num_marked_points() && (lam.glue(id) == id || lam.glue(lam.glue(id)) != id)) {
      involutions = false;
    }
  }
  ordered_json crossings = ordered_json::object();
  for (std::size_t g = 0; g < c.num_generators(); ++g) {
    crossings[c.alphabet().names()[g]] = lam.crossings_on_edge(g);
  }
  if (o.json) {
    ordered_json j = census_to_json(c, census);
    j["convention"] = o.mirror ? "mirrored" : "standard";
    j["edge_crossings"] = crossings;
    j["involutions"] = involutions;
    j["total_crossings"] = census.total_crossings();
    return emit(out, j);
  }
  out << census.curves << " curves, " << census.arcs << " arcs, " << census.total_crossings()
      << " edge crossings\n";
  for (const auto& comp : census.components) {
    out << (comp.closed ? "curve:" : "arc:  ");
    for (auto g : comp.crossings) out << " " << c.alphabet().names()[g];
    out << "\n";
  }
  out << "crossings per edge:";
  for (auto& [name, v] : crossings.items()) out << " " << name << "=" << v.get<std::size_t>();
  out << "\ninvolutions " << (involutions ? "ok" : "BROKEN") << "\n";
}

void run_reduce(const Options& o, std::ostringstream& out, bool cyclic) {
  const Complex c = load(o.spec);
  const Word w = c.alphabet().parse_word(o.word);
  const GeodesicEngine engine(c, o.mirror ? SlotConvention::mirrored : SlotConvention::standard);
  std::size_t length = 0;
  Word witness;
  Rational iota;
  if (cyclic) {
    const auto r = engine.cyclic_shortest(w);
    length = r.length;
    witness = r.witness.word();
    iota = raw_crossing_count(witness, engine.lambda());
  } else {
    const auto r = engine.shortest_word(w);
    length = r.length;
    witness = r.witness;
    iota = raw_crossing_count(witness, engine.lambda());
  }
  if (o.json) {
    ordered_json j;
    j["word"] = c.alphabet().format(w);
    j["length"] = length;
    j["witness"] = c.alphabet().format(witness);
    j["intersection"] = rational_text(iota);
    j["shortest"] = length == (cyclic ? cyclic_free_reduce(w) : free_reduce(w)).size();
    return emit(out, j);
  }
  out << "length " << length << "\nwitness " << c.alphabet().format(witness) << "\n";
}

void run_oracle(const Options& o, std::ostringstream& out) {
  const Complex c = load(o.spec);
  CoverOracle oracle(c, vertex_cap());
  ordered_json j;
  if (!o.word.empty()) {
    const Word w = c.alphabet().parse_word(o.word);
    const std::size_t radius = o.radius ? o.radius : free_reduce(w).size() + 4;
    j["word"] = c.alphabet().format(w);
    j["word_length"] = oracle.word_length(w);
    j["conjugacy_length"] = oracle.conjugacy_length(w, radius);
    j["radius"] = radius;
  }
  if (o.word.empty() || !o.dot.empty()) {
    TilingBall ball(c, vertex_cap());
    const std::size_t radius = o.radius ? o.radius : 2;
    if (c.has_disk_faces()) {
      ball.grow_layers(radius);
    } else {
      ball.grow_to_depth(radius);
    }
    j["ball"] = ball.stats_json();
    if (!o.dot.empty()) {
      std::ofstream dot(o.dot);
      if (!dot) throw Error(ErrorKind::io, "cannot write " + o.dot);
      dot << ball.to_dot();
    }
  }
  if (o.json) return emit(out, j);
  for (auto& [k, v] : j.items()) out << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

void run_count(const Options& o, std::ostringstream& out) {
  const Complex c = load(o.spec);
  CountOptions opts;
  opts.mode = o.mode == "engine" ? CountMode::engine : CountMode::fast;
  opts.jobs = o.jobs;
  if (!o.basis_first.empty() || !o.basis_second.empty()) {
    opts.basis = BasisChange{c.alphabet().parse_word(o.basis_first),
                             c.alphabet().parse_word(o.basis_second)};
  }
  std::vector<long long> Ls = o.Ls;
  if (Ls.empty()) {
    for (long long L = 64; L <= 2048; L *= 2) Ls.push_back(L);
  }
  const CountSeries series = orbit_count_series(c, Ls, opts);
  if (o.csv) {
    out << series_to_csv(series);
    return;
  }
  PowerFit fit;
  bool fitted = true;
  try {
    fit = fit_exponent(series);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::insufficient_data || o.json) throw;
    fitted = false;
  }
  if (o.json) return emit(out, series_to_json(series, fit));
  out << "L count\n";
  for (const auto& [L, n] : series.points) out << L << " " << n << "\n";
  if (fitted) out << "exponent " << fit.exponent << "\nconstant " << fit.constant << "\n";
}

void run_svg(const Options& o, std::ostringstream& out) {
  const Complex c = load(o.spec);
  const auto lam = build_lambda(c, o.mirror ? SlotConvention::mirrored : SlotConvention::standard);
  const std::string svg = emit_svg(c, lam);
  if (o.out.empty()) {
    out << svg;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::io, "cannot write " + o.out);
  f << svg;
}

FacePredicate predicate_named(const std::string& name) {
  if (name == "any") return [](const Complex&) { return true; };
  if (name == "closed") return [](const Complex& c) { return c.boundary_count() == 0; };
  if (name == "all-disk") {
    return [](const Complex& c) { return c.num_disk_faces() == c.faces().size(); };
  }
  if (name == "octagon") {
    return [](const Complex& c) {
      return c.boundary_count() == 0 && c.faces().size() == 1 && c.faces()[0].size() == 8;
    };
  }
  if (name == "odd-adjacent") {
    return [](const Complex& c) {
      bool adjacent = false;
      for (const Face& f : c.faces()) {
        if (f.is_disk() && f.size() % 2 == 0) return false;
      }
      for (std::size_t g = 0; g < c.num_generators(); ++g) {
        const Face& a = c.face(c.side_of(Dart::of(g, false)).face);
        const Face& b = c.face(c.side_of(Dart::of(g, true)).face);
        if (a.is_disk() && b.is_disk()) adjacent = true;
      }
      return adjacent;
    };
  }
  throw Error(ErrorKind::parse, "unknown predicate " + name);
}

void run_search(const Options& o, std::ostringstream& out) {
  const auto specs = search_generating_sets(o.n, predicate_named(o.predicate));
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : specs) {
      const Complex c = build_complex(s);
      ordered_json j = complex_to_json(c);
      j["spec"] = to_spec_text(s);
      arr.push_back(std::move(j));
    }
    return emit(out, arr);
  }
  out << specs.size() << " generating sets\n";
  for (const auto& s : specs) out << "---\n" << to_spec_text(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word length and conjugacy length for simple generating sets of surface groups"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "surface spec file (.srf)")->required();
  };
  auto* complex = app.add_subcommand("complex", "trace faces, genus and boundary");
  add_spec(complex);
  complex->add_flag("--json", o.json);

  auto* lambda = app.add_subcommand("lambda", "strand system census and invariant report");
  add_spec(lambda);
  lambda->add_flag("--json", o.json);
  lambda->add_flag("--mirror", o.mirror, "mirrored odd-polygon slot convention");

  auto* reduce = app.add_subcommand("reduce", "word length and a shortest representative");
  add_spec(reduce);
  reduce->add_option("--word", o.word)->required();
  reduce->add_flag("--json", o.json);
  reduce->add_flag("--mirror", o.mirror);

  auto* clength = app.add_subcommand("clength", "conjugacy length of a cyclic word");
  add_spec(clength);
  clength->add_option("--word", o.word)->required();
  clength->add_flag("--json", o.json);
  clength->add_flag("--mirror", o.mirror);

  auto* oracle = app.add_subcommand("oracle", "universal cover distances and ball statistics");
  add_spec(oracle);
  oracle->add_option("--word", o.word);
  oracle->add_option("--radius", o.radius, "conjugacy radius, or ball size without --word")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--dot", o.dot, "write the ball 1-skeleton as DOT");
  oracle->add_flag("--json", o.json);

  auto* count = app.add_subcommand("count", "simple closed curves on the one-holed torus by length");
  add_spec(count);
  count->add_option("--L", o.Ls, "length bounds (default 64 128 ... 2048)")
      ->check(CLI::PositiveNumber);
  count->add_option("--mode", o.mode)->check(CLI::IsMember({"fast", "engine"}));
  count->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));
  count->add_option("--basis-first", o.basis_first, "image of the first generator");
  count->add_option("--basis-second", o.basis_second, "image of the second generator");
  auto* csv = count->add_flag("--csv", o.csv);
  count->add_flag("--json", o.json)->excludes(csv);

  auto* svg = app.add_subcommand("svg", "draw the polygons and strands");
  add_spec(svg);
  svg->add_option("--out", o.out);
  svg->add_flag("--mirror", o.mirror);

  auto* search = app.add_subcommand("search", "enumerate simple generating sets");
  search->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  search->add_option("--predicate", o.predicate)
      ->check(CLI::IsMember({"any", "closed", "all-disk", "octagon", "odd-adjacent"}));
  search->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream out;
  try {
    if (*complex) run_complex(o, out);
    if (*lambda) run_lambda(o, out);
    if (*reduce) run_reduce(o, out, false);
    if (*clength) run_reduce(o, out, true);
    if (*oracle) run_oracle(o, out);
    if (*count) run_count(o, out);
    if (*svg) run_svg(o, out);
    if (*search) run_search(o, out);
  } catch (const Error& e) {
    ordered_json j{{"error", to_string(e.kind())}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    ordered_json j{{"error", "InternalError"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 1;
  }
  std::cout << out.str();
  return 0;
}
