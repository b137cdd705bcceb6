// dichrom: compute, verify, generate, sweep and reproduce.
#include "dichrom/errors.hpp"
#include "dichrom/fractional.hpp"
#include "dichrom/generators.hpp"
#include "dichrom/io.hpp"
#include "dichrom/reproduce.hpp"
#include "dichrom/solvers.hpp"
#include "dichrom/sweep.hpp"
#include "dichrom/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace dichrom;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInputError = 2, kCapError = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) { return path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(path); }

/// Digraph parameters accept a graph too, read as its symmetric orientation.
Digraph as_digraph(const GraphObject& object) {
  if (const auto* d = std::get_if<Digraph>(&object)) return *d;
  return symmetric(std::get<Graph>(object));
}

Graph as_graph(const GraphObject& object) {
  if (const auto* g = std::get_if<Graph>(&object)) return *g;
  return underlying_graph(std::get<Digraph>(object));
}

json fraction_json(const Fraction& f) { return {{"num", f.num().str()}, {"den", f.den().str()}}; }

json colouring_json(const CircularColouring& c) { return {{"k", c.k}, {"d", c.d}, {"colours", c.colours}}; }

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else write_file(out_path, text);
}

struct ComputeArgs {
  std::string param;
  std::string input;
  std::string witness;
  bool json = false;
  bool paranoid = false;
  int cap = 0;
};

int compute(const ComputeArgs& a) {
  const GraphObject object = parse_graph_text(read_input(a.input));
  SolverOptions options;
  options.paranoid = a.paranoid;
  json out{{"param", a.param}};
  std::string value;
  std::optional<CircularColouring> witness;

  if (a.param == "digirth") {
    auto g = digirth(as_digraph(object));
    value = g ? std::to_string(*g) : "inf";
    out["value"] = g ? fraction_json(Fraction(*g)) : json(nullptr);
  } else if (a.param == "alpha") {
    auto set = maximum_acyclic_set(as_digraph(object));
    value = std::to_string(set.size());
    out["value"] = fraction_json(Fraction(static_cast<std::int64_t>(set.size())));
    out["witness"] = {{"set", set}};
  } else if (a.param == "fractional") {
    auto cert = fractional_dichromatic(as_digraph(object), a.cap > 0 ? a.cap : kDefaultSetSystemCap);
    value = cert.value.str();
    out["value"] = fraction_json(cert.value);
    json sets = json::array();
    for (std::size_t j = 0; j < cert.sets.size(); ++j)
      sets.push_back({{"set", cert.sets[j]}, {"weight", fraction_json(cert.weights[j])}});
    json dual = json::array();
    for (const auto& y : cert.dual) dual.push_back(fraction_json(y));
    out["witness"] = {{"cover", sets}, {"dual", dual}};
  } else {
    SolverResult result;
    if (a.param == "star") result = star_dichromatic(as_digraph(object), options);
    else if (a.param == "circular") result = circular_dichromatic(as_digraph(object), options);
    else if (a.param == "dichromatic") result = dichromatic_colouring(as_digraph(object));
    else if (a.param == "va") result = circular_vertex_arboricity(as_graph(object), a.cap, options);
    else throw UsageError("unknown parameter '" + a.param + "'");
    value = result.value.str();
    out["value"] = fraction_json(result.value);
    out["witness"] = colouring_json(result.witness);
    witness = result.witness;
  }

  if (!a.witness.empty()) {
    if (!witness) throw UsageError("--witness needs a colouring parameter");
    write_file(a.witness, serialize_colouring(witness->colours));
  }
  if (a.json) std::cout << out.dump() << "\n";
  else std::cout << a.param << " " << value << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string kind;
  int k = 0;
  int d = 1;
  std::string input;
  std::string colouring;
};

int verify(const VerifyArgs& a) {
  const GraphObject object = parse_graph_text(read_input(a.input));
  const int n = std::visit([](const auto& g) { return g.order(); }, object);
  CircularColouring c{a.k, a.d, parse_colouring(read_file(a.colouring), n)};
  validate_colouring(c, n);
  std::optional<Violation> v;
  if (a.kind == "acyclic") v = check_acyclic_kd(as_digraph(object), c);
  else if (a.kind == "circular") v = check_circular_kd(as_digraph(object), c);
  else if (a.kind == "partition") v = check_partition_k(as_digraph(object), c);
  else if (a.kind == "tree") v = check_tree_kd(as_graph(object), c);
  else throw UsageError("unknown kind '" + a.kind + "'");
  std::cout << (v ? v->str() : "OK") << "\n";
  return v ? kFailed : kOk;
}

struct GenerateArgs {
  std::string family;
  int k = 0, d = 0, n = 0, g = 0, f = 0;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  std::string input;
  std::string out;
};

int generate(const GenerateArgs& a, const CLI::App& app) {
  auto need = [&](const char* flag) {
    if (app.count(flag) == 0) throw UsageError("family '" + a.family + "' needs " + flag);
  };
  auto graph_output = [&](const Graph& g) {
    return a.seed ? serialize(random_orientation(g, *a.seed)) : serialize(g);
  };
  std::string text;
  if (a.family == "circulant") {
    need("--k"), need("--d");
    text = serialize(circulant(a.k, a.d));
  } else if (a.family == "dicycle") {
    need("--n");
    text = serialize(dicycle(a.n));
  } else if (a.family == "symmetric") {
    need("--input");
    text = serialize(symmetric(as_graph(parse_graph_text(read_input(a.input)))));
  } else if (a.family == "add-source") {
    need("--input");
    text = serialize(add_source(as_digraph(parse_graph_text(read_input(a.input)))));
  } else if (a.family == "wheel") {
    need("--k");
    text = graph_output(wheel(a.k));
  } else if (a.family == "wheel-alternating") {
    need("--k");
    text = serialize(wheel_alternating(a.k));
  } else if (a.family == "kneser2") {
    need("--n");
    text = graph_output(kneser2(a.n));
  } else if (a.family == "knauer") {
    need("--g"), need("--f");
    text = serialize(knauer(a.g, a.f));
  } else if (a.family == "complete") {
    need("--n");
    text = graph_output(complete(a.n));
  } else if (a.family == "octahedron") {
    text = graph_output(octahedron());
  } else if (a.family == "icosahedron") {
    text = graph_output(icosahedron());
  } else if (a.family == "orientation") {
    need("--input"), need("--seed");
    text = serialize(random_orientation(as_graph(parse_graph_text(read_input(a.input))), *a.seed));
  } else if (a.family == "random") {
    need("--n"), need("--seed");
    text = serialize(random_digraph(a.n, a.p, *a.seed));
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  emit(a.out, text);
  return kOk;
}

struct SweepArgs {
  std::string param;
  std::string input;
  std::string out;
  int cap = kDefaultOrientationCap;
  bool wheel_symmetry = false;
  bool serial = false;
  bool json = false;
};

int sweep(const SweepArgs& a) {
  auto p = parse_sweep_parameter(a.param);
  if (!p) throw UsageError("unknown parameter '" + a.param + "'");
  const Graph g = as_graph(parse_graph_text(read_input(a.input)));
  SweepOptions options;
  options.cap = a.cap;
  options.wheel_symmetry = a.wheel_symmetry;
  SweepResult r = a.serial ? sweep_orientations_serial(g, *p, options) : sweep_orientations(g, *p, options);
  if (!a.out.empty()) write_file(a.out, serialize(r.witness));
  if (a.json) {
    json out{{"param", a.param},
             {"value", fraction_json(r.value)},
             {"mask", std::to_string(r.mask)},
             {"evaluated", r.evaluated}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << a.param << " " << r.value << "\n";
  }
  return kOk;
}

int reproduce(std::vector<int> ids) {
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  bool all = true;
  for (int id : ids) {
    CriterionReport report = run_criterion(id);
    std::cout << format_report(report) << std::flush;
    all = all && report.pass();
  }
  std::cout << (all ? "ALL PASS" : "SOME ROWS FAILED") << "\n";
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact star, circular and fractional dichromatic numbers"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* c = app.add_subcommand("compute", "compute a parameter of a digraph or graph");
  c->add_option("--param", ca.param, "star|circular|fractional|dichromatic|alpha|digirth|va")
      ->required()
      ->check(CLI::IsMember({"star", "circular", "fractional", "dichromatic", "alpha", "digirth", "va"}));
  c->add_option("--input", ca.input, "input file ('-' for stdin)")->required();
  c->add_option("--witness", ca.witness, "write the witness colouring to this file");
  c->add_option("--cap", ca.cap, "vertex cap for fractional, numerator cap for va")->check(CLI::PositiveNumber);
  c->add_flag("--json", ca.json, "JSON output with witness");
  c->add_flag("--paranoid", ca.paranoid, "linear ladder scan asserting monotone feasibility");

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "check a colouring");
  v->add_option("--kind", va.kind, "acyclic|circular|partition|tree")
      ->required()
      ->check(CLI::IsMember({"acyclic", "circular", "partition", "tree"}));
  v->add_option("--k", va.k)->required()->check(CLI::PositiveNumber);
  v->add_option("--d", va.d)->check(CLI::PositiveNumber);
  v->add_option("--input", va.input)->required();
  v->add_option("--colouring", va.colouring)->required();

  GenerateArgs ga;
  auto* g = app.add_subcommand("generate", "write a family member in the line format");
  g->add_option("--family", ga.family,
                "circulant|dicycle|symmetric|add-source|wheel|wheel-alternating|kneser2|knauer|complete|"
                "octahedron|icosahedron|orientation|random")
      ->required();
  g->add_option("--k", ga.k);
  g->add_option("--d", ga.d);
  g->add_option("--n", ga.n);
  g->add_option("--g", ga.g);
  g->add_option("--f", ga.f);
  g->add_option("--p", ga.p, "arc probability for 'random'")->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", ga.seed, "orient graph families randomly with this seed");
  g->add_option("--input", ga.input, "base (di)graph for symmetric, add-source, orientation");
  g->add_option("--out", ga.out, "output file (default stdout)");

  SweepArgs sa;
  auto* s = app.add_subcommand("sweep", "maximise a parameter over all orientations of a graph");
  s->add_option("--param", sa.param, "star|circular|fractional|dichromatic")
      ->required()
      ->check(CLI::IsMember({"star", "circular", "fractional", "dichromatic"}));
  s->add_option("--input", sa.input)->required();
  s->add_option("--out", sa.out, "write a maximising orientation here");
  s->add_option("--cap", sa.cap, "edge cap")->check(CLI::PositiveNumber);
  s->add_flag("--wheel-symmetry", sa.wheel_symmetry, "visit one orientation per dihedral orbit (wheels only)");
  s->add_flag("--serial", sa.serial, "single-threaded reference sweep");
  s->add_flag("--json", sa.json);

  std::vector<int> only;
  auto* r = app.add_subcommand("reproduce", "recompute the closed-form value tables");
  r->add_option("--criterion", only, "run only these criteria")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*c) return compute(ca);
    if (*v) return verify(va);
    if (*g) return generate(ga, *g);
    if (*s) return sweep(sa);
    return reproduce(only);
  } catch (const MonotonicityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
