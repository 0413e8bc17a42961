// Command line harness. Every subcommand prints one JSON report on stdout.
//
// Exit codes: 0 success, 1 validation error, 2 resource cap or time limit,
// 3 property failure.

#include "abels/building.hpp"
#include "abels/errors.hpp"
#include "abels/homology.hpp"
#include "abels/serialize.hpp"
#include "abels/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using abels::Json;
using Clock = std::chrono::steady_clock;

constexpr int kExitValidation = 1;
constexpr int kExitResource = 2;
constexpr int kExitProperty = 3;

struct Timings {
  bool enabled = false;
  Json entries = Json::object();

  template <typename F>
  auto measure(const std::string& name, F&& f) {
    const auto start = Clock::now();
    auto result = f();
    const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    entries[name] = ms;
    return result;
  }
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::optional<Json> truncation;
  int exit_code = 0;

  Json to_json(const Timings& t) const {
    Json out;
    out["command"] = command;
    out["parameters"] = parameters;
    out["results"] = results;
    if (truncation) out["truncation"] = *truncation;
    if (t.enabled) out["timings"] = t.entries;
    return out;
  }
};

// ---------------------------------------------------------------------------
// finiteness

struct FinitenessOptions {
  std::string w1;
  std::string w2;
  bool oracle = false;
  std::string format = "json";
};

Report run_finiteness(const FinitenessOptions& o, Timings& timings) {
  Report r;
  r.command = "finiteness";
  r.parameters["w1"] = o.w1;
  r.parameters["w2"] = o.w2;
  r.parameters["oracle"] = o.oracle;
  const auto pair = abels::validate_pair(abels::parse_int_vector(o.w1), abels::parse_int_vector(o.w2));
  const auto lengths = abels::finiteness_lengths(pair);
  const auto best = timings.measure("search_ms", [&] {
    return abels::minimal_essential_dimension(pair, abels::Engine::Search);
  });
  const auto admissible = abels::admissible_partitions(pair, abels::Engine::Search);
  r.results["classical"] = lengths.classical;
  r.results["bredon"] = lengths.bredon;
  r.results["m"] = best.m;
  r.results["witness"] = abels::to_json(best.witness);
  r.results["admissible_partitions"] = admissible.size();
  r.results["derived_vector"] = abels::to_json(abels::derived_vector(pair));
  if (o.oracle) {
    const auto check = timings.measure("oracle_ms", [&] {
      return abels::minimal_essential_dimension(pair, abels::Engine::Oracle);
    });
    const bool agrees = check.m == best.m && check.witness == best.witness &&
                        abels::admissible_partitions(pair, abels::Engine::Oracle) == admissible;
    Json oracle;
    oracle["m"] = check.m;
    oracle["witness"] = abels::to_json(check.witness);
    oracle["agrees"] = agrees;
    r.results["oracle"] = std::move(oracle);
    if (!agrees) r.exit_code = kExitProperty;
  }
  return r;
}

// ---------------------------------------------------------------------------
// building experiments

struct BuildingOptions {
  std::int64_t p = 2;
  int dim = 2;
  int radius = 1;
  std::string model;
  std::string w;
  std::string interval;
  std::vector<std::string> signs;
  bool deep = false;
  std::size_t cap = 50000;
  double time_limit = 300;
  std::string dot;
  std::string complex_json;
};

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

abels::Model model_or(const BuildingOptions& o, abels::Model fallback) {
  return o.model.empty() ? fallback : abels::parse_model(o.model);
}

void check_sanity(const BuildingOptions& o) {
  using abels::Error;
  using abels::ErrorKind;
  if (!is_prime(o.p)) throw Error(ErrorKind::InvalidArgument, "--p must be prime");
  if (o.dim < 2) throw Error(ErrorKind::InvalidArgument, "--dim must be at least 2");
  if (o.radius < 0) throw Error(ErrorKind::InvalidArgument, "--radius must be non-negative");
  if (o.cap == 0) throw Error(ErrorKind::InvalidArgument, "--cap must be positive");
  if (o.time_limit <= 0) throw Error(ErrorKind::InvalidArgument, "--time-limit must be positive");
}

Json building_parameters(const BuildingOptions& o, abels::Model model) {
  Json j;
  j["p"] = o.p;
  j["dim"] = o.dim;
  j["radius"] = o.radius;
  j["model"] = abels::model_name(model);
  if (!o.w.empty()) j["w"] = o.w;
  if (!o.interval.empty()) j["interval"] = o.interval;
  if (!o.signs.empty()) j["signs"] = o.signs;
  j["deep"] = o.deep;
  return j;
}

Json truncation(const BuildingOptions& o) {
  Json j;
  j["radius"] = o.radius;
  j["cap"] = o.cap;
  j["deep"] = o.deep;
  return j;
}

abels::Budget budget(const BuildingOptions& o) {
  return abels::Budget::with_time_limit(
      o.cap, std::chrono::milliseconds(static_cast<std::int64_t>(o.time_limit * 1000.0)));
}

std::optional<std::filesystem::path> cache_path(const BuildingOptions& o, abels::Model model) {
  const char* dir = std::getenv("ABELS_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / ("ball-p" + std::to_string(o.p) + "-dim" + std::to_string(o.dim) + "-r" +
                                       std::to_string(o.radius) + "-" + std::string(abels::model_name(model)) +
                                       ".json");
}

// Ball around the standard lattice, read from or written to the cache
// directory when ABELS_CACHE_DIR is set.
abels::Ball load_ball(const BuildingOptions& o, abels::Model model) {
  const auto path = cache_path(o, model);
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path);
    const Json j = Json::parse(in, nullptr, false);
    if (!j.is_discarded() && j.contains("vertices") && j.contains("distance")) {
      abels::Ball b;
      b.model = model;
      b.radius = o.radius;
      b.center = abels::Lattice::standard(o.dim, o.p);
      budget(o).check(j["vertices"].size());
      for (const auto& v : j["vertices"]) b.vertices.push_back(abels::lattice_from_json(v));
      b.distance = j["distance"].get<std::vector<int>>();
      return b;
    }
  }
  auto b = abels::ball(abels::Lattice::standard(o.dim, o.p), o.radius, model, budget(o));
  if (path) {
    std::filesystem::create_directories(path->parent_path());
    Json j;
    j["p"] = o.p;
    j["dim"] = o.dim;
    j["radius"] = o.radius;
    j["model"] = abels::model_name(model);
    Json vertices = Json::array();
    for (const auto& v : b.vertices) vertices.push_back(abels::to_json(v));
    j["vertices"] = std::move(vertices);
    j["distance"] = b.distance;
    std::ofstream(*path) << j.dump() << "\n";
  }
  return b;
}

std::vector<abels::Lattice> working_vertices(const abels::Ball& b, bool deep) {
  return deep ? b.deep_vertices() : b.vertices;
}

Json simplex_counts(const abels::SimplicialComplex& x) {
  Json j = Json::object();
  for (int k = 0; k <= x.dimension(); ++k) j[std::to_string(k)] = x.count(k);
  return j;
}

void write_outputs(const BuildingOptions& o, const abels::BuildingComplex& x,
                   const std::optional<abels::HeightFunction>& h) {
  if (!o.dot.empty()) std::ofstream(o.dot) << abels::to_dot(x, h);
  if (!o.complex_json.empty()) std::ofstream(o.complex_json) << abels::to_json(x).dump(2) << "\n";
}

std::pair<abels::Rational, abels::Rational> parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw abels::Error(abels::ErrorKind::InvalidArgument, "interval must look like a:b");
  }
  return {abels::parse_rational(text.substr(0, colon)), abels::parse_rational(text.substr(colon + 1))};
}

std::vector<abels::SignVector> parse_signs(const std::vector<std::string>& items, int dim) {
  std::vector<abels::SignVector> out;
  for (const auto& item : items) {
    auto s = abels::SignVector::parse(item);
    if (s.size() != dim) throw abels::Error(abels::ErrorKind::LengthMismatch, "sign vector length differs from --dim");
    out.push_back(s);
  }
  return out;
}

Report run_ball(const BuildingOptions& o, Timings& timings) {
  check_sanity(o);
  const auto model = model_or(o, abels::Model::Quotient);
  Report r;
  r.command = "ball";
  r.parameters = building_parameters(o, model);
  r.truncation = truncation(o);
  const auto b = timings.measure("ball_ms", [&] { return load_ball(o, model); });
  const auto x = timings.measure("complex_ms", [&] {
    return abels::build_complex(working_vertices(b, o.deep), model, budget(o));
  });
  r.results["vertices"] = x.vertices.size();
  r.results["simplices"] = simplex_counts(x.complex);
  r.results["dimension"] = x.complex.dimension();
  r.results["euler_characteristic"] = x.complex.euler_characteristic();
  write_outputs(o, x, std::nullopt);
  return r;
}

Report run_slice(const BuildingOptions& o, Timings& timings) {
  check_sanity(o);
  if (o.w.empty() || o.interval.empty()) {
    throw abels::Error(abels::ErrorKind::InvalidArgument, "slice-homology needs --w and --interval");
  }
  const auto model = model_or(o, abels::Model::Quotient);
  const abels::HeightFunction h(abels::parse_int_vector(o.w));
  if (h.weights().size() != o.dim) throw abels::Error(abels::ErrorKind::LengthMismatch, "--w length differs from --dim");
  const auto [lo, hi] = parse_interval(o.interval);
  const auto pred = abels::VertexPredicate::height_interval(h, lo, hi);
  pred.check_model(model);

  Report r;
  r.command = "slice-homology";
  r.parameters = building_parameters(o, model);
  r.truncation = truncation(o);
  const auto b = timings.measure("ball_ms", [&] { return load_ball(o, model); });
  std::vector<abels::Lattice> selected;
  for (const auto& v : working_vertices(b, o.deep)) {
    if (pred(v, model)) selected.push_back(v);
  }
  // The full subcomplex of a flag complex is the flag complex of its vertex set.
  const auto x = timings.measure("complex_ms", [&] { return abels::build_complex(selected, model, budget(o)); });
  r.results["vertices"] = x.vertices.size();
  r.results["simplices"] = simplex_counts(x.complex);
  if (x.vertices.empty()) throw abels::Error(abels::ErrorKind::EmptyComplex, "no vertex lies in the height interval");
  const auto hom = timings.measure("homology_ms", [&] { return abels::reduced_homology(x.complex); });
  r.results["components"] = abels::component_count(x.complex);
  r.results["homology"] = abels::to_json(hom);
  write_outputs(o, x, h);
  return r;
}

Report run_fixed(const BuildingOptions& o, Timings& timings) {
  check_sanity(o);
  if (o.signs.empty()) throw abels::Error(abels::ErrorKind::InvalidArgument, "fixed-points needs --signs");
  const auto model = model_or(o, abels::Model::Extended);
  const auto signs = parse_signs(o.signs, o.dim);

  Report r;
  r.command = "fixed-points";
  r.parameters = building_parameters(o, model);
  r.truncation = truncation(o);
  const auto b = timings.measure("ball_ms", [&] { return load_ball(o, model); });
  const auto vertices = working_vertices(b, o.deep);
  const auto fixed_pred = abels::VertexPredicate::fixed_by(signs);

  std::vector<abels::Lattice> fixed;
  std::size_t split = 0;
  std::size_t fixed_not_split = 0;
  timings.measure("analysis_ms", [&] {
    for (const auto& v : vertices) {
      const bool is_fixed = fixed_pred(v, model);
      bool all_split = true;
      for (const auto& s : signs) all_split = all_split && abels::involution_analysis(s, v).splits;
      if (is_fixed) fixed.push_back(v);
      split += all_split;
      fixed_not_split += is_fixed && !all_split;
    }
    return 0;
  });
  const auto x = timings.measure("complex_ms", [&] { return abels::build_complex(fixed, model, budget(o)); });

  r.results["vertices"] = vertices.size();
  r.results["fixed"] = fixed.size();
  r.results["splits"] = split;
  r.results["fixed_not_split"] = fixed_not_split;
  r.results["fixed_simplices"] = simplex_counts(x.complex);
  if (model == abels::Model::Extended) {
    const auto check = timings.measure("product_ms", [&] {
      return abels::product_check(vertices, model, signs);
    });
    Json pc;
    pc["holds"] = check.holds;
    pc["partition"] = abels::to_json(check.partition);
    pc["block_sums"] = check.block_sums;
    pc["mismatches"] = check.mismatches;
    r.results["product_check"] = std::move(pc);
  } else {
    r.results["product_check"] = nullptr;
  }
  write_outputs(o, x, std::nullopt);
  return r;
}

// ---------------------------------------------------------------------------

void add_building_options(CLI::App* app, BuildingOptions& o, bool needs_w, bool needs_signs) {
  app->add_option("--p", o.p, "Prime")->required();
  app->add_option("--dim", o.dim, "Dimension of the vector space (n+1)")->required();
  app->add_option("--radius", o.radius, "Ball radius around the standard lattice")->required();
  app->add_option("--model", o.model, "extended or quotient")->check(CLI::IsMember({"extended", "quotient"}));
  auto* w = app->add_option("--w", o.w, "Height weights, e.g. 1,0,-1");
  auto* interval = app->add_option("--interval", o.interval, "Height interval a:b with rational endpoints");
  auto* signs = app->add_option("--signs", o.signs, "Sign vectors such as +-+- (repeatable)")->delimiter(',');
  if (needs_w) {
    w->required();
    interval->required();
  }
  if (needs_signs) signs->required();
  app->add_flag("--deep", o.deep, "Keep only vertices at distance at most radius-1");
  app->add_option("--cap", o.cap, "Vertex cap")->capture_default_str();
  app->add_option("--time-limit", o.time_limit, "Time limit in seconds")->capture_default_str();
  app->add_option("--dot", o.dot, "Write the 1-skeleton in DOT form to this file");
  app->add_option("--complex-json", o.complex_json, "Write the complex as JSON to this file");
}

int exit_code_for(const abels::Error& e) {
  switch (e.kind()) {
    case abels::ErrorKind::CapExceeded:
    case abels::ErrorKind::TimeLimitExceeded:
      return kExitResource;
    default:
      return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finiteness lengths of generalized Abels groups and desk-scale building experiments"};
  app.require_subcommand(1);
  Timings timings;
  app.add_flag("--timings", timings.enabled, "Include wall-clock timings in the report");

  FinitenessOptions fin;
  auto* finiteness = app.add_subcommand("finiteness", "Classical and Bredon finiteness lengths");
  finiteness->add_option("--w1", fin.w1, "First defining vector, e.g. 1,0,0")->required();
  finiteness->add_option("--w2", fin.w2, "Second defining vector, e.g. 0,0,-1")->required();
  finiteness->add_flag("--oracle", fin.oracle, "Cross-check with the exhaustive engine");
  finiteness->add_option("--format", fin.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  BuildingOptions opts;
  auto* building = app.add_subcommand("building", "Group alias for ball, slice-homology and fixed-points");
  building->require_subcommand(1);
  struct Entry {
    CLI::App* top;
    CLI::App* nested;
  };
  auto pair_of = [&](const char* name, const char* help, bool w, bool s) {
    Entry e{app.add_subcommand(name, help), building->add_subcommand(name, help)};
    add_building_options(e.top, opts, w, s);
    add_building_options(e.nested, opts, w, s);
    return e;
  };
  const Entry ball = pair_of("ball", "Vertex and simplex counts of a ball", false, false);
  const Entry slice = pair_of("slice-homology", "Reduced homology of a height-interval subcomplex", true, false);
  const Entry fixed = pair_of("fixed-points", "Fixed vertices of diagonal involutions", false, true);

  std::string suite = "all";
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", suite, "invariants, lattice, complex, homology or all")
      ->check(CLI::IsMember(abels::suite_names()));
  verify->add_option("--seed", seed, "Seed for randomized cases")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  auto parsed = [](const Entry& e) { return e.top->parsed() || e.nested->parsed(); };
  std::string command = "unknown";
  try {
    Report report;
    if (finiteness->parsed()) {
      command = "finiteness";
      report = run_finiteness(fin, timings);
      if (fin.format == "text") {
        std::cout << "classical: " << report.results["classical"] << "\n"
                  << "bredon: " << report.results["bredon"] << "\n"
                  << "m: " << report.results["m"] << "\n"
                  << "witness: " << report.results["witness"].dump() << "\n"
                  << "admissible_partitions: " << report.results["admissible_partitions"] << "\n";
        if (report.results.contains("oracle")) {
          std::cout << "oracle_agrees: " << report.results["oracle"]["agrees"] << "\n";
        }
        return report.exit_code;
      }
    } else if (parsed(ball)) {
      command = "ball";
      report = run_ball(opts, timings);
    } else if (parsed(slice)) {
      command = "slice-homology";
      report = run_slice(opts, timings);
    } else if (parsed(fixed)) {
      command = "fixed-points";
      report = run_fixed(opts, timings);
    } else if (verify->parsed()) {
      command = "verify";
      report.command = "verify";
      report.parameters["suite"] = suite;
      report.parameters["seed"] = seed;
      const auto result = timings.measure("verify_ms", [&] { return abels::run_suite(suite, seed); });
      report.results = result.to_json();
      if (!result.passed()) {
        report.exit_code = kExitProperty;
        for (const auto& p : result.properties) {
          if (!p.passed) std::cerr << "FAILED " << p.module << "/" << p.name << ": " << p.counterexample << "\n";
        }
      }
    }
    std::cout << report.to_json(timings).dump(2) << "\n";
    return report.exit_code;
  } catch (const abels::Error& e) {
    Json err;
    err["command"] = command;
    err["error"]["kind"] = e.name();
    err["error"]["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
}
