// mutloop_cli: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 not a mutation loop, 3 budget
// exhausted without a verdict.

#include "mutloop/io.hpp"
#include "mutloop/mutloop.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace mutloop;
using io::Json;

namespace {

enum Exit { ok = 0, input_error = 1, not_a_loop = 2, inconclusive = 3 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotALoop : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string seed_file;
  std::string loop_file;
  std::string surface_name;
  std::string triangulation_file;
  std::string path;
  std::string perm;
  std::string point;
  std::string sign;
  std::string region = "cone-C-plus";
  Budget budget;
  std::size_t depth = 2;
  std::size_t n_max = 40;
  std::size_t count = 200;
  std::size_t max_rank = 5;
  double T = 0;
  std::string reproducer = "conjecture_counterexample.json";
  std::string output = "json";
  bool with_rays = false;
};

// ---------------------------------------------------------------------------
// Input resolution

ExchangeMatrix load_seed(const RunConfig& cfg) {
  if (cfg.seed_file.empty()) throw InputError("--seed is required");
  return io::seed_from_json(io::read_json_file(cfg.seed_file));
}

MutationLoop close_loop(const ExchangeMatrix& b, const MutationPath& path, const std::optional<Permutation>& perm) {
  const ExchangeMatrix end = apply_path(b, path).back();
  if (perm) {
    if (perm->size() != b.rank()) throw InputError("perm has the wrong length");
    if (perm->act(b) != end) throw NotALoop("the given perm does not carry the base seed to the end of the path");
    return make_loop(b, path, *perm);
  }
  const auto found = is_mutation_loop(b, path);
  if (!found) throw NotALoop("no relabelling carries the base seed to the end of the path");
  return make_loop(b, path, *found);
}

MutationLoop load_loop(const RunConfig& cfg) {
  if (!cfg.surface_name.empty()) {
    if (!cfg.seed_file.empty() || !cfg.loop_file.empty() || !cfg.path.empty())
      throw InputError("--surface cannot be combined with --seed, --loop or --path");
    return mapping_class_loop(cfg.surface_name);
  }
  const ExchangeMatrix b = load_seed(cfg);
  if (!cfg.loop_file.empty()) {
    if (!cfg.path.empty()) throw InputError("give either --loop or --path, not both");
    const auto spec = io::loop_spec_from_json(io::read_json_file(cfg.loop_file), b.rank());
    return close_loop(b, spec.path, spec.perm);
  }
  if (cfg.path.empty()) throw InputError("a loop needs --surface, --loop or --path");
  std::optional<Permutation> perm;
  if (!cfg.perm.empty()) {
    const MutationPath images = io::parse_path_list(cfg.perm, b.rank());
    if (images.size() != b.rank()) throw InputError("perm must list " + std::to_string(b.rank()) + " images");
    perm = Permutation(images);
  }
  return close_loop(b, io::parse_path_list(cfg.path, b.rank()), perm);
}

TropicalPoint load_point(const RunConfig& cfg, std::size_t n) {
  TropicalPoint w;
  if (cfg.point.empty()) return all_ones(n);
  if (std::filesystem::path(cfg.point).extension() == ".json") {
    w = io::point_from_json(io::read_json_file(cfg.point));
  } else {
    std::stringstream ss(cfg.point);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
  }
  if (w.size() != n) throw InputError("point has " + std::to_string(w.size()) + " coordinates, expected " + std::to_string(n));
  return w;
}

Region region_of(const RunConfig& cfg) { return parse_region(cfg.region); }

// ---------------------------------------------------------------------------
// Rendering

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i + 1) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.output == "json") std::cout << j.dump(2) << '\n';
  else if (cfg.output == "text") render_text(j, "", std::cout);
  else throw InputError("--output tsv is only available for the entropy command");
}

Json loop_summary(const MutationLoop& loop) { return io::to_json(loop); }

std::optional<SignWord> parse_sign_option(const RunConfig& cfg, std::size_t length) {
  if (cfg.sign.empty()) return std::nullopt;
  const SignWord w = parse_sign_word(cfg.sign);
  if (w.size() != length || !is_strict(w)) throw InputError("--sign must be a strict word of length " + std::to_string(length));
  return w;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_mutate(const RunConfig& cfg) {
  const ExchangeMatrix b = load_seed(cfg);
  const MutationPath path = io::parse_path_list(cfg.path, b.rank());
  const auto seq = apply_path(b, path);
  Json steps = Json::array();
  if (path.empty()) steps.push_back(Json{{"mutated_at", nullptr}, {"b", io::to_json(b.matrix())}});
  for (std::size_t i = 0; i < path.size(); ++i)
    steps.push_back(Json{{"mutated_at", path[i] + 1}, {"b", io::to_json(seq[i + 1].matrix())}});
  emit(cfg, Json{{"seed", io::to_json(b)}, {"path", io::path_to_json(path)}, {"matrices", steps}});
  return ok;
}

int cmd_sign(const RunConfig& cfg) {
  const ExchangeMatrix b = load_seed(cfg);
  const MutationPath path = io::parse_path_list(cfg.path, b.rank());
  if (path.empty()) throw InputError("sign needs a nonempty --path");
  Json j{{"path", io::path_to_json(path)}};
  if (cfg.point.empty()) {
    const auto t = tropical_sign(b, path);
    j["source"] = "tropical";
    j["sign"] = to_string(t.word);
    j["point"] = io::to_json(t.perturbed_point ? *t.perturbed_point : all_ones(b.rank()));
  } else {
    const TropicalPoint w = load_point(cfg, b.rank());
    const auto [end, word] = transport_along_path(b, path, w);
    j["source"] = "point";
    j["sign"] = to_string(word);
    j["point"] = io::to_json(w);
    j["transported"] = io::to_json(end);
  }
  emit(cfg, j);
  return ok;
}

Json cone_stabilization_json(const MutationLoop& loop, const SignWord& sign) {
  const auto s = check_cone_stabilization(loop, sign, 20);
  if (!s) return Json{{"n", nullptr}, {"n_max", 20}};
  return Json{{"n", s->n}, {"n_max", 20}, {"cone", io::to_json(s->cone)}};
}

int cmd_stability(const RunConfig& cfg) {
  const MutationLoop loop = load_loop(cfg);
  const StabilityReport r = detect_sign_stability(loop, region_of(cfg), cfg.budget);
  Json j{{"loop", loop_summary(loop)}, {"report", io::to_json(r, cfg.with_rays)}};
  if (!cfg.with_rays) j["report"]["ray_count"] = r.rays.size();
  if (r.verified()) {
    j["entropy"] = Json{{"h_dfd", io::to_json(entropy_dfd(r, cfg.T))},
                        {"h_per", io::to_json(entropy_per(r))},
                        {"h_per_upper_bound", io::to_json(entropy_per_upper_bound(r, cfg.T))},
                        {"T", io::to_json(cfg.T)}};
    j["cone_stabilization"] = cone_stabilization_json(loop, r.stable_sign);
    j["conjecture"] = io::to_json(conjecture_check(loop, r.stable_sign, "stable"));
  } else {
    j["entropy"] = nullptr;
    j["cone_stabilization"] = nullptr;
    const auto t = tropical_sign(loop.base, loop.path);
    j["conjecture"] = is_strict(t.word) ? io::to_json(conjecture_check(loop, t.word, "tropical")) : Json(nullptr);
  }
  emit(cfg, j);
  return r.verdict == Verdict::inconclusive ? inconclusive : ok;
}

int cmd_cones(const RunConfig& cfg) {
  const MutationLoop loop = load_loop(cfg);
  SignWord sign;
  std::string source;
  if (auto given = parse_sign_option(cfg, loop.path.size())) {
    sign = *given;
    source = "given";
  } else if (const auto r = detect_sign_stability(loop, region_of(cfg), cfg.budget); r.verified()) {
    sign = r.stable_sign;
    source = "stable";
  } else {
    sign = tropical_sign(loop.base, loop.path).word;
    source = "tropical";
    if (!is_strict(sign)) throw InputError("tropical sign is not strict; pass --sign");
  }
  const PolyhedralCone c = sign_cone(loop.base, loop.path, sign);
  Json rays = Json::array();
  if (is_full_dimensional(c))
    for (const auto& v : extreme_rays(c)) rays.push_back(io::to_json(v));
  emit(cfg, Json{{"loop", loop_summary(loop)},
                 {"sign", to_string(sign)},
                 {"sign_source", source},
                 {"sign_cone", io::to_json(c)},
                 {"full_dimensional", is_full_dimensional(c)},
                 {"extreme_rays", rays},
                 {"stabilization", cone_stabilization_json(loop, sign)}});
  return ok;
}

int cmd_entropy(const RunConfig& cfg) {
  const MutationLoop loop = load_loop(cfg);
  const StabilityReport r = detect_sign_stability(loop, region_of(cfg), cfg.budget);
  if (r.verdict == Verdict::inconclusive) {
    std::cerr << "entropy: " << r.reason << '\n';
    return inconclusive;
  }
  if (!r.verified()) throw InputError("entropy: loop is not sign-stable on the region (" + r.reason + ")");
  const EntropyEstimate e = estimate_entropy(r, loop, cfg.T, cfg.n_max);
  if (cfg.output == "tsv") {
    std::cout.precision(17);
    std::cout << "n\tnorm_E\tnorm_E_check\torbit\n";
    for (std::size_t i = 0; i < e.growth_trace.size(); ++i)
      std::cout << e.growth_trace[i].n << '\t' << e.growth_trace[i].value << '\t' << e.growth_trace_check[i].value << '\t'
                << e.orbit_trace[i].value << '\n';
    return ok;
  }
  Json j = io::to_json(e);
  j["loop"] = loop_summary(loop);
  j["lambda"] = io::to_json(r.lambda);
  j["lambda_check"] = io::to_json(r.lambda_check);
  j["extrapolated_check"] = io::to_json(extrapolate(e.growth_trace_check));
  j["extrapolated_orbit"] = io::to_json(extrapolate(e.orbit_trace));
  emit(cfg, j);
  return ok;
}

int cmd_conjecture(const RunConfig& cfg) {
  if (!cfg.surface_name.empty() || !cfg.seed_file.empty()) {
    const MutationLoop loop = load_loop(cfg);
    ConjectureReport rep;
    if (auto given = parse_sign_option(cfg, loop.path.size())) rep = conjecture_check(loop, *given, "given");
    else if (!cfg.point.empty()) rep = conjecture_check_at(loop, load_point(cfg, loop.rank()));
    else rep = conjecture_check_tropical(loop);
    emit(cfg, Json{{"loop", loop_summary(loop)}, {"report", io::to_json(rep)}});
    return ok;
  }
  if (cfg.max_rank < 2) throw InputError("conjecture: --max-rank must be at least 2");
  HarnessConfig h;
  h.count = cfg.count;
  h.max_rank = cfg.max_rank;
  h.rng_seed = cfg.budget.rng_seed;
  const HarnessResult res = run_conjecture_harness(h);
  std::map<std::string, std::size_t> families;
  Json cases = Json::array();
  for (const auto& c : res.cases) {
    ++families[c.family];
    cases.push_back(Json{{"index", c.index},
                         {"family", c.family},
                         {"rank", c.loop.rank()},
                         {"path", io::path_to_json(c.loop.path)},
                         {"perm", io::to_json(c.loop.closing_perm)},
                         {"sign_source", c.report.sign_source},
                         {"sign", to_string(c.report.sign)},
                         {"rho", io::to_json(c.report.presentation.rho)},
                         {"rho_gap", io::to_json(c.report.presentation.rho_gap)},
                         {"palindromy", to_string(c.report.presentation.palindromy)}});
  }
  Json j{{"count", h.count},
         {"max_rank", h.max_rank},
         {"rng_seed", h.rng_seed},
         {"checked", res.cases.size()},
         {"families", families},
         {"counterexample", nullptr},
         {"cases", cases}};
  if (res.counterexample) {
    io::write_reproducer(cfg.reproducer, *res.counterexample);
    j["counterexample"] = Json{{"index", res.counterexample->index}, {"reproducer", cfg.reproducer}};
  }
  emit(cfg, j);
  return ok;
}

int cmd_surface(const RunConfig& cfg) {
  if (!cfg.triangulation_file.empty()) {
    const auto tri = io::triangulation_from_json(io::read_json_file(cfg.triangulation_file));
    emit(cfg, Json{{"triangulation", io::to_json(tri)}, {"exchange_matrix", io::to_json(triangulation_to_matrix(tri))}});
    return ok;
  }
  if (cfg.surface_name.empty()) throw InputError("surface needs --surface NAME or --triangulation FILE");
  if (cfg.surface_name == "torus" || cfg.surface_name == "sphere4") {
    const auto tri = builtin_triangulation(cfg.surface_name);
    emit(cfg, Json{{"triangulation", io::to_json(tri)}, {"exchange_matrix", io::to_json(triangulation_to_matrix(tri))}});
    return ok;
  }
  const auto [tri, spec] = builtin_mapping_class(cfg.surface_name);
  const MutationLoop loop = mapping_class_loop(cfg.surface_name);
  const NorthSouthReport ns = check_north_south(loop, cfg.budget, region_of(cfg) == Region::cone_c_plus ? Region::integer_rays : region_of(cfg), cfg.depth);
  const UniformProbe probe = probe_uniform_sign_stability(loop, cfg.budget);
  Json rotations = Json::array();
  for (const auto& r : probe.rotations) rotations.push_back(to_string(r.verdict));
  Json j{{"name", spec.name},
         {"surface", spec.surface},
         {"description", spec.description},
         {"triangulation", io::to_json(tri)},
         {"exchange_matrix", io::to_json(triangulation_to_matrix(tri))},
         {"flip_word", io::path_to_json(spec.flip_word)},
         {"relabel", io::to_json(spec.relabel)},
         {"expected_stretch_formula", spec.expected_stretch_formula},
         {"loop", loop_summary(loop)},
         {"north_south", io::to_json(ns, cfg.depth)},
         {"uniform_probe", Json{{"all_verified", probe.all_verified}, {"scope", probe.scope}, {"rotations", rotations}}}};
  j["expected_stretch"] = spec.expected_stretch ? io::to_json(*spec.expected_stretch) : Json(nullptr);
  emit(cfg, j);
  return ok;
}

int cmd_xfill(const RunConfig& cfg) {
  const ExchangeMatrix b = load_seed(cfg);
  const TropicalPoint w = load_point(cfg, b.rank());
  const auto res = check_x_filling(w, b, cfg.depth);
  emit(cfg, Json{{"point", io::to_json(w)}, {"result", io::to_json(res, cfg.depth)}});
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation loops: tropical sign stability, spectra and entropy"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--seed", cfg.seed_file, "Seed JSON file");
  app.add_option("--loop", cfg.loop_file, "Loop JSON file (path and optional perm, 1-based)");
  app.add_option("--surface", cfg.surface_name, "Catalog mapping class (torus-LR, ...) or surface (torus, sphere4)");
  app.add_option("--triangulation", cfg.triangulation_file, "Triangulation JSON file");
  app.add_option("--path", cfg.path, "Mutation path, e.g. 1,2,1");
  app.add_option("--perm", cfg.perm, "Closing permutation images, e.g. 2,1");
  app.add_option("--point", cfg.point, "Tropical point, e.g. 1,1/2,-3, or a .json file");
  app.add_option("--sign", cfg.sign, "Sign word, e.g. +-");
  app.add_option("--region", cfg.region, "cone-C-plus | interior-C-plus | nonneg-and-nonpos | integer-rays")
      ->check(CLI::IsMember({"cone-C-plus", "interior-C-plus", "nonneg-and-nonpos", "integer-rays"}));
  app.add_option("--max-iterations", cfg.budget.max_iterations, "Iterations per sample ray")->check(CLI::PositiveNumber);
  app.add_option("--ray-samples", cfg.budget.ray_samples, "Number of sample rays")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", cfg.budget.rng_seed, "Seed of the sampling generator");
  app.add_option("--depth", cfg.depth, "X-filling depth");
  app.add_option("--n-max", cfg.n_max, "Trace length")->check(CLI::PositiveNumber);
  app.add_option("--count", cfg.count, "Number of random loops for the conjecture harness");
  app.add_option("--max-rank", cfg.max_rank, "Largest rank in the conjecture harness");
  app.add_option("--T", cfg.T, "Entropy parameter");
  app.add_option("--reproducer", cfg.reproducer, "Where the conjecture harness writes a counterexample");
  app.add_option("--output", cfg.output, "json | tsv | text")->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_flag("--with-rays", cfg.with_rays, "Include per-ray diagnostics in stability reports");

  const std::map<std::string, std::pair<std::string, int (*)(const RunConfig&)>> commands{
      {"mutate", {"Mutate a seed along a path", cmd_mutate}},
      {"sign", {"Tropical sign of a path", cmd_sign}},
      {"stability", {"Sign stability report for a loop", cmd_stability}},
      {"cones", {"Sign cones and cone stabilization", cmd_cones}},
      {"entropy", {"Entropy estimates and growth traces", cmd_entropy}},
      {"conjecture", {"Spectral radius conjecture check or harness", cmd_conjecture}},
      {"surface", {"Triangulations and catalog mapping classes", cmd_surface}},
      {"xfill", {"X-filling check of a tropical point", cmd_xfill}}};
  for (const auto& [name, entry] : commands) app.add_subcommand(name, entry.first);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return commands.at(cfg.command).second(cfg);
  } catch (const NotALoop& e) {
    std::cerr << cfg.command << ": not a mutation loop: " << e.what() << '\n';
    return not_a_loop;
  } catch (const std::exception& e) {
    std::cerr << cfg.command << ": " << e.what() << '\n';
    return input_error;
  }
}
