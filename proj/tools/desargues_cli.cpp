// desargues: command-line front end for the Boolean and subspace-lattice
// Desargues checks, the configuration generators and the measurement simulator.
//
// Exit codes: 0 success / property holds, 1 property violated (or a
// zero-probability collapse in `experiment`), 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "desargues/boolean_lattice.hpp"
#include "desargues/desargues.hpp"
#include "desargues/errors.hpp"
#include "desargues/io.hpp"
#include "desargues/measurement.hpp"
#include "desargues/paper_example.hpp"
#include "desargues/tolerances.hpp"

namespace {

using desargues::io::json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

bool g_pretty = false;

void emit(const json& report) { std::cout << (g_pretty ? report.dump(2) : report.dump()) << '\n'; }

int input_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  emit({{"error", message}, {"exit_code", kInputError}});
  return kInputError;
}

int cmd_tolerances() {
  json table = json::object();
  for (const auto& e : desargues::tol::kTable) table[e.name] = {{"value", e.value}, {"meaning", e.meaning}};
  emit(table);
  return kOk;
}

int cmd_boolean_check(const std::string& path) {
  const auto config = desargues::io::boolean_config_from_json(desargues::io::read_json_file(path));
  json report = desargues::io::boolean_check_report(config);
  emit(report);
  return report.at("implication_holds").get<bool>() ? kOk : kViolated;
}

int cmd_boolean_scan(unsigned n, int parallel) {
  if (n < 1 || n > desargues::boolean::kMaxScanGroundSize) {
    return input_error("boolean-scan supports 1 <= n <= " + std::to_string(desargues::boolean::kMaxScanGroundSize));
  }
  const auto report = desargues::boolean::exhaustive_scan(desargues::boolean::GroundSet(n), parallel);
  emit(desargues::io::to_json(report));
  if (report.violations != 0) {
    std::cerr << "implication violated in " << report.violations << " configurations\n";
    return kViolated;
  }
  return kOk;
}

int cmd_desargues_check(const std::string& path) {
  const auto config = desargues::io::config_from_json(desargues::io::read_json_file(path));
  if (const auto v = desargues::validate_config(config); !v.ok) return input_error("invalid configuration: " + v.reason);
  const auto report = desargues::desargues_check(config);
  emit(desargues::io::to_json(report));
  return report.equivalence_ok ? kOk : kViolated;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, std::size_t dim, const std::string& out) {
  if (dim < 3) return input_error("--dim must be at least 3");
  const auto config =
      kind == "desarguesian" ? desargues::generate_desarguesian(seed, dim) : desargues::generate_generic(seed, dim);
  const json doc = desargues::io::to_json(config);
  if (out.empty()) {
    emit(doc);
    return kOk;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) return input_error("cannot write '" + out + "'");
  file << doc.dump(2) << '\n';
  emit({{"written", out}, {"kind", kind}, {"seed", seed}, {"dim", dim}});
  return kOk;
}

int cmd_experiment(const std::string& config_path, const std::string& state_path, std::optional<std::uint64_t> seed) {
  using namespace desargues;
  const auto config = io::config_from_json(io::read_json_file(config_path));
  if (const auto v = validate_config(config); !v.ok) return input_error("invalid configuration: " + v.reason);

  StateVector state;
  if (seed) {
    Rng rng(*seed);
    state = random_state(config.d, rng);
  } else {
    if (state_path.empty()) return input_error("experiment needs a state file or --state-seed");
    state = io::state_from_json(io::read_json_file(state_path));
  }
  if (state.ambient_dim() != config.d) {
    return input_error("state dimension " + std::to_string(state.ambient_dim()) + " differs from configuration dimension " +
                       std::to_string(config.d));
  }

  const ExperimentSetup setup = ExperimentSetup::from_config(config);
  ExperimentPair pair;
  int experiment = 1;
  try {
    pair.exp1 = run_sequence(state, setup.cross_meet, setup.third_line);
    experiment = 2;
    pair.exp2 = run_sequence(state, setup.third_point, setup.point_join);
  } catch (const ZeroProbabilityOutcome& e) {
    std::cerr << "EXP" << experiment << " " << e.what() << '\n';
    emit({{"error", "zero-probability outcome"}, {"experiment", experiment}, {"stage", e.stage()}, {"detail", e.what()}});
    return kViolated;
  }
  pair.unchanged1 = ray_equal(pair.exp1.first.post_state, pair.exp1.second.post_state);
  pair.unchanged2 = ray_equal(pair.exp2.first.post_state, pair.exp2.second.post_state);

  json report = io::to_json(pair);
  report["input_state"] = io::to_json(state);
  report["eigenstate_exp1"] = eigenstate_check(pair.exp1.first, setup.third_line);
  report["eigenstate_exp2"] = eigenstate_check(pair.exp2.first, setup.point_join);
  emit(report);
  return kOk;
}

int cmd_paper_example() {
  const auto result = desargues::example::run(desargues::example::embedded());
  json checks = json::array();
  for (const auto& c : result.checks) {
    std::cerr << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  emit({{"all_pass", result.all_pass}, {"checks", checks}});
  return result.all_pass ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desargues property in Boolean algebra and in the lattice of subspaces"};
  app.require_subcommand(0, 1);

  std::string output = "json";
  bool show_tolerances = false;
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag("--tolerances", show_tolerances, "Print the tolerance table and exit");

  std::string config_path, state_path, out_path, kind = "desarguesian";
  unsigned scan_n = 0;
  int parallel = 1;
  std::uint64_t seed = 0;
  std::size_t dim = 5;
  std::optional<std::uint64_t> state_seed;

  auto* bcheck = app.add_subcommand("boolean-check", "Evaluate the Boolean implication and both circuits");
  bcheck->add_option("config", config_path, "Boolean configuration JSON")->required();

  auto* bscan = app.add_subcommand("boolean-scan", "Enumerate every configuration over a ground set of size n");
  bscan->add_option("n", scan_n, "Ground set size (1..4)")->required();
  bscan->add_option("--parallel", parallel, "Worker threads (1 = serial reference)")->check(CLI::PositiveNumber);

  auto* dcheck = app.add_subcommand("desargues-check", "Check concurrency, collinearity and projector absorption");
  dcheck->add_option("config", config_path, "Configuration JSON")->required();

  auto* gen = app.add_subcommand("generate", "Write a random configuration");
  gen->add_option("--kind", kind, "desarguesian or generic")->check(CLI::IsMember({"desarguesian", "generic"}));
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--dim", dim, "Ambient dimension (>= 3)");
  gen->add_option("--out", out_path, "Output file (stdout when omitted)");

  auto* exp = app.add_subcommand("experiment", "Run both two-stage measurements on a state");
  exp->add_option("config", config_path, "Configuration JSON")->required();
  exp->add_option("state", state_path, "State JSON");
  exp->add_option("--state-seed", state_seed, "Use a random state from this seed instead of a file");

  auto* paper = app.add_subcommand("paper-example", "Recompute the embedded H(5) example and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return input_error(e.what());
  }
  g_pretty = output == "pretty";

  try {
    if (show_tolerances) return cmd_tolerances();
    if (bcheck->parsed()) return cmd_boolean_check(config_path);
    if (bscan->parsed()) return cmd_boolean_scan(scan_n, parallel);
    if (dcheck->parsed()) return cmd_desargues_check(config_path);
    if (gen->parsed()) return cmd_generate(kind, seed, dim, out_path);
    if (exp->parsed()) return cmd_experiment(config_path, state_path, state_seed);
    if (paper->parsed()) return cmd_paper_example();
    std::cerr << app.help();
    return input_error("no command given");
  } catch (const desargues::DegenerateConfig& e) {
    return input_error(std::string("degenerate configuration: ") + e.what());
  } catch (const desargues::ParseError& e) {
    return input_error(e.what());
  } catch (const desargues::PreconditionError& e) {
    return input_error(e.what());
  } catch (const desargues::ShapeError& e) {
    return input_error(e.what());
  } catch (const nlohmann::json::exception& e) {
    return input_error(std::string("malformed input: ") + e.what());
  }
}
