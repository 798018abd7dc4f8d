// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "desargues/boolean_lattice.hpp"
#include "desargues/desargues.hpp"
#include "desargues/io.hpp"
#include "desargues/measurement.hpp"
#include "desargues/paper_example.hpp"
#include "desargues/subspace.hpp"
#include "desargues/tolerances.hpp"

using namespace desargues;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "failed: " + what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Criterion 1: the worked H(5) example, every intermediate, in under a second.
Outcome worked_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const example::Result r = example::run(example::embedded());
  const double elapsed = seconds_since(t0);
  for (const auto& c : r.checks) o.require(c.pass, c.name + " (" + c.detail + ")");
  o.require(r.checks.size() == 23, "expected 23 example checks, ran " + std::to_string(r.checks.size()));
  o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(r.checks.size()) + " checks in " + std::to_string(elapsed) + " s";
  return o;
}

bool is_converse_counterexample(const std::optional<boolean::DesarguesInput>& in) {
  if (!in) return false;
  const boolean::Derived d = boolean::derive(*in);
  return boolean::consequent(d) && !boolean::antecedent(d);
}

// Criterion 2: exhaustive Boolean verification, single-threaded.
Outcome boolean_exhaustive() {
  Outcome o;
  const auto t0 = Clock::now();
  const boolean::ScanReport r3 = boolean::scan_serial(boolean::GroundSet(3));
  const double elapsed = seconds_since(t0);
  o.require(r3.raw_tuples == 262144, "n=3 raw tuple count");
  o.require(r3.total == 336 * 336, "n=3 distinct-triplet count");
  o.require(r3.violations == 0, "n=3 implication violations = " + std::to_string(r3.violations));
  o.require(is_converse_counterexample(r3.converse_counterexample), "n=3 converse counterexample");
  const boolean::ScanReport r2 = boolean::scan_serial(boolean::GroundSet(2));
  o.require(r2.violations == 0, "n=2 implication violations");
  o.require(is_converse_counterexample(r2.converse_counterexample), "n=2 converse counterexample");
  o.require(elapsed < 60.0, "n=3 scan took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = "n=3: " + std::to_string(r3.total) + " configs, 0 violations, " + std::to_string(elapsed) + " s";
  }
  return o;
}

// Criterion 3: the Boolean worked example over S = {1,2,3}.
Outcome boolean_golden() {
  Outcome o;
  const io::BooleanConfig c = io::boolean_config_from_json(
      io::json::parse(R"({"ground":["1","2","3"],"A":[["1"],["2"],["3"]],"Aprime":[["1","3"],["2","3"],[]]})"));
  const auto c3 = io::subset_to_json(boolean::circuit_antecedent(c.input), c.labels);
  const auto b3 = io::subset_to_json(boolean::circuit_consequent(c.input), c.labels);
  o.require(c3 == io::json::array({"3"}), "first circuit output " + c3.dump());
  o.require(b3 == io::json::array({"1", "2"}), "second circuit output " + b3.dump());
  if (o.pass) o.detail = "C3 = " + c3.dump() + ", B3 = " + b3.dump();
  return o;
}

Subspace random_sub(Rng& rng, std::size_t d) {
  return random_subspace(d, static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(d))), rng, 3);
}

// Criterion 4: lattice laws as exact equalities, 1000 samples per dimension.
Outcome lattice_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t samples = 0;
  for (std::size_t d : {3, 4, 5, 6}) {
    Rng rng(1000 + d);
    for (int t = 0; t < 1000 && o.pass; ++t, ++samples) {
      const Subspace a = random_sub(rng, d), b = random_sub(rng, d);
      // Half the samples build a superspace of `a`, so leq is exercised both ways.
      const Subspace c = t % 2 == 0 ? join(a, random_sub(rng, d)) : random_sub(rng, d);
      const std::string at = " (d=" + std::to_string(d) + ", sample " + std::to_string(t) + ")";

      o.require(dim_formula_check(a, b), "dimension formula" + at);
      if (leq(a, c)) o.require(modularity_check(a, b, c), "modularity" + at);

      const Subspace ap = orthocomplement(a), bp = orthocomplement(b);
      o.require(meet(a, ap).is_zero(), "H meet H-perp = O" + at);
      o.require(join(a, ap).is_full(), "H join H-perp = I" + at);
      o.require(orthocomplement(ap) == a, "double orthocomplement" + at);
      o.require(orthocomplement(meet(a, b)) == join(ap, bp), "De Morgan for meet" + at);
      o.require(orthocomplement(join(a, b)) == meet(ap, bp), "De Morgan for join" + at);

      const Projector pa = projector(a), pc = projector(c);
      o.require(pa.matrix * pa.matrix == pa.matrix, "idempotent projector" + at);
      o.require(adjoint(pa.matrix) == pa.matrix, "Hermitian projector" + at);
      o.require(trace(pa.matrix) == GaussianRational(static_cast<long>(a.dim())), "trace = dim" + at);

      o.require(meet(a, b) == meet_de_morgan(a, b), "meet algorithms agree" + at);
      o.require(leq(a, c) == (pc.matrix * pa.matrix == pa.matrix), "leq iff absorption" + at);
    }
  }

  // Non-distributivity: three distinct lines through the origin of C^2.
  const std::vector<ExactVector> e1{{1, 0}}, e2{{0, 1}}, diag{{1, 1}};
  const Subspace x = Subspace::from_vectors(e1, 2), y = Subspace::from_vectors(e2, 2), z = Subspace::from_vectors(diag, 2);
  o.require(!(meet(x, join(y, z)) == join(meet(x, y), meet(x, z))), "distributivity counterexample");

  const double elapsed = seconds_since(t0);
  o.require(elapsed < 120.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(samples) + " samples in " + std::to_string(elapsed) + " s";
  return o;
}

// Criterion 5: Desargues equivalence on generated configurations.
Outcome desargues_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::size_t dims[3] = {3, 5, 7};
  for (std::uint64_t seed = 0; seed < 200 && o.pass; ++seed) {
    const std::size_t d = dims[seed % 3];
    const std::string at = " (seed " + std::to_string(seed) + ", d=" + std::to_string(d) + ")";
    const ConfigReport r = desargues_check(generate_desarguesian(seed, d));
    o.require(r.concurrent && r.collinear, "Desarguesian config concurrent and collinear" + at);
    o.require(r.absorption_lhs && r.absorption_rhs, "Desarguesian absorption flags" + at);
    const ConfigReport g = desargues_check(generate_generic(seed, d));
    o.require(g.equivalence_ok, "generic equivalence" + at);
  }

  // Commuting projectors without absorption.
  const std::vector<ExactVector> e1{{1, 0, 0}}, e2{{0, 1, 0}};
  const ExactMatrix p = projector(Subspace::from_vectors(e1, 3)).matrix;
  const ExactMatrix q = projector(Subspace::from_vectors(e2, 3)).matrix;
  o.require(p * q == q * p && !(p * q == q) && !(q * p == p), "commutation without absorption");

  const double elapsed = seconds_since(t0);
  o.require(elapsed < 120.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "400 configs in " + std::to_string(elapsed) + " s";
  return o;
}

// Criterion 6: selective correlation over random states.
Outcome selective_correlation() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 20 && o.pass; ++seed) {
    const std::size_t d = 3 + seed % 5;
    const ExperimentSetup setup = ExperimentSetup::from_config(generate_desarguesian(seed, d));
    Rng rng(500 + seed);
    std::vector<StateVector> states;
    for (int t = 0; t < 20; ++t) states.push_back(random_state(d, rng));
    const auto outcomes = run_batch_parallel(setup, states);
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
      const std::string at = " (seed " + std::to_string(seed) + ", state " + std::to_string(t) + ")";
      const auto& pair = outcomes[t].pair;
      if (!pair) {
        // Only an outcome below the survival threshold may be skipped.
        const double p1 = measure(states[t], setup.cross_meet).probability;
        o.require(p1 <= tol::kSurvivalProbability, "unexpected zero-probability failure" + at);
        continue;
      }
      if (pair->exp1.first.probability <= tol::kSurvivalProbability ||
          pair->exp2.first.probability <= tol::kSurvivalProbability) {
        continue;
      }
      ++checked;
      o.require(pair->unchanged1 && pair->unchanged2, "unchanged flags" + at);
      o.require(eigenstate_check(pair->exp1.first, setup.third_line), "EXP1 eigenstate" + at);
      o.require(eigenstate_check(pair->exp2.first, setup.point_join), "EXP2 eigenstate" + at);
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(checked > 0, "no state survived stage 1");
  o.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " states checked in " + std::to_string(elapsed) + " s";
  return o;
}

std::string run_cli(const std::string& args) {
  FILE* pipe = popen((std::string(DESARGUES_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Criterion 7: generation is byte-identical across runs.
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("desargues_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  int files = 0;
  for (const char* kind : {"desarguesian", "generic"})
    for (int seed : {0, 7, 123})
      for (int dim : {3, 5}) {
        const std::string flags = std::string("generate --kind ") + kind + " --seed " + std::to_string(seed) +
                                  " --dim " + std::to_string(dim) + " --out ";
        const auto a = dir / "a.json", b = dir / "b.json";
        run_cli(flags + a.string());
        run_cli(flags + b.string());
        const std::string sa = slurp(a), sb = slurp(b);
        o.require(!sa.empty() && sa == sb, std::string("CLI output differs for ") + kind);
        const auto c1 = std::string(kind) == "generic" ? generate_generic(seed, dim) : generate_desarguesian(seed, dim);
        const auto c2 = std::string(kind) == "generic" ? generate_generic(seed, dim) : generate_desarguesian(seed, dim);
        o.require(io::to_json(c1).dump(2) + "\n" == sa, "library and CLI disagree");
        o.require(io::to_json(c1).dump() == io::to_json(c2).dump(), "library output differs");
        ++files;
      }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = std::to_string(files) + " (kind, seed, dim) triples byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 worked H(5) example", worked_example},
      {"AC2 Boolean exhaustive scan", boolean_exhaustive},
      {"AC3 Boolean worked example", boolean_golden},
      {"AC4 subspace lattice laws", lattice_suite},
      {"AC5 Desargues equivalence", desargues_suite},
      {"AC6 selective correlation", selective_correlation},
      {"AC7 generator determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << "  " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
