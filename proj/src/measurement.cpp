#include "desargues/measurement.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "desargues/errors.hpp"
#include "desargues/tolerances.hpp"

namespace desargues {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double norm(const FloatVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

FloatVector apply(const FloatMatrix& m, const FloatVector& v) {
  FloatVector out(m.rows(), ComplexFloat(0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

ComplexFloat inner(const FloatVector& a, const FloatVector& b) {
  ComplexFloat s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void require_dims(std::size_t state_dim, const FloatMatrix& p) {
  if (p.rows() != state_dim || p.cols() != state_dim) {
    throw ShapeError("state of dimension " + std::to_string(state_dim) + " measured with a " +
                     std::to_string(p.rows()) + "x" + std::to_string(p.cols()) + " projector");
  }
}

BatchOutcome run_one(const ExperimentSetup& setup, const StateVector& s) {
  BatchOutcome out;
  int experiment = 1;
  try {
    ExperimentPair pair;
    pair.exp1 = run_sequence(s, setup.cross_meet, setup.third_line);
    experiment = 2;
    pair.exp2 = run_sequence(s, setup.third_point, setup.point_join);
    pair.unchanged1 = ray_equal(pair.exp1.first.post_state, pair.exp1.second.post_state);
    pair.unchanged2 = ray_equal(pair.exp2.first.post_state, pair.exp2.second.post_state);
    out.pair = std::move(pair);
  } catch (const ZeroProbabilityOutcome& e) {
    out.failed_experiment = experiment;
    out.failed_stage = e.stage();
  }
  return out;
}

}  // namespace

StateVector StateVector::from_input(FloatVector amplitudes) {
  for (const auto& z : amplitudes) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw PreconditionError("state has non-finite amplitude");
  }
  const double n = norm(amplitudes);
  if (std::abs(n - 1.0) >= tol::kRenormalizeWindow) {
    throw PreconditionError("state norm " + num(n) + " is too far from 1 to renormalize");
  }
  for (auto& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::normalized(FloatVector amplitudes) {
  const double n = norm(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw PreconditionError("cannot normalize a zero or non-finite vector");
  for (auto& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes));
}

LabeledProjector LabeledProjector::from_exact(std::string label, const Projector& p) {
  return {std::move(label), to_float(p.matrix)};
}

MeasurementStep measure(const StateVector& s, const LabeledProjector& p) {
  require_dims(s.ambient_dim(), p.matrix);
  const FloatVector projected = apply(p.matrix, s.amplitudes());
  const ComplexFloat expectation = inner(s.amplitudes(), projected);
  if (std::abs(expectation.imag()) >= tol::kImaginaryProbability) {
    throw std::logic_error("<s|P|s> has imaginary part " + num(expectation.imag()) +
                           "; projector is not Hermitian");
  }
  const double p_yes = expectation.real();
  if (p_yes < tol::kZeroProbability) {
    throw ZeroProbabilityOutcome(0, "outcome 'yes' of " + p.label + " has probability " + num(p_yes));
  }
  if (p_yes > 1.0 + tol::kProbabilityExcess) {
    throw std::logic_error("probability " + num(p_yes) + " exceeds 1 for " + p.label);
  }
  FloatVector post = projected;
  const double scale = 1.0 / std::sqrt(p_yes);
  for (auto& z : post) z *= scale;
  return {p.label, std::min(p_yes, 1.0), StateVector::normalized(std::move(post))};
}

MeasurementStep measure(const StateVector& s, const Projector& p) {
  return measure(s, LabeledProjector::from_exact("P", p));
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("fidelity: dimension mismatch");
  return std::norm(inner(a.amplitudes(), b.amplitudes()));
}

bool ray_equal(const StateVector& a, const StateVector& b) { return fidelity(a, b) >= 1.0 - tol::kRayFidelity; }

std::pair<MeasurementStep, MeasurementStep> run_sequence(const StateVector& s, const LabeledProjector& first,
                                                         const LabeledProjector& second) {
  auto staged = [](int stage, const StateVector& in, const LabeledProjector& p) {
    try {
      return measure(in, p);
    } catch (const ZeroProbabilityOutcome& e) {
      throw ZeroProbabilityOutcome(stage, "stage " + std::to_string(stage) + ": " + e.what());
    }
  };
  MeasurementStep a = staged(1, s, first);
  MeasurementStep b = staged(2, a.post_state, second);
  return {std::move(a), std::move(b)};
}

ExperimentSetup ExperimentSetup::from_projectors(const ExperimentProjectors& p) {
  return {LabeledProjector::from_exact("Pi(L1 meet L2)", p.cross_meet),
          LabeledProjector::from_exact("Pi(L3)", p.third_line),
          LabeledProjector::from_exact("Pi(c3)", p.third_point),
          LabeledProjector::from_exact("Pi(c1 join c2)", p.point_join)};
}

ExperimentSetup ExperimentSetup::from_config(const DesarguesConfig& c) {
  return from_projectors(experiment_projectors(derive_config(c)));
}

ExperimentPair run_experiment_pair(const ExperimentSetup& setup, const StateVector& s) {
  ExperimentPair pair;
  try {
    pair.exp1 = run_sequence(s, setup.cross_meet, setup.third_line);
  } catch (const ZeroProbabilityOutcome& e) {
    throw ZeroProbabilityOutcome(e.stage(), std::string("EXP1 ") + e.what());
  }
  try {
    pair.exp2 = run_sequence(s, setup.third_point, setup.point_join);
  } catch (const ZeroProbabilityOutcome& e) {
    throw ZeroProbabilityOutcome(e.stage(), std::string("EXP2 ") + e.what());
  }
  pair.unchanged1 = ray_equal(pair.exp1.first.post_state, pair.exp1.second.post_state);
  pair.unchanged2 = ray_equal(pair.exp2.first.post_state, pair.exp2.second.post_state);
  return pair;
}

ExperimentPair run_experiment_pair(const DesarguesConfig& c, const StateVector& s) {
  if (s.ambient_dim() != c.d) throw ShapeError("state dimension differs from configuration dimension");
  return run_experiment_pair(ExperimentSetup::from_config(c), s);
}

bool eigenstate_check(const MeasurementStep& step, const LabeledProjector& p) {
  require_dims(step.post_state.ambient_dim(), p.matrix);
  FloatVector diff = apply(p.matrix, step.post_state.amplitudes());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= step.post_state.amplitudes()[i];
  return norm(diff) < tol::kEigenstate;
}

bool eigenstate_check(const MeasurementStep& step, const Projector& p) {
  return eigenstate_check(step, LabeledProjector::from_exact("P", p));
}

StateVector random_state(std::size_t d, Rng& rng) {
  constexpr double kTwoPi = 6.283185307179586;
  FloatVector amps(d);
  for (auto& z : amps) {
    // Box-Muller; 1 - u keeps the logarithm finite.
    const double r = std::sqrt(-2.0 * std::log(1.0 - rng.uniform_real()));
    const double theta = kTwoPi * rng.uniform_real();
    z = {r * std::cos(theta), r * std::sin(theta)};
  }
  return StateVector::normalized(std::move(amps));
}

std::vector<BatchOutcome> run_batch_serial(const ExperimentSetup& setup, const std::vector<StateVector>& states) {
  std::vector<BatchOutcome> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(run_one(setup, s));
  return out;
}

std::vector<BatchOutcome> run_batch_parallel(const ExperimentSetup& setup, const std::vector<StateVector>& states,
                                             int threads) {
  std::vector<BatchOutcome> out(states.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(states.size()); ++i) {
    out[static_cast<std::size_t>(i)] = run_one(setup, states[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace desargues
