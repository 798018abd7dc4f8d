#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desargues/desargues.hpp"
#include "desargues/matrix.hpp"
#include "desargues/rng.hpp"
#include "desargues/subspace.hpp"

namespace desargues {

/// Pure state: unit vector of d complex amplitudes.
class StateVector {
 public:
  StateVector() = default;

  /// Accepts amplitudes whose norm is within tol::kRenormalizeWindow of 1 and
  /// renormalizes them; anything further off (or non-finite) throws PreconditionError.
  static StateVector from_input(FloatVector amplitudes);
  /// Scales any nonzero finite vector to unit norm.
  static StateVector normalized(FloatVector amplitudes);

  std::size_t ambient_dim() const noexcept { return amps_.size(); }
  const FloatVector& amplitudes() const noexcept { return amps_; }

 private:
  explicit StateVector(FloatVector amps) : amps_(std::move(amps)) {}
  FloatVector amps_;
};

/// A projector prepared for float-side measurement.
struct LabeledProjector {
  std::string label;
  FloatMatrix matrix;

  static LabeledProjector from_exact(std::string label, const Projector& p);
};

struct MeasurementStep {
  std::string projector_label;
  double probability = 0.0;
  StateVector post_state;
};

/// Outcome 'yes' of a projective measurement: p = <s|P|s>, post = P s / sqrt(p).
/// Throws ZeroProbabilityOutcome (stage 0) when p < tol::kZeroProbability, and
/// std::logic_error if <s|P|s> has a non-negligible imaginary part.
MeasurementStep measure(const StateVector& s, const LabeledProjector& p);
MeasurementStep measure(const StateVector& s, const Projector& p);

/// |<a|b>|^2 >= 1 - tol::kRayFidelity.
bool ray_equal(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);

/// Measure `first`, then `second` on the collapsed state. A zero-probability
/// outcome is rethrown with the stage number (1 or 2).
std::pair<MeasurementStep, MeasurementStep> run_sequence(const StateVector& s, const LabeledProjector& first,
                                                         const LabeledProjector& second);

struct ExperimentPair {
  /// Pi(L1 meet L2), then Pi(L3).
  std::pair<MeasurementStep, MeasurementStep> exp1;
  /// Pi(c3), then Pi(c1 join c2).
  std::pair<MeasurementStep, MeasurementStep> exp2;
  bool unchanged1 = false;
  bool unchanged2 = false;
};

/// Float copies of the four experiment projectors, built once per configuration.
struct ExperimentSetup {
  LabeledProjector cross_meet;
  LabeledProjector third_line;
  LabeledProjector third_point;
  LabeledProjector point_join;

  static ExperimentSetup from_projectors(const ExperimentProjectors& p);
  static ExperimentSetup from_config(const DesarguesConfig& c);
};

ExperimentPair run_experiment_pair(const ExperimentSetup& setup, const StateVector& s);
ExperimentPair run_experiment_pair(const DesarguesConfig& c, const StateVector& s);

/// ||P post - post|| < tol::kEigenstate.
bool eigenstate_check(const MeasurementStep& step, const LabeledProjector& p);
bool eigenstate_check(const MeasurementStep& step, const Projector& p);

/// Random unit state with independent standard complex normal amplitudes.
StateVector random_state(std::size_t d, Rng& rng);

/// Result for one state of a batch: either the experiment pair or the stage
/// (experiment 1 or 2, stage 1 or 2) at which a zero-probability outcome occurred.
struct BatchOutcome {
  std::optional<ExperimentPair> pair;
  int failed_experiment = 0;
  int failed_stage = 0;
};

/// Reference batch runner, one state after another.
std::vector<BatchOutcome> run_batch_serial(const ExperimentSetup& setup, const std::vector<StateVector>& states);
/// Same results as run_batch_serial, states split across OpenMP threads
/// (0 means the runtime default).
std::vector<BatchOutcome> run_batch_parallel(const ExperimentSetup& setup, const std::vector<StateVector>& states,
                                             int threads = 0);

}  // namespace desargues
