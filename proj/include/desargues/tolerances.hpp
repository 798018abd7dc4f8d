#pragma once

// All floating-point tolerances used by the measurement simulator, the worked
// example harness and the CLI. Exact lattice predicates never use these.

namespace desargues::tol {

/// Minimum fidelity |<a|b>|^2 for two states to count as the same ray is 1 - kRayFidelity.
inline constexpr double kRayFidelity = 1e-9;
/// Measurement outcomes with probability below this cannot be collapsed onto.
inline constexpr double kZeroProbability = 1e-12;
/// Largest tolerated imaginary part of <s|P|s>.
inline constexpr double kImaginaryProbability = 1e-10;
/// Tolerated excess of a probability above 1.
inline constexpr double kProbabilityExcess = 1e-12;
/// Allowed deviation of a stored state's norm from 1.
inline constexpr double kStateNorm = 1e-9;
/// Input states whose norm is off by less than this are renormalized; more is rejected.
inline constexpr double kRenormalizeWindow = 1e-3;
/// ||P s - s|| bound for an eigenstate of P with eigenvalue 1.
inline constexpr double kEigenstate = 1e-8;
/// Matching against values printed to three decimals.
inline constexpr double kPrintedDecimal = 1e-3;
/// Matching against the printed four-decimal projector tables.
inline constexpr double kProjectorTable = 5e-5;
/// Fidelity slack when comparing with four-decimal printed state vectors.
inline constexpr double kPrintedStateFidelity = 1e-6;
/// Float rank fallback: columns below this fraction of the largest column norm are dependent.
inline constexpr double kFloatRankRelative = 1e-10;
/// Stage-1 probability a sampled state must exceed to enter the selective-correlation check.
inline constexpr double kSurvivalProbability = 1e-6;
/// Agreement between exact-then-rounded and pure-float probability computations.
inline constexpr double kExactFloatAgreement = 1e-9;

struct Entry {
  const char* name;
  double value;
  const char* meaning;
};

inline constexpr Entry kTable[] = {
    {"ray_fidelity", kRayFidelity, "states are equal rays when |<a|b>|^2 >= 1 - value"},
    {"zero_probability", kZeroProbability, "collapse refused below this probability"},
    {"imaginary_probability", kImaginaryProbability, "max |Im <s|P|s>|"},
    {"probability_excess", kProbabilityExcess, "max probability above 1"},
    {"state_norm", kStateNorm, "max | ||s|| - 1 | for a stored state"},
    {"renormalize_window", kRenormalizeWindow, "input states renormalized within this, rejected beyond"},
    {"eigenstate", kEigenstate, "max ||P s - s|| for an eigenstate"},
    {"printed_decimal", kPrintedDecimal, "match against 3-decimal printed probabilities"},
    {"projector_table", kProjectorTable, "match against 4-decimal printed projector entries"},
    {"printed_state_fidelity", kPrintedStateFidelity, "fidelity slack against 4-decimal printed states"},
    {"float_rank_relative", kFloatRankRelative, "float rank threshold relative to largest column norm"},
    {"survival_probability", kSurvivalProbability, "stage-1 probability needed to test selective correlation"},
    {"exact_float_agreement", kExactFloatAgreement, "exact vs float probability agreement"},
};

}  // namespace desargues::tol
