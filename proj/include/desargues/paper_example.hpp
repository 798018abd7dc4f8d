#pragma once

#include <array>
#include <string>
#include <vector>

#include "desargues/desargues.hpp"
#include "desargues/matrix.hpp"
#include "desargues/measurement.hpp"

// The worked H(5) example: two triangles in C^5, their centre and axis, the
// four experiment projectors as printed to four decimals, and a two-stage
// measurement on a four-decimal input state.
namespace desargues::example {

struct PrintedTable {
  std::string name;
  FloatMatrix entries;
};

struct ExampleData {
  std::array<ExactVector, 3> vertices;
  std::array<ExactVector, 3> vertices_prime;
  ExactVector center;
  /// Cross-point rays c1, c2, c3.
  std::array<ExactVector, 3> cross_points;
  /// Superposition coefficients (a_i, b_i) with a_i h_i + b_i h'_i = center.
  std::array<std::array<GaussianRational, 2>, 3> center_coefficients;
  /// Pi(L3), Pi(L1 meet L2), Pi(c3), Pi(c1 join c2).
  std::array<PrintedTable, 4> tables;
  FloatVector state;
  double p1 = 0.0;
  double p2 = 0.0;
  FloatVector collapsed_exp1;
  FloatVector collapsed_exp2;
};

ExampleData embedded();
DesarguesConfig config(const ExampleData& data);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Result {
  std::vector<Check> checks;
  bool all_pass = false;
};

/// Recomputes the whole example from `data`'s vertices and state and compares
/// every intermediate with the expected values in `data`.
Result run(const ExampleData& data);

}  // namespace desargues::example
