#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "desargues/subspace.hpp"

namespace desargues {

/// Three one-dimensional subspaces ("points").
using PointTriple = std::array<Subspace, 3>;

/// Two point triangles in a common plane. Built from vertex vectors; the
/// plane is inferred as the join of the first triangle. Construction does not
/// validate; use validate_config.
struct DesarguesConfig {
  std::size_t d = 0;
  std::array<ExactVector, 3> vertices;
  std::array<ExactVector, 3> vertices_prime;
  PointTriple triangle;
  PointTriple triangle_prime;
  Subspace plane;

  /// Throws ShapeError if any vector does not have length d.
  static DesarguesConfig from_vertices(std::size_t d, const std::array<ExactVector, 3>& vertices,
                                       const std::array<ExactVector, 3>& vertices_prime);
};

/// Lines and points derived from a configuration, 0-based. For {i,j,k} =
/// {0,1,2}: sides[k] = h_i join h_j, sides_prime[k] likewise, cross_points[k]
/// = sides[k] meet sides_prime[k], cross_lines[i] = h_i join h'_i.
struct DerivedConfig {
  std::array<Subspace, 3> sides;
  std::array<Subspace, 3> sides_prime;
  std::array<Subspace, 3> cross_points;
  std::array<Subspace, 3> cross_lines;
};

struct ConfigReport {
  bool concurrent = false;
  bool collinear = false;
  bool equivalence_ok = false;
  /// Pi(L3) Pi(L1 meet L2) == Pi(L1 meet L2) over the cross-lines L_i.
  bool absorption_lhs = false;
  /// Pi(c1 join c2) Pi(c3) == Pi(c3) over the cross-points c_k.
  bool absorption_rhs = false;
  /// The corresponding projector pairs commute.
  bool commute_lhs = false;
  bool commute_rhs = false;
  std::optional<Subspace> center;
  std::optional<Subspace> axis;
};

struct Validation {
  bool ok = true;
  std::string reason;
};

/// dim(h1 join h2 join h3) == 3. Throws PreconditionError if a member is not a point.
bool is_point_triangle(const PointTriple& t);
/// Three distinct lines with trivial common intersection. Throws
/// PreconditionError if a dimension is not 2 or two lines coincide.
bool is_line_triangle(const Subspace& l1, const Subspace& l2, const Subspace& l3);

/// Checks every structural requirement and names the first failure.
Validation validate_config(const DesarguesConfig& c);

/// Throws PreconditionError for an invalid config and DegenerateConfig when a
/// cross-line is not a line or a cross-point is not a point.
DerivedConfig derive_config(const DesarguesConfig& c);

/// The three cross-lines share exactly one point.
std::optional<Subspace> concurrent(const DerivedConfig& d);
/// The three cross-points span exactly a line.
std::optional<Subspace> collinear(const DerivedConfig& d);

ConfigReport desargues_check(const DesarguesConfig& c);

/// The four projectors that drive the two sequential measurements.
struct ExperimentProjectors {
  Projector cross_meet;      // Pi(L1 meet L2)
  Projector third_line;      // Pi(L3)
  Projector third_point;     // Pi(c3)
  Projector point_join;      // Pi(c1 join c2)
};

ExperimentProjectors experiment_projectors(const DerivedConfig& d);

/// Concurrent configuration: random plane, centre w, three lines through w and
/// two further points on each. Deterministic in (seed, d). Requires d >= 3.
DesarguesConfig generate_desarguesian(std::uint64_t seed, std::size_t d);
/// Two random triangles in a common random plane. Deterministic in (seed, d).
DesarguesConfig generate_generic(std::uint64_t seed, std::size_t d);

/// Relabels vertex indices of both triangles by `perm`.
DesarguesConfig permute(const DesarguesConfig& c, const std::array<int, 3>& perm);

}  // namespace desargues
