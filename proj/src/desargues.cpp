#include "desargues/desargues.hpp"

#include <stdexcept>
#include <string>

#include "desargues/errors.hpp"
#include "desargues/rng.hpp"

namespace desargues {

namespace {

constexpr int kMaxAttempts = 1000;
constexpr std::int64_t kCoordinateBound = 5;


Subspace point(const ExactVector& v, std::size_t d) { return Subspace::from_vectors(std::span(&v, 1), d); }

Validation fail(std::string reason) { return {false, std::move(reason)}; }

bool all_points(const PointTriple& t) {
  for (const auto& p : t)
    if (p.dim() != 1) return false;
  return true;
}

bool pairwise_distinct(const PointTriple& t) { return !(t[0] == t[1]) && !(t[0] == t[2]) && !(t[1] == t[2]); }

ExactVector combine(const ExactMatrix& basis, const ExactVector& coeffs) {
  ExactVector out(basis.rows(), GaussianRational(0));
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) out[i] += basis(i, j) * coeffs[j];
  return out;
}

ExactVector add_scaled(const ExactVector& a, const GaussianRational& alpha, const ExactVector& b,
                       const GaussianRational& beta) {
  ExactVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i] + beta * b[i];
  return out;
}

Subspace random_plane(Rng& rng, std::size_t d) {
  return random_subspace(d, 3, rng, kCoordinateBound);
}

GaussianRational nonzero_scalar(Rng& rng) {
  for (;;) {
    GaussianRational z = rng.gaussian_integer(kCoordinateBound);
    if (!z.is_zero()) return z;
  }
}

bool usable(const DesarguesConfig& c) {
  if (!validate_config(c).ok) return false;
  try {
    derive_config(c);
  } catch (const DegenerateConfig&) {
    return false;
  }
  return true;
}

void require_dim(std::size_t d) {
  if (d < 3) throw PreconditionError("generators need ambient dimension >= 3, got " + std::to_string(d));
}

}  // namespace

DesarguesConfig DesarguesConfig::from_vertices(std::size_t d, const std::array<ExactVector, 3>& vertices,
                                               const std::array<ExactVector, 3>& vertices_prime) {
  for (const auto* tri : {&vertices, &vertices_prime})
    for (const auto& v : *tri)
      if (v.size() != d) throw ShapeError("vertex has length " + std::to_string(v.size()) + ", expected " + std::to_string(d));
  DesarguesConfig c{d,
                    vertices,
                    vertices_prime,
                    {point(vertices[0], d), point(vertices[1], d), point(vertices[2], d)},
                    {point(vertices_prime[0], d), point(vertices_prime[1], d), point(vertices_prime[2], d)},
                    Subspace::zero(d)};
  c.plane = join(join(c.triangle[0], c.triangle[1]), c.triangle[2]);
  return c;
}

bool is_point_triangle(const PointTriple& t) {
  if (!all_points(t)) throw PreconditionError("is_point_triangle: every member must be one-dimensional");
  return join(join(t[0], t[1]), t[2]).dim() == 3;
}

bool is_line_triangle(const Subspace& l1, const Subspace& l2, const Subspace& l3) {
  if (l1.dim() != 2 || l2.dim() != 2 || l3.dim() != 2) throw PreconditionError("is_line_triangle: dims must all be 2");
  if (l1 == l2 || l1 == l3 || l2 == l3) throw PreconditionError("is_line_triangle: lines must be distinct");
  return meet(meet(l1, l2), l3).dim() == 0;
}

Validation validate_config(const DesarguesConfig& c) {
  const char* names[2] = {"triangle", "triangle_prime"};
  const PointTriple* triples[2] = {&c.triangle, &c.triangle_prime};
  for (int t = 0; t < 2; ++t) {
    for (int i = 0; i < 3; ++i) {
      if ((*triples[t])[i].dim() != 1) {
        return fail(std::string(names[t]) + " vertex " + std::to_string(i + 1) + " is the zero vector");
      }
    }
    if (!pairwise_distinct(*triples[t])) return fail(std::string(names[t]) + " has repeated points");
    if (!is_point_triangle(*triples[t])) return fail(std::string(names[t]) + " points are linearly dependent");
  }
  if (c.plane.dim() != 3) return fail("plane is not three-dimensional");
  const Subspace plane_prime = join(join(c.triangle_prime[0], c.triangle_prime[1]), c.triangle_prime[2]);
  if (!(plane_prime == c.plane)) return fail("triangles do not lie in a common plane");
  return {};
}

DerivedConfig derive_config(const DesarguesConfig& c) {
  if (Validation v = validate_config(c); !v.ok) throw PreconditionError("invalid configuration: " + v.reason);
  const auto& h = c.triangle;
  const auto& hp = c.triangle_prime;
  DerivedConfig out{
      {join(h[1], h[2]), join(h[0], h[2]), join(h[0], h[1])},
      {join(hp[1], hp[2]), join(hp[0], hp[2]), join(hp[0], hp[1])},
      {Subspace::zero(c.d), Subspace::zero(c.d), Subspace::zero(c.d)},
      {join(h[0], hp[0]), join(h[1], hp[1]), join(h[2], hp[2])},
  };
  for (int i = 0; i < 3; ++i) {
    if (out.cross_lines[i].dim() != 2) {
      throw DegenerateConfig(i + 1, "cross-line " + std::to_string(i + 1) + " collapses to a point (h = h')");
    }
  }
  for (int k = 0; k < 3; ++k) {
    out.cross_points[k] = meet(out.sides[k], out.sides_prime[k]);
    if (out.cross_points[k].dim() != 1) {
      throw DegenerateConfig(k + 1, "cross-point " + std::to_string(k + 1) + " has dimension " +
                                        std::to_string(out.cross_points[k].dim()) + " (shared side)");
    }
  }
  return out;
}

std::optional<Subspace> concurrent(const DerivedConfig& d) {
  Subspace common = meet(meet(d.cross_lines[0], d.cross_lines[1]), d.cross_lines[2]);
  if (common.dim() == 1) return common;
  return std::nullopt;
}

std::optional<Subspace> collinear(const DerivedConfig& d) {
  Subspace span = join(join(d.cross_points[0], d.cross_points[1]), d.cross_points[2]);
  if (span.dim() == 2) return span;
  return std::nullopt;
}

ExperimentProjectors experiment_projectors(const DerivedConfig& d) {
  return {projector(meet(d.cross_lines[0], d.cross_lines[1])), projector(d.cross_lines[2]),
          projector(d.cross_points[2]), projector(join(d.cross_points[0], d.cross_points[1]))};
}

ConfigReport desargues_check(const DesarguesConfig& c) {
  const DerivedConfig d = derive_config(c);
  ConfigReport r;
  r.center = concurrent(d);
  r.axis = collinear(d);
  r.concurrent = r.center.has_value();
  r.collinear = r.axis.has_value();
  r.equivalence_ok = r.concurrent == r.collinear;

  const ExperimentProjectors p = experiment_projectors(d);
  const ExactMatrix lhs = p.third_line.matrix * p.cross_meet.matrix;
  const ExactMatrix rhs = p.point_join.matrix * p.third_point.matrix;
  r.absorption_lhs = lhs == p.cross_meet.matrix;
  r.absorption_rhs = rhs == p.third_point.matrix;
  r.commute_lhs = lhs == p.cross_meet.matrix * p.third_line.matrix;
  r.commute_rhs = rhs == p.third_point.matrix * p.point_join.matrix;
  return r;
}

DesarguesConfig generate_desarguesian(std::uint64_t seed, std::size_t d) {
  require_dim(d);
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Subspace plane = random_plane(rng, d);
    const ExactVector w = combine(plane.basis(), rng.nonzero_gaussian_vector(3, kCoordinateBound));

    // Directions u_i with {w, u_i, u_j} independent give three distinct lines through w.
    std::array<ExactVector, 3> dirs;
    for (auto& u : dirs) u = combine(plane.basis(), rng.nonzero_gaussian_vector(3, kCoordinateBound));
    bool distinct_lines = true;
    for (int i = 0; i < 3 && distinct_lines; ++i)
      for (int j = i + 1; j < 3; ++j) {
        std::vector<ExactVector> cols{w, dirs[i], dirs[j]};
        if (Subspace::from_vectors(cols, d).dim() != 3) distinct_lines = false;
      }
    if (!distinct_lines) continue;

    std::array<ExactVector, 3> h, hp;
    for (int i = 0; i < 3; ++i) {
      h[i] = add_scaled(w, rng.gaussian_integer(kCoordinateBound), dirs[i], nonzero_scalar(rng));
      hp[i] = add_scaled(w, rng.gaussian_integer(kCoordinateBound), dirs[i], nonzero_scalar(rng));
    }
    DesarguesConfig c = DesarguesConfig::from_vertices(d, h, hp);
    if (usable(c)) return c;
  }
  throw std::logic_error("generate_desarguesian: no usable configuration after " + std::to_string(kMaxAttempts) +
                         " attempts");
}

DesarguesConfig generate_generic(std::uint64_t seed, std::size_t d) {
  require_dim(d);
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Subspace plane = random_plane(rng, d);
    std::array<ExactVector, 3> h, hp;
    for (auto& v : h) v = combine(plane.basis(), rng.nonzero_gaussian_vector(3, kCoordinateBound));
    for (auto& v : hp) v = combine(plane.basis(), rng.nonzero_gaussian_vector(3, kCoordinateBound));
    DesarguesConfig c = DesarguesConfig::from_vertices(d, h, hp);
    if (usable(c)) return c;
  }
  throw std::logic_error("generate_generic: no usable configuration after " + std::to_string(kMaxAttempts) +
                         " attempts");
}

DesarguesConfig permute(const DesarguesConfig& c, const std::array<int, 3>& perm) {
  std::array<ExactVector, 3> h, hp;
  for (int i = 0; i < 3; ++i) {
    h[i] = c.vertices[perm[i]];
    hp[i] = c.vertices_prime[perm[i]];
  }
  return DesarguesConfig::from_vertices(c.d, h, hp);
}

}  // namespace desargues
