#include "desargues/subspace.hpp"

#include <string>

#include "desargues/errors.hpp"

namespace desargues {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw ShapeError("subspaces of C^" + std::to_string(a.ambient_dim()) + " and C^" +
                     std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::from_vectors(std::span<const ExactVector> vectors, std::size_t d) {
  return from_columns(ExactMatrix::from_columns(vectors, d));
}

Subspace Subspace::from_columns(const ExactMatrix& m) { return Subspace(rcef(m).canonical); }

Subspace Subspace::zero(std::size_t d) { return Subspace(ExactMatrix(d, 0)); }

Subspace Subspace::full(std::size_t d) { return Subspace(ExactMatrix::identity(d)); }

std::vector<ExactVector> Subspace::basis_vectors() const {
  std::vector<ExactVector> out;
  out.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(basis_.column(j));
  return out;
}

bool Subspace::contains(const ExactVector& v) const {
  if (v.size() != ambient_dim()) throw ShapeError("contains: vector length differs from ambient dimension");
  return solve_in_span(basis_, v).has_value();
}

Subspace join(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::from_columns(hstack(a.basis(), b.basis()));
}

Subspace meet(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // x in a meet b  <=>  x = A u = B v  <=>  [A | -B] (u; v) = 0.
  ExactMatrix neg_b = b.basis();
  for (std::size_t i = 0; i < neg_b.rows(); ++i)
    for (std::size_t j = 0; j < neg_b.cols(); ++j) neg_b(i, j) = -neg_b(i, j);
  const ExactMatrix kernel = null_space(hstack(a.basis(), neg_b));

  ExactMatrix u(a.dim(), kernel.cols());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < kernel.cols(); ++j) u(i, j) = kernel(i, j);
  return Subspace::from_columns(mat_mul(a.basis(), u));
}

Subspace meet_de_morgan(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return orthocomplement(join(orthocomplement(a), orthocomplement(b)));
}

bool leq(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return join(a, b) == b;
}

Subspace orthocomplement(const Subspace& h) {
  // v is orthogonal to every basis column iff A^dagger v = 0.
  return Subspace::from_columns(null_space(adjoint(h.basis())));
}

Subspace relative_orthocomplement(const Subspace& h, const Subspace& h0) {
  if (!leq(h, h0)) throw PreconditionError("relative_orthocomplement: h is not contained in h0");
  return meet(orthocomplement(h), h0);
}

ExactMatrix projector_from_basis(const ExactMatrix& a) {
  if (a.cols() == 0) return ExactMatrix(a.rows(), a.rows());
  const ExactMatrix a_dag = adjoint(a);
  return a * invert_gram(a_dag * a) * a_dag;
}

Projector projector(const Subspace& h) {
  return {h.ambient_dim(), projector_from_basis(h.basis()), h.dim()};
}

bool dim_formula_check(const Subspace& a, const Subspace& b) {
  return join(a, b).dim() + meet(a, b).dim() == a.dim() + b.dim();
}

bool modularity_check(const Subspace& h1, const Subspace& h2, const Subspace& h3) {
  if (!leq(h1, h3)) throw PreconditionError("modularity_check requires h1 <= h3");
  return join(h1, meet(h2, h3)) == meet(join(h1, h2), h3);
}

Subspace random_subspace(std::size_t d, std::size_t k, Rng& rng, std::int64_t bound) {
  if (k > d) throw PreconditionError("random_subspace: k > d");
  for (;;) {
    std::vector<ExactVector> vs;
    for (std::size_t j = 0; j < k; ++j) vs.push_back(rng.nonzero_gaussian_vector(d, bound));
    Subspace s = Subspace::from_vectors(vs, d);
    if (s.dim() == k) return s;
  }
}

}  // namespace desargues
