#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "desargues/matrix.hpp"
#include "desargues/rng.hpp"

namespace desargues {

/// Element of the lattice of subspaces of a d-dimensional complex space.
///
/// The basis is always the reduced column echelon form of the span, so two
/// Subspace values are equal exactly when their spans coincide. O (dim 0) and
/// I (dim d) are the bounds of the lattice.
class Subspace {
 public:
  /// Span of the given d-vectors. Throws ShapeError on a length mismatch.
  static Subspace from_vectors(std::span<const ExactVector> vectors, std::size_t d);
  /// Span of the columns of m.
  static Subspace from_columns(const ExactMatrix& m);
  static Subspace zero(std::size_t d);
  static Subspace full(std::size_t d);

  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const ExactMatrix& basis() const noexcept { return basis_; }
  std::vector<ExactVector> basis_vectors() const;

  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }
  bool contains(const ExactVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(ExactMatrix canonical) : basis_(std::move(canonical)) {}
  ExactMatrix basis_;
};

/// Orthogonal projector onto a subspace, held exactly.
struct Projector {
  std::size_t ambient_dim = 0;
  ExactMatrix matrix;
  std::size_t source_dim = 0;

  friend bool operator==(const Projector&, const Projector&) = default;
};

// Binary operations throw ShapeError when ambient dimensions differ.

/// Smallest subspace containing both.
Subspace join(const Subspace& a, const Subspace& b);
/// Intersection, from the null space of [A | -B].
Subspace meet(const Subspace& a, const Subspace& b);
/// Intersection through orthocomplements: (a-perp join b-perp)-perp.
Subspace meet_de_morgan(const Subspace& a, const Subspace& b);
/// a is contained in b.
bool leq(const Subspace& a, const Subspace& b);
Subspace orthocomplement(const Subspace& h);
/// Orthocomplement of h inside h0. Throws PreconditionError unless h <= h0.
Subspace relative_orthocomplement(const Subspace& h, const Subspace& h0);

/// A (A^dagger A)^-1 A^dagger on the canonical basis A; the zero matrix for O.
Projector projector(const Subspace& h);
/// Same formula on an arbitrary full-column-rank basis (not canonicalized).
/// Throws SingularMatrix if the columns are dependent.
ExactMatrix projector_from_basis(const ExactMatrix& a);

/// dim(a join b) + dim(a meet b) == dim(a) + dim(b).
bool dim_formula_check(const Subspace& a, const Subspace& b);
/// h1 join (h2 meet h3) == (h1 join h2) meet h3. Throws PreconditionError unless h1 <= h3.
bool modularity_check(const Subspace& h1, const Subspace& h2, const Subspace& h3);

/// Random subspace of dimension `k` spanned by Gaussian-integer vectors with
/// components in [-bound, bound].
Subspace random_subspace(std::size_t d, std::size_t k, Rng& rng, std::int64_t bound = 3);

}  // namespace desargues
