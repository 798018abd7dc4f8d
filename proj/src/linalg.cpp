#include <algorithm>
#include <cmath>

#include "desargues/matrix.hpp"
#include "desargues/tolerances.hpp"

namespace desargues {

bool is_zero(const ExactMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const GaussianRational& z) { return z.is_zero(); });
}

RowEchelon rref(ExactMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    }
    const GaussianRational inv = GaussianRational(1) / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    out.pivot_cols.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

ColumnEchelon rcef(const ExactMatrix& m) {
  RowEchelon r = rref(transpose(m));
  const std::size_t k = r.pivot_cols.size();
  ExactMatrix canonical(m.rows(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) canonical(i, j) = r.reduced(j, i);
  return {std::move(canonical), k};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_cols.size(); }

ExactMatrix null_space(const ExactMatrix& m) {
  RowEchelon r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  ExactMatrix basis(m.cols(), m.cols() - r.pivot_cols.size());
  std::size_t out_col = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, out_col) = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) basis(r.pivot_cols[i], out_col) = -r.reduced(i, free);
    ++out_col;
  }
  return basis;
}

ExactMatrix invert_gram(const ExactMatrix& g) {
  if (g.rows() != g.cols()) throw ShapeError("invert_gram: matrix is not square");
  const std::size_t n = g.rows();
  RowEchelon r = rref(hstack(g, ExactMatrix::identity(n)));
  // [G | I] always has n pivots; G is singular iff one of them lands in the I block.
  if (n > 0 && r.pivot_cols[n - 1] >= n) {
    throw SingularMatrix("invert_gram: Gram matrix is singular (basis not full column rank)");
  }
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<ExactVector> solve_in_span(const ExactMatrix& basis, const ExactVector& v) {
  if (v.size() != basis.rows()) throw ShapeError("solve_in_span: vector length mismatch");
  ExactMatrix augmented = hstack(basis, ExactMatrix::from_columns(std::span(&v, 1), v.size()));
  RowEchelon r = rref(std::move(augmented));
  const std::size_t k = basis.cols();
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == k) return std::nullopt;
  ExactVector coeffs(k, GaussianRational(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) coeffs[r.pivot_cols[i]] = r.reduced(i, k);
  return coeffs;
}

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

FloatVector to_float(const ExactVector& v) {
  FloatVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.to_complex());
  return out;
}

std::size_t float_rank(const FloatMatrix& m) {
  std::vector<FloatVector> cols;
  double largest = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    cols.push_back(m.column(j));
    double n = 0.0;
    for (const auto& z : cols.back()) n += std::norm(z);
    largest = std::max(largest, std::sqrt(n));
  }
  if (largest == 0.0) return 0;
  const double threshold = tol::kFloatRankRelative * largest;

  std::size_t rank = 0;
  std::vector<bool> used(cols.size(), false);
  for (std::size_t step = 0; step < cols.size(); ++step) {
    std::size_t best = cols.size();
    double best_norm = -1.0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      double n = 0.0;
      for (const auto& z : cols[j]) n += std::norm(z);
      if (n > best_norm) {
        best_norm = n;
        best = j;
      }
    }
    if (best == cols.size() || std::sqrt(best_norm) <= threshold) break;
    used[best] = true;
    ++rank;
    const double len = std::sqrt(best_norm);
    FloatVector q = cols[best];
    for (auto& z : q) z /= len;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      ComplexFloat dot = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) dot += std::conj(q[i]) * cols[j][i];
      for (std::size_t i = 0; i < q.size(); ++i) cols[j][i] -= dot * q[i];
    }
  }
  return rank;
}

ExactVector normalize_leading(ExactVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const GaussianRational& z) { return !z.is_zero(); });
  if (it == v.end()) return v;
  const GaussianRational inv = GaussianRational(1) / *it;
  for (auto& z : v) z *= inv;
  return v;
}

}  // namespace desargues
