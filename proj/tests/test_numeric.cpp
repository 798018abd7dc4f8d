#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "desargues/errors.hpp"
#include "desargues/matrix.hpp"
#include "desargues/rng.hpp"

using namespace desargues;

namespace {

GaussianRational gi(long re, long im = 0) { return {Rational(re), Rational(im)}; }

ExactMatrix col(const ExactVector& v) { return ExactMatrix::from_columns(std::span(&v, 1), v.size()); }

ExactMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, std::int64_t bound = 3) {
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.gaussian_integer(bound);
  return m;
}

// Columns of `a` all lie in the span of `b`.
bool spanned_by(const ExactMatrix& a, const ExactMatrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!solve_in_span(b, a.column(j))) return false;
  return true;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(parse_rational("10/-4")) == "-5/2");
  CHECK(format_rational(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rational to nearest double") {
  CHECK(to_double(Rational(1, 5)) == 0.2);
  CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(Rational(2, 3)) == 2.0 / 3.0);
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
  CHECK_THROWS_AS(to_double(Rational(huge)), NonFiniteConversion);
}

TEST_CASE("Gaussian rational arithmetic") {
  const auto z = gi(1, 1);
  CHECK(z.conj() == gi(1, -1));
  CHECK(z * z.conj() == gi(2));
  CHECK(z / z == gi(1));
  CHECK((gi(2, -1) * gi(2, 1)) == gi(5));
  CHECK(z.to_string() == "1+i");
  CHECK(gi(4, -2).to_string() == "4-2i");
  CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4i");
  CHECK_THROWS_AS(z / gi(0), SingularMatrix);
}

TEST_CASE("adjoint") {
  CHECK(adjoint(ExactMatrix{{gi(1, 1)}}) == ExactMatrix{{gi(1, -1)}});

  // Basis of the third cross-line in the worked example.
  ExactMatrix a{{0, 0}, {1, gi(1, -1)}, {gi(1, 1), gi(-1, -1)}, {0, gi(4, -2)}, {0, 0}};
  ExactMatrix expected{{0, 1, gi(1, -1), 0, 0}, {0, gi(1, 1), gi(-1, 1), gi(4, 2), 0}};
  CHECK(adjoint(a) == expected);

  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    ExactMatrix m = random_matrix(rng, 1 + t % 4, 1 + t % 3);
    ExactMatrix n = random_matrix(rng, m.cols(), 2);
    CHECK(adjoint(adjoint(m)) == m);
    CHECK(adjoint(m * n) == adjoint(n) * adjoint(m));
  }
}

TEST_CASE("mat_mul") {
  Rng rng(3);
  ExactMatrix m = random_matrix(rng, 3, 4);
  CHECK(ExactMatrix::identity(3) * m == m);
  CHECK_THROWS_AS(m * m, ShapeError);

  ExactVector w{0, gi(2, -1), 0, gi(4, -2), 0};
  CHECK(adjoint(col(w)) * col(w) == ExactMatrix{{25}});
}

TEST_CASE("rcef rank and canonical form") {
  ExactVector h1{0, 1, gi(1, 1), 2, 0}, h2{0, 1, 0, 2, 0}, h3{0, 1, gi(1, 1), 0, 0};
  std::vector<ExactVector> hs{h1, h2, h3};
  CHECK(rcef(ExactMatrix::from_columns(hs, 5)).rank == 3);

  ExactVector c1{0, gi(1, -1), gi(-1, -1), gi(4, -2), 0}, c2{0, 1, gi(1, 1), 3, 0}, c3{0, 1, 3, 2, 0};
  std::vector<ExactVector> cs{c1, c2, c3};
  CHECK(rcef(ExactMatrix::from_columns(cs, 5)).rank == 2);

  ColumnEchelon z = rcef(ExactMatrix(4, 3));
  CHECK(z.rank == 0);
  CHECK(z.canonical.cols() == 0);
  CHECK(z.canonical.rows() == 4);
}

TEST_CASE("rcef structure, idempotence and span soundness on random matrices") {
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + t % 6;
    const std::size_t cols = 1 + (t / 6) % 5;
    ExactMatrix m = random_matrix(rng, rows, cols, 2);
    if (t % 7 == 0 && cols > 1) {
      // force a dependent column
      for (std::size_t i = 0; i < rows; ++i) m(i, cols - 1) = m(i, 0) * gi(1, -2);
    }
    ColumnEchelon e = rcef(m);
    REQUIRE(e.canonical.cols() == e.rank);
    CHECK(rcef(e.canonical).canonical == e.canonical);
    CHECK(spanned_by(m, e.canonical));
    CHECK(spanned_by(e.canonical, m));

    std::size_t prev = 0;
    for (std::size_t j = 0; j < e.rank; ++j) {
      std::size_t p = 0;
      while (e.canonical(p, j).is_zero()) ++p;
      CHECK(e.canonical(p, j) == gi(1));
      if (j > 0) CHECK(p > prev);
      for (std::size_t k = 0; k < e.rank; ++k)
        if (k != j) CHECK(e.canonical(p, k).is_zero());
      prev = p;
    }

    // Same span through a different generating set gives the same canonical form.
    ExactMatrix mixed = m * (ExactMatrix::identity(cols) + random_matrix(rng, cols, cols, 1));
    if (rank(mixed) == e.rank) CHECK(rcef(mixed).canonical == e.canonical);
  }
}

TEST_CASE("null space") {
  CHECK(null_space(ExactMatrix::identity(4)).cols() == 0);

  ExactMatrix ones{{1, 1}};
  ExactMatrix n = null_space(ones);
  REQUIRE(n.cols() == 1);
  CHECK(n(0, 0) == -n(1, 0));
  CHECK(!n(0, 0).is_zero());

  ExactMatrix zero_rows(0, 3);
  CHECK(null_space(zero_rows) == ExactMatrix::identity(3));

  Rng rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = 1 + t % 5, cols = 1 + (t / 5) % 6;
    ExactMatrix m = random_matrix(rng, rows, cols, 2);
    if (t % 3 == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * gi(0, 1);
    ExactMatrix ns = null_space(m);
    CHECK(rank(m) + ns.cols() == m.cols());
    CHECK(is_zero(m * ns));
    CHECK(rank(ns) == ns.cols());
  }
}

TEST_CASE("invert_gram") {
  CHECK(invert_gram(ExactMatrix{{25}}) == ExactMatrix{{GaussianRational(Rational(1, 25))}});
  CHECK(invert_gram(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
  CHECK_THROWS_AS(invert_gram(ExactMatrix{{1, 1}, {1, 1}}), SingularMatrix);

  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    ExactMatrix a = random_matrix(rng, 5, 1 + t % 4, 4);
    if (rank(a) != a.cols()) continue;
    ExactMatrix g = adjoint(a) * a;
    CHECK(g * invert_gram(g) == ExactMatrix::identity(g.rows()));
  }
}

TEST_CASE("to_float") {
  ExactMatrix m{{GaussianRational(Rational(1, 5), Rational(-1, 3))}};
  FloatMatrix f = to_float(m);
  CHECK(f(0, 0).real() == 0.2);
  CHECK(f(0, 0).imag() == -1.0 / 3.0);
}

TEST_CASE("float rank fallback agrees with exact rank") {
  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    ExactMatrix m = random_matrix(rng, 5, 1 + t % 5, 2);
    if (t % 4 == 0 && m.cols() > 2)
      for (std::size_t i = 0; i < 5; ++i) m(i, 2) = m(i, 0) + m(i, 1) * gi(0, 1);
    CHECK(float_rank(to_float(m)) == rank(m));
  }
  FloatMatrix decimals{{0.2294, 0.4588}, {0.4588, 0.9176}};
  CHECK(float_rank(decimals) == 1);
}

TEST_CASE("solve_in_span recovers superposition coefficients") {
  ExactVector h1{0, 1, gi(1, 1), 2, 0}, hp1{0, 1, 3, 2, 0}, w{0, gi(2, -1), 0, gi(4, -2), 0};
  auto c = solve_in_span(hstack(col(h1), col(hp1)), w);
  REQUIRE(c);
  CHECK((*c)[0] == gi(3));
  CHECK((*c)[1] == gi(-1, -1));
  CHECK_FALSE(solve_in_span(col(h1), w));
}
