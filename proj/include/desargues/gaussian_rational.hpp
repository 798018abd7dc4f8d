#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace desargues {

/// Arbitrary-precision rational in lowest terms with positive denominator.
using Rational = mpq_class;

using ComplexFloat = std::complex<double>;

/// Parses "p/q", "p" or "-p/q" (decimal integers only). Throws ParseError.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string format_rational(const Rational& q);
/// Nearest double (round-half-even). Throws NonFiniteConversion on overflow.
double to_double(const Rational& q);

/// Complex number re + i*im with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integer literals are scalars
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  /// Throws SingularMatrix on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  ComplexFloat to_complex() const { return {to_double(re_), to_double(im_)}; }

  /// Human-readable form such as "2-i", "1/2+3/4i", "0".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace desargues
