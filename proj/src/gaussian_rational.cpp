#include "desargues/gaussian_rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>

#include "desargues/errors.hpp"

namespace desargues {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  if (!std::isfinite(d)) throw NonFiniteConversion("rational " + format_rational(q) + " overflows double");
  return d;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm2();
  if (sgn(n) == 0) throw SingularMatrix("division by zero Gaussian rational");
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  Rational m = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return format_rational(re_);
  std::string out = has_re ? format_rational(re_) : std::string();
  Rational mag = abs(im_);
  std::string im_part = mag == 1 ? "i" : format_rational(mag) + "i";
  if (sgn(im_) < 0) {
    out += "-";
  } else if (has_re) {
    out += "+";
  }
  return out + im_part;
}

}  // namespace desargues
