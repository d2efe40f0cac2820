#include "germ/gaussian.hpp"

#include "germ/error.hpp"

namespace germ {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  *this = *this * rhs;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  *this = *this / rhs;
  return *this;
}

double GaussianRational::magnitude() const { return std::abs(re.get_d()) + std::abs(im.get_d()); }

std::string GaussianRational::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "*i";
  std::string out = "(" + re.get_str();
  out += sgn(im) < 0 ? "-" : "+";
  Rational mag = abs(im);
  out += mag == 1 ? "i" : mag.get_str() + "*i";
  return out + ")";
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {Rational(a.re * b.re), Rational(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero in Q(i)");
  if (sgn(b.im) == 0) return {a.re / b.re, a.im / b.re};
  Rational d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

GaussianRational pow(const GaussianRational& z, unsigned n) {
  GaussianRational result(1);
  GaussianRational base = z;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::syntax, "not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace germ
