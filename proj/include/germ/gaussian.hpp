#pragma once

#include <gmpxx.h>

#include <string>

#include "germ/numeric.hpp"

namespace germ {

/// Exact rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long value) : re(value), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real) : re(std::move(real)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);
  GaussianRational operator-() const { return {-re, -im}; }

  Complex to_complex(Precision bits) const { return {Real(re, bits), Real(im, bits)}; }
  /// |re| + |im|, a cheap magnitude used for numeric tolerances.
  double magnitude() const;
  std::string to_string() const;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

GaussianRational conj(const GaussianRational& z);
GaussianRational pow(const GaussianRational& z, unsigned n);

/// Parses "p/q" or an integer; throws Error(syntax) otherwise.
Rational parse_rational(const std::string& text);

}  // namespace germ
