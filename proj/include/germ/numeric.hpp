#pragma once

// Arbitrary-precision real and complex numbers on top of MPFR, plus the
// ComplexBall enclosure used for certified roots.

#include <mpfr.h>
#include <gmpxx.h>

#include <complex>
#include <string>

namespace germ {

/// Working precision in bits.
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMaxPrecision = 4096;

class Real {
 public:
  explicit Real(Precision bits = kDefaultPrecision);
  Real(double value, Precision bits);
  Real(long value, Precision bits);
  Real(const mpq_class& value, Precision bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return mpfr_get_prec(value_); }
  Real with_precision(Precision bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;
  std::string to_string(int digits = 20) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

  static Real pi(Precision bits);
  /// 2^k at the given precision.
  static Real power_of_two(long k, Precision bits);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// Multiply by 2^k exactly.
Real ldexp(const Real& x, long k);

struct Complex {
  Real re;
  Real im;

  explicit Complex(Precision bits = kDefaultPrecision) : re(bits), im(bits) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  Complex(std::complex<double> z, Precision bits) : re(z.real(), bits), im(z.imag(), bits) {}

  Precision precision() const { return re.precision(); }
  Complex with_precision(Precision bits) const { return {re.with_precision(bits), im.with_precision(bits)}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex operator-() const { return {-re, -im}; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Real abs(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Complex conj(const Complex& z);
/// r * e^{i theta}
Complex polar(const Real& r, const Real& theta);
/// Principal n-th root.
Complex principal_root(const Complex& z, int n);
Complex pow(const Complex& z, int n);

/// Closed disc {z : |z - center| <= radius}.
struct ComplexBall {
  Complex center;
  Real radius;

  ComplexBall() : center(), radius(53) {}
  ComplexBall(Complex c, Real r) : center(std::move(c)), radius(std::move(r)) {}

  bool contains(const Complex& z) const;
  bool overlaps(const ComplexBall& other) const;
};

}  // namespace germ
