#include "germ/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "germ/algebra.hpp"
#include "germ/error.hpp"

namespace germ {

namespace {

using cd = std::complex<double>;

// log2 |x| for a possibly huge or tiny Real, as a double.
double log2_abs(const Real& x) {
  if (x.is_zero()) return -HUGE_VAL;
  long e = 0;
  const double mant = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log2(std::abs(mant)) + static_cast<double>(e);
}

Real exp2_real(double log2_value, Precision bits) {
  const double whole = std::floor(log2_value);
  Real r(std::exp2(log2_value - whole), bits);
  return ldexp(r, static_cast<long>(whole));
}

// Bini's starting points: circles whose radii come from the upper convex
// hull of (k, log|a_k|).
std::vector<Complex> initial_approximations(const NumericPolynomial& p, Precision bits) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<double> logs(p.size());
  for (size_t k = 0; k < p.size(); ++k) logs[k] = log2_abs(abs(p[k]));
  std::vector<int> hull;
  for (int k = 0; k <= n; ++k) {
    if (std::isinf(logs[k])) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      const double cross = (logs[b] - logs[a]) * (k - a) - (logs[k] - logs[a]) * (b - a);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<Complex> out;
  const Real two_pi = Real::pi(bits) * Real(2L, bits);
  const double sigma = 0.7;
  for (size_t h = 0; h + 1 < hull.size(); ++h) {
    const int lo = hull[h];
    const int hi = hull[h + 1];
    const int count = hi - lo;
    const double log_r = (logs[lo] - logs[hi]) / count;
    const Real r = exp2_real(log_r, bits);
    for (int j = 0; j < count; ++j) {
      const double angle = 2.0 * M_PI * j / count + 2.0 * M_PI * static_cast<double>(h) / n + sigma;
      out.push_back(polar(r, Real(angle, bits)));
    }
  }
  (void)two_pi;
  return out;
}

bool fits_double(const NumericPolynomial& p) {
  for (const Complex& c : p) {
    if (c.is_zero()) continue;
    const double l = log2_abs(abs(c));
    if (l > 900 || l < -900) return false;
  }
  return true;
}

// Aberth in double precision; returns false when it produced non-finite values.
bool aberth_double(const std::vector<cd>& p, std::vector<cd>& z) {
  const size_t n = z.size();
  for (int iter = 0; iter < 400; ++iter) {
    bool done = true;
    for (size_t i = 0; i < n; ++i) {
      cd val = p.back();
      cd der = 0.0;
      for (size_t k = p.size() - 1; k-- > 0;) {
        der = der * z[i] + val;
        val = val * z[i] + p[k];
      }
      if (val == 0.0) continue;
      cd ratio = der == 0.0 ? cd(1e-3, 1e-3) : val / der;
      cd sum = 0.0;
      for (size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      cd w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) > 1e-14 * std::abs(z[i])) done = false;
    }
    if (done) return true;
  }
  return true;
}

}  // namespace

NumericPolynomial to_numeric(const std::vector<GaussianRational>& coefficients, Precision bits) {
  NumericPolynomial out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.push_back(c.to_complex(bits));
  return out;
}

Complex evaluate(const NumericPolynomial& p, const Complex& z) {
  if (p.empty()) return Complex(z.precision());
  Complex val = p.back();
  for (size_t k = p.size() - 1; k-- > 0;) val = val * z + p[k];
  return val;
}

std::vector<Complex> aberth_approximations(const NumericPolynomial& p, Precision bits,
                                           const std::vector<Complex>& warm_start) {
  const size_t n = p.size() - 1;
  if (p.size() < 2 || p.back().is_zero() || p.front().is_zero()) {
    throw Error(ErrorKind::invalid_argument, "aberth needs nonzero leading and constant coefficients");
  }
  std::vector<Complex> z = warm_start.size() == n ? warm_start : initial_approximations(p, bits);
  for (Complex& zi : z) zi = zi.with_precision(bits);

  if (fits_double(p)) {
    std::vector<cd> pd;
    for (const Complex& c : p) pd.push_back(c.to_std());
    std::vector<cd> zd;
    bool ok = true;
    for (const Complex& zi : z) {
      zd.push_back(zi.to_std());
      if (!std::isfinite(zd.back().real()) || !std::isfinite(zd.back().imag())) ok = false;
    }
    if (ok && aberth_double(pd, zd)) {
      bool distinct = true;
      for (size_t i = 0; i < n && distinct; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
          if (zd[i] == zd[j]) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct) {
        for (size_t i = 0; i < n; ++i) z[i] = Complex(zd[i], bits);
      }
    }
  }

  const Real one(1L, bits);
  const long target = -(static_cast<long>(bits) - 8);
  for (int iter = 0; iter < 200; ++iter) {
    bool done = true;
    for (size_t i = 0; i < n; ++i) {
      Complex val = p.back().with_precision(bits);
      Complex der(bits);
      for (size_t k = n; k-- > 0;) {
        der = der * z[i] + val;
        val = val * z[i] + p[k];
      }
      if (val.is_zero()) continue;
      Complex ratio = der.is_zero() ? Complex(Real(1e-6, bits), Real(1e-6, bits)) : val / der;
      Complex sum(bits);
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex d = z[i] - z[j];
        Real nd = norm(d);
        if (nd.is_zero()) continue;
        sum.re += d.re / nd;
        sum.im -= d.im / nd;
      }
      Complex denom = Complex(one, Real(bits)) - ratio * sum;
      Complex w = denom.is_zero() ? ratio : ratio / denom;
      z[i] -= w;
      if (!w.is_zero() && abs(w).exponent() - abs(z[i]).exponent() > target) done = false;
    }
    if (done) break;
  }
  return z;
}

std::vector<Real> inclusion_radii(const NumericPolynomial& p, const std::vector<Complex>& approx) {
  const size_t n = approx.size();
  const Precision bits = approx.empty() ? kDefaultPrecision : approx.front().precision();
  std::vector<Real> radii;
  radii.reserve(n);
  const Real lead = abs(p.back());
  const Real eps = Real::power_of_two(-static_cast<long>(bits) + 2, bits) * Real(static_cast<long>(2 * n + 2), bits);
  const Real pad = Real(1L, bits) + Real::power_of_two(-static_cast<long>(bits) / 2, bits);
  const Real dn(static_cast<long>(n), bits);
  for (size_t i = 0; i < n; ++i) {
    Complex val = p.back();
    Real mag = abs(p.back());
    const Real zi_abs = abs(approx[i]);
    for (size_t k = n; k-- > 0;) {
      val = val * approx[i] + p[k];
      mag = mag * zi_abs + abs(p[k]);
    }
    Real residual = abs(val) + eps * mag;
    Real prod = lead;
    for (size_t j = 0; j < n; ++j) {
      if (j != i) prod *= abs(approx[i] - approx[j]);
    }
    if (prod.is_zero()) {
      radii.emplace_back(Real(1e300, bits) * Real(1e300, bits));
      continue;
    }
    radii.push_back(dn * residual / prod * pad);
  }
  return radii;
}

namespace {

// Split off exact zero roots: returns the multiplicity of 0 and the deflated polynomial.
std::pair<int, NumericPolynomial> strip_zero_roots(NumericPolynomial p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  int zeros = 0;
  while (zeros < static_cast<int>(p.size()) && p[static_cast<size_t>(zeros)].is_zero()) ++zeros;
  p.erase(p.begin(), p.begin() + zeros);
  return {zeros, p};
}

Complex zero_complex(Precision bits) { return Complex(bits); }

}  // namespace

std::vector<ComplexBall> separated_roots(const NumericPolynomial& p_in, Precision bits,
                                         const std::vector<Complex>& warm_start) {
  auto [zeros, p] = strip_zero_roots(p_in);
  if (p.empty()) throw Error(ErrorKind::zero_polynomial, "roots of the zero polynomial");
  if (zeros > 1) return {};
  std::vector<ComplexBall> out;
  if (zeros == 1) out.emplace_back(zero_complex(bits), Real(bits));
  if (p.size() == 1) return out;
  std::vector<Complex> warm;
  if (warm_start.size() == p.size() - 1 + static_cast<size_t>(zeros)) {
    for (const Complex& w : warm_start) {
      if (zeros == 1 && w.is_zero()) continue;
      warm.push_back(w);
    }
  }
  std::vector<Complex> approx = aberth_approximations(p, bits, warm);
  std::vector<Real> radii = inclusion_radii(p, approx);
  for (size_t i = 0; i < approx.size(); ++i) out.emplace_back(approx[i], radii[i]);
  for (size_t i = 0; i < out.size(); ++i) {
    if (!out[i].center.is_finite() || !out[i].radius.is_finite()) return {};
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (out[i].overlaps(out[j])) return {};
    }
  }
  return out;
}

std::vector<RootCluster> root_clusters(const NumericPolynomial& p_in, Precision bits) {
  auto [zeros, p] = strip_zero_roots(p_in);
  if (p.empty()) throw Error(ErrorKind::zero_polynomial, "roots of the zero polynomial");
  std::vector<RootCluster> out;
  if (zeros > 0) out.push_back({ComplexBall(zero_complex(bits), Real(bits)), zeros});
  if (p.size() == 1) return out;
  std::vector<Complex> approx = aberth_approximations(p, bits);
  std::vector<Real> radii = inclusion_radii(p, approx);
  const size_t n = approx.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (abs(approx[i] - approx[j]) <= radii[i] + radii[j]) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<size_t>> groups(n);
  for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Complex centroid(bits);
    for (size_t i : g) centroid += approx[i];
    centroid = centroid / Real(static_cast<long>(g.size()), bits);
    Real radius(bits);
    for (size_t i : g) radius = max(radius, abs(approx[i] - centroid) + radii[i]);
    out.push_back({ComplexBall(centroid, radius), static_cast<int>(g.size())});
  }
  return out;
}

void sort_by_center(std::vector<ComplexBall>& balls) {
  std::stable_sort(balls.begin(), balls.end(), [](const ComplexBall& a, const ComplexBall& b) {
    const Precision bits = a.center.precision();
    const Real scale = max(Real(1L, bits), max(abs(a.center), abs(b.center)));
    const Real tol = a.radius + b.radius + scale * Real::power_of_two(-static_cast<long>(bits) / 2, bits);
    if (abs(a.center.re - b.center.re) > tol) return a.center.re < b.center.re;
    if (abs(a.center.im - b.center.im) > tol) return a.center.im < b.center.im;
    return false;
  });
}

std::vector<ComplexBall> univariate_roots(const Polynomial& p, Precision bits, Precision cap) {
  if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "roots of the zero polynomial");
  const auto coeffs = univariate_coefficients(p);
  if (coeffs.size() < 2) throw Error(ErrorKind::invalid_argument, "polynomial has degree 0");
  const auto factors = squarefree_decomposition(p);
  for (Precision prec = std::max<Precision>(bits, 53); prec <= cap; prec *= 2) {
    std::vector<ComplexBall> all;
    std::vector<int> mult;
    bool ok = true;
    for (const auto& f : factors) {
      auto balls = separated_roots(to_numeric(univariate_coefficients(f.factor), prec), prec);
      if (balls.empty()) {
        ok = false;
        break;
      }
      for (auto& b : balls) {
        all.push_back(std::move(b));
        mult.push_back(f.multiplicity);
      }
    }
    for (size_t i = 0; ok && i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        if (all[i].overlaps(all[j])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<ComplexBall> out;
    for (size_t i = 0; i < all.size(); ++i) {
      for (int k = 0; k < mult[i]; ++k) out.push_back(all[i]);
    }
    sort_by_center(out);
    return out;
  }
  throw Error(ErrorKind::precision, "could not separate the roots of " + p.to_string() + " below " +
                                        std::to_string(cap) + " bits");
}

}  // namespace germ
