#include "germ/carousel.hpp"

#include <algorithm>

#include "germ/error.hpp"
#include "germ/roots.hpp"

namespace germ {

namespace {

constexpr int kCircleSamples = 32;
constexpr int kShrinkSteps = 40;
constexpr long kStepUnit = 1L << 20;
constexpr long kMaxSteps = 1L << 20;

struct PrecisionShort {};

// coefficients[k][j] of u^k v^j.
struct DeltaTable {
  std::vector<std::vector<Complex>> coefficients;
};

DeltaTable tabulate(const Polynomial& delta, Precision bits) {
  DeltaTable t;
  const int du = std::max(0, delta.degree(0));
  const int dv = std::max(0, delta.degree(1));
  t.coefficients.assign(static_cast<size_t>(du) + 1, std::vector<Complex>(static_cast<size_t>(dv) + 1, Complex(bits)));
  for (const auto& [e, c] : delta.terms()) t.coefficients[e[0]][e[1]] = c.to_complex(bits);
  return t;
}

NumericPolynomial fiber_polynomial(const DeltaTable& t, const Complex& v) {
  NumericPolynomial p;
  for (const auto& row : t.coefficients) {
    Complex acc = row.back();
    for (size_t j = row.size() - 1; j-- > 0;) acc = acc * v + row[j];
    p.push_back(std::move(acc));
  }
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

std::vector<ComplexBall> fiber_roots(const DeltaTable& t, const Complex& v, Precision bits,
                                     const std::vector<Complex>& warm = {}) {
  const NumericPolynomial p = fiber_polynomial(t, v);
  if (p.size() < 2) return {};
  auto balls = separated_roots(p, bits, warm);
  if (balls.empty()) throw PrecisionShort{};
  return balls;
}

Complex on_circle(const Real& radius, const Real& theta) { return polar(radius, theta); }

Real angle(long numerator, long denominator, int direction, Precision bits) {
  const Real two_pi = Real::pi(bits) * Real(2L, bits);
  return two_pi * Real(numerator * direction, bits) / Real(denominator, bits);
}

struct SampleCheck {
  bool ok = true;
  std::string reason;
};

// Inner roots strictly inside |u| < inner, the rest strictly outside |u| > outer.
SampleCheck check_circle(const DeltaTable& t, int m, const Real& eta, const Real& inner, const Real& outer,
                         Precision bits) {
  for (int k = 0; k < kCircleSamples; ++k) {
    const Complex v = on_circle(eta, angle(k, kCircleSamples, 1, bits));
    std::vector<ComplexBall> roots;
    try {
      roots = fiber_roots(t, v, bits);
    } catch (const PrecisionShort&) {
      return {false, "fibre roots not separated at sample " + std::to_string(k)};
    }
    int count = 0;
    for (const ComplexBall& b : roots) {
      const Real r = abs(b.center);
      if (r + b.radius < inner) {
        ++count;
      } else if (!(r - b.radius > outer)) {
        return {false, "a fibre root is near |u| = rho at sample " + std::to_string(k)};
      }
    }
    if (count != m) {
      return {false, std::to_string(count) + " fibre roots inside the disc at sample " + std::to_string(k) +
                         ", expected " + std::to_string(m)};
    }
  }
  return {};
}

std::optional<std::string> check_separation(const DeltaTable& t, const Real& eta, const Real& rho, Precision bits) {
  std::vector<ComplexBall> roots;
  try {
    roots = fiber_roots(t, Complex(eta, Real(bits)), bits);
  } catch (const PrecisionShort&) {
    return "base fibre not separated";
  }
  std::vector<Complex> inner;
  for (const auto& b : roots) {
    if (abs(b.center) < rho) inner.push_back(b.center);
  }
  const Real gap = rho * Real::power_of_two(-static_cast<long>(bits) / 4, bits);
  for (size_t i = 0; i < inner.size(); ++i) {
    for (size_t j = i + 1; j < inner.size(); ++j) {
      if (abs(inner[i] - inner[j]) < gap) return "base fibre points closer than 2^(-P/4) rho";
    }
  }
  return std::nullopt;
}

// Roots of Delta(u, 0) / u^m; nullopt if ord_u Delta(u, 0) != m.
std::optional<std::vector<ComplexBall>> axis_roots(const Polynomial& delta, int m, Precision bits) {
  const std::vector<std::string> uvar{"u"};
  Polynomial h(uvar);
  int low = -1;
  for (const auto& [e, c] : delta.terms()) {
    if (e[1] != 0) continue;
    if (low < 0 || static_cast<int>(e[0]) < low) low = static_cast<int>(e[0]);
  }
  if (low != m) return std::nullopt;
  for (const auto& [e, c] : delta.terms()) {
    if (e[1] == 0) h.add_term({e[0] - static_cast<unsigned>(m)}, c);
  }
  if (h.is_constant()) return std::vector<ComplexBall>{};
  return univariate_roots(h, bits);
}

Real to_real(const Rational& q, Precision bits) { return Real(q, bits); }

Rational power_of_quarter(int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r /= 4;
  return r;
}

}  // namespace

std::optional<std::string> validate_radii(const Polynomial& delta, int m, const Rational& rho, const Rational& eta,
                                          Precision bits) {
  if (sgn(rho) <= 0 || sgn(eta) <= 0) return "radii must be positive";
  const Real rho_r = to_real(rho, bits);
  const Real eta_r = to_real(eta, bits);
  const auto axis = axis_roots(delta, m, bits);
  if (!axis) return "ord_u Delta(u, 0) differs from m";
  for (const ComplexBall& b : *axis) {
    if (!(abs(b.center) - b.radius > rho_r)) return "Delta(u, 0) has a nonzero root with |u| <= rho";
  }
  const DeltaTable t = tabulate(delta, bits);
  const SampleCheck c = check_circle(t, m, eta_r, rho_r, rho_r, bits);
  if (!c.ok) return c.reason;
  return check_separation(t, eta_r, rho_r, bits);
}

CarouselRadii choose_radii(const CerfDiagram& diagram, Precision bits, const Rational& scale) {
  const int m = diagram.contact_count;
  if (diagram.empty() || m == 0) throw Error(ErrorKind::radii, "Cerf diagram has no fibre points near the origin");
  const Polynomial& delta = diagram.defining;
  const auto axis = axis_roots(delta, m, bits);
  if (!axis) throw Error(ErrorKind::radii, "ord_u Delta(u, 0) differs from m");

  Rational rho;
  bool found = false;
  for (int k = 0; k <= kShrinkSteps && !found; ++k) {
    rho = power_of_quarter(k);
    const Real outer = to_real(rho, bits) * Real(2L, bits);
    found = std::all_of(axis->begin(), axis->end(),
                        [&](const ComplexBall& b) { return abs(b.center) - b.radius > outer; });
  }
  if (!found) throw Error(ErrorKind::radii, "Delta(u, 0) has roots arbitrarily close to 0");

  const DeltaTable t = tabulate(delta, bits);
  const Real rho_r = to_real(rho, bits);
  Rational eta;
  found = false;
  std::string last;
  for (int k = 0; k <= kShrinkSteps && !found; ++k) {
    eta = power_of_quarter(k);
    const Real eta_r = to_real(eta, bits);
    const SampleCheck c = check_circle(t, m, eta_r, rho_r / Real(2L, bits), rho_r * Real(2L, bits), bits);
    if (!c.ok) {
      last = c.reason;
      continue;
    }
    if (auto s = check_separation(t, eta_r, rho_r, bits)) {
      last = *s;
      continue;
    }
    found = true;
  }
  if (!found) throw Error(ErrorKind::radii, "no eta found: " + last);

  CarouselRadii out;
  out.rho = rho * scale;
  out.eta = eta * scale;
  if (auto failure = validate_radii(delta, m, out.rho, out.eta, bits)) throw Error(ErrorKind::radii, *failure);
  out.validation = {"fibre count over |v| = eta equals m on " + std::to_string(kCircleSamples) + " samples",
                    "no other fibre root within |u| <= rho", "u = 0 is the only root of Delta(u, 0) in |u| <= rho",
                    "base fibre points separated by 2^(-P/4) rho"};
  return out;
}

namespace {

struct Match {
  bool ok = false;
  std::vector<size_t> target;
};

// Nearest-center matching of `from` into `to`; ambiguous when the runner-up
// is within 4x (distance + radii) of the winner.
Match match_points(const std::vector<Complex>& from, const std::vector<ComplexBall>& to) {
  Match out;
  std::vector<bool> used(to.size(), false);
  for (const Complex& p : from) {
    size_t best = to.size();
    size_t second = to.size();
    std::optional<Real> d1;
    std::optional<Real> d2;
    for (size_t k = 0; k < to.size(); ++k) {
      Real d = abs(to[k].center - p);
      if (!d1 || d < *d1) {
        second = best;
        d2 = d1;
        best = k;
        d1 = d;
      } else if (!d2 || d < *d2) {
        second = k;
        d2 = d;
      }
    }
    if (best == to.size() || used[best]) return out;
    if (d2) {
      const Real limit = Real(4L, d1->precision()) * (*d1 + to[best].radius + to[second].radius);
      if (*d2 <= limit) return out;
    }
    used[best] = true;
    out.target.push_back(best);
  }
  out.ok = true;
  return out;
}

CarouselPermutation track(const Polynomial& delta, const CarouselRadii& radii, int m, int steps, Precision bits,
                          int direction) {
  const DeltaTable t = tabulate(delta, bits);
  const Real rho = to_real(radii.rho, bits);
  const Real eta = to_real(radii.eta, bits);

  CarouselPermutation out;
  out.m = m;
  out.precision_used = bits;
  std::vector<ComplexBall> fiber = fiber_roots(t, Complex(eta, Real(bits)), bits);
  for (const auto& b : fiber) {
    if (abs(b.center) < rho) out.base_points.push_back(b);
  }
  if (static_cast<int>(out.base_points.size()) != m) {
    throw Error(ErrorKind::tracking, "base fibre has " + std::to_string(out.base_points.size()) +
                                         " points in the disc, expected " + std::to_string(m));
  }
  sort_by_center(out.base_points);

  std::vector<Complex> all;
  for (const auto& b : fiber) all.push_back(b.center);
  std::vector<Complex> tracked;
  for (const auto& b : out.base_points) tracked.push_back(b.center);
  out.orbit_traces.resize(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) out.orbit_traces[k].push_back(tracked[k].to_std());

  const long total = static_cast<long>(steps) * kStepUnit;
  long pos = 0;
  long h = kStepUnit;
  while (pos < total) {
    const long step = std::min(h, total - pos);
    const Complex v = on_circle(eta, angle(pos + step, total, direction, bits));
    std::vector<ComplexBall> next = fiber_roots(t, v, bits, all);
    Match inner = match_points(tracked, next);
    if (!inner.ok) {
      h /= 2;
      if (h == 0) throw Error(ErrorKind::tracking, "point matching stays ambiguous at the finest step");
      continue;
    }
    int inside = 0;
    for (const auto& b : next) {
      if (abs(b.center) < rho) ++inside;
    }
    for (size_t k : inner.target) {
      if (!(abs(next[k].center) < rho)) inside = -1;
    }
    if (inside != m) throw Error(ErrorKind::tracking, "number of fibre points in the disc changed along the loop");
    for (size_t k = 0; k < tracked.size(); ++k) tracked[k] = next[inner.target[k]].center;
    all.clear();
    for (const auto& b : next) all.push_back(b.center);
    pos += step;
    ++out.steps_used;
    if (out.steps_used > kMaxSteps) throw Error(ErrorKind::tracking, "step count exceeded 2^20");
    if (pos % kStepUnit == 0) {
      for (int k = 0; k < m; ++k) out.orbit_traces[k].push_back(tracked[k].to_std());
    }
    h = std::min(h * 2, kStepUnit);
  }

  Match closing = match_points(tracked, out.base_points);
  if (!closing.ok) throw Error(ErrorKind::tracking, "end points do not match the base fibre");
  for (size_t k : closing.target) out.sigma.push_back(static_cast<int>(k));
  out.cycle_type = cycle_type(out.sigma);
  for (int k = 0; k < m; ++k) {
    if (out.sigma[k] == k) out.fixed_points.push_back(k);
  }
  return out;
}

}  // namespace

CarouselPermutation carousel_permutation(const CerfDiagram& diagram, const CarouselRadii& radii, int steps,
                                         Precision bits, int direction, Precision max_bits) {
  if (steps < 64) throw Error(ErrorKind::invalid_argument, "at least 64 steps are required");
  if (direction != 1 && direction != -1) throw Error(ErrorKind::invalid_argument, "direction must be +1 or -1");
  if (bits < 53) throw Error(ErrorKind::invalid_argument, "precision must be at least 53 bits");
  const int m = diagram.contact_count;
  if (m == 0) {
    CarouselPermutation empty;
    empty.precision_used = bits;
    return empty;
  }
  for (Precision prec = bits; prec <= max_bits; prec *= 2) {
    try {
      return track(diagram.defining, radii, m, steps, prec, direction);
    } catch (const PrecisionShort&) {
    }
  }
  throw Error(ErrorKind::precision, "fibre roots not separated below " + std::to_string(max_bits) + " bits");
}

std::vector<int> cycle_type(const std::vector<int>& sigma) {
  std::vector<int> out;
  std::vector<bool> seen(sigma.size(), false);
  for (size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (size_t k = start; !seen[k]; k = static_cast<size_t>(sigma[k])) {
      seen[k] = true;
      ++length;
    }
    out.push_back(length);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> predicted_cycle_type(const CerfDiagram& diagram) {
  std::vector<int> out = diagram.v_orders;
  std::sort(out.begin(), out.end());
  return out;
}

FixedPointVerdict fixed_point_verdict(const CarouselPermutation& perm, int f_order) {
  FixedPointVerdict v;
  v.fixed_point_free = perm.fixed_points.empty();
  if (f_order >= 2) {
    v.predicted_lefschetz = 0;
    v.consistent = v.fixed_point_free;
    if (!v.consistent) v.note = "INCONSISTENT: fixed point although f has order >= 2";
  } else {
    v.note = "f is not in m^2; no prediction";
  }
  return v;
}

}  // namespace germ
