#include "germ/family.hpp"

#include <algorithm>
#include <tuple>

#include "germ/algebra.hpp"
#include "germ/error.hpp"
#include "germ/puiseux.hpp"
#include "germ/roots.hpp"

namespace germ {

namespace {

constexpr int kShearAttempts = 8;

struct ProjectedRoot {
  ComplexBall value;
  int multiplicity;
};

// Roots of Res_s(p(X - lambda s, s), q(X - lambda s, s)) with exact
// multiplicities, or nullopt when a leading coefficient in s is not constant
// (points at infinity would spoil the multiplicity count).
std::optional<std::vector<ProjectedRoot>> projected_roots(const Polynomial& p, const Polynomial& q,
                                                           const std::vector<Polynomial>& images, Precision bits) {
  const Polynomial a = p.substitute(images);
  const Polynomial b = q.substitute(images);
  for (const Polynomial* h : {&a, &b}) {
    const int d = h->degree("s");
    if (d <= 0 || !h->coefficient(h->index_of("s"), static_cast<unsigned>(d)).is_constant()) return std::nullopt;
  }
  const Polynomial r = drop_variable(resultant(a, b, "s"), "s");
  std::vector<ProjectedRoot> out;
  if (r.is_constant()) return out;
  for (const SquarefreeFactor& sf : squarefree_decomposition(r)) {
    for (const ComplexBall& z : univariate_roots(sf.factor, bits)) out.push_back({z, sf.multiplicity});
  }
  return out;
}

std::vector<Polynomial> shear(const std::vector<std::string>& vars, const GaussianRational& slope, bool first) {
  const Polynomial p = Polynomial::variable(vars, "p");
  const Polynomial s = Polynomial::variable(vars, "s");
  // first: x = p - slope*s, y = s.  otherwise: x = s, y = p - slope*s.
  const Polynomial moved = p - slope * s;
  return first ? std::vector<Polynomial>{moved, s} : std::vector<Polynomial>{s, moved};
}

Real residual(const Polynomial& fx, const Polynomial& fy, const std::vector<Complex>& point) {
  return abs(fx.evaluate(point)) + abs(fy.evaluate(point));
}

Real residual_scale(const Polynomial& fx, const Polynomial& fy, const std::vector<Complex>& point, Precision bits) {
  return Real::power_of_two(-static_cast<long>(bits) / 2, bits) *
         (Real(1L, bits) + fx.evaluate_magnitude(point) + fy.evaluate_magnitude(point));
}

// Pairs roots of the two projections; nullopt if the pairing is not a
// bijection with matching multiplicities.
std::optional<std::vector<CriticalPoint>> pair_projections(const Polynomial& f, const Polynomial& fx,
                                                           const Polynomial& fy, const GaussianRational& lambda,
                                                           const GaussianRational& kappa,
                                                           const std::vector<ProjectedRoot>& first,
                                                           const std::vector<ProjectedRoot>& second, Precision bits) {
  if (first.size() != second.size()) return std::nullopt;
  const Complex l = lambda.to_complex(bits);
  const Complex k = kappa.to_complex(bits);
  const Complex det = Complex(Real(1L, bits), Real(bits)) - l * k;
  std::vector<bool> used(second.size(), false);
  std::vector<CriticalPoint> out;
  for (const ProjectedRoot& a : first) {
    std::optional<size_t> match;
    CriticalPoint found;
    for (size_t j = 0; j < second.size(); ++j) {
      const ProjectedRoot& b = second[j];
      // x + lambda y = a, kappa x + y = b.
      const Complex x = (a.value.center - l * b.value.center) / det;
      const Complex y = b.value.center - k * x;
      const std::vector<Complex> pt{x, y};
      if (!(residual(fx, fy, pt) <= residual_scale(fx, fy, pt, bits))) continue;
      if (match || used[j] || a.multiplicity != b.multiplicity) return std::nullopt;
      match = j;
      const Real rx = (a.value.radius + abs(l) * b.value.radius) / abs(det);
      found.x = {x, rx};
      found.y = {y, b.value.radius + abs(k) * rx};
      found.local_mu = a.multiplicity;
      const Complex value = f.evaluate(pt);
      found.critical_value = {value, Real::power_of_two(-static_cast<long>(bits) / 2, bits) *
                                         (Real(1L, bits) + f.evaluate_magnitude(pt))};
    }
    if (!match) return std::nullopt;
    used[*match] = true;
    out.push_back(std::move(found));
  }
  return out;
}

std::tuple<double, double, double, double> sort_key(const CriticalPoint& p) {
  return {p.x.center.re.to_double(), p.x.center.im.to_double(), p.y.center.re.to_double(),
          p.y.center.im.to_double()};
}

}  // namespace

std::vector<GaussianRational> default_samples(const Rational& scale) {
  const Rational eighth = Rational(1, 8) * scale;
  return {GaussianRational(eighth), GaussianRational(Rational(0), eighth), GaussianRational(-eighth)};
}

FamilyGerm make_family(const Polynomial& F, std::vector<GaussianRational> samples, Rational search_radius) {
  if (F.variable_count() != 3) throw Error(ErrorKind::invalid_argument, "family needs variables (x, y, t)");
  if (!F.constant_term().is_zero()) throw Error(ErrorKind::unit_germ, "F(0, 0, 0) is not zero");
  if (sgn(search_radius) <= 0) throw Error(ErrorKind::invalid_argument, "search radius must be positive");
  FamilyGerm out;
  out.F = F;
  out.t_samples = samples.empty() ? default_samples() : std::move(samples);
  for (const auto& t : out.t_samples) {
    if (t.is_zero()) throw Error(ErrorKind::invalid_argument, "t samples must be nonzero");
  }
  out.search_radius = std::move(search_radius);
  return out;
}

Polynomial fiber_germ(const FamilyGerm& family, const GaussianRational& t) {
  const auto& vars = family.F.variables();
  return drop_variable(family.F.evaluate_at(2, t), vars[2]);
}

CriticalRecord critical_points(const FamilyGerm& family, const GaussianRational& t, Precision bits) {
  const Polynomial f = fiber_germ(family, t);
  const Polynomial fx = f.derivative(0);
  const Polynomial fy = f.derivative(1);
  CriticalRecord record;
  record.t = t;
  if (fx.is_zero() || fy.is_zero() || !gcd(fx, fy).is_constant()) {
    throw Error(ErrorKind::non_isolated, "critical locus of f_t is not isolated at t = " + t.to_string());
  }
  if (fx.is_constant() || fy.is_constant()) return record;

  const std::vector<std::string> vars{"p", "s"};
  std::optional<std::vector<CriticalPoint>> points;
  for (int attempt = 0; attempt < kShearAttempts && !points; ++attempt) {
    const GaussianRational lambda(attempt + 1);
    const GaussianRational kappa(-(attempt + 2));
    const auto first = projected_roots(fx, fy, shear(vars, lambda, true), bits);
    const auto second = projected_roots(fx, fy, shear(vars, kappa, false), bits);
    if (!first || !second) continue;
    points = pair_projections(f, fx, fy, lambda, kappa, *first, *second, bits);
  }
  if (!points) throw Error(ErrorKind::precision, "critical points could not be paired across projections");

  const Real radius(family.search_radius, bits);
  for (CriticalPoint& p : *points) p.inside = sqrt(norm(p.x.center) + norm(p.y.center)) < radius;
  std::sort(points->begin(), points->end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return sort_key(a) < sort_key(b); });
  record.points = std::move(*points);
  return record;
}

ConservationReport conservation_check(const FamilyGerm& family, Precision bits) {
  ConservationReport report;
  report.mu0 = milnor_number(fiber_germ(family, GaussianRational(0)), bits);
  report.conserved = true;
  for (const GaussianRational& t : family.t_samples) {
    CriticalRecord record = critical_points(family, t, bits);
    SampleTotal total;
    total.t = t;
    for (const CriticalPoint& p : record.points) {
      if (p.inside) {
        total.total_mu += p.local_mu;
      } else {
        ++total.escaped;
      }
    }
    total.conserved = total.total_mu == report.mu0;
    report.conserved = report.conserved && total.conserved;
    report.totals.push_back(total);
    report.records.push_back(std::move(record));
  }
  return report;
}

std::string to_string(CoalescingStatus s) {
  switch (s) {
    case CoalescingStatus::consistent:
      return "CONSISTENT";
    case CoalescingStatus::violation:
      return "VIOLATION";
    case CoalescingStatus::not_applicable:
      return "NOT APPLICABLE";
  }
  return "";
}

CoalescingVerdict coalescing_verdict(const FamilyGerm& family, const ConservationReport& report) {
  CoalescingVerdict v;
  bool hypothesis = report.mu0 > 0;
  for (const CriticalRecord& record : report.records) {
    int mu = 0;
    int count = 0;
    for (const CriticalPoint& p : record.points) {
      if (p.inside && abs(p.critical_value.center) <= p.critical_value.radius) {
        mu += p.local_mu;
        ++count;
      }
    }
    v.zero_fiber_mu.push_back(mu);
    v.zero_fiber_points.push_back(count);
    hypothesis = hypothesis && mu == report.mu0;
  }
  const Polynomial f0 = fiber_germ(family, GaussianRational(0));
  const std::string trace_note =
      f0.order() >= 2 ? "; trace hypothesis holds since f_0 is in m^2" : "; f_0 is not in m^2";
  if (!hypothesis) {
    v.status = CoalescingStatus::not_applicable;
    v.note = "zero-fibre Milnor sum differs from mu(f_0) = " + std::to_string(report.mu0) + trace_note;
    return v;
  }
  const bool unique = std::all_of(v.zero_fiber_points.begin(), v.zero_fiber_points.end(), [](int c) { return c == 1; });
  v.status = unique ? CoalescingStatus::consistent : CoalescingStatus::violation;
  v.note = unique ? "zero fibre carries a single critical point with mu = mu(f_0)" + trace_note
                  : "zero fibre carries the full Milnor number on several points" + trace_note;
  return v;
}

}  // namespace germ
