#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// F(x, y, t) = f_t(x, y); the parameter is the third variable.
struct FamilyGerm {
  Polynomial F;
  std::vector<GaussianRational> t_samples;
  Rational search_radius{1, 2};
};

/// Default samples {1/8, i/8, -1/8}, multiplied by `scale`.
std::vector<GaussianRational> default_samples(const Rational& scale = Rational(1));

/// Parse F over (x, y, t) style variables; throws unless F(0,0,0) = 0.
FamilyGerm make_family(const Polynomial& F, std::vector<GaussianRational> samples = {},
                       Rational search_radius = Rational(1, 2));

/// f_t as a polynomial in the first two variables.
Polynomial fiber_germ(const FamilyGerm& family, const GaussianRational& t);

struct CriticalPoint {
  ComplexBall x;
  ComplexBall y;
  int local_mu = 0;
  ComplexBall critical_value;
  bool inside = true;  // |(x, y)| < search radius
};

struct CriticalRecord {
  GaussianRational t;
  std::vector<CriticalPoint> points;  // sorted by (x, y) centers
};

/// All common zeros of the partials of f_t, each with its local Milnor
/// number. Throws Error(non_isolated) when the partials share a factor.
CriticalRecord critical_points(const FamilyGerm& family, const GaussianRational& t,
                               Precision bits = kDefaultPrecision);

struct SampleTotal {
  GaussianRational t;
  int total_mu = 0;  // over points inside the search ball
  int escaped = 0;   // critical points outside it
  bool conserved = false;
};

struct ConservationReport {
  int mu0 = 0;
  std::vector<CriticalRecord> records;
  std::vector<SampleTotal> totals;
  bool conserved = false;
};

ConservationReport conservation_check(const FamilyGerm& family, Precision bits = kDefaultPrecision);

enum class CoalescingStatus { consistent, violation, not_applicable };
std::string to_string(CoalescingStatus s);

struct CoalescingVerdict {
  CoalescingStatus status = CoalescingStatus::not_applicable;
  std::vector<int> zero_fiber_mu;      // per sample: sum of local mu on f_t = 0
  std::vector<int> zero_fiber_points;  // per sample: number of such points
  std::string note;
};

CoalescingVerdict coalescing_verdict(const FamilyGerm& family, const ConservationReport& report);

}  // namespace germ
