#include <doctest.h>

#include <cmath>
#include <complex>

#include "germ/error.hpp"
#include "germ/family.hpp"
#include "oracles.hpp"

using namespace germ;

namespace {

const std::vector<std::string> kXYT{"x", "y", "t"};

FamilyGerm family(const std::string& text, std::vector<GaussianRational> samples = {}) {
  return make_family(parse_polynomial(text, kXYT), std::move(samples));
}

int total_inside(const CriticalRecord& r) {
  int total = 0;
  for (const auto& p : r.points) {
    if (p.inside) total += p.local_mu;
  }
  return total;
}

std::vector<GaussianRational> halved(const std::vector<GaussianRational>& samples) {
  std::vector<GaussianRational> out;
  for (const auto& t : samples) out.push_back(t * GaussianRational(Rational(1, 2)));
  return out;
}

}  // namespace

TEST_CASE("default samples and fibres") {
  const auto s = default_samples();
  REQUIRE(s.size() == 3);
  CHECK(s[0] == GaussianRational(Rational(1, 8)));
  CHECK(s[1] == GaussianRational::i() * GaussianRational(Rational(1, 8)));
  CHECK(s[2] == GaussianRational(Rational(-1, 8)));
  const FamilyGerm f = family("x^3 - y^2 + t*x");
  CHECK(fiber_germ(f, GaussianRational(2)) == oracle::parse("x^3 - y^2 + 2*x"));
  CHECK_THROWS_AS(family("x^2 + 1"), Error);
}

TEST_CASE("critical points of a cusp unfolding") {
  // f_t = x^3 - y^2 + t x: 3x^2 + t = 0, y = 0.
  const FamilyGerm f = family("x^3 - y^2 + t*x");
  const CriticalRecord r = critical_points(f, GaussianRational(Rational(-3, 4)));
  REQUIRE(r.points.size() == 2);
  CHECK(std::abs(r.points[0].x.center.to_std() - std::complex<double>(-0.5, 0)) < 1e-20);
  CHECK(std::abs(r.points[1].x.center.to_std() - std::complex<double>(0.5, 0)) < 1e-20);
  for (const auto& p : r.points) {
    CHECK(p.local_mu == 1);
    CHECK(std::abs(p.y.center.to_std()) < 1e-20);
  }
  // x^3 + t x at x = 1/2 is 1/8 - 3/8.
  CHECK(std::abs(r.points[1].critical_value.center.to_std() - std::complex<double>(-0.25, 0)) < 1e-20);
}

TEST_CASE("critical points of a Morse family and a degenerate fibre") {
  const FamilyGerm morse = family("x^2 + y^2 + t");
  const CriticalRecord r = critical_points(morse, GaussianRational(Rational(1, 8)));
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].local_mu == 1);
  CHECK(std::abs(r.points[0].critical_value.center.to_std() - std::complex<double>(0.125, 0)) < 1e-20);

  // x^5 - y^2 + t x^3 keeps an A3 point at the origin.
  const FamilyGerm a = family("x^5 - y^2 + t*x^3");
  const CriticalRecord s = critical_points(a, GaussianRational(Rational(-1, 8)));
  int origin_mu = 0;
  int others = 0;
  for (const auto& p : s.points) {
    if (std::abs(p.x.center.to_std()) < 1e-20) {
      origin_mu = p.local_mu;
    } else {
      ++others;
      CHECK(p.local_mu == 1);
    }
  }
  CHECK(origin_mu == 2);
  CHECK(others == 2);

  const CriticalRecord constant = critical_points(family("x^3 + y^3"), GaussianRational(Rational(1, 8)));
  REQUIRE(constant.points.size() == 1);
  CHECK(constant.points[0].local_mu == 4);

  CHECK_THROWS_AS(critical_points(family("(x - y)^2 + t*x"), GaussianRational(0)), Error);
}

TEST_CASE("conservation of the Milnor number") {
  for (const char* text : {"x^3 - y^2 + t*x", "x^3 + y^3", "x^2 + y^2 + t", "x^5 - y^2 + t*x^3",
                           "x^4 + y^2 + t*x^2"}) {
    CAPTURE(text);
    const FamilyGerm f = family(text);
    const ConservationReport r = conservation_check(f);
    CHECK(r.conserved);
    REQUIRE(r.totals.size() == 3);
    for (size_t k = 0; k < r.totals.size(); ++k) {
      CHECK(r.totals[k].total_mu == r.mu0);
      CHECK(total_inside(r.records[k]) == r.mu0);
    }
  }
}

TEST_CASE("coalescing verdicts") {
  const FamilyGerm cusp = family("x^3 - y^2 + t*x");
  const CoalescingVerdict a = coalescing_verdict(cusp, conservation_check(cusp));
  CHECK(a.status == CoalescingStatus::not_applicable);

  const FamilyGerm d4 = family("x^3 + y^3");
  const ConservationReport r = conservation_check(d4);
  CHECK(r.mu0 == 4);
  const CoalescingVerdict b = coalescing_verdict(d4, r);
  CHECK(b.status == CoalescingStatus::consistent);
  CHECK(b.zero_fiber_points == std::vector<int>{1, 1, 1});

  const FamilyGerm a3 = family("x^4 + y^2 + t*x^2");
  CHECK(coalescing_verdict(a3, conservation_check(a3)).status == CoalescingStatus::not_applicable);

  CHECK(to_string(CoalescingStatus::consistent) == "CONSISTENT");
  CHECK(to_string(CoalescingStatus::violation) == "VIOLATION");
  CHECK(to_string(CoalescingStatus::not_applicable) == "NOT APPLICABLE");
}

TEST_CASE("an equisingular translate stays on the zero fibre") {
  // f_t = (x - t)^3 + y^3: the D4 point moves but keeps f_t = 0.
  const FamilyGerm moving = family("(x - t)^3 + y^3");
  const ConservationReport r = conservation_check(moving);
  CHECK(r.conserved);
  const CoalescingVerdict v = coalescing_verdict(moving, r);
  CHECK(v.status == CoalescingStatus::consistent);
  for (int mu : v.zero_fiber_mu) CHECK(mu == 4);
  for (int n : v.zero_fiber_points) CHECK(n == 1);
}

TEST_CASE("property: halving the samples keeps totals and verdict") {
  for (const char* text : {"x^3 - y^2 + t*x", "x^3 + y^3", "x^4 + y^2 + t*x^2"}) {
    CAPTURE(text);
    const FamilyGerm a = family(text);
    const FamilyGerm b = family(text, halved(default_samples()));
    const ConservationReport ra = conservation_check(a);
    const ConservationReport rb = conservation_check(b);
    CHECK(ra.mu0 == rb.mu0);
    CHECK(ra.conserved == rb.conserved);
    for (size_t k = 0; k < ra.totals.size(); ++k) CHECK(ra.totals[k].total_mu == rb.totals[k].total_mu);
    CHECK(coalescing_verdict(a, ra).status == coalescing_verdict(b, rb).status);
  }
}
