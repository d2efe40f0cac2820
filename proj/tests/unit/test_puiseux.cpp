#include <doctest.h>

#include <cmath>
#include <numeric>

#include "germ/error.hpp"
#include "germ/puiseux.hpp"
#include "oracles.hpp"

using namespace germ;
using oracle::parse;

namespace {

const std::vector<std::string> kXY{"x", "y"};

std::vector<std::string> corpus() { return oracle::load_corpus(); }

}  // namespace

TEST_CASE("newton polygon") {
  auto one = newton_polygon(parse("x^5 - y^2"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].start == LatticePoint{0, 2});
  CHECK(one[0].end == LatticePoint{5, 0});
  CHECK(one[0].lattice_length == 1);

  auto two = newton_polygon(parse("x^2 - y^2"));
  REQUIRE(two.size() == 1);
  CHECK(two[0].start == LatticePoint{0, 2});
  CHECK(two[0].end == LatticePoint{2, 0});
  CHECK(two[0].lattice_length == 2);

  // y (y - x)(y + x): the y factor leaves the hull ending at (2, 1).
  auto three = newton_polygon(parse("y*(y - x)*(y + x)"));
  REQUIRE(three.size() == 1);
  CHECK(three[0].start == LatticePoint{0, 3});
  CHECK(three[0].end == LatticePoint{2, 1});

  auto stair = newton_polygon(parse("y^3 - x^2*y + x^7"));
  REQUIRE(stair.size() == 2);
  CHECK(stair[0].slope < stair[1].slope);

  CHECK_THROWS_AS(newton_polygon(parse("1 + x")), Error);
}

TEST_CASE("branches of x^5 - y^2") {
  const auto d = puiseux_branches(parse("x^5 - y^2"), 8);
  REQUIRE(d.branches.size() == 1);
  const PuiseuxBranch& b = d.branches[0];
  CHECK(b.ramification == 2);
  REQUIRE(!b.exponents.empty());
  CHECK(b.exponents[0] == 5);
  CHECK(*b.leading_exponent() == Rational(5, 2));
  CHECK(std::abs(std::abs(b.coefficients[0].center.to_std()) - 1.0) < 1e-20);
}

TEST_CASE("branches of x^2 - y^2 and y^2 - x^4") {
  const auto lines = puiseux_branches(parse("x^2 - y^2"), 4);
  REQUIRE(lines.branches.size() == 2);
  for (const auto& b : lines.branches) {
    CHECK(b.ramification == 1);
    CHECK(b.exponents[0] == 1);
  }
  const double c0 = lines.branches[0].coefficients[0].center.to_std().real();
  const double c1 = lines.branches[1].coefficients[0].center.to_std().real();
  CHECK(std::abs(c0 + 1) < 1e-20);
  CHECK(std::abs(c1 - 1) < 1e-20);

  const auto parabolas = puiseux_branches(parse("y^2 - x^4"), 8);
  REQUIRE(parabolas.branches.size() == 2);
  for (const auto& b : parabolas.branches) {
    CHECK(b.ramification == 1);
    CHECK(b.exponents[0] == 2);
  }
}

TEST_CASE("intersection multiplicities") {
  CHECK(intersection_multiplicity(parse("x"), parse("y")) == 1);
  CHECK(intersection_multiplicity(parse("y^2 - x^3"), parse("y")) == 3);
  CHECK(intersection_multiplicity(parse("y^2 - x^3"), parse("x")) == 2);
  CHECK_THROWS_AS(intersection_multiplicity(parse("x*y"), parse("x^2")), Error);
}

TEST_CASE("milnor and delta examples") {
  CHECK(milnor_number(parse("x^2 + y^2")) == 1);
  CHECK(milnor_number(parse("x^3 - y^2")) == 2);
  CHECK(milnor_number(parse("x^5 - y^2")) == 4);
  CHECK(delta_invariant(parse("x^5 - y^2")) == 2);
  CHECK(delta_invariant(parse("x^2 - y^2")) == 1);
  CHECK(delta_invariant(parse("y - x^2")) == 0);
  CHECK_THROWS_AS(milnor_number(parse("x^2*y")), Error);
}

TEST_CASE("milnor number against the resultant and Jacobian oracles") {
  for (const std::string& text : corpus()) {
    CAPTURE(text);
    const Polynomial f = parse(text);
    const int mu = milnor_number(f);
    const auto by_resultant = oracle::resultant_intersection(f.derivative(0), f.derivative(1));
    REQUIRE(by_resultant.has_value());
    CHECK(mu == *by_resultant);
    if (const auto by_basis = oracle::jacobian_monomial_dimension(f)) CHECK(mu == *by_basis);
  }
}

TEST_CASE("property: Milnor relation on the corpus") {
  for (const std::string& text : corpus()) {
    CAPTURE(text);
    const SingularityInvariants inv = singularity_invariants(parse(text));
    CHECK(inv.mu == 2 * inv.delta - inv.branches + 1);
  }
}

TEST_CASE("property: branch count of x^n - y^m is gcd(n, m)") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const Polynomial f = parse("x^" + std::to_string(n) + " - y^" + std::to_string(m));
      CHECK(branch_count(f) == std::gcd(n, m));
    }
  }
}

TEST_CASE("property: re-substitution vanishes to the truncation order") {
  for (const std::string& text : corpus()) {
    CAPTURE(text);
    const Polynomial f = parse(text);
    for (const auto& b : puiseux_branches(f, 12).branches) {
      if (b.axis != AxisKind::none) continue;
      const auto order = order_along(f, b);
      if (order) CHECK(*order > b.truncation_order);
    }
  }
}

TEST_CASE("property: ramification indices add up to ord_y f(0, y)") {
  for (const std::string& text : corpus()) {
    CAPTURE(text);
    const Polynomial f = parse(text);
    int total = 0;
    for (const auto& b : puiseux_branches(f, 12).branches) {
      if (b.axis != AxisKind::vertical) total += b.ramification;
    }
    // x-factors removed: the lowest slice in x, then its order in y.
    const int k = f.low_degree(0);
    int height = -1;
    for (const auto& [e, c] : f.terms()) {
      if (static_cast<int>(e[0]) == k && (height < 0 || static_cast<int>(e[1]) < height)) height = static_cast<int>(e[1]);
    }
    CHECK(total == height);
  }
}

TEST_CASE("property: intersection symmetry and multiplicativity") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 20) {
    Polynomial f = oracle::random_polynomial(rng, kXY, 5, 4);
    Polynomial g = oracle::random_polynomial(rng, kXY, 5, 4);
    f -= Polynomial::constant(kXY, f.constant_term());
    g -= Polynomial::constant(kXY, g.constant_term());
    if (f.is_zero() || g.is_zero()) continue;
    try {
      const int fg = intersection_multiplicity(f, g);
      CHECK(fg == intersection_multiplicity(g, f));
      const auto by_resultant = oracle::resultant_intersection(f, g);
      if (by_resultant) CHECK(fg == *by_resultant);
      ++checked;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::infinite_multiplicity);
    }
  }
  const Polynomial f = parse("y^2 - x^3");
  const Polynomial g = parse("y - x");
  const Polynomial h = parse("y + x^2");
  CHECK(intersection_multiplicity(f, g * h) == intersection_multiplicity(f, g) + intersection_multiplicity(f, h));
}
