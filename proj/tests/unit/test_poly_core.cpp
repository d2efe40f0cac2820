#include <doctest.h>

#include <cmath>
#include <complex>

#include "germ/error.hpp"
#include "germ/roots.hpp"
#include "oracles.hpp"

using namespace germ;
using oracle::parse;

namespace {

const std::vector<std::string> kXY{"x", "y"};

bool near(const ComplexBall& b, std::complex<double> z, double tol = 1e-12) {
  return std::abs(b.center.to_std() - z) < tol;
}

}  // namespace

TEST_CASE("parse reads terms and expands") {
  const Polynomial p = parse("x^5 - y^2");
  CHECK(p.term_count() == 2);
  CHECK(p.coefficient_of({5, 0}) == GaussianRational(1));
  CHECK(p.coefficient_of({0, 2}) == GaussianRational(-1));
  CHECK(parse("0").is_zero());
  CHECK(parse("(x+y)^2 - x*y") == parse("x^2 + x*y + y^2"));
  CHECK(parse("(x+y)^2 - x*y").to_string() == "x^2 + x*y + y^2");
  CHECK(parse("i*x + 1/2*y").coefficient_of({1, 0}) == GaussianRational::i());
}

TEST_CASE("parse errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  };
  CHECK(kind_of("x^") == ErrorKind::syntax);
  CHECK(kind_of("x + z") == ErrorKind::unknown_symbol);
  CHECK(kind_of("x^(1/2)") == ErrorKind::non_integer_exponent);
  CHECK(kind_of("(x + y") == ErrorKind::syntax);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(parse("x^5 - y^2"), "y") == parse("-2*y"));
  CHECK(partial_derivative(parse("7"), "x").is_zero());
  CHECK(partial_derivative(parse("x*y^3 + y"), "y") == parse("3*x*y^2 + 1"));
  CHECK_THROWS_AS(partial_derivative(parse("x"), "z"), Error);
}

TEST_CASE("resultants") {
  const Polynomial r1 = resultant(parse("y^2 - x"), parse("y"), "y");
  CHECK((r1 == parse("x") || r1 == parse("-x")));

  const std::vector<std::string> ab{"a", "b", "y"};
  const Polynomial r2 = resultant(parse_polynomial("y - a", ab), parse_polynomial("y - b", ab), "y");
  // Rows (1, -a), (1, -b): determinant a - b, i.e. b - a up to the sign convention.
  CHECK(r2 == parse_polynomial("a - b", ab));

  CHECK(resultant(parse("y^2 + 1"), parse("y^2 + 1"), "y").is_zero());
  CHECK_THROWS_AS(resultant(parse("x"), parse("y"), "y"), Error);
}

TEST_CASE("squarefree part") {
  const std::vector<std::string> uv{"u", "v"};
  const Polynomial base = parse_polynomial("v - u^5", uv);
  CHECK(squarefree_part(pow(base, 2)) == base.monic());
  CHECK(squarefree_part(base) == base.monic());
  CHECK(squarefree_part(parse_polynomial("u^2*v", uv)) == parse_polynomial("u*v", uv));
  CHECK_THROWS_AS(squarefree_part(Polynomial(uv)), Error);
}

TEST_CASE("linear change of coordinates") {
  const std::vector<std::string> uw{"u", "w"};
  CHECK(linear_change(parse("x"), parse("x"), parse("y")) == parse_polynomial("u", uw));
  const Polynomial p = linear_change(parse("x^2 - y^2"), parse("x + y"), parse("x - y"));
  CHECK(p == parse_polynomial("u*w", uw));
  CHECK(linear_change(parse("y"), parse("y"), parse("x")) == parse_polynomial("u", uw));
  CHECK_THROWS_AS(linear_change(parse("x"), parse("x + y"), parse("2*x + 2*y")), Error);
}

TEST_CASE("univariate roots") {
  const std::vector<std::string> u{"u"};
  const auto fifth = univariate_roots(parse_polynomial("u^5 - 1", u));
  REQUIRE(fifth.size() == 5);
  for (const auto& b : fifth) CHECK(std::abs(std::pow(b.center.to_std(), 5) - 1.0) < 1e-12);

  const auto pm_i = univariate_roots(parse_polynomial("u^2 + 1", u));
  REQUIRE(pm_i.size() == 2);
  CHECK(near(pm_i[0], {0, -1}));
  CHECK(near(pm_i[1], {0, 1}));

  const auto cubic = univariate_roots(parse_polynomial("u^3 - 2*u + 1", u));
  REQUIRE(cubic.size() == 3);
  const double s5 = std::sqrt(5.0);
  CHECK(near(cubic[0], {(-1 - s5) / 2, 0}));
  CHECK(near(cubic[1], {(-1 + s5) / 2, 0}));
  CHECK(near(cubic[2], {1, 0}));

  const auto repeated = univariate_roots(parse_polynomial("(u - 1)^3*(u + 2)", u));
  REQUIRE(repeated.size() == 4);
  CHECK(near(repeated[0], {-2, 0}));
  for (int k = 1; k < 4; ++k) CHECK(near(repeated[k], {1, 0}));
}

TEST_CASE("order at origin") {
  CHECK(order_at_origin(parse("x^5 - y^2")) == 2);
  CHECK(order_at_origin(parse("x + y^3")) == 1);
  CHECK(order_at_origin(parse("3")) == 0);
  CHECK_THROWS_AS(order_at_origin(parse("0")), Error);
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = oracle::random_polynomial(rng, kXY, 6, 8);
    const Polynomial b = oracle::random_polynomial(rng, kXY, 6, 8);
    const Polynomial c = oracle::random_polynomial(rng, kXY, 6, 8);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("property: resultant antisymmetry") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, kXY, 4, 5);
    const Polynomial q = oracle::random_polynomial(rng, kXY, 4, 5);
    const int dp = p.degree(1);
    const int dq = q.degree(1);
    if (dp <= 0 || dq <= 0) continue;
    const Polynomial pq = resultant(p, q, "y");
    const Polynomial qp = resultant(q, p, "y");
    CHECK(((dp * dq) % 2 == 0 ? pq == qp : pq == -qp));
  }
}

TEST_CASE("property: squarefree part of powers") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, kXY, 3, 4);
    if (p.is_constant()) continue;
    const Polynomial s = squarefree_part(p);
    for (unsigned k : {1u, 2u, 3u}) CHECK(squarefree_part(pow(p, k)) == s);
  }
}

TEST_CASE("property: root sum matches the second coefficient") {
  std::mt19937_64 rng(14);
  const std::vector<std::string> u{"u"};
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, u, 8, 6);
    const int d = p.degree(0);
    if (d < 1) continue;
    const auto coeffs = univariate_coefficients(p);
    const auto roots = univariate_roots(p);
    REQUIRE(static_cast<int>(roots.size()) == d);
    Complex sum(kDefaultPrecision);
    Real radius(kDefaultPrecision);
    for (const auto& r : roots) {
      sum += r.center;
      radius += r.radius;
    }
    const Complex expected = -(coeffs[d - 1].to_complex(kDefaultPrecision) / coeffs[d].to_complex(kDefaultPrecision));
    CHECK(abs(sum - expected) <= Real(2L, kDefaultPrecision) * radius + Real(1e-30, kDefaultPrecision));
  }
}

TEST_CASE("property: parse of print is the identity") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, kXY, 6, 8);
    CHECK(parse(p.to_string()) == p);
  }
  const Polynomial g = parse("(1/3 + 2*i)*x^2*y - i*y^4 + 7/2");
  CHECK(parse(g.to_string()) == g);
}
