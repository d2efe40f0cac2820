#include <doctest.h>

#include <algorithm>

#include "germ/error.hpp"
#include "germ/polar.hpp"
#include "oracles.hpp"

using namespace germ;
using oracle::parse;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kUV{"u", "v"};

LinearForm line_x() { return parse_linear_form("x", kXY); }

bool same_up_to_unit(const Polynomial& a, const Polynomial& b) { return a.monic() == b.monic(); }

}  // namespace

TEST_CASE("linear forms") {
  const LinearForm l = parse_linear_form("2*x - i*y", kXY);
  CHECK(l.a == GaussianRational(2));
  CHECK(l.b == -GaussianRational::i());
  CHECK_THROWS_AS(parse_linear_form("x^2", kXY), Error);
  CHECK_THROWS_AS(parse_linear_form("0", kXY), Error);
  CHECK(candidate_line(0, 0).a == GaussianRational(1));
  CHECK(candidate_line(0, 0).b.is_zero());
  for (int n = 0; n < 10; ++n) {
    const LinearForm c = candidate_line(7, n);
    CHECK(!(c.a.is_zero() && c.b.is_zero()));
  }
}

TEST_CASE("generic line examples") {
  const GenericLine quintic = pick_generic_line(parse("x^5 - y^2"), 0);
  CHECK(quintic.line.a == GaussianRational(1));
  CHECK(quintic.line.b.is_zero());

  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const GenericLine g = pick_generic_line(parse("x^2 - y^2"), seed);
    CHECK(g.line.a != g.line.b);
    CHECK(g.line.a != -g.line.b);
  }
  CHECK_NOTHROW(pick_generic_line(parse("y^2 - x"), 0));
  CHECK_THROWS_AS(pick_generic_line(parse("1 + x"), 0), Error);
}

TEST_CASE("polar curve examples") {
  const PolarCurve a = polar_curve(parse("x^5 - y^2"), line_x());
  CHECK(same_up_to_unit(a.defining, parse("y")));
  CHECK(a.removed_factors.empty());

  const PolarCurve b = polar_curve(parse("x*y"), line_x());
  CHECK(b.empty());
  REQUIRE(b.removed_factors.size() == 1);
  CHECK(same_up_to_unit(b.removed_factors[0], parse("x")));

  const PolarCurve c = polar_curve(parse("x^2 - y^2"), line_x());
  CHECK(same_up_to_unit(c.defining, parse("y")));

  CHECK_THROWS_AS(polar_curve(parse("(x - y)^2*x"), line_x()), Error);
}

TEST_CASE("cerf diagram examples") {
  const CerfDiagram a = cerf_diagram(parse("x^5 - y^2"), line_x());
  CHECK(same_up_to_unit(a.defining, parse_polynomial("v - u^5", kUV)));
  REQUIRE(a.leading_exponents.size() == 1);
  CHECK(a.leading_exponents[0] == 5);
  CHECK(a.tangent_to_first_axis);
  CHECK(a.contact_count == 5);

  const CerfDiagram b = cerf_diagram(parse("x^2 - y^2"), line_x());
  CHECK(same_up_to_unit(b.defining, parse_polynomial("v - u^2", kUV)));
  CHECK(b.leading_exponents == std::vector<Rational>{2});
  CHECK(b.contact_count == 2);

  const CerfDiagram c = cerf_diagram(parse("y^2 - x"), line_x());
  CHECK(same_up_to_unit(c.defining, parse_polynomial("v + u", kUV)));
  CHECK(c.leading_exponents == std::vector<Rational>{1});
  CHECK(!c.tangent_to_first_axis);
  CHECK(c.contact_count == 1);

  const CerfDiagram d = cerf_diagram(parse("x*y"), line_x());
  CHECK(d.empty());
  CHECK(d.contact_count == 0);
}

TEST_CASE("tangency verdicts") {
  const TangencyVerdict a = tangency_report(cerf_diagram(parse("x^5 - y^2"), line_x()), 2);
  CHECK(a.tangent);
  CHECK(a.consistency == Consistency::consistent);

  const TangencyVerdict b = tangency_report(cerf_diagram(parse("y^2 - x"), line_x()), 1);
  CHECK(!b.tangent);
  CHECK(b.consistency == Consistency::consistent);

  const TangencyVerdict c = tangency_report(cerf_diagram(parse("x*y"), line_x()), 2);
  CHECK(c.tangent);
  CHECK(c.consistency == Consistency::consistent);
  CHECK(c.note.find("product with a disc") != std::string::npos);

  // A non-tangent diagram for a germ in m^2 is flagged.
  const TangencyVerdict d = tangency_report(cerf_diagram(parse("y^2 - x"), line_x()), 2);
  CHECK(d.consistency == Consistency::inconsistent);
  CHECK(d.note.rfind("INCONSISTENT_WITH_PROP", 0) == 0);
}

TEST_CASE("property: tangency, squarefree Delta and contact count on the corpus") {
  for (const std::string& text : oracle::load_corpus()) {
    CAPTURE(text);
    const Polynomial f = parse(text);
    const GenericLine g = pick_generic_line(f, 0);
    CHECK(gcd(g.polar.defining, f).is_constant());
    const CerfDiagram d = cerf_diagram(f, g.polar, g.line);
    REQUIRE(!d.empty());
    CHECK(gcd(d.defining, d.defining.derivative(0)).is_constant());
    CHECK(gcd(d.defining, d.defining.derivative(1)).is_constant());
    for (const Rational& a : d.leading_exponents) CHECK(a > 1);
    CHECK(d.tangent_to_first_axis);
    int sum = 0;
    for (int p : d.v_orders) sum += p;
    CHECK(sum == d.contact_count);
    // Independent: i(Delta, v) through the resultant oracle.
    const auto by_resultant = oracle::resultant_intersection(d.defining.with_variables(kUV),
                                                             parse_polynomial("v", kUV));
    if (by_resultant) CHECK(*by_resultant == d.contact_count);
  }
}

TEST_CASE("property: two generic lines give the same exponents for x^5 - y^2") {
  const Polynomial f = parse("x^5 - y^2");
  const GenericLine a = pick_generic_line(f, 0);
  const GenericLine b = pick_generic_line(f, 3);
  CHECK(!(a.line.a == b.line.a && a.line.b == b.line.b));
  const CerfDiagram da = cerf_diagram(f, a.polar, a.line);
  const CerfDiagram db = cerf_diagram(f, b.polar, b.line);
  CHECK(da.leading_exponents == std::vector<Rational>{5});
  CHECK(db.leading_exponents == da.leading_exponents);
  CHECK(da.contact_count == db.contact_count);
}

TEST_CASE("diagram from a given Delta") {
  const CerfDiagram d = diagram_from_delta(parse_polynomial("(v - u^2)*(v - u^3)", kUV));
  CHECK(d.contact_count == 5);
  std::vector<int> orders = d.v_orders;
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{2, 3});
}
