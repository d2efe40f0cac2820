#include <doctest.h>

#include <string>
#include <vector>

#include "germ/error.hpp"
#include "germ/report.hpp"
#include "germ/svg.hpp"

using namespace germ;

namespace {

MonodromyReport run(const std::string& text, std::optional<std::string> line = std::nullopt) {
  AnalyzeOptions o;
  o.germ = text;
  o.line = std::move(line);
  return analyze(o);
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("analyze x^5 - y^2") {
  const MonodromyReport r = run("x^5 - y^2");
  CHECK(r.f_order == 2);
  CHECK(r.in_m_squared);
  CHECK(r.mu == 4);
  CHECK(r.delta == 2);
  CHECK(r.branch_count == 1);
  CHECK(r.cerf.leading_exponents == std::vector<Rational>{5});
  REQUIRE(r.carousel);
  CHECK(r.carousel->cycle_type == std::vector<int>{5});
  REQUIRE(r.fixed_points);
  CHECK(r.fixed_points->fixed_point_free);
  CHECK(r.fixed_points->predicted_lefschetz == 0);
  CHECK(!r.inconsistent());

  const Json j = to_json(r);
  CHECK(j["verdicts"]["fixed_points"]["predicted_lefschetz"] == 0);
  CHECK(j["carousel"]["cycle_type"] == Json::array({5}));
  CHECK(j.contains("timing_ms"));
  CHECK(!to_json(r, false).contains("timing_ms"));
}

TEST_CASE("analyze y^2 - x") {
  const MonodromyReport r = run("y^2 - x");
  CHECK(r.f_order == 1);
  CHECK(!r.in_m_squared);
  CHECK(!r.tangency.tangent);
  REQUIRE(r.carousel);
  CHECK(r.carousel->cycle_type == std::vector<int>{1});
  CHECK(r.carousel->fixed_points.size() == 1);
  CHECK(!r.fixed_points->predicted_lefschetz);
  CHECK(!r.inconsistent());
  CHECK(to_json(r)["verdicts"]["fixed_points"]["predicted_lefschetz"] == "not predicted");
}

TEST_CASE("analyze x*y with a forced line") {
  const MonodromyReport r = run("x*y", "x");
  CHECK(r.line_forced);
  CHECK(r.polar.empty());
  CHECK(!r.carousel);
  CHECK(r.tangency.note.find("product with a disc") != std::string::npos);
  CHECK(!r.inconsistent());
  const Json j = to_json(r, false);
  CHECK(j["polar"]["empty"] == true);
  CHECK(!j.contains("carousel"));
}

TEST_CASE("stage labels on errors") {
  try {
    run("x^2 + z");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("[parse]") != std::string::npos);
  }
  CHECK_THROWS_AS(run("1 + x"), Error);
}

TEST_CASE("JSON key order") {
  const Json j = to_json(run("x^3 - y^2"), false);
  CHECK(keys(j) == std::vector<std::string>{"schema", "germ", "variables", "f_order", "in_m_squared", "mu", "delta",
                                            "branch_count", "stratification", "line", "polar", "cerf", "carousel",
                                            "verdicts"});
  CHECK(keys(j["verdicts"]) == std::vector<std::string>{"tangency", "fixed_points", "cycle_type_oracle"});
}

TEST_CASE("quotient and family reports") {
  const Json q = to_json(quotient(4, {{0, 2}, {1, 3}}, 1));
  CHECK(q["rank"] == 2);
  CHECK(q["trace"] == 0);
  CHECK(q["lefschetz"] == 1);
  CHECK(to_json(quotient(4, {{0, 2}, {1, 3}}, 0))["lefschetz"] == -1);
  CHECK(to_json(quotient(2, {{0, 1}}, 1))["trace"] == -1);

  const FamilyReport f = family_analysis("x^3 + y^3", {"x", "y", "t"}, {}, Rational(1, 2));
  const Json fj = to_json(f);
  CHECK(fj["mu0"] == 4);
  CHECK(fj["conserved"] == true);
  CHECK(fj["coalescing"]["verdict"] == "CONSISTENT");
}

TEST_CASE("format_real") {
  CHECK(format_real(Real(0.5, 128)) != "0");
  CHECK(format_real(Real(1e-60, 128)) == "0");
}

TEST_CASE("SVG output is deterministic") {
  const MonodromyReport a = run("x^5 - y^2");
  const MonodromyReport b = run("x^5 - y^2");
  const std::string svg = render_svg(a);
  CHECK(svg == render_svg(b));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(to_json(a, false).dump() == to_json(b, false).dump());

  const std::string empty = render_svg(run("x*y", "x"));
  CHECK(empty.find("no fibre points to follow") != std::string::npos);
  CHECK(render_svg(run("y^2 - x")).find("r=\"7\"") != std::string::npos);
}
