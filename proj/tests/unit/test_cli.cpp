#include <doctest.h>

#include <cstdio>

#include "cli_runner.hpp"
#include "germ/report.hpp"

using germ::Json;

TEST_CASE("quotient subcommand") {
  const cli::Result a = cli::run("quotient --n 4 --pairs \"(0,2),(1,3)\" --shift 1");
  REQUIRE(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["rank"] == 2);
  CHECK(j["trace"] == 0);
  CHECK(j["lefschetz"] == 1);

  const Json b = Json::parse(cli::run("quotient --n 4 --pairs \"(0,2),(1,3)\" --shift 0").out);
  CHECK(b["trace"] == 2);
  CHECK(b["lefschetz"] == -1);

  const Json c = Json::parse(cli::run("quotient --n 2 --pairs \"(0,1)\" --shift 1").out);
  CHECK(c["trace"] == -1);
  CHECK(c["lefschetz"] == 2);

  CHECK(cli::run("quotient --n 4 --pairs \"(0,1),(2,3)\" --shift 1").code == 1);
  CHECK(cli::run("quotient --n 3 --pairs \"(0,1)\"").code == 1);
}

TEST_CASE("analyze subcommand") {
  const cli::Result a = cli::run("analyze \"x^5 - y^2\" --no-timing --json-compact");
  REQUIRE(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["mu"] == 4);
  CHECK(j["delta"] == 2);
  CHECK(j["carousel"]["cycle_type"] == Json::array({5}));
  CHECK(j["verdicts"]["fixed_points"]["fixed_point_free"] == true);
  CHECK(!j.contains("timing_ms"));

  const cli::Result b = cli::run("analyze --germ \"x*y\" --line x --no-timing");
  REQUIRE(b.code == 0);
  CHECK(Json::parse(b.out)["polar"]["empty"] == true);

  CHECK(cli::run("analyze --germ \"x + z\"").code == 1);
  CHECK(cli::run("analyze --germ \"1 + x\"").code == 1);
  CHECK(cli::run("analyze --germ \"x^2 - y^2\" --steps 8").code != 0);
}

TEST_CASE("identical flags give identical bytes") {
  const std::string flags = "analyze \"x^3 + y^3\" --no-timing --seed 2";
  const cli::Result a = cli::run(flags + " --svg cli_a.svg");
  const cli::Result b = cli::run(flags + " --svg cli_b.svg");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const std::string svg = cli::slurp("cli_a.svg");
  CHECK(!svg.empty());
  CHECK(svg == cli::slurp("cli_b.svg"));
  std::remove("cli_a.svg");
  std::remove("cli_b.svg");
}

TEST_CASE("family subcommand") {
  const cli::Result a = cli::run("family \"x^3 - y^2 + t*x\" --json-compact");
  REQUIRE(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["mu0"] == 2);
  CHECK(j["conserved"] == true);
  CHECK(j["coalescing"]["verdict"] == "NOT APPLICABLE");
  for (const auto& s : j["samples"]) CHECK(s["total_mu"] == 2);

  const Json b = Json::parse(cli::run("family --family \"x^3 + y^3\"").out);
  CHECK(b["coalescing"]["verdict"] == "CONSISTENT");

  const Json c = Json::parse(cli::run("family \"x^2 + y^2 + t\" --samples \"1/4, -1/4*i\"").out);
  CHECK(c["samples"].size() == 2);
  CHECK(c["mu0"] == 1);
}
