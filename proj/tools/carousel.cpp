// Command-line front end: analyze | quotient | family. JSON on stdout,
// progress and errors on stderr. Exit 0 ok, 1 error, 2 inconsistent verdict.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "germ/error.hpp"
#include "germ/report.hpp"
#include "germ/svg.hpp"

namespace {

using germ::Json;

int emit(const Json& j, bool compact) {
  std::cout << (compact ? j.dump() : j.dump(2)) << "\n";
  return 0;
}

germ::Precision max_precision_from_env() {
  const char* text = std::getenv("CAROUSEL_MAX_PRECISION");
  if (!text || !*text) return germ::kMaxPrecision;
  char* end = nullptr;
  const long bits = std::strtol(text, &end, 10);
  if (*end != '\0' || bits < 53) {
    throw germ::Error(germ::ErrorKind::invalid_argument, "CAROUSEL_MAX_PRECISION must be an integer >= 53");
  }
  return bits;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<int> values;
  static const std::regex number(R"(-?\d+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    values.push_back(std::stoi(it->str()));
  }
  if (values.size() % 2 != 0) throw germ::Error(germ::ErrorKind::invalid_pairing, "odd number of labels in pairs");
  std::vector<std::pair<int, int>> pairs;
  for (size_t k = 0; k < values.size(); k += 2) pairs.emplace_back(values[k], values[k + 1]);
  return pairs;
}

germ::GaussianRational parse_constant(const std::string& text) {
  const germ::Polynomial p = germ::parse_polynomial(text, {});
  return p.constant_term();
}

struct AnalyzeArgs {
  std::string germ;
  std::string germ_file;
  std::string vars = "x,y";
  std::uint64_t seed = 0;
  long precision = 128;
  int steps = 512;
  int truncation = 0;
  std::string radius_scale = "1";
  std::string line;
  std::string svg;
  bool compact = false;
  bool no_timing = false;
};

germ::AnalyzeOptions options_for(const AnalyzeArgs& a, const std::string& germ_text) {
  germ::AnalyzeOptions o;
  o.germ = germ_text;
  o.variables = germ::parse_variable_list(a.vars);
  o.seed = a.seed;
  o.precision = a.precision;
  o.steps = a.steps;
  o.truncation = a.truncation;
  o.radius_scale = germ::parse_rational(a.radius_scale);
  if (!a.line.empty()) o.line = a.line;
  o.max_precision = max_precision_from_env();
  return o;
}

int run_analyze(const AnalyzeArgs& a) {
  if (a.precision < 53) throw germ::Error(germ::ErrorKind::invalid_argument, "--precision must be >= 53");
  if (a.germ_file.empty()) {
    if (a.germ.empty()) throw germ::Error(germ::ErrorKind::invalid_argument, "--germ or --germ-file is required");
    std::cerr << "analyzing " << a.germ << "\n";
    const germ::MonodromyReport report = germ::analyze(options_for(a, a.germ));
    if (!a.svg.empty()) germ::emit_svg(report, a.svg);
    emit(germ::to_json(report, !a.no_timing), a.compact);
    return report.inconsistent() ? 2 : 0;
  }
  std::ifstream in(a.germ_file);
  if (!in) throw germ::Error(germ::ErrorKind::invalid_argument, "cannot read " + a.germ_file);
  Json all = Json::array();
  int code = 0;
  std::string text;
  while (std::getline(in, text)) {
    if (text.empty() || text[0] == '#') continue;
    std::cerr << "analyzing " << text << "\n";
    try {
      const germ::MonodromyReport report = germ::analyze(options_for(a, text));
      all.push_back(germ::to_json(report, !a.no_timing));
      if (report.inconsistent()) code = 2;
    } catch (const germ::Error& e) {
      Json failed;
      failed["schema"] = germ::kSchemaVersion;
      failed["germ"] = text;
      failed["error"] = e.what();
      all.push_back(failed);
      if (code == 0) code = 1;
    }
  }
  emit(all, a.compact);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy carousel of plane curve germs"};
  app.require_subcommand(1);

  AnalyzeArgs a;
  CLI::App* analyze = app.add_subcommand("analyze", "invariants, polar curve, Cerf diagram and carousel of a germ");
  analyze->add_option("germ_text", a.germ, "germ, e.g. \"x^5 - y^2\"");
  analyze->add_option("--germ", a.germ, "germ polynomial");
  analyze->add_option("--germ-file", a.germ_file, "file with one germ per line");
  analyze->add_option("--vars", a.vars, "variable list")->capture_default_str();
  analyze->add_option("--seed", a.seed, "seed for the generic line draw")->capture_default_str();
  analyze->add_option("--precision", a.precision, "working precision in bits")->capture_default_str();
  analyze->add_option("--steps", a.steps, "carousel steps per loop")->capture_default_str()->check(CLI::Range(64, 1 << 20));
  analyze->add_option("--truncation", a.truncation, "Puiseux truncation order (0: automatic)");
  analyze->add_option("--radius-scale", a.radius_scale, "factor applied to rho and eta")->capture_default_str();
  analyze->add_option("--line", a.line, "force the linear form, e.g. \"x\"");
  analyze->add_option("--svg", a.svg, "write an SVG plot");
  analyze->add_flag("--json-compact", a.compact, "single-line JSON");
  analyze->add_flag("--no-timing", a.no_timing, "omit the timing block");

  int n = 0;
  std::string pairs;
  int shift = 0;
  bool quotient_compact = false;
  CLI::App* quotient = app.add_subcommand("quotient", "homology of a disk with paired boundary points");
  quotient->add_option("--n", n, "number of marked points")->required();
  quotient->add_option("--pairs", pairs, "pairs, e.g. \"(0,2),(1,3)\"")->required();
  quotient->add_option("--shift", shift, "rotation in marked-point steps")->capture_default_str();
  quotient->add_flag("--json-compact", quotient_compact, "single-line JSON");

  std::string family_text;
  std::string family_vars = "x,y,t";
  std::string samples;
  std::string sample_scale = "1";
  std::string radius = "1/2";
  long family_precision = 128;
  bool family_compact = false;
  CLI::App* family = app.add_subcommand("family", "critical points of f_t and the conservation check");
  family->add_option("family_text", family_text, "F(x, y, t)");
  family->add_option("--germ,--family", family_text, "F(x, y, t)");
  family->add_option("--vars", family_vars, "variables, parameter last")->capture_default_str();
  family->add_option("--samples", samples, "comma separated t values (default 1/8, i/8, -1/8)");
  family->add_option("--sample-scale", sample_scale, "factor applied to the default samples")->capture_default_str();
  family->add_option("--radius", radius, "search radius")->capture_default_str();
  family->add_option("--precision", family_precision, "working precision in bits")->capture_default_str();
  family->add_flag("--json-compact", family_compact, "single-line JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(a);
    if (*quotient) {
      const germ::QuotientReport r = germ::quotient(n, parse_pairs(pairs), shift);
      return emit(germ::to_json(r), quotient_compact);
    }
    if (family_text.empty()) throw germ::Error(germ::ErrorKind::invalid_argument, "family polynomial is required");
    if (family_precision < 53) throw germ::Error(germ::ErrorKind::invalid_argument, "--precision must be >= 53");
    std::vector<germ::GaussianRational> ts;
    if (samples.empty()) {
      ts = germ::default_samples(germ::parse_rational(sample_scale));
    } else {
      std::stringstream list(samples);
      std::string item;
      while (std::getline(list, item, ',')) ts.push_back(parse_constant(item));
    }
    std::cerr << "family " << family_text << "\n";
    const germ::FamilyReport r = germ::family_analysis(family_text, germ::parse_variable_list(family_vars), ts,
                                                       germ::parse_rational(radius), family_precision);
    emit(germ::to_json(r), family_compact);
    return r.coalescing.status == germ::CoalescingStatus::violation ? 2 : 0;
  } catch (const germ::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
