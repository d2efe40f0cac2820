#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "germ/carousel.hpp"
#include "germ/family.hpp"
#include "germ/homology.hpp"
#include "germ/polar.hpp"

namespace germ {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct AnalyzeOptions {
  std::string germ;
  std::vector<std::string> variables{"x", "y"};
  std::uint64_t seed = 0;
  Precision precision = kDefaultPrecision;
  int steps = 512;
  int truncation = 0;  // 0: internal default
  Rational radius_scale{1};
  std::optional<std::string> line;  // forced linear form, skips the genericity draw
  Precision max_precision = kMaxPrecision;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct MonodromyReport {
  std::string germ;
  std::vector<std::string> variables;
  int f_order = 0;
  bool in_m_squared = false;
  int mu = 0;
  int delta = 0;
  int branch_count = 0;
  LinearForm line;
  bool line_forced = false;
  std::vector<std::string> rejected_lines;
  PolarCurve polar;
  CerfDiagram cerf;
  TangencyVerdict tangency;
  std::optional<CarouselRadii> radii;
  std::optional<CarouselPermutation> carousel;
  int steps_requested = 0;
  std::optional<FixedPointVerdict> fixed_points;
  std::optional<bool> cycle_type_matches;  // numeric vs Puiseux prediction
  std::vector<StageTiming> timing;

  /// True when any verdict contradicts the statement it checks.
  bool inconsistent() const;
};

/// order -> mu/delta -> line -> polar -> Delta -> carousel -> verdicts.
/// Errors propagate with the failing stage prefixed to the message.
MonodromyReport analyze(const AnalyzeOptions& options);

Json to_json(const MonodromyReport& report, bool include_timing = true);

struct QuotientReport {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  int shift = 0;
  FirstHomology homology;
  IntegerMatrix action;
  std::int64_t trace = 0;
  std::int64_t lefschetz = 0;
};

QuotientReport quotient(int n, const std::vector<std::pair<int, int>>& pairs, int shift);
Json to_json(const QuotientReport& report);

struct FamilyReport {
  std::string text;
  FamilyGerm family;
  ConservationReport conservation;
  CoalescingVerdict coalescing;
};

FamilyReport family_analysis(const std::string& text, const std::vector<std::string>& variables,
                             std::vector<GaussianRational> samples, const Rational& search_radius,
                             Precision bits = kDefaultPrecision);
Json to_json(const FamilyReport& report);

/// Fixed-width decimal rendering shared by the JSON and SVG writers.
std::string format_real(const Real& x, int digits = 15);

}  // namespace germ
