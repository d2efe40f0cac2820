#include "germ/report.hpp"

#include <chrono>

#include "germ/algebra.hpp"
#include "germ/error.hpp"

namespace germ {

namespace {

constexpr int kLineDraws = 32;

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& sink) : sink_(sink) {}

  template <typename F>
  auto run(const std::string& stage, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      std::vector<StageTiming>& sink;
      std::string stage;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const auto end = std::chrono::steady_clock::now();
        sink.push_back({stage, std::chrono::duration<double, std::milli>(end - start).count()});
      }
    } record{sink_, stage, start};
    try {
      return body();
    } catch (const Error& e) {
      throw Error(e.kind(), "[" + stage + "] " + e.message());
    }
  }

 private:
  std::vector<StageTiming>& sink_;
};

std::string rational_text(const Rational& q) { return q.get_str(); }

Json complex_json(const Complex& z) { return Json::array({format_real(z.re), format_real(z.im)}); }

Json ball_json(const ComplexBall& b) {
  Json j;
  j["center"] = complex_json(b.center);
  j["radius"] = b.radius.to_string(3);
  return j;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const auto& q : values) a.push_back(rational_text(q));
  return a;
}

const char* consistency_text(bool consistent) { return consistent ? "CONSISTENT" : "INCONSISTENT"; }

// Carousel stages for a fixed line; errors here trigger a redraw of the line.
void run_carousel(MonodromyReport& r, const AnalyzeOptions& o, Stopwatch& clock) {
  r.radii.reset();
  r.carousel.reset();
  r.fixed_points.reset();
  r.cycle_type_matches.reset();
  if (r.cerf.contact_count == 0) return;
  r.radii = clock.run("radii", [&] { return choose_radii(r.cerf, o.precision, o.radius_scale); });
  r.carousel = clock.run("carousel", [&] {
    return carousel_permutation(r.cerf, *r.radii, o.steps, o.precision, 1, o.max_precision);
  });
  r.fixed_points = fixed_point_verdict(*r.carousel, r.f_order);
  r.cycle_type_matches = r.carousel->cycle_type == predicted_cycle_type(r.cerf);
}

bool retry_with_new_line(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::radii:
    case ErrorKind::tracking:
    case ErrorKind::branch_in_axis:
    case ErrorKind::degenerate:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string format_real(const Real& x, int digits) {
  // Values below the working tolerance print as 0 so noise never reaches
  // golden output.
  if (abs(x) < Real::power_of_two(-static_cast<long>(x.precision()) / 2, x.precision())) return "0";
  return x.to_string(digits);
}

bool MonodromyReport::inconsistent() const {
  if (tangency.consistency == Consistency::inconsistent) return true;
  if (fixed_points && !fixed_points->consistent) return true;
  if (cycle_type_matches && !*cycle_type_matches) return true;
  return false;
}

MonodromyReport analyze(const AnalyzeOptions& o) {
  MonodromyReport r;
  Stopwatch clock(r.timing);
  r.germ = o.germ;
  r.variables = o.variables;
  r.steps_requested = o.steps;
  const Polynomial f = clock.run("parse", [&] {
    if (o.variables.size() != 2) throw Error(ErrorKind::invalid_argument, "a plane germ needs two variables");
    Polynomial p = parse_polynomial(o.germ, o.variables);
    if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "germ is zero");
    if (!p.constant_term().is_zero()) throw Error(ErrorKind::unit_germ, "germ does not vanish at the origin");
    return p;
  });
  r.f_order = order_at_origin(f);
  r.in_m_squared = r.f_order >= 2;

  const SingularityInvariants inv = clock.run("invariants", [&] { return singularity_invariants(f, o.precision); });
  r.mu = inv.mu;
  r.delta = inv.delta;
  r.branch_count = inv.branches;

  if (o.line) {
    r.line_forced = true;
    r.line = clock.run("line", [&] { return parse_linear_form(*o.line, o.variables); });
    r.polar = clock.run("polar", [&] { return polar_curve(f, r.line); });
    r.cerf = clock.run("cerf", [&] { return cerf_diagram(f, r.polar, r.line, o.precision, o.truncation); });
    r.tangency = tangency_report(r.cerf, r.f_order);
    run_carousel(r, o, clock);
    return r;
  }

  int draw = 0;
  for (;;) {
    const GenericLine g =
        clock.run("line", [&] { return pick_generic_line(f, o.seed, kLineDraws - draw, draw); });
    r.rejected_lines.insert(r.rejected_lines.end(), g.rejected.begin(), g.rejected.end());
    r.line = g.line;
    r.polar = g.polar;
    try {
      r.cerf = clock.run("cerf", [&] { return cerf_diagram(f, r.polar, r.line, o.precision, o.truncation); });
      r.tangency = tangency_report(r.cerf, r.f_order);
      run_carousel(r, o, clock);
      return r;
    } catch (const Error& e) {
      draw = g.line.draw + 1;
      if (!retry_with_new_line(e) || draw >= kLineDraws) throw;
      r.rejected_lines.push_back("l = " + g.line.as_polynomial(o.variables).to_string() + ": " + e.what());
    }
  }
}

Json to_json(const MonodromyReport& r, bool include_timing) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["germ"] = r.germ;
  j["variables"] = r.variables;
  j["f_order"] = r.f_order;
  j["in_m_squared"] = r.in_m_squared;
  j["mu"] = r.mu;
  j["delta"] = r.delta;
  j["branch_count"] = r.branch_count;
  j["stratification"] = "smooth";

  Json line;
  line["form"] = r.line.as_polynomial(r.variables).to_string();
  line["a"] = r.line.a.to_string();
  line["b"] = r.line.b.to_string();
  line["forced"] = r.line_forced;
  line["seed"] = r.line.seed;
  line["draw"] = r.line.draw;
  line["rejected"] = r.rejected_lines;
  j["line"] = line;

  Json polar;
  polar["defining"] = r.polar.defining.to_string();
  polar["empty"] = r.polar.empty();
  Json removed = Json::array();
  for (const auto& p : r.polar.removed_factors) removed.push_back(p.to_string());
  polar["removed_factors"] = removed;
  j["polar"] = polar;

  Json cerf;
  cerf["defining"] = r.cerf.defining.to_string();
  cerf["exponents"] = rationals_json(r.cerf.leading_exponents);
  cerf["u_orders"] = r.cerf.u_orders;
  cerf["v_orders"] = r.cerf.v_orders;
  cerf["tangent"] = r.tangency.tangent;
  cerf["m"] = r.cerf.contact_count;
  j["cerf"] = cerf;

  if (r.carousel) {
    Json c;
    c["rho"] = rational_text(r.radii->rho);
    c["eta"] = rational_text(r.radii->eta);
    c["radius_checks"] = r.radii->validation;
    c["steps"] = r.steps_requested;
    c["steps_used"] = r.carousel->steps_used;
    c["precision"] = r.carousel->precision_used;
    Json base = Json::array();
    for (const auto& b : r.carousel->base_points) base.push_back(ball_json(b));
    c["base_points"] = base;
    c["sigma"] = r.carousel->sigma;
    c["cycle_type"] = r.carousel->cycle_type;
    c["predicted_cycle_type"] = predicted_cycle_type(r.cerf);
    c["fixed_points"] = r.carousel->fixed_points;
    j["carousel"] = c;
  }

  Json verdicts;
  Json tangency;
  tangency["consistency"] = consistency_text(r.tangency.consistency == Consistency::consistent);
  tangency["tangent"] = r.tangency.tangent;
  tangency["note"] = r.tangency.note;
  verdicts["tangency"] = tangency;
  if (r.fixed_points) {
    Json fp;
    fp["fixed_point_free"] = r.fixed_points->fixed_point_free;
    fp["consistency"] = consistency_text(r.fixed_points->consistent);
    if (r.fixed_points->predicted_lefschetz) {
      fp["predicted_lefschetz"] = *r.fixed_points->predicted_lefschetz;
    } else {
      fp["predicted_lefschetz"] = "not predicted";
    }
    fp["note"] = r.fixed_points->note;
    verdicts["fixed_points"] = fp;
  }
  if (r.cycle_type_matches) verdicts["cycle_type_oracle"] = consistency_text(*r.cycle_type_matches);
  j["verdicts"] = verdicts;

  if (include_timing) {
    Json t;
    for (const auto& s : r.timing) {
      t[s.stage] = t.contains(s.stage) ? t[s.stage].get<double>() + s.milliseconds : s.milliseconds;
    }
    j["timing_ms"] = t;
  }
  return j;
}

QuotientReport quotient(int n, const std::vector<std::pair<int, int>>& pairs, int shift) {
  const MarkedDiskComplex complex(n, pairs);
  QuotientReport r;
  r.n = n;
  r.pairs = complex.pairs();
  r.shift = shift;
  r.homology = h1_of_quotient(complex);
  r.action = rotation_action(complex, shift);
  r.trace = r.action.trace();
  r.lefschetz = lefschetz_number(r.action);
  return r;
}

Json to_json(const QuotientReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = r.n;
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs) pairs.push_back({a, b});
  j["pairs"] = pairs;
  j["shift"] = r.shift;
  j["rank"] = r.homology.rank;
  j["basis"] = r.homology.basis;
  j["torsion"] = r.homology.torsion;
  j["matrix"] = r.action.entries;
  j["trace"] = r.trace;
  j["lefschetz"] = r.lefschetz;
  return j;
}

FamilyReport family_analysis(const std::string& text, const std::vector<std::string>& variables,
                             std::vector<GaussianRational> samples, const Rational& search_radius, Precision bits) {
  if (variables.size() != 3) throw Error(ErrorKind::invalid_argument, "a family needs variables x, y, t");
  FamilyReport r;
  r.text = text;
  r.family = make_family(parse_polynomial(text, variables), std::move(samples), search_radius);
  r.conservation = conservation_check(r.family, bits);
  r.coalescing = coalescing_verdict(r.family, r.conservation);
  return r;
}

Json to_json(const FamilyReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = r.text;
  j["variables"] = r.family.F.variables();
  j["search_radius"] = rational_text(r.family.search_radius);
  j["mu0"] = r.conservation.mu0;
  Json samples = Json::array();
  for (size_t k = 0; k < r.conservation.records.size(); ++k) {
    const CriticalRecord& rec = r.conservation.records[k];
    const SampleTotal& tot = r.conservation.totals[k];
    Json s;
    s["t"] = rec.t.to_string();
    Json points = Json::array();
    for (const CriticalPoint& p : rec.points) {
      Json q;
      q["x"] = complex_json(p.x.center);
      q["y"] = complex_json(p.y.center);
      q["local_mu"] = p.local_mu;
      q["critical_value"] = complex_json(p.critical_value.center);
      q["inside"] = p.inside;
      points.push_back(q);
    }
    s["points"] = points;
    s["total_mu"] = tot.total_mu;
    s["escaped"] = tot.escaped;
    s["conserved"] = tot.conserved;
    s["zero_fiber_mu"] = r.coalescing.zero_fiber_mu[k];
    s["zero_fiber_points"] = r.coalescing.zero_fiber_points[k];
    samples.push_back(s);
  }
  j["samples"] = samples;
  j["conserved"] = r.conservation.conserved;
  Json c;
  c["verdict"] = to_string(r.coalescing.status);
  c["note"] = r.coalescing.note;
  j["coalescing"] = c;
  return j;
}

}  // namespace germ
