#include "germ/polar.hpp"

#include <random>
#include <sstream>

#include "germ/algebra.hpp"
#include "germ/error.hpp"

namespace germ {

namespace {

const std::vector<std::string> kAdapted{"u", "w"};
const std::vector<std::string> kElimination{"u", "w", "v"};
const std::vector<std::string> kCerf{"u", "v"};

constexpr int kCerfTruncation = 16;

void require_plane(const Polynomial& f) {
  if (f.variable_count() != 2) throw Error(ErrorKind::invalid_argument, "expected a germ in two variables");
}

// Res_w(Gamma, F - v) over (u, v).
Polynomial elimination(const Polynomial& gamma, const Polynomial& adapted) {
  const Polynomial g = gamma.with_variables(kElimination);
  const Polynomial h = adapted.with_variables(kElimination) - Polynomial::variable(kElimination, "v");
  return drop_variable(resultant(g, h, "w"), "w");
}

Polynomial back_to_germ(const Polynomial& p, const LinearForm& line, const std::vector<std::string>& vars) {
  return p.substitute({line.as_polynomial(vars), line.complement(vars)});
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_constant()) return true;
  return squarefree_part(p) == p.monic();
}

bool divisible_by_first(const Polynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e[0] == 0) return false;
  }
  return !p.is_zero();
}

std::string describe(const LinearForm& line, const std::vector<std::string>& vars) {
  return "l = " + line.as_polynomial(vars).to_string();
}

}  // namespace

Polynomial LinearForm::as_polynomial(const std::vector<std::string>& variables) const {
  return a * Polynomial::variable(variables, variables[0]) + b * Polynomial::variable(variables, variables[1]);
}

Polynomial LinearForm::complement(const std::vector<std::string>& variables) const {
  return Polynomial::variable(variables, a.is_zero() ? variables[0] : variables[1]);
}

LinearForm parse_linear_form(const std::string& text, const std::vector<std::string>& variables) {
  const Polynomial p = parse_polynomial(text, variables);
  LinearForm out;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != 1) throw Error(ErrorKind::invalid_argument, "'" + text + "' is not a linear form");
    (e[0] == 1 ? out.a : out.b) = c;
  }
  if (out.a.is_zero() && out.b.is_zero()) throw Error(ErrorKind::invalid_argument, "linear form is zero");
  return out;
}

Polynomial adapted_germ(const Polynomial& f, const LinearForm& line) {
  require_plane(f);
  const auto& vars = f.variables();
  return linear_change(f, line.as_polynomial(vars), line.complement(vars), kAdapted);
}

PolarCurve polar_curve(const Polynomial& f, const LinearForm& line) {
  require_plane(f);
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "polar curve of zero");
  if (!is_squarefree(f)) throw Error(ErrorKind::not_squarefree, f.to_string() + " is not squarefree");
  const auto& vars = f.variables();
  const Polynomial adapted = adapted_germ(f, line);
  const Polynomial dw = adapted.derivative(1);
  if (dw.is_zero()) throw Error(ErrorKind::degenerate, "the germ is constant along the complement of l");
  PolarCurve out;
  if (dw.is_constant()) {
    out.defining = Polynomial::constant(vars, GaussianRational(1));
    out.adapted = Polynomial::constant(kAdapted, GaussianRational(1));
    return out;
  }
  Polynomial gamma = squarefree_part(dw);
  const Polynomial common = gcd(gamma, adapted);
  if (!common.is_constant()) {
    gamma = *divide_exact(gamma, common);
    out.removed_factors.push_back(back_to_germ(common, line, vars).monic());
  }
  out.adapted = gamma.monic();
  out.defining = back_to_germ(out.adapted, line, vars).monic();
  return out;
}

CerfDiagram cerf_diagram(const Polynomial& f, const LinearForm& line, Precision bits, int truncation) {
  return cerf_diagram(f, polar_curve(f, line), line, bits, truncation);
}

CerfDiagram cerf_diagram(const Polynomial& f, const PolarCurve& polar, const LinearForm& line, Precision bits,
                         int truncation) {
  CerfDiagram out;
  out.defining = Polynomial::constant(kCerf, GaussianRational(1));
  out.branches.germ = out.defining;
  if (polar.empty()) return out;
  if (polar.adapted.degree(1) <= 0) {
    throw Error(ErrorKind::degenerate, "polar curve is constant in w; elimination degenerates");
  }
  const Polynomial r = elimination(polar.adapted, adapted_germ(f, line));
  if (r.is_zero()) throw Error(ErrorKind::degenerate, "elimination vanishes identically");
  if (r.is_constant()) return out;
  return diagram_from_delta(squarefree_part(r), bits, truncation);
}

CerfDiagram diagram_from_delta(const Polynomial& delta, Precision bits, int truncation) {
  CerfDiagram out;
  out.defining = delta.with_variables(kCerf);
  out.branches.germ = out.defining;
  if (out.defining.is_constant()) return out;
  if (!out.defining.constant_term().is_zero()) return out;  // no branch through the origin

  const int t = truncation > 0 ? truncation : std::min(default_truncation(out.defining), kCerfTruncation);
  out.branches = puiseux_branches(out.defining, t, bits);
  int total = 0;
  for (const PuiseuxBranch& b : out.branches.branches) {
    if (b.axis == AxisKind::horizontal) throw Error(ErrorKind::branch_in_axis, "Delta contains v = 0");
    if (b.axis == AxisKind::vertical) throw Error(ErrorKind::degenerate, "Delta contains u = 0");
    const int p = *b.dependent_order();
    out.u_orders.push_back(b.ramification);
    out.v_orders.push_back(p);
    out.leading_exponents.push_back(*b.leading_exponent());
    if (out.leading_exponents.back() <= 1) out.tangent_to_first_axis = false;
    total += p;
  }
  // Independent count: ord_u Delta(u, 0).
  std::optional<int> exact;
  for (const auto& [e, c] : out.defining.terms()) {
    if (e[1] == 0 && (!exact || static_cast<int>(e[0]) < *exact)) exact = static_cast<int>(e[0]);
  }
  if (!exact || *exact != total) {
    throw Error(ErrorKind::internal, "contact count mismatch: branches give " + std::to_string(total) +
                                         ", Delta(u,0) gives " + (exact ? std::to_string(*exact) : "infinity"));
  }
  out.contact_count = total;
  return out;
}

LinearForm candidate_line(std::uint64_t seed, int n) {
  LinearForm out;
  out.seed = seed;
  out.draw = n;
  if (seed == 0 && n == 0) {
    out.a = 1;
    return out;
  }
  std::mt19937_64 rng(seed);
  long a = 0;
  long b = 0;
  for (int k = 0; k <= n; ++k) {
    do {
      a = static_cast<long>(rng() % 11) - 5;
      b = static_cast<long>(rng() % 11) - 5;
    } while (a == 0 && b == 0);
  }
  out.a = a;
  out.b = b;
  return out;
}

GenericLine pick_generic_line(const Polynomial& f, std::uint64_t seed, int max_draws, int first_draw) {
  require_plane(f);
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "generic line for zero");
  if (!f.constant_term().is_zero()) throw Error(ErrorKind::unit_germ, "germ does not vanish at the origin");
  const bool in_m_squared = f.order() >= 2;
  GenericLine out;
  for (int n = first_draw; n < first_draw + max_draws; ++n) {
    const LinearForm line = candidate_line(seed, n);
    const std::string name = describe(line, f.variables());
    const Polynomial adapted = adapted_germ(f, line);
    const Polynomial dw = adapted.derivative(1);
    if (dw.is_zero()) {
      out.rejected.push_back(name + ": c1 (f is constant along the fibres of l)");
      continue;
    }
    if (!dw.is_constant()) {
      // Reducedness is only asked of germs in m^2; for order one the line
      // along df(0) is the only one whose polar curve reaches the origin.
      if (in_m_squared && !is_squarefree(dw)) {
        out.rejected.push_back(name + ": c1 (polar curve not reduced)");
        continue;
      }
      if (!gcd(squarefree_part(dw), adapted).is_constant()) {
        out.rejected.push_back(name + ": c1 (polar curve shares a component with f)");
        continue;
      }
    }
    PolarCurve polar = polar_curve(f, line);
    if (!polar.empty()) {
      if (polar.adapted.degree(1) <= 0) {
        out.rejected.push_back(name + ": c3 (polar curve is a union of fibres of l)");
        continue;
      }
      const Polynomial r = elimination(polar.adapted, adapted);
      if (r.is_zero() || !is_squarefree(r)) {
        out.rejected.push_back(name + ": c2 (elimination is not squarefree)");
        continue;
      }
      if (divisible_by_first(r)) {
        out.rejected.push_back(name + ": c3 (u divides Delta)");
        continue;
      }
    }
    out.line = line;
    out.polar = std::move(polar);
    return out;
  }
  std::ostringstream msg;
  msg << "no generic line after " << max_draws << " draws:";
  for (const auto& r : out.rejected) msg << "\n  " << r;
  throw Error(ErrorKind::retries_exhausted, msg.str());
}

TangencyVerdict tangency_report(const CerfDiagram& diagram, int f_order) {
  TangencyVerdict v;
  v.exponents = diagram.leading_exponents;
  v.tangent = diagram.tangent_to_first_axis;
  v.empty = diagram.branches.branches.empty();
  if (diagram.empty()) {
    v.note = "empty polar curve: the germ is locally a product with a disc";
  } else if (v.empty) {
    v.note = "Cerf diagram has no branch through the origin";
  }
  if (f_order >= 2 && !v.tangent) {
    v.consistency = Consistency::inconsistent;
    v.note = "INCONSISTENT_WITH_PROP: a branch exponent is <= 1 although f has order >= 2";
  }
  return v;
}

}  // namespace germ
