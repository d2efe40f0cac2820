#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germ/puiseux.hpp"

namespace germ {

/// l = a*x + b*y over the germ's two variables.
struct LinearForm {
  GaussianRational a;
  GaussianRational b;
  std::uint64_t seed = 0;
  int draw = 0;  // which candidate of the seed's sequence was accepted

  Polynomial as_polynomial(const std::vector<std::string>& variables) const;
  /// Complementary coordinate: the second variable if a != 0, else the first.
  Polynomial complement(const std::vector<std::string>& variables) const;
};

/// Parse "a*x + b*y" style text into a linear form; throws on anything else.
LinearForm parse_linear_form(const std::string& text, const std::vector<std::string>& variables);

struct PolarCurve {
  Polynomial defining;       // in the germ's variables; the constant 1 when empty
  Polynomial adapted;        // same curve in (u, w) = (l, complement)
  std::vector<Polynomial> removed_factors;  // pieces of {f = 0}, germ variables
  bool empty() const { return defining.is_constant(); }
};

struct CerfDiagram {
  Polynomial defining;  // Delta(u, v), squarefree; the constant 1 when empty
  BranchDecomposition branches;  // u is the parameter side
  std::vector<Rational> leading_exponents;  // v ~ c * u^a per branch
  std::vector<int> u_orders;  // ramification over u
  std::vector<int> v_orders;  // ord_t v on each branch
  bool tangent_to_first_axis = true;
  int contact_count = 0;  // i(Delta, {v = 0}) at the origin
  bool empty() const { return defining.is_constant(); }
};

/// Germ in adapted coordinates (u, w).
Polynomial adapted_germ(const Polynomial& f, const LinearForm& line);

PolarCurve polar_curve(const Polynomial& f, const LinearForm& line);

/// Elimination plus branch analysis. `truncation` 0 picks the default.
CerfDiagram cerf_diagram(const Polynomial& f, const LinearForm& line, Precision bits = kDefaultPrecision,
                         int truncation = 0);
CerfDiagram cerf_diagram(const Polynomial& f, const PolarCurve& polar, const LinearForm& line,
                         Precision bits = kDefaultPrecision, int truncation = 0);

/// Branch analysis of a given squarefree Delta(u, v).
CerfDiagram diagram_from_delta(const Polynomial& delta, Precision bits = kDefaultPrecision, int truncation = 0);

struct GenericLine {
  LinearForm line;
  PolarCurve polar;
  std::vector<std::string> rejected;  // one entry per failed candidate
};

/// Draws candidates from `seed` until the polar curve shares no component
/// with f (and is reduced when f is in m^2), the elimination is squarefree
/// and u does not divide Delta.
/// Throws Error(retries_exhausted) after `max_draws` candidates.
GenericLine pick_generic_line(const Polynomial& f, std::uint64_t seed, int max_draws = 32, int first_draw = 0);

/// The n-th candidate of a seed's sequence (exposed for tests).
LinearForm candidate_line(std::uint64_t seed, int n);

enum class Consistency { consistent, inconsistent };

struct TangencyVerdict {
  std::vector<Rational> exponents;
  bool tangent = true;
  bool empty = false;
  Consistency consistency = Consistency::consistent;
  std::string note;
};

TangencyVerdict tangency_report(const CerfDiagram& diagram, int f_order);

}  // namespace germ
