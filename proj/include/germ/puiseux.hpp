#pragma once

#include <optional>
#include <vector>

#include "germ/numeric.hpp"
#include "germ/polynomial.hpp"

namespace germ {

// Branches of a plane curve f(x, y) = 0 at the origin. The first variable of
// f is the parameter side (x = t^e), the second is expanded as a series.

/// (i, j) = (power of the first variable, power of the second).
struct LatticePoint {
  int i = 0;
  int j = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct NewtonSegment {
  LatticePoint start;  // larger j
  LatticePoint end;
  /// (end.j - start.j) / (end.i - start.i); negative. The branches cut out by
  /// this segment have y ~ x^(-1/slope).
  Rational slope;
  int lattice_length = 0;
};

/// Lower-left convex hull of the support, ordered by increasing slope.
/// Throws Error(unit_germ) if f(0,0) != 0.
std::vector<NewtonSegment> newton_polygon(const Polynomial& f);

enum class AxisKind {
  none,
  horizontal,  // second variable identically zero on the branch
  vertical,    // first variable identically zero (x = 0, y = t)
};

struct PuiseuxBranch {
  int ramification = 1;
  /// Powers of t with a coefficient above the zero tolerance, increasing.
  std::vector<int> exponents;
  std::vector<ComplexBall> coefficients;
  /// The series is known modulo t^(truncation_order + 1).
  int truncation_order = 0;
  AxisKind axis = AxisKind::none;
  /// Dense coefficients 0..truncation_order (empty for axis branches).
  std::vector<Complex> series;

  /// First exponent divided by e; nullopt for axis branches.
  std::optional<Rational> leading_exponent() const;
  /// ord_t of the second coordinate (first exponent); nullopt for the
  /// horizontal axis branch.
  std::optional<int> dependent_order() const;
};

struct BranchDecomposition {
  Polynomial germ;
  std::vector<PuiseuxBranch> branches;
  std::vector<int> multiplicities;
};

/// 2 * deg(f)^2, capped at 512.
int default_truncation(const Polynomial& f);

/// Newton-Puiseux expansion of a squarefree germ. Factors of the first or
/// second variable come back as axis branches. Coefficients are numeric at
/// `bits`; zero decisions use the relative tolerance 2^(-bits/2).
BranchDecomposition puiseux_branches(const Polynomial& f, int truncation, Precision bits = kDefaultPrecision);

/// ord_t f(branch(t)), or nullopt when every coefficient up to the branch's
/// truncation order vanishes.
std::optional<int> order_along(const Polynomial& f, const PuiseuxBranch& branch, Precision bits = kDefaultPrecision);

/// Local intersection number at the origin. Throws
/// Error(infinite_multiplicity) on a common component through 0.
int intersection_multiplicity(const Polynomial& f, const Polynomial& g, Precision bits = kDefaultPrecision);

/// Number of branches of f at the origin (axis branches included).
int branch_count(const Polynomial& f, Precision bits = kDefaultPrecision);

struct SingularityInvariants {
  int mu = 0;
  int delta = 0;
  int branches = 0;
};

/// mu from i(f_x, f_y) and delta from the Puiseux roots, checked against
/// mu = 2 delta - r + 1 (a mismatch is Error(internal)).
SingularityInvariants singularity_invariants(const Polynomial& f, Precision bits = kDefaultPrecision);

int milnor_number(const Polynomial& f, Precision bits = kDefaultPrecision);
int delta_invariant(const Polynomial& f, Precision bits = kDefaultPrecision);

}  // namespace germ
