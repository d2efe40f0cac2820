#pragma once

#include <vector>

#include "germ/numeric.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Dense univariate polynomial with numeric coefficients, index = power.
using NumericPolynomial = std::vector<Complex>;

NumericPolynomial to_numeric(const std::vector<GaussianRational>& coefficients, Precision bits);
Complex evaluate(const NumericPolynomial& p, const Complex& z);

/// Simultaneous (Aberth) iteration. `warm_start`, when non-empty, must hold
/// one approximation per root. Leading coefficient must be nonzero and the
/// constant coefficient nonzero (strip zero roots first).
std::vector<Complex> aberth_approximations(const NumericPolynomial& p, Precision bits,
                                           const std::vector<Complex>& warm_start = {});

/// Radii r_i such that the discs D(z_i, r_i) contain all roots and every
/// connected component of k discs holds exactly k roots counted with
/// multiplicity. Accounts for rounding in the residual evaluation.
std::vector<Real> inclusion_radii(const NumericPolynomial& p, const std::vector<Complex>& approximations);

/// Roots of p as pairwise disjoint balls, each holding exactly one root.
/// Returns an empty vector when the discs cannot be separated at this
/// precision (multiple roots or insufficient bits). Zero roots are returned
/// with radius 0. Output order follows `warm_start` when given.
std::vector<ComplexBall> separated_roots(const NumericPolynomial& p, Precision bits,
                                         const std::vector<Complex>& warm_start = {});

struct RootCluster {
  ComplexBall ball;
  int multiplicity;
};

/// Connected components of the inclusion discs; each ball holds exactly
/// `multiplicity` roots. Used where multiple roots are legitimate.
std::vector<RootCluster> root_clusters(const NumericPolynomial& p, Precision bits);

/// Certified roots of an exact polynomial in one variable, with
/// multiplicity (a k-fold root appears k times). Multiplicities come from an
/// exact squarefree decomposition; separation is certified, doubling the
/// precision up to `cap` before giving up with Error(precision). Sorted by
/// (real, imaginary) of the centers.
std::vector<ComplexBall> univariate_roots(const Polynomial& p, Precision bits = kDefaultPrecision,
                                          Precision cap = kMaxPrecision);

/// Deterministic (real, imaginary) ordering with a tolerance proportional
/// to the ball radii.
void sort_by_center(std::vector<ComplexBall>& balls);

}  // namespace germ
