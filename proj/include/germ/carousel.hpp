#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "germ/polar.hpp"

namespace germ {

struct CarouselRadii {
  Rational rho;  // disc |u| < rho
  Rational eta;  // loop |v| = eta
  std::vector<std::string> validation;  // checks that passed
};

/// Checks, for a diagram with contact count m:
///  - on sampled points of |v| = eta, exactly m roots of Delta(., v) lie in
///    |u| < rho and the others in |u| > rho;
///  - u = 0 is the only root of Delta(u, 0) with |u| <= rho;
///  - the m roots over v = eta are separated by 2^(-bits/4) relative to rho.
/// Returns the failure reason, or nullopt when all pass.
std::optional<std::string> validate_radii(const Polynomial& delta, int m, const Rational& rho, const Rational& eta,
                                          Precision bits = kDefaultPrecision);

/// Shrinks rho and eta by factors of 4 from 1 (at most 40 steps each),
/// keeping a margin of 2 on both sides of |u| = rho. `scale` multiplies the
/// result, which is then validated.
CarouselRadii choose_radii(const CerfDiagram& diagram, Precision bits = kDefaultPrecision,
                           const Rational& scale = Rational(1));

struct CarouselPermutation {
  int m = 0;
  std::vector<ComplexBall> base_points;  // inner roots over v = eta, sorted
  std::vector<int> sigma;                // point k ends at base point sigma[k]
  std::vector<int> cycle_type;           // ascending
  std::vector<int> fixed_points;
  std::vector<std::vector<std::complex<double>>> orbit_traces;
  long steps_used = 0;
  Precision precision_used = 0;
};

/// Follows the fibre points of Delta over v = eta e^(i theta) once around
/// the circle (direction +1 counterclockwise, -1 clockwise). Steps are
/// halved locally when the nearest-point match is ambiguous.
CarouselPermutation carousel_permutation(const CerfDiagram& diagram, const CarouselRadii& radii, int steps = 512,
                                         Precision bits = kDefaultPrecision, int direction = 1,
                                         Precision max_bits = kMaxPrecision);

/// Cycle lengths of a permutation, ascending.
std::vector<int> cycle_type(const std::vector<int>& sigma);

/// {v-order of each branch}, ascending.
std::vector<int> predicted_cycle_type(const CerfDiagram& diagram);

struct FixedPointVerdict {
  bool fixed_point_free = true;
  bool consistent = true;
  std::optional<int> predicted_lefschetz;  // set when f is in m^2
  std::string note;
};

FixedPointVerdict fixed_point_verdict(const CarouselPermutation& perm, int f_order);

}  // namespace germ
