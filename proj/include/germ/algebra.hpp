#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

Polynomial partial_derivative(const Polynomial& p, const std::string& var);

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero iff both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// gcd of the coefficients of p viewed as a polynomial in `var`.
Polynomial content(const Polynomial& p, size_t var);

/// Sparse pseudo-remainder of a by b in `var` (a scalar-in-var multiple of
/// the classical prem).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, size_t var);

/// Product of the distinct irreducible factors, monic. Throws on zero.
Polynomial squarefree_part(const Polynomial& p);

struct SquarefreeFactor {
  Polynomial factor;
  int multiplicity;
};

/// p = c * prod factor_k^{multiplicity_k}; factors monic, pairwise coprime,
/// squarefree, non-constant. The constant c is dropped.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

/// Determinant of a square matrix of polynomials (fraction-free Bareiss).
Polynomial determinant(std::vector<std::vector<Polynomial>> matrix);

/// Sylvester resultant eliminating `var`; throws Error(degenerate) when
/// either input is constant in `var`. The eliminated variable stays in the
/// variable list with degree zero.
Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var);

/// Drop a variable the polynomial does not depend on.
Polynomial drop_variable(const Polynomial& p, const std::string& var);

/// Rewrite p(x, y) in coordinates (u, w) = (ell, complement); ell and
/// complement must be independent homogeneous linear forms in p's variables.
Polynomial linear_change(const Polynomial& p, const Polynomial& ell, const Polynomial& complement,
                         const std::vector<std::string>& new_variables = {"u", "w"});

/// Minimal total degree of the terms; p is in m^2 iff this is >= 2.
int order_at_origin(const Polynomial& p);

/// Treat a single-variable polynomial as a dense coefficient list (index = power).
std::vector<GaussianRational> univariate_coefficients(const Polynomial& p);

}  // namespace germ
