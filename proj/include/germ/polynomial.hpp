#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "germ/gaussian.hpp"
#include "germ/numeric.hpp"

namespace germ {

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically in declared variable order.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q(i).
///
/// Terms are kept in canonical graded-lex order and zero coefficients are
/// never stored, so structural equality is mathematical equality. Binary
/// operations require both operands to share the same variable list.
class Polynomial {
 public:
  using Terms = std::map<Exponent, GaussianRational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(const std::vector<std::string>& variables, const GaussianRational& c);
  static Polynomial variable(const std::vector<std::string>& variables, const std::string& name);
  static Polynomial monomial(const std::vector<std::string>& variables, Exponent exponent,
                             const GaussianRational& c);

  const std::vector<std::string>& variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  size_t variable_count() const { return variables_.size(); }
  size_t term_count() const { return terms_.size(); }

  /// Index of a variable; throws Error(unknown_symbol).
  size_t index_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_term() const;
  /// Coefficient of a single monomial (zero if absent).
  GaussianRational coefficient_of(const Exponent& e) const;

  int total_degree() const;
  int degree(size_t var) const;
  int degree(const std::string& name) const { return degree(index_of(name)); }
  /// Smallest exponent of `var` over all terms.
  int low_degree(size_t var) const;
  /// Minimal total degree over terms; throws on the zero polynomial.
  int order() const;

  const Exponent& leading_exponent() const;
  const GaussianRational& leading_coefficient() const;

  void add_term(const Exponent& e, const GaussianRational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const GaussianRational& c);
  Polynomial operator-() const;

  /// Coefficient of var^power, as a polynomial over the same variables.
  Polynomial coefficient(size_t var, unsigned power) const;
  /// All coefficients with respect to `var`, index = power.
  std::vector<Polynomial> coefficients_in(size_t var) const;
  /// Inverse of coefficients_in.
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, size_t var);

  Polynomial derivative(size_t var) const;
  /// Replace variable k by images[k]; all images share one variable list,
  /// which becomes the variable list of the result.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Set `var` to a constant (the variable stays in the list with degree 0).
  Polynomial evaluate_at(size_t var, const GaussianRational& value) const;
  /// Re-express over another variable list, matching by name. Every variable
  /// actually used must exist in `variables`.
  Polynomial with_variables(const std::vector<std::string>& variables) const;
  /// Scalar multiple with leading (graded-lex) coefficient 1; zero stays zero.
  Polynomial monic() const;
  /// Multiply by var^k.
  Polynomial shifted(size_t var, unsigned k) const;

  Complex evaluate(const std::vector<Complex>& point) const;
  /// Sum over terms of |c| * prod |x_k|^{e_k}; bounds rounding in evaluate().
  Real evaluate_magnitude(const std::vector<Complex>& point) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const GaussianRational& c, const Polynomial& p);
Polynomial pow(const Polynomial& p, unsigned n);
inline bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

/// Parse text per the germ grammar:
///   expr := term (('+'|'-') term)*,  term := factor ('*' factor)*,
///   factor := base ('^' uint)?,  base := symbol | rational | 'i' | '(' expr ')'.
/// A leading sign is accepted at the start of every expr.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Split "x,y" or "x y" into a variable list.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace germ
