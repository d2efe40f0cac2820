#include "germ/algebra.hpp"

#include <algorithm>

#include "germ/error.hpp"

namespace germ {

Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
  return p.derivative(p.index_of(var));
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "division by the zero polynomial");
  Polynomial q(a.variables());
  if (a.is_zero()) return q;
  if (a.variables() != b.variables()) {
    throw Error(ErrorKind::invalid_argument, "polynomials over different variable lists");
  }
  const Exponent lb = b.leading_exponent();
  const GaussianRational inv = GaussianRational(1) / b.leading_coefficient();
  Polynomial r = a;
  Exponent shift(lb.size());
  Exponent e(lb.size());
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    for (size_t k = 0; k < lb.size(); ++k) {
      if (lr[k] < lb[k]) return std::nullopt;
      shift[k] = lr[k] - lb[k];
    }
    const GaussianRational coef = r.leading_coefficient() * inv;
    q.add_term(shift, coef);
    for (const auto& [eb, cb] : b.terms()) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = eb[k] + shift[k];
      r.add_term(e, -(coef * cb));
    }
  }
  return q;
}

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.variables(), GaussianRational(1)); }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorKind::internal, "expected exact division");
  return *q;
}

Polynomial primitive_part(const Polynomial& p, size_t var) {
  if (p.is_zero()) return p;
  return exact_quotient(p, content(p, var)).monic();
}

// Variable of smallest positive degree among those either input depends on.
std::optional<size_t> main_variable(const Polynomial& a, const Polynomial& b) {
  std::optional<size_t> best;
  int best_degree = 0;
  for (size_t k = 0; k < a.variable_count(); ++k) {
    const int d = std::max(a.degree(k), b.degree(k));
    if (d <= 0) continue;
    if (!best || d < best_degree) {
      best = k;
      best_degree = d;
    }
  }
  return best;
}

}  // namespace

Polynomial content(const Polynomial& p, size_t var) {
  Polynomial g(p.variables());
  for (const Polynomial& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, size_t var) {
  const int db = b.degree(var);
  if (db < 0) throw Error(ErrorKind::invalid_argument, "pseudo-remainder by zero");
  const Polynomial lcb = b.coefficient(var, static_cast<unsigned>(db));
  Polynomial r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    const Polynomial lcr = r.coefficient(var, static_cast<unsigned>(dr));
    r = lcb * r - lcr * b.shifted(var, static_cast<unsigned>(dr - db));
  }
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.variables() != b.variables()) {
    throw Error(ErrorKind::invalid_argument, "polynomials over different variable lists");
  }
  if (a.is_constant() || b.is_constant()) return one_like(a);
  const size_t var = *main_variable(a, b);
  if (a.degree(var) == 0) return gcd(a, content(b, var));
  if (b.degree(var) == 0) return gcd(content(a, var), b);

  const Polynomial ca = content(a, var);
  const Polynomial cb = content(b, var);
  const Polynomial common_content = gcd(ca, cb);

  Polynomial r0 = exact_quotient(a, ca).monic();
  Polynomial r1 = exact_quotient(b, cb).monic();
  if (r0.degree(var) < r1.degree(var)) std::swap(r0, r1);
  Polynomial g(a.variables());
  while (true) {
    Polynomial r = pseudo_remainder(r0, r1, var);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (r.degree(var) == 0) {
      g = one_like(a);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part(r, var);
  }
  return (common_content * primitive_part(g, var)).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "squarefree part of zero");
  if (p.is_constant()) return one_like(p);
  Polynomial g = p;
  for (size_t k = 0; k < p.variable_count(); ++k) {
    if (p.degree(k) <= 0) continue;
    g = gcd(g, p.derivative(k));
    if (g.is_constant()) break;
  }
  return exact_quotient(p, g).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::zero_polynomial, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  Polynomial a = p.monic();
  if (a.is_constant()) return out;
  Polynomial s = squarefree_part(a);
  int k = 1;
  while (!a.is_constant()) {
    Polynomial next = exact_quotient(a, s);
    Polynomial s_next = next.is_constant() ? one_like(p) : squarefree_part(next);
    Polynomial exact = exact_quotient(s, s_next);
    if (!exact.is_constant()) out.push_back({exact.monic(), k});
    a = std::move(next);
    s = std::move(s_next);
    ++k;
  }
  return out;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "empty matrix");
  const std::vector<std::string> vars = m[0][0].variables();
  bool negate = false;
  Polynomial prev = Polynomial::constant(vars, GaussianRational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial(vars);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) num -= m[i][k] * m[k][j];
        m[i][j] = exact_quotient(num, prev);
      }
      m[i][k] = Polynomial(vars);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var_name) {
  const size_t var = p.index_of(var_name);
  if (p.variables() != q.variables()) {
    throw Error(ErrorKind::invalid_argument, "polynomials over different variable lists");
  }
  const int m = p.degree(var);
  const int n = q.degree(var);
  if (m <= 0 || n <= 0) {
    throw Error(ErrorKind::degenerate, "resultant needs positive degree in '" + var_name + "'");
  }
  const auto pc = p.coefficients_in(var);
  const auto qc = q.coefficients_in(var);
  const size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<Polynomial>> sylvester(size, std::vector<Polynomial>(size, Polynomial(p.variables())));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) sylvester[i][i + (m - k)] = pc[k];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) sylvester[n + i][i + (n - k)] = qc[k];
  }
  return determinant(std::move(sylvester));
}

Polynomial drop_variable(const Polynomial& p, const std::string& var) {
  if (p.degree(var) > 0) {
    throw Error(ErrorKind::invalid_argument, "polynomial still depends on '" + var + "'");
  }
  std::vector<std::string> vars;
  for (const std::string& v : p.variables()) {
    if (v != var) vars.push_back(v);
  }
  return p.with_variables(vars);
}

namespace {

// (a, b) for the homogeneous linear form a*x0 + b*x1.
std::pair<GaussianRational, GaussianRational> linear_coefficients(const Polynomial& form) {
  if (form.variable_count() != 2) throw Error(ErrorKind::invalid_argument, "linear forms must be in two variables");
  GaussianRational a;
  GaussianRational b;
  for (const auto& [e, c] : form.terms()) {
    if (e[0] + e[1] != 1) throw Error(ErrorKind::invalid_argument, "'" + form.to_string() + "' is not a linear form");
    (e[0] == 1 ? a : b) = c;
  }
  return {a, b};
}

}  // namespace

Polynomial linear_change(const Polynomial& p, const Polynomial& ell, const Polynomial& complement,
                         const std::vector<std::string>& new_variables) {
  if (p.variable_count() != 2 || new_variables.size() != 2) {
    throw Error(ErrorKind::invalid_argument, "linear_change works on plane germs");
  }
  const Polynomial ell_p = ell.with_variables(p.variables());
  const Polynomial comp_p = complement.with_variables(p.variables());
  const auto [a, b] = linear_coefficients(ell_p);
  const auto [c, d] = linear_coefficients(comp_p);
  const GaussianRational det = a * d - b * c;
  if (det.is_zero()) throw Error(ErrorKind::degenerate, "linear forms are dependent");
  const Polynomial u = Polynomial::variable(new_variables, new_variables[0]);
  const Polynomial w = Polynomial::variable(new_variables, new_variables[1]);
  const GaussianRational inv = GaussianRational(1) / det;
  // x = (d u - b w)/det, y = (-c u + a w)/det
  Polynomial x = (d * inv) * u - (b * inv) * w;
  Polynomial y = (a * inv) * w - (c * inv) * u;
  return p.substitute({x, y});
}

int order_at_origin(const Polynomial& p) { return p.order(); }

std::vector<GaussianRational> univariate_coefficients(const Polynomial& p) {
  std::optional<size_t> var;
  for (size_t k = 0; k < p.variable_count(); ++k) {
    if (p.degree(k) <= 0) continue;
    if (var) throw Error(ErrorKind::invalid_argument, "expected a polynomial in one variable");
    var = k;
  }
  if (!var) return {p.constant_term()};
  std::vector<GaussianRational> out(static_cast<size_t>(p.degree(*var)) + 1);
  for (const auto& [e, c] : p.terms()) out[e[*var]] = c;
  return out;
}

}  // namespace germ
