#include "germ/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "germ/error.hpp"

namespace germ {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0U);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0U);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(const std::vector<std::string>& variables, const GaussianRational& c) {
  Polynomial p(variables);
  p.add_term(Exponent(variables.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& variables, const std::string& name) {
  Polynomial p(variables);
  Exponent e(variables.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, GaussianRational(1));
  return p;
}

Polynomial Polynomial::monomial(const std::vector<std::string>& variables, Exponent exponent,
                                const GaussianRational& c) {
  Polynomial p(variables);
  if (exponent.size() != variables.size()) {
    throw Error(ErrorKind::invalid_argument, "exponent length does not match variable count");
  }
  p.add_term(exponent, c);
  return p;
}

size_t Polynomial::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw Error(ErrorKind::unknown_symbol, "'" + name + "'");
  return static_cast<size_t>(it - variables_.begin());
}

bool Polynomial::has_variable(const std::string& name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponent& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

GaussianRational Polynomial::constant_term() const { return coefficient_of(Exponent(variables_.size(), 0)); }

GaussianRational Polynomial::coefficient_of(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponent& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0U));
}

int Polynomial::degree(size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

int Polynomial::low_degree(size_t var) const {
  if (terms_.empty()) return -1;
  int d = -1;
  for (const auto& [e, c] : terms_) {
    if (d < 0 || static_cast<int>(e[var]) < d) d = static_cast<int>(e[var]);
  }
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) throw Error(ErrorKind::zero_polynomial, "order of the zero polynomial");
  const Exponent& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0U));
}

const Exponent& Polynomial::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::zero_polynomial, "leading term of the zero polynomial");
  return terms_.begin()->first;
}

const GaussianRational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::zero_polynomial, "leading term of the zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Exponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw Error(ErrorKind::invalid_argument, "polynomials over different variable lists");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) {
    throw Error(ErrorKind::invalid_argument, "polynomials over different variable lists");
  }
  Polynomial r(a.variables());
  Exponent e(a.variable_count());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
  Polynomial r = p;
  r *= c;
  return r;
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result = Polynomial::constant(p.variables(), GaussianRational(1));
  Polynomial base = p;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::coefficient(size_t var, unsigned power) const {
  Polynomial r(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponent reduced = e;
    reduced[var] = 0;
    r.terms_.emplace(std::move(reduced), c);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(size_t var) const {
  const int d = degree(var);
  std::vector<Polynomial> out(static_cast<size_t>(std::max(d + 1, 0)), Polynomial(variables_));
  for (const auto& [e, c] : terms_) {
    Exponent reduced = e;
    reduced[var] = 0;
    out[e[var]].terms_.emplace(std::move(reduced), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, size_t var) {
  if (coeffs.empty()) return Polynomial();
  Polynomial r(coeffs.front().variables());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponent shifted = e;
      shifted[var] += static_cast<unsigned>(k);
      r.add_term(shifted, c);
    }
  }
  return r;
}

Polynomial Polynomial::derivative(size_t var) const {
  if (var >= variables_.size()) throw Error(ErrorKind::unknown_symbol, "variable index out of range");
  Polynomial r(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != variables_.size()) {
    throw Error(ErrorKind::invalid_argument, "substitution needs one image per variable");
  }
  const std::vector<std::string>& target = images.front().variables();
  // Cache powers of every image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (size_t k = 0; k < images.size(); ++k) {
    powers[k].push_back(Polynomial::constant(target, GaussianRational(1)));
  }
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (size_t k = 0; k < e.size(); ++k) {
      while (powers[k].size() <= e[k]) powers[k].push_back(powers[k].back() * images[k]);
      if (e[k] > 0) term = term * powers[k][e[k]];
    }
    r += term;
  }
  return r;
}

Polynomial Polynomial::evaluate_at(size_t var, const GaussianRational& value) const {
  Polynomial r(variables_);
  std::vector<GaussianRational> powers{GaussianRational(1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponent reduced = e;
    reduced[var] = 0;
    r.add_term(reduced, c * powers[e[var]]);
  }
  return r;
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& variables) const {
  std::vector<size_t> target_index(variables_.size());
  for (size_t k = 0; k < variables_.size(); ++k) {
    auto it = std::find(variables.begin(), variables.end(), variables_[k]);
    target_index[k] = it == variables.end() ? variables.size() : static_cast<size_t>(it - variables.begin());
  }
  Polynomial r(variables);
  for (const auto& [e, c] : terms_) {
    Exponent mapped(variables.size(), 0);
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (target_index[k] == variables.size()) {
        throw Error(ErrorKind::unknown_symbol, "'" + variables_[k] + "' missing from target variable list");
      }
      mapped[target_index[k]] = e[k];
    }
    r.add_term(mapped, c);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  GaussianRational inv = GaussianRational(1) / leading_coefficient();
  Polynomial r = *this;
  r *= inv;
  return r;
}

Polynomial Polynomial::shifted(size_t var, unsigned k) const {
  Polynomial r(variables_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    s[var] += k;
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

Complex Polynomial::evaluate(const std::vector<Complex>& point) const {
  const Precision bits = point.empty() ? kDefaultPrecision : point.front().precision();
  Complex sum(bits);
  std::vector<std::vector<Complex>> powers(point.size());
  for (size_t k = 0; k < point.size(); ++k) powers[k].push_back(Complex(Real(1L, bits), Real(bits)));
  for (const auto& [e, c] : terms_) {
    Complex term = c.to_complex(bits);
    for (size_t k = 0; k < e.size(); ++k) {
      while (powers[k].size() <= e[k]) powers[k].push_back(powers[k].back() * point[k]);
      if (e[k] > 0) term = term * powers[k][e[k]];
    }
    sum += term;
  }
  return sum;
}

Real Polynomial::evaluate_magnitude(const std::vector<Complex>& point) const {
  const Precision bits = point.empty() ? kDefaultPrecision : point.front().precision();
  std::vector<Real> moduli;
  for (const Complex& z : point) moduli.push_back(abs(z));
  Real sum(bits);
  for (const auto& [e, c] : terms_) {
    Real term = abs(c.to_complex(bits));
    for (size_t k = 0; k < e.size(); ++k) {
      for (unsigned j = 0; j < e[k]; ++j) term *= moduli[k];
    }
    sum += term;
  }
  return sum;
}

namespace {

std::string monomial_text(const std::vector<std::string>& vars, const Exponent& e) {
  std::string out;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[k];
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::string mono = monomial_text(variables_, e);
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re) < 0;
      Rational mag = abs(c.re);
      if (mono.empty() || mag != 1) coeff = mag.get_str();
    } else if (sgn(c.re) == 0) {
      negative = sgn(c.im) < 0;
      Rational mag = abs(c.im);
      coeff = mag == 1 ? "i" : mag.get_str() + "*i";
    } else {
      coeff = c.to_string();
    }
    std::string body = coeff;
    if (!mono.empty()) body = coeff.empty() ? mono : coeff + "*" + mono;
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

}  // namespace germ
