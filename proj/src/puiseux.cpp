#include "germ/puiseux.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "germ/algebra.hpp"
#include "germ/error.hpp"
#include "germ/roots.hpp"

namespace germ {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();
constexpr int kMaxTruncation = 512;
constexpr int kMaxDepth = 64;

using Series = std::vector<Complex>;
using Terms = std::map<std::pair<int, int>, Complex>;  // (i, j) -> coefficient

Real zero_tolerance(Precision bits) { return Real::power_of_two(-static_cast<long>(bits) / 2, bits); }

void require_plane(const Polynomial& f) {
  if (f.variable_count() != 2) throw Error(ErrorKind::invalid_argument, "expected a polynomial in two variables");
}

Series series_mul(const Series& a, const Series& b, size_t n, Precision bits) {
  Series out(n, Complex(bits));
  for (size_t i = 0; i < std::min(n, a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series series_inverse(const Series& a, size_t n, Precision bits) {
  Series out(n, Complex(bits));
  const Complex inv0 = Complex(Real(1L, bits), Real(bits)) / a[0];
  out[0] = inv0;
  for (size_t k = 1; k < n; ++k) {
    Complex acc(bits);
    for (size_t j = 1; j <= k && j < a.size(); ++j) {
      if (!a[j].is_zero()) acc += a[j] * out[k - j];
    }
    out[k] = -(acc * inv0);
  }
  return out;
}

// Solve sum_j A_j(xi) z^j = 0 for z(xi) with z(0) = 0, modulo xi^(n).
Series solve_smooth(const std::vector<Series>& a, size_t n, Precision bits) {
  Series z(n, Complex(bits));
  size_t prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    const size_t top = std::min(a.size() - 1, prec - 1);
    Series h = a[top];
    h.resize(prec, Complex(bits));
    Series d(prec, Complex(bits));
    for (size_t j = top; j-- > 0;) {
      d = series_mul(d, z, prec, bits);
      for (size_t k = 0; k < prec; ++k) d[k] += h[k];
      h = series_mul(h, z, prec, bits);
      for (size_t k = 0; k < prec && k < a[j].size(); ++k) h[k] += a[j][k];
    }
    const Series step = series_mul(h, series_inverse(d, prec, bits), prec, bits);
    for (size_t k = 0; k < prec; ++k) z[k] -= step[k];
  }
  return z;
}

Real binomial(unsigned n, unsigned k, Precision bits) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Real(mpq_class(b), bits);
}

std::vector<LatticePoint> lower_chain(const std::vector<LatticePoint>& support) {
  std::map<int, int> lowest;  // i -> min j
  for (const LatticePoint& p : support) {
    auto it = lowest.find(p.i);
    if (it == lowest.end() || p.j < it->second) lowest[p.i] = p.j;
  }
  LatticePoint target{0, kUnbounded};
  for (const auto& [i, j] : lowest) {
    if (j < target.j) target = {i, j};
  }
  std::vector<LatticePoint> hull;
  for (const auto& [i, j] : lowest) {
    if (i > target.i) break;
    const LatticePoint p{i, j};
    while (hull.size() >= 2) {
      const LatticePoint& o = hull[hull.size() - 2];
      const LatticePoint& a = hull.back();
      const long cross = static_cast<long>(a.i - o.i) * (p.j - o.j) - static_cast<long>(a.j - o.j) * (p.i - o.i);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

struct Edge {
  LatticePoint start;
  LatticePoint end;
  int q;       // denominator of the branch exponent
  int m;       // numerator
  int length;  // lattice length
  int k0;      // q*i + m*j along the edge
};

std::vector<Edge> edges_of(const std::vector<LatticePoint>& chain) {
  std::vector<Edge> out;
  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    const LatticePoint a = chain[k];
    const LatticePoint b = chain[k + 1];
    const int di = b.i - a.i;
    const int dj = a.j - b.j;
    const int g = std::gcd(di, dj);
    Edge e{a, b, dj / g, di / g, g, 0};
    e.k0 = e.q * a.i + e.m * a.j;
    out.push_back(e);
  }
  return out;
}

struct Level {
  Terms g;
  int known = kUnbounded;  // g is exact in powers of xi up to `known`
  int ramification = 1;
  std::vector<std::pair<int, Complex>> prefix;  // dependent = sum c xi^k + xi^shift * z
  int shift = 0;
  int depth = 0;
};

class Expander {
 public:
  Expander(int truncation, Precision bits)
      : truncation_(truncation), bits_(bits), tol_(zero_tolerance(bits)), cap_(2 * truncation + 32) {}

  void run(const Polynomial& f) {
    Level top;
    for (const auto& [e, c] : f.terms()) top.g[{static_cast<int>(e[0]), static_cast<int>(e[1])}] = c.to_complex(bits_);
    std::vector<LatticePoint> support;
    for (const auto& [e, c] : f.terms()) support.push_back({static_cast<int>(e[0]), static_cast<int>(e[1])});
    for (const Edge& edge : edges_of(lower_chain(support))) {
      std::vector<std::string> w{"w"};
      Polynomial p(w);
      for (int k = 0; k <= edge.length; ++k) {
        const Exponent ex{static_cast<unsigned>(edge.end.i - edge.m * k), static_cast<unsigned>(edge.end.j + edge.q * k)};
        p.add_term({static_cast<unsigned>(k)}, f.coefficient_of(ex));
      }
      const auto roots = univariate_roots(p, bits_);
      for (size_t k = 0; k < roots.size();) {
        size_t next = k + 1;
        while (next < roots.size() && roots[next].center.re == roots[k].center.re &&
               roots[next].center.im == roots[k].center.im) {
          ++next;
        }
        descend(top, edge, roots[k].center, static_cast<int>(next - k));
        k = next;
      }
    }
  }

  std::vector<PuiseuxBranch> branches;

 private:
  Level substitute(const Level& level, const Edge& edge, const Complex& c) const {
    Level out;
    out.depth = level.depth + 1;
    out.ramification = level.ramification * edge.q;
    for (const auto& [k, coef] : level.prefix) out.prefix.emplace_back(k * edge.q, coef);
    out.shift = level.shift * edge.q + edge.m;
    out.prefix.emplace_back(out.shift, c);

    int max_j = 0;
    for (const auto& [ij, a] : level.g) max_j = std::max(max_j, ij.second);
    std::vector<Complex> cpow(static_cast<size_t>(max_j) + 1, Complex(bits_));
    cpow[0] = Complex(Real(1L, bits_), Real(bits_));
    for (int k = 1; k <= max_j; ++k) cpow[k] = cpow[k - 1] * c;
    std::vector<std::vector<Real>> binom(static_cast<size_t>(max_j) + 1);
    for (int j = 0; j <= max_j; ++j) {
      for (int l = 0; l <= j; ++l) binom[j].push_back(binomial(j, l, bits_));
    }

    bool dropped = false;
    for (const auto& [ij, a] : level.g) {
      const auto [i, j] = ij;
      if (i > level.known) continue;
      const long e = static_cast<long>(edge.q) * i + static_cast<long>(edge.m) * j - edge.k0;
      if (e < 0) continue;
      if (e > cap_) {
        dropped = true;
        continue;
      }
      for (int l = 0; l <= j; ++l) {
        Complex term = a * cpow[j - l] * binom[j][l];
        auto [it, inserted] = out.g.try_emplace({static_cast<int>(e), l}, std::move(term));
        if (!inserted) it->second += term;
      }
    }
    if (level.known == kUnbounded) {
      out.known = dropped ? cap_ : kUnbounded;
    } else {
      const long k = static_cast<long>(edge.q) * (level.known + 1) - edge.k0 - 1;
      out.known = static_cast<int>(std::min<long>(k, cap_));
    }
    return out;
  }

  void descend(const Level& level, const Edge& edge, const Complex& root, int multiplicity) {
    const Complex c = principal_root(root, edge.q);
    Level next = substitute(level, edge, c);
    if (next.known < 0) throw Error(ErrorKind::truncation, "expansion ran past the truncation order");
    clean(next);
    if (multiplicity == 1) {
      smooth(next);
    } else {
      singular(std::move(next), multiplicity);
    }
  }

  // Drop coefficients below the zero tolerance relative to the largest known one.
  void clean(Level& level) const {
    Real scale(bits_);
    for (const auto& [ij, a] : level.g) {
      if (ij.first <= level.known) scale = max(scale, abs(a));
    }
    const Real threshold = scale * tol_;
    for (auto it = level.g.begin(); it != level.g.end();) {
      if (abs(it->second) <= threshold) {
        it = level.g.erase(it);
      } else {
        ++it;
      }
    }
  }

  void singular(Level level, int r) {
    if (level.depth > kMaxDepth) throw Error(ErrorKind::precision, "Newton-Puiseux recursion too deep");
    while (true) {
      if (!level.g.count({0, r})) throw Error(ErrorKind::precision, "lost the leading coefficient of a cluster");
      std::vector<LatticePoint> pts;
      int j0 = r;
      for (const auto& [ij, a] : level.g) {
        if (ij.first <= level.known && ij.second <= r) {
          pts.push_back({ij.first, ij.second});
          j0 = std::min(j0, ij.second);
        }
      }
      if (j0 == 0) {
        for (const Edge& edge : edges_of(lower_chain(pts))) split_edge(level, edge);
        return;
      }
      if (j0 >= 2) {
        if (level.known == kUnbounded) throw Error(ErrorKind::not_squarefree, "germ has a repeated branch");
        throw Error(ErrorKind::truncation, "branches not separated at this truncation");
      }
      // z = 0 solves g up to the known order: a branch ending here.
      finish(level, Series{}, level.known == kUnbounded ? kUnbounded : static_cast<long>(level.shift) + level.known);
      Terms reduced;
      for (const auto& [ij, a] : level.g) {
        if (ij.second > 0) reduced.emplace(std::make_pair(ij.first, ij.second - 1), a);
      }
      level.g = std::move(reduced);
      if (--r == 1) {
        smooth(level);
        return;
      }
    }
  }

  void split_edge(const Level& level, const Edge& edge) {
    NumericPolynomial p;
    for (int k = 0; k <= edge.length; ++k) {
      auto it = level.g.find({edge.end.i - edge.m * k, edge.end.j + edge.q * k});
      p.push_back(it == level.g.end() ? Complex(bits_) : it->second);
    }
    auto clusters = root_clusters(p, bits_);
    // Perturbed multiple roots can stay split; merge anything this close.
    const Real merge = Real::power_of_two(-static_cast<long>(bits_) / 8, bits_);
    for (bool merged = true; merged;) {
      merged = false;
      for (size_t a = 0; a < clusters.size() && !merged; ++a) {
        for (size_t b = a + 1; b < clusters.size(); ++b) {
          const Complex& ca = clusters[a].ball.center;
          const Complex& cb = clusters[b].ball.center;
          if (abs(ca - cb) <= merge * max(Real(1L, bits_), abs(ca))) {
            const Real wa(static_cast<long>(clusters[a].multiplicity), bits_);
            const Real wb(static_cast<long>(clusters[b].multiplicity), bits_);
            clusters[a].ball.center = (ca * wa + cb * wb) / (wa + wb);
            clusters[a].multiplicity += clusters[b].multiplicity;
            clusters.erase(clusters.begin() + static_cast<long>(b));
            merged = true;
            break;
          }
        }
      }
    }
    std::vector<ComplexBall> centers;
    std::vector<int> mult;
    for (auto& cl : clusters) {
      centers.push_back(ComplexBall(polish(p, cl.ball.center, cl.multiplicity), Real(bits_)));
      mult.push_back(cl.multiplicity);
    }
    std::vector<size_t> order(centers.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<ComplexBall> sorted = centers;
    sort_by_center(sorted);
    for (const ComplexBall& s : sorted) {
      for (size_t k = 0; k < centers.size(); ++k) {
        if (mult[k] > 0 && centers[k].center.re == s.center.re && centers[k].center.im == s.center.im) {
          descend(level, edge, centers[k].center, mult[k]);
          mult[k] = 0;
          break;
        }
      }
    }
  }

  // Newton on the (r-1)-th derivative, where an r-fold root is simple.
  Complex polish(NumericPolynomial p, Complex z, int r) const {
    for (int k = 1; k < r; ++k) {
      NumericPolynomial d;
      for (size_t n = 1; n < p.size(); ++n) d.push_back(p[n] * Real(static_cast<long>(n), bits_));
      p = std::move(d);
    }
    NumericPolynomial dp;
    for (size_t n = 1; n < p.size(); ++n) dp.push_back(p[n] * Real(static_cast<long>(n), bits_));
    Real residual = abs(evaluate(p, z));
    for (int it = 0; it < 8 && !residual.is_zero(); ++it) {
      const Complex slope = evaluate(dp, z);
      if (slope.is_zero()) break;
      const Complex next = z - evaluate(p, z) / slope;
      const Real next_residual = abs(evaluate(p, next));
      if (next_residual >= residual) break;
      z = next;
      residual = next_residual;
    }
    return z;
  }

  void smooth(const Level& level) {
    const long want = static_cast<long>(truncation_) - level.shift;
    const int n = static_cast<int>(std::max<long>(0, std::min<long>(level.known, want)));
    if (n == 0) {
      finish(level, Series{}, level.shift);
      return;
    }
    int max_j = 0;
    for (const auto& [ij, a] : level.g) max_j = std::max(max_j, ij.second);
    std::vector<Series> a(static_cast<size_t>(max_j) + 1, Series(static_cast<size_t>(n) + 1, Complex(bits_)));
    for (const auto& [ij, c] : level.g) {
      if (ij.first <= n) a[ij.second][ij.first] = c;
    }
    if (a.size() < 2 || a[1][0].is_zero()) throw Error(ErrorKind::precision, "smooth branch lost its derivative");
    a[0][0] = Complex(bits_);
    finish(level, solve_smooth(a, static_cast<size_t>(n) + 1, bits_), static_cast<long>(level.shift) + n);
  }

  // y_known: the dependent series is exact modulo t^(y_known + 1).
  void finish(const Level& level, const Series& z, long y_known) {
    // The singular part (prefix) is always kept, whatever the truncation.
    const int order = static_cast<int>(std::min<long>(y_known, std::max(truncation_, level.shift)));
    Series y(static_cast<size_t>(order) + 1, Complex(bits_));
    for (const auto& [k, c] : level.prefix) {
      if (k <= order) y[k] += c;
    }
    for (size_t k = 0; k < z.size(); ++k) {
      const size_t at = k + static_cast<size_t>(level.shift);
      if (at <= static_cast<size_t>(order)) y[at] += z[k];
    }
    PuiseuxBranch b;
    b.ramification = level.ramification;
    b.truncation_order = order;

    Real scale(1L, bits_);
    for (const Complex& c : y) scale = max(scale, abs(c));
    const Real threshold = scale * tol_;
    int g = b.ramification;
    for (int k = 0; k <= order; ++k) {
      if (abs(y[k]) > threshold) g = std::gcd(g, k);
    }
    if (g > 1) {
      Series reduced;
      for (int k = 0; k <= order; k += g) reduced.push_back(y[k]);
      y = std::move(reduced);
      b.ramification /= g;
      b.truncation_order = order / g;
    }
    for (size_t k = 0; k < y.size(); ++k) {
      if (abs(y[k]) > threshold) {
        b.exponents.push_back(static_cast<int>(k));
        const Real radius = tol_ * max(Real(1L, bits_), abs(y[k]));
        b.coefficients.emplace_back(y[k], radius);
      }
    }
    b.series = std::move(y);
    branches.push_back(std::move(b));
  }

  int truncation_;
  Precision bits_;
  Real tol_;
  int cap_;
};

int compare_reals(const Real& a, const Real& b, const Real& tol) {
  if (abs(a - b) <= tol) return 0;
  return a < b ? -1 : 1;
}

bool branch_less(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  auto rank = [](const PuiseuxBranch& p) { return p.axis == AxisKind::vertical ? 2 : p.axis == AxisKind::horizontal ? 1 : 0; };
  if (a.ramification != b.ramification) return a.ramification < b.ramification;
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  const auto la = a.leading_exponent();
  const auto lb = b.leading_exponent();
  if (la && lb && *la != *lb) return *la < *lb;
  const size_t n = std::min(a.exponents.size(), b.exponents.size());
  for (size_t k = 0; k < n; ++k) {
    if (a.exponents[k] != b.exponents[k]) return a.exponents[k] < b.exponents[k];
    const Complex& ca = a.coefficients[k].center;
    const Complex& cb = b.coefficients[k].center;
    const Precision bits = ca.precision();
    const Real tol = Real::power_of_two(-static_cast<long>(bits) / 4, bits) * max(Real(1L, bits), abs(ca));
    if (int c = compare_reals(ca.re, cb.re, tol)) return c < 0;
    if (int c = compare_reals(ca.im, cb.im, tol)) return c < 0;
  }
  return a.exponents.size() < b.exponents.size();
}

// ord_y f(0, y); nullopt when the first variable divides f.
std::optional<int> order_in_second(const Polynomial& f) {
  std::optional<int> n;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] == 0 && (!n || static_cast<int>(e[1]) < *n)) n = static_cast<int>(e[1]);
  }
  return n;
}

// f divided by x^a y^b where the exponents are the low degrees.
std::pair<Polynomial, std::pair<int, int>> strip_axes(const Polynomial& f) {
  const int a = f.low_degree(0);
  const int b = f.low_degree(1);
  if (a == 0 && b == 0) return {f, {0, 0}};
  Polynomial out(f.variables());
  for (const auto& [e, c] : f.terms()) out.add_term({e[0] - a, e[1] - b}, c);
  return {out, {a, b}};
}

}  // namespace

std::optional<Rational> PuiseuxBranch::leading_exponent() const {
  if (axis != AxisKind::none || exponents.empty()) return std::nullopt;
  Rational a(exponents.front(), ramification);
  a.canonicalize();
  return a;
}

std::optional<int> PuiseuxBranch::dependent_order() const {
  if (axis == AxisKind::horizontal || exponents.empty()) return std::nullopt;
  if (axis == AxisKind::vertical) return 1;
  return exponents.front();
}

std::vector<NewtonSegment> newton_polygon(const Polynomial& f) {
  require_plane(f);
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "Newton polygon of zero");
  if (!f.constant_term().is_zero()) throw Error(ErrorKind::unit_germ, "germ does not vanish at the origin");
  std::vector<LatticePoint> support;
  for (const auto& [e, c] : f.terms()) support.push_back({static_cast<int>(e[0]), static_cast<int>(e[1])});
  std::vector<NewtonSegment> out;
  for (const Edge& e : edges_of(lower_chain(support))) {
    NewtonSegment s;
    s.start = e.start;
    s.end = e.end;
    s.slope = Rational(e.end.j - e.start.j, e.end.i - e.start.i);
    s.slope.canonicalize();
    s.lattice_length = e.length;
    out.push_back(s);
  }
  return out;
}

int default_truncation(const Polynomial& f) {
  const int d = std::max(1, f.total_degree());
  return std::min(2 * d * d, kMaxTruncation);
}

BranchDecomposition puiseux_branches(const Polynomial& f, int truncation, Precision bits) {
  require_plane(f);
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "branches of the zero polynomial");
  if (!f.constant_term().is_zero()) throw Error(ErrorKind::unit_germ, "germ does not vanish at the origin");
  if (truncation < 1) throw Error(ErrorKind::invalid_argument, "truncation must be at least 1");
  BranchDecomposition out;
  out.germ = f;
  auto [rest, axes] = strip_axes(f);
  if (axes.first > 1 || axes.second > 1) throw Error(ErrorKind::not_squarefree, "repeated axis factor");
  Expander expander(truncation, bits);
  if (rest.constant_term().is_zero()) expander.run(rest);
  out.branches = std::move(expander.branches);
  int expected = 0;
  if (rest.constant_term().is_zero()) expected = *order_in_second(rest);
  int total = 0;
  for (const auto& b : out.branches) total += b.ramification;
  if (total != expected) {
    throw Error(ErrorKind::precision, "branch degrees add up to " + std::to_string(total) + ", expected " +
                                          std::to_string(expected));
  }
  if (axes.second == 1) {
    PuiseuxBranch h;
    h.axis = AxisKind::horizontal;
    h.truncation_order = kUnbounded;
    out.branches.push_back(std::move(h));
  }
  if (axes.first == 1) {
    PuiseuxBranch v;
    v.axis = AxisKind::vertical;
    v.truncation_order = kUnbounded;
    out.branches.push_back(std::move(v));
  }
  std::stable_sort(out.branches.begin(), out.branches.end(), branch_less);
  out.multiplicities.assign(out.branches.size(), 1);
  return out;
}

std::optional<int> order_along(const Polynomial& f, const PuiseuxBranch& branch, Precision bits) {
  require_plane(f);
  if (f.is_zero()) return std::nullopt;
  if (branch.axis != AxisKind::none) {
    const size_t fixed = branch.axis == AxisKind::vertical ? 0 : 1;
    std::optional<int> best;
    for (const auto& [e, c] : f.terms()) {
      if (e[fixed] != 0) continue;
      const int k = static_cast<int>(e[1 - fixed]);
      if (!best || k < *best) best = k;
    }
    return best;
  }
  const int order = branch.truncation_order;
  const size_t n = static_cast<size_t>(order) + 1;
  const int e = branch.ramification;
  const Series& y = branch.series;
  Series ya;
  for (const Complex& c : y) ya.push_back(Complex(abs(c), Real(bits)));

  int max_j = 0;
  for (const auto& [ex, c] : f.terms()) max_j = std::max(max_j, static_cast<int>(ex[1]));
  max_j = std::min(max_j, order);
  std::vector<Series> pw{Series{Complex(Real(1L, bits), Real(bits))}};
  std::vector<Series> pa{pw[0]};
  for (int j = 1; j <= max_j; ++j) {
    pw.push_back(series_mul(pw.back(), y, n, bits));
    pa.push_back(series_mul(pa.back(), ya, n, bits));
  }
  Series value(n, Complex(bits));
  std::vector<Real> bound(n, Real(bits));
  for (const auto& [ex, c] : f.terms()) {
    const int j = static_cast<int>(ex[1]);
    if (j > max_j) continue;
    const long start = static_cast<long>(e) * ex[0];
    if (start >= static_cast<long>(n)) continue;
    const Complex cc = c.to_complex(bits);
    const Real ca = abs(cc);
    for (size_t k = 0; k < pw[j].size() && start + static_cast<long>(k) < static_cast<long>(n); ++k) {
      if (pw[j][k].is_zero() && pa[j][k].is_zero()) continue;
      value[start + k] += cc * pw[j][k];
      bound[start + k] += ca * pa[j][k].re;
    }
  }
  const Real tol = zero_tolerance(bits);
  for (size_t k = 0; k < n; ++k) {
    if (value[k].is_zero()) continue;
    if (abs(value[k]) > tol * bound[k]) return static_cast<int>(k);
  }
  return std::nullopt;
}

namespace {

struct TruncationShort {};

int branch_order_or_throw(const Polynomial& f, const PuiseuxBranch& b, Precision bits) {
  auto k = order_along(f, b, bits);
  if (!k) throw TruncationShort{};
  return *k;
}

int start_truncation(const Polynomial& f) { return std::min(default_truncation(f), 32); }

template <typename Fn>
auto with_truncation_retries(int start, Fn&& fn) {
  for (int t = start;; t *= 2) {
    try {
      return fn(std::min(t, kMaxTruncation));
    } catch (const TruncationShort&) {
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::truncation) throw;
    }
    if (t >= kMaxTruncation) {
      throw Error(ErrorKind::truncation, "no decision within " + std::to_string(kMaxTruncation) + " terms");
    }
  }
}

bool vanishes_at_origin(const Polynomial& p) { return !p.is_zero() && p.constant_term().is_zero(); }

// e_a * sum over conjugates of b of ord_s(a - b^(l)) / lcm(e_a, e_b).
int contact(const PuiseuxBranch& a, const PuiseuxBranch& b, Precision bits) {
  const int ea = a.ramification;
  const int eb = b.ramification;
  const int lcm = std::lcm(ea, eb);
  const int sa = lcm / ea;
  const int sb = lcm / eb;
  const long known_a = a.axis == AxisKind::horizontal ? kUnbounded : static_cast<long>(a.truncation_order) * sa;
  const long known_b = b.axis == AxisKind::horizontal ? kUnbounded : static_cast<long>(b.truncation_order) * sb;
  const long known = std::min(known_a, known_b);
  if (known == kUnbounded) throw Error(ErrorKind::internal, "two horizontal branches");
  const Real tol = zero_tolerance(bits);
  const Real two_pi = Real::pi(bits) * Real(2L, bits);
  long total = 0;
  for (int l = 0; l < eb; ++l) {
    const Complex omega = polar(Real(1L, bits), two_pi * Real(static_cast<long>(l), bits) / Real(static_cast<long>(eb), bits));
    std::optional<long> found;
    for (long k = 1; k <= known && !found; ++k) {
      Complex ta(bits);
      Complex tb(bits);
      if (k % sa == 0 && a.axis == AxisKind::none) ta = a.series[k / sa];
      if (k % sb == 0 && b.axis == AxisKind::none) tb = b.series[k / sb] * pow(omega, static_cast<int>((k / sb) % eb));
      const Complex d = ta - tb;
      if (d.is_zero()) continue;
      if (abs(d) > tol * max(Real(1L, bits), max(abs(ta), abs(tb)))) found = k;
    }
    if (!found) throw TruncationShort{};
    total += *found;
  }
  if ((total * ea) % lcm != 0) throw Error(ErrorKind::internal, "non-integral branch contact");
  return static_cast<int>(total * ea / lcm);
}

int delta_from_roots(const Polynomial& f, Precision bits) {
  // The roots are taken over the first variable, so it must not divide f.
  Polynomial g = f;
  const auto& vars = f.variables();
  const Polynomial x = Polynomial::variable(vars, vars[0]);
  const Polynomial y = Polynomial::variable(vars, vars[1]);
  for (long shear = 1; !order_in_second(g); ++shear) g = f.substitute({x + GaussianRational(shear) * y, y});
  const int n = *order_in_second(g);
  return with_truncation_retries(start_truncation(g), [&](int t) {
    const auto dec = puiseux_branches(g, t, bits);
    const auto& br = dec.branches;
    long disc = 0;
    for (const auto& b : br) {
      const int e = b.ramification;
      for (int d = 1; d < e; ++d) {
        std::optional<int> m;
        for (int k : b.exponents) {
          if ((static_cast<long>(d) * k) % e != 0) {
            m = k;
            break;
          }
        }
        if (!m) throw TruncationShort{};
        disc += *m;
      }
    }
    for (size_t a = 0; a < br.size(); ++a) {
      for (size_t b = a + 1; b < br.size(); ++b) disc += 2L * contact(br[a], br[b], bits);
    }
    const long twice = disc - n + static_cast<long>(br.size());
    if (twice < 0 || twice % 2 != 0) throw Error(ErrorKind::internal, "odd discriminant count");
    return static_cast<int>(twice / 2);
  });
}

}  // namespace

int intersection_multiplicity(const Polynomial& f, const Polynomial& g, Precision bits) {
  require_plane(f);
  if (f.is_zero() || g.is_zero()) {
    throw Error(ErrorKind::infinite_multiplicity, "intersection with the zero polynomial");
  }
  const Polynomial gg = g.with_variables(f.variables());
  if (!vanishes_at_origin(f) || !vanishes_at_origin(gg)) return 0;
  const Polynomial common = gcd(f, gg);
  if (!common.is_constant() && common.constant_term().is_zero()) {
    throw Error(ErrorKind::infinite_multiplicity, "common component " + common.to_string() + " through the origin");
  }
  int total = 0;
  for (const auto& factor : squarefree_decomposition(gg)) {
    if (!vanishes_at_origin(factor.factor)) continue;
    total += factor.multiplicity * with_truncation_retries(start_truncation(factor.factor), [&](int t) {
      int sum = 0;
      for (const auto& b : puiseux_branches(factor.factor, t, bits).branches) sum += branch_order_or_throw(f, b, bits);
      return sum;
    });
  }
  return total;
}

int branch_count(const Polynomial& f, Precision bits) {
  return static_cast<int>(puiseux_branches(f, 1, bits).branches.size());
}

SingularityInvariants singularity_invariants(const Polynomial& f, Precision bits) {
  require_plane(f);
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "invariants of the zero germ");
  if (!f.constant_term().is_zero()) throw Error(ErrorKind::unit_germ, "germ does not vanish at the origin");
  const Polynomial fx = f.derivative(0);
  const Polynomial fy = f.derivative(1);
  SingularityInvariants out;
  if (vanishes_at_origin(fx) && vanishes_at_origin(fy)) {
    const Polynomial common = gcd(fx, fy);
    if (common.is_zero() || (!common.is_constant() && common.constant_term().is_zero())) {
      throw Error(ErrorKind::non_isolated, "critical locus of " + f.to_string() + " is not isolated at the origin");
    }
    out.mu = intersection_multiplicity(fx, fy, bits);
  } else if (fx.is_zero() && fy.is_zero()) {
    throw Error(ErrorKind::non_isolated, "constant germ");
  }
  out.branches = branch_count(f, bits);
  out.delta = delta_from_roots(f, bits);
  if (out.mu != 2 * out.delta - out.branches + 1) {
    throw Error(ErrorKind::internal, "Milnor relation fails: mu = " + std::to_string(out.mu) + ", delta = " +
                                         std::to_string(out.delta) + ", r = " + std::to_string(out.branches));
  }
  return out;
}

int milnor_number(const Polynomial& f, Precision bits) { return singularity_invariants(f, bits).mu; }

int delta_invariant(const Polynomial& f, Precision bits) { return singularity_invariants(f, bits).delta; }

}  // namespace germ
