#include "germ/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "germ/error.hpp"

namespace germ {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::int64_t IntegerMatrix::trace() const {
  if (rows != cols) throw Error(ErrorKind::invalid_argument, "trace of a non-square matrix");
  std::int64_t t = 0;
  for (int i = 0; i < rows; ++i) t += entries[i][i];
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::invalid_argument, "matrix shapes do not match");
  IntegerMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

Chain operator*(const IntegerMatrix& a, const Chain& x) {
  if (a.cols != static_cast<int>(x.size())) throw Error(ErrorKind::invalid_argument, "matrix shapes do not match");
  Chain y(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) y[i] += a(i, j) * x[j];
  return y;
}

namespace {

// Elementary operations applied to the working matrix and mirrored on the
// transforms so that left * input * right stays equal to the working matrix.
struct Reducer {
  SmithForm s;
  IntegerMatrix& a() { return s.diagonal; }

  void swap_rows(int i, int j) {
    std::swap(a().entries[i], a().entries[j]);
    std::swap(s.left.entries[i], s.left.entries[j]);
    for (auto& row : s.left_inverse.entries) std::swap(row[i], row[j]);
  }
  void swap_cols(int i, int j) {
    for (auto& row : a().entries) std::swap(row[i], row[j]);
    for (auto& row : s.right.entries) std::swap(row[i], row[j]);
    std::swap(s.right_inverse.entries[i], s.right_inverse.entries[j]);
  }
  // row_i -= q row_t
  void add_row(int i, int t, std::int64_t q) {
    for (int j = 0; j < a().cols; ++j) a()(i, j) -= q * a()(t, j);
    for (int j = 0; j < s.left.cols; ++j) s.left(i, j) -= q * s.left(t, j);
    for (int r = 0; r < s.left_inverse.rows; ++r) s.left_inverse(r, t) += q * s.left_inverse(r, i);
  }
  // col_j -= q col_t
  void add_col(int j, int t, std::int64_t q) {
    for (int i = 0; i < a().rows; ++i) a()(i, j) -= q * a()(i, t);
    for (int i = 0; i < s.right.rows; ++i) s.right(i, j) -= q * s.right(i, t);
    for (int c = 0; c < s.right_inverse.cols; ++c) s.right_inverse(t, c) += q * s.right_inverse(j, c);
  }
  void negate_row(int i) {
    for (auto& v : a().entries[i]) v = -v;
    for (auto& v : s.left.entries[i]) v = -v;
    for (auto& row : s.left_inverse.entries) row[i] = -row[i];
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
  Reducer r;
  r.s.diagonal = input;
  r.s.left = r.s.left_inverse = IntegerMatrix::identity(input.rows);
  r.s.right = r.s.right_inverse = IntegerMatrix::identity(input.cols);
  IntegerMatrix& a = r.a();
  const int limit = std::min(input.rows, input.cols);
  int t = 0;
  for (; t < limit; ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      int pi = -1;
      int pj = -1;
      for (int i = t; i < a.rows; ++i)
        for (int j = t; j < a.cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < a.rows; ++i) {
        if (a(i, t) == 0) continue;
        r.add_row(i, t, a(i, t) / a(t, t));
        clean = clean && a(i, t) == 0;
      }
      for (int j = t + 1; j < a.cols; ++j) {
        if (a(t, j) == 0) continue;
        r.add_col(j, t, a(t, j) / a(t, t));
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      int offending = -1;
      for (int i = t + 1; i < a.rows && offending < 0; ++i)
        for (int j = t + 1; j < a.cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (offending < 0) break;
      r.add_row(t, offending, -1);
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) r.negate_row(t);
  }
  r.s.rank = t;
  return r.s;
}

MarkedDiskComplex::MarkedDiskComplex(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (n <= 0 || n % 2 != 0) throw Error(ErrorKind::invalid_pairing, "number of marked points must be positive and even");
  if (static_cast<int>(pairs_.size()) * 2 != n) throw Error(ErrorKind::invalid_pairing, "pairing must have n/2 pairs");
  vertex_.assign(n, -1);
  for (auto& [a, b] : pairs_) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b || vertex_[a] != -1 || vertex_[b] != -1) {
      throw Error(ErrorKind::invalid_pairing,
                  "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") breaks the perfect matching");
    }
    if (a > b) std::swap(a, b);
    vertex_[a] = vertex_[b] = -2;
  }
  // Vertices numbered by smallest label.
  for (int k = 0; k < n; ++k) {
    if (vertex_[k] != -2) continue;
    const int id = static_cast<int>(representatives_.size());
    representatives_.push_back(k);
    for (const auto& [a, b] : pairs_) {
      if (a == k) vertex_[a] = vertex_[b] = id;
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
}

IntegerMatrix MarkedDiskComplex::boundary1() const {
  IntegerMatrix d(vertex_count(), n_);
  for (int k = 0; k < n_; ++k) {
    d(vertex_[(k + 1) % n_], k) += 1;
    d(vertex_[k], k) -= 1;
  }
  return d;
}

IntegerMatrix MarkedDiskComplex::boundary2() const {
  IntegerMatrix d(n_, 1);
  for (int k = 0; k < n_; ++k) d(k, 0) = 1;
  return d;
}

bool MarkedDiskComplex::rotation_compatible(int shift) const {
  const int s = ((shift % n_) + n_) % n_;
  std::set<std::pair<int, int>> original(pairs_.begin(), pairs_.end());
  for (const auto& [a, b] : pairs_) {
    int c = (a + s) % n_;
    int d = (b + s) % n_;
    if (c > d) std::swap(c, d);
    if (!original.count({c, d})) return false;
  }
  return true;
}

namespace {

// ker d1 / im d2 via two Smith forms. Kernel coordinates of a cycle z are
// (right_inverse * z)[rank..]; the quotient coordinates are left2 times
// those, with the first coordinate spanning the image of the disk.
struct Quotient {
  SmithForm d1;
  SmithForm image;
  int kernel_rank = 0;

  explicit Quotient(const MarkedDiskComplex& c) : d1(smith_normal_form(c.boundary1())) {
    kernel_rank = c.points() - d1.rank;
    image = smith_normal_form(column(kernel_coordinates(disk(c))));
  }

  static Chain disk(const MarkedDiskComplex& c) { return Chain(c.points(), 1); }

  static IntegerMatrix column(const Chain& x) {
    IntegerMatrix m(static_cast<int>(x.size()), 1);
    for (size_t i = 0; i < x.size(); ++i) m(static_cast<int>(i), 0) = x[i];
    return m;
  }

  Chain kernel_coordinates(const Chain& z) const {
    const Chain full = d1.right_inverse * z;
    for (int i = 0; i < d1.rank; ++i) {
      if (full[i] != 0) throw Error(ErrorKind::internal, "chain is not a cycle");
    }
    return Chain(full.begin() + d1.rank, full.end());
  }

  // Coordinates in the free part of H1.
  Chain homology_coordinates(const Chain& z) const {
    const Chain y = image.left * kernel_coordinates(z);
    return Chain(y.begin() + image.rank, y.end());
  }

  std::vector<Chain> basis() const {
    std::vector<Chain> out;
    for (int j = image.rank; j < kernel_rank; ++j) {
      // Kernel combination = column j of left2^{-1}; lift through right.
      Chain full(d1.right.rows, 0);
      for (int k = 0; k < kernel_rank; ++k) full[d1.rank + k] = image.left_inverse(k, j);
      out.push_back(d1.right * full);
    }
    return out;
  }

  std::vector<std::int64_t> torsion() const {
    std::vector<std::int64_t> out;
    for (int i = 0; i < image.rank; ++i) {
      if (image.diagonal(i, i) > 1) out.push_back(image.diagonal(i, i));
    }
    return out;
  }
};

}  // namespace

FirstHomology h1_of_quotient(const MarkedDiskComplex& complex) {
  const Quotient q(complex);
  FirstHomology h;
  h.basis = q.basis();
  h.rank = static_cast<int>(h.basis.size());
  h.torsion = q.torsion();
  return h;
}

IntegerMatrix rotation_action(const MarkedDiskComplex& complex, int shift) {
  if (!complex.rotation_compatible(shift)) {
    throw Error(ErrorKind::incompatible_rotation,
                "rotation by " + std::to_string(shift) + " does not preserve the pairing");
  }
  const int n = complex.points();
  const int s = ((shift % n) + n) % n;
  const Quotient q(complex);
  const std::vector<Chain> basis = q.basis();
  const int r = static_cast<int>(basis.size());
  IntegerMatrix m(r, r);
  for (int j = 0; j < r; ++j) {
    Chain image(n, 0);
    for (int k = 0; k < n; ++k) image[(k + s) % n] = basis[j][k];
    const Chain c = q.homology_coordinates(image);
    for (int i = 0; i < r; ++i) m(i, j) = c[i];
  }
  return m;
}

std::int64_t lefschetz_number(const IntegerMatrix& action) {
  if (action.rows != action.cols) throw Error(ErrorKind::invalid_argument, "action matrix is not square");
  return 1 - action.trace();
}

}  // namespace germ
