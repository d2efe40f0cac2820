#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace germ {

using Chain = std::vector<std::int64_t>;

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::int64_t>> entries;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), entries(r, std::vector<std::int64_t>(c, 0)) {}
  static IntegerMatrix identity(int n);

  std::int64_t& operator()(int i, int j) { return entries[i][j]; }
  std::int64_t operator()(int i, int j) const { return entries[i][j]; }
  std::int64_t trace() const;
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
Chain operator*(const IntegerMatrix& a, const Chain& x);

/// left * a * right = diagonal, with diagonal entries d_0 | d_1 | ... >= 0.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left, left_inverse;
  IntegerMatrix right, right_inverse;
  int rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Closed disk with n marked boundary points, points identified in pairs.
/// Edge e_k runs from point k to point k+1 (mod n).
class MarkedDiskComplex {
 public:
  /// Throws Error(invalid_pairing) unless `pairs` is a perfect matching of 0..n-1.
  MarkedDiskComplex(int n, std::vector<std::pair<int, int>> pairs);

  int points() const { return n_; }
  int vertex_count() const { return static_cast<int>(representatives_.size()); }
  int vertex_of(int point) const { return vertex_[point]; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  IntegerMatrix boundary1() const;  // vertices x edges
  IntegerMatrix boundary2() const;  // edges x 1

  /// Whether rotating labels by `shift` maps the pairing to itself.
  bool rotation_compatible(int shift) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> vertex_;
  std::vector<int> representatives_;
};

struct FirstHomology {
  int rank = 0;
  std::vector<Chain> basis;       // edge chains, one per free generator
  std::vector<std::int64_t> torsion;  // invariant factors > 1, normally empty
};

FirstHomology h1_of_quotient(const MarkedDiskComplex& complex);

/// Matrix of e_k -> e_{k+shift} on the basis of h1_of_quotient; column j is
/// the image of basis vector j. Throws Error(incompatible_rotation).
IntegerMatrix rotation_action(const MarkedDiskComplex& complex, int shift);

/// 1 - trace on H1 (H0 contributes 1, nothing above degree one).
std::int64_t lefschetz_number(const IntegerMatrix& action);

}  // namespace germ
