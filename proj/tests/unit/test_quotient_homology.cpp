#include <doctest.h>

#include <algorithm>

#include "germ/error.hpp"
#include "germ/homology.hpp"

using namespace germ;

namespace {

using Pairing = std::vector<std::pair<int, int>>;

void all_matchings(std::vector<int> rest, Pairing& current, std::vector<Pairing>& out) {
  if (rest.empty()) {
    out.push_back(current);
    return;
  }
  const int a = rest.front();
  for (size_t k = 1; k < rest.size(); ++k) {
    std::vector<int> next;
    for (size_t j = 1; j < rest.size(); ++j) {
      if (j != k) next.push_back(rest[j]);
    }
    current.emplace_back(a, rest[k]);
    all_matchings(next, current, out);
    current.pop_back();
  }
}

std::vector<Pairing> matchings(int n) {
  std::vector<int> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = k;
  std::vector<Pairing> out;
  Pairing current;
  all_matchings(labels, current, out);
  return out;
}

IntegerMatrix power(const IntegerMatrix& m, int k) {
  IntegerMatrix out = IntegerMatrix::identity(m.rows);
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

TEST_CASE("first homology examples") {
  const FirstHomology a = h1_of_quotient(MarkedDiskComplex(4, {{0, 2}, {1, 3}}));
  CHECK(a.rank == 2);
  CHECK(a.torsion.empty());
  CHECK(h1_of_quotient(MarkedDiskComplex(2, {{0, 1}})).rank == 1);
  CHECK(h1_of_quotient(MarkedDiskComplex(4, {{0, 1}, {2, 3}})).rank == 2);
}

TEST_CASE("basis vectors are cycles and independent modulo the disk") {
  const MarkedDiskComplex c(4, {{0, 2}, {1, 3}});
  const FirstHomology h = h1_of_quotient(c);
  const IntegerMatrix d1 = c.boundary1();
  for (const Chain& z : h.basis) {
    for (std::int64_t v : d1 * z) CHECK(v == 0);
  }
  const IntegerMatrix rotation = rotation_action(c, 0);
  CHECK(rotation == IntegerMatrix::identity(2));
}

TEST_CASE("rotation action examples") {
  const MarkedDiskComplex a4(4, {{0, 2}, {1, 3}});
  const IntegerMatrix quarter = rotation_action(a4, 1);
  CHECK(quarter.trace() == 0);
  CHECK(power(quarter, 4) == IntegerMatrix::identity(2));
  IntegerMatrix minus(2, 2);
  minus(0, 0) = -1;
  minus(1, 1) = -1;
  CHECK(power(quarter, 2) == minus);
  const std::int64_t det = quarter(0, 0) * quarter(1, 1) - quarter(0, 1) * quarter(1, 0);
  CHECK(det == 1);  // conjugate to the rotation ((0, -1), (1, 0))

  IntegerMatrix flip(1, 1);
  flip(0, 0) = -1;
  CHECK(rotation_action(MarkedDiskComplex(2, {{0, 1}}), 1) == flip);
  CHECK_THROWS_AS(rotation_action(MarkedDiskComplex(4, {{0, 1}, {2, 3}}), 1), Error);
}

TEST_CASE("lefschetz numbers") {
  const MarkedDiskComplex a4(4, {{0, 2}, {1, 3}});
  CHECK(lefschetz_number(rotation_action(a4, 1)) == 1);
  CHECK(lefschetz_number(rotation_action(a4, 0)) == -1);
  CHECK(lefschetz_number(rotation_action(a4, 2)) == 3);
  CHECK(rotation_action(a4, 2).trace() == -2);
  CHECK(lefschetz_number(IntegerMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(lefschetz_number(IntegerMatrix(1, 2)), Error);
}

TEST_CASE("invalid pairings") {
  CHECK_THROWS_AS(MarkedDiskComplex(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(MarkedDiskComplex(4, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(MarkedDiskComplex(4, {{0, 0}, {1, 2}}), Error);
  CHECK_THROWS_AS(MarkedDiskComplex(4, {{0, 1}}), Error);
  CHECK_THROWS_AS(MarkedDiskComplex(4, {{0, 1}, {2, 5}}), Error);
}

TEST_CASE("smith normal form") {
  IntegerMatrix a(2, 3);
  a.entries = {{2, 4, 4}, {-6, 6, 12}};
  const SmithForm s = smith_normal_form(a);
  CHECK(s.rank == 2);
  CHECK(s.diagonal(0, 0) == 2);
  CHECK(s.diagonal(1, 1) == 6);
  CHECK(s.left * a * s.right == s.diagonal);
  CHECK(s.left * s.left_inverse == IntegerMatrix::identity(2));
  CHECK(s.right * s.right_inverse == IntegerMatrix::identity(3));
}

TEST_CASE("property: functoriality, shift n and Euler characteristic for n <= 8") {
  for (int n = 2; n <= 8; n += 2) {
    for (const Pairing& p : matchings(n)) {
      const MarkedDiskComplex c(n, p);
      const FirstHomology h = h1_of_quotient(c);
      CHECK(h.torsion.empty());
      // chi = V - E + F = 1 - rank H1.
      CHECK(c.vertex_count() - n + 1 == 1 - h.rank);
      CHECK(h.rank == n / 2);
      CHECK(rotation_action(c, n) == IntegerMatrix::identity(h.rank));
      for (int a = 0; a < n; ++a) {
        if (!c.rotation_compatible(a)) continue;
        for (int b = 0; b < n; ++b) {
          if (!c.rotation_compatible(b)) continue;
          CAPTURE(n);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(rotation_action(c, a) * rotation_action(c, b) == rotation_action(c, (a + b) % n));
        }
      }
    }
  }
}

TEST_CASE("property: trace does not depend on the labelling") {
  // Relabel k -> k + r: the pairing shifts, the rotation stays the same map.
  for (int n = 4; n <= 8; n += 2) {
    for (const Pairing& p : matchings(n)) {
      const MarkedDiskComplex c(n, p);
      for (int shift = 0; shift < n; ++shift) {
        if (!c.rotation_compatible(shift)) continue;
        const std::int64_t trace = rotation_action(c, shift).trace();
        for (int r = 1; r < n; ++r) {
          Pairing moved;
          for (auto [a, b] : p) moved.emplace_back((a + r) % n, (b + r) % n);
          CHECK(rotation_action(MarkedDiskComplex(n, moved), shift).trace() == trace);
        }
      }
    }
  }
}
