// Tests for the odd symplectic Grassmannian module: indexing bijections
// checked by round trips and by brute-force partition enumeration, the
// presentation generators checked against a direct determinant expansion,
// and quotient ranks cross-checked against the two-orbit basis counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qh/horo.hpp"
#include "qh/linalg.hpp"
#include "qh/oddsymp.hpp"

using namespace qh;

namespace {

// Brute-force enumeration of the partitions indexing Schubert classes of
// IG(m, N), written directly from the definition (weakly decreasing, k-strict
// for k = floor(N/2) - m, parts bounded by N - m, odd case allows -1 parts
// with the top part pinned).  Independent of the library's validity check.
std::vector<std::vector<int>> brute_partitions(int m, int N) {
  const int k = N / 2 - m;
  const int lo = (N % 2 == 0) ? 0 : -1;
  const int hi = N - m;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int maxpart) -> void {
    if ((int)cur.size() == m) {
      if (N % 2 == 1 && cur.back() == -1 && cur.front() != hi) return;
      out.push_back(cur);
      return;
    }
    for (int part = maxpart; part >= lo; --part) {
      if (!cur.empty() && part > k && part == cur.back()) continue;
      cur.push_back(part);
      self(self, part);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

// Determinant of the r x r matrix with (i,j) entry t_{1+j-i} by Laplace
// expansion along the first column; oracle for the recurrence in d_poly.
QPolynomial laplace_d(int r, int nvars) {
  auto entry = [&](int i, int j) {  // 1-based
    const int p = 1 + j - i;
    if (p == 0) return poly_constant(nvars, 1);
    if (p < 0 || p > nvars) return poly_zero();
    return poly_variable(nvars, p);
  };
  std::vector<int> cols(r);
  for (int j = 0; j < r; ++j) cols[j] = j + 1;
  auto det = [&](auto&& self, int row, std::vector<int> cs) -> QPolynomial {
    if (cs.empty()) return poly_constant(nvars, 1);
    QPolynomial acc;
    for (size_t j = 0; j < cs.size(); ++j) {
      std::vector<int> rest = cs;
      rest.erase(rest.begin() + j);
      QPolynomial sub = qp_mul(entry(row, cs[j]), self(self, row + 1, rest));
      acc = qp_add(acc, qp_scale(sub, (j % 2 == 0) ? 1 : -1));
    }
    return acc;
  };
  return det(det, 1, cols);
}

}  // namespace

TEST_CASE("index set enumeration counts match brute-force partition counts") {
  struct Row {
    int m, N;
    int count;  // -1: only the partition cross-check applies
  };
  const Row rows[] = {
      {2, 5, 8},  {3, 7, 20}, {1, 2, 2},  {2, 7, 18},
      {2, 9, 32}, {3, 9, 56}, {2, 6, 12}, {2, 4, 4},
  };
  for (const Row& r : rows) {
    CAPTURE(r.m);
    CAPTURE(r.N);
    auto sets = enumerate_index_sets(r.m, r.N);
    CHECK((int)sets.size() == r.count);
    CHECK(sets.size() == brute_partitions(r.m, r.N).size());
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    for (const auto& p : sets) CHECK(is_index_set(p, r.N));
  }
}

TEST_CASE("index set counts equal the two-orbit basis sizes") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
    CAPTURE(n);
    CAPTURE(m);
    HoroVariety x = build_variety(3, n, m);
    CHECK(enumerate_index_sets(m, 2 * n + 1).size() == x.basis.size());
  }
}

TEST_CASE("bijections round-trip on complete enumerations up to N = 13") {
  for (int N = 2; N <= 13; ++N) {
    for (int m = 1; m <= N / 2; ++m) {
      CAPTURE(N);
      CAPTURE(m);
      auto sets = enumerate_index_sets(m, N);
      std::set<std::vector<int>> images;
      for (const auto& p : sets) {
        std::vector<int> parts = partition_from_index_set(p, N);
        CHECK(is_valid_partition(parts, m, N));
        CHECK(index_set_from_partition(parts, N) == p);
        images.insert(parts);
      }
      CHECK(images.size() == sets.size());  // injective
      // Surjective onto the brute-force partition list.
      auto all = brute_partitions(m, N);
      CHECK(images.size() == all.size());
      for (const auto& parts : all) CHECK(images.count(parts) == 1);
    }
  }
}

TEST_CASE("bijection spot values") {
  // Odd (2,5): the lexicographically largest index set maps to the minimal
  // partition, and the -1 tail pins the first part at its maximum.
  CHECK(partition_from_index_set({4, 5}, 5) == std::vector<int>{0, 0});
  CHECK(partition_from_index_set({1, 5}, 5) == std::vector<int>{3, -1});
  // Even (2,6): the zero partition corresponds to the top index set.
  CHECK(index_set_from_partition({0, 0}, 6) == std::vector<int>{5, 6});
  CHECK_THROWS(partition_from_index_set({2, 5}, 5));   // forbidden sum 7
  CHECK_THROWS(index_set_from_partition({2, -1}, 5));  // -1 without pinning
}

TEST_CASE("determinantal generators match a direct Laplace expansion") {
  const int n = 3, m = 2, nvars = 2 * n + 1 - m;
  CHECK(d_poly(1, n, m) == poly_variable(nvars, 1));
  CHECK(d_poly(2, n, m) ==
        qp_sub(qp_mul(poly_variable(nvars, 1), poly_variable(nvars, 1)),
               poly_variable(nvars, 2)));
  for (int r = 1; r <= 2 * n + 2 - m; ++r) {
    CAPTURE(r);
    CHECK(d_poly(r, n, m) == laplace_d(r, nvars));
    int deg = 0;
    CHECK(qp_is_homogeneous(d_poly(r, n, m), &deg));
    if (!d_poly(r, n, m).empty()) CHECK(deg == r);
  }
  for (int s = 1; s <= n; ++s) {
    CAPTURE(s);
    int deg = 0;
    CHECK(qp_is_homogeneous(b_poly(s, n, m), &deg));
    if (!b_poly(s, n, m).empty()) CHECK(deg == 2 * s);
  }
  // Truncation kills the square term when r exceeds the variable range.
  QPolynomial high = b_poly(nvars + 1, n, m);
  for (const auto& [mono, c] : high) {
    (void)c;
    CHECK(mono[nvars - 1] <= 1);  // no (t_K')^2-type square from t_{r}^2
  }
}

TEST_CASE("quantum ideal specializes to the classical one at q = 0") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(m);
    auto cl = classical_ideal(n, m);
    auto q0 = quantum_ideal(n, m, 0);
    REQUIRE(cl.size() == q0.size());
    for (size_t i = 0; i < cl.size(); ++i) CHECK(cl[i] == q0[i]);
    // Linearity in q: gen(7) - gen(0) = 7 * (gen(1) - gen(0)), and the
    // q-part is homogeneous of degree deg(gen) - (2n+2-m).
    auto q1 = quantum_ideal(n, m, 1);
    auto q7 = quantum_ideal(n, m, 7);
    for (size_t i = 0; i < cl.size(); ++i) {
      QPolynomial delta1 = qp_sub(q1[i], q0[i]);
      CHECK(qp_sub(q7[i], q0[i]) == qp_scale(delta1, 7));
      int dgen = 0, dq = 0;
      CHECK(qp_is_homogeneous(q0[i], &dgen));
      CHECK(qp_is_homogeneous(delta1, &dq));
      if (!delta1.empty()) CHECK(dq == dgen - (2 * n + 2 - m));
    }
  }
  // (3,3): the top determinantal relation d_5 acquires -q (odd m); for (3,2)
  // the even-m top relation d_6 stays untouched.
  {
    auto q0 = quantum_ideal(3, 3, 0);
    auto q1 = quantum_ideal(3, 3, 1);
    // Generators are ordered d_4, d_5, b_2, b_3; d_5 = -q becomes d_5 + q.
    CHECK(qp_sub(q1[1], q0[1]) == poly_constant(4, 1));
    auto e0 = quantum_ideal(3, 2, 0);
    auto e1 = quantum_ideal(3, 2, 1);
    // Generators are ordered d_3, d_4, d_5, d_6, b_3; d_6 is unchanged.
    CHECK(e0[3] == e1[3]);
    CHECK(e0[4] != e1[4]);  // b_3 picks up -q * t_0 = -q
  }
}

TEST_CASE("normal forms define a ring congruence") {
  QuotientRing ring = build_quotient(3, 3, 1);
  for (const QPolynomial& gen : ring.generators) {
    CHECK(ring.normal_form(gen).empty());
  }
  const int K = ring.nvars;
  QPolynomial f = qp_add(poly_variable(K, 1), poly_variable(K, 3));
  QPolynomial g = qp_add(qp_mul(poly_variable(K, 2), poly_variable(K, 2)),
                         poly_constant(K, Rat(5, 3)));
  QPolynomial lhs = ring.normal_form(qp_mul(f, g));
  QPolynomial rhs = ring.normal_form(
      qp_mul(ring.normal_form(f), ring.normal_form(g)));
  CHECK(ring.normal_form(qp_sub(lhs, rhs)).empty());
  CHECK(lhs == rhs);
  // Groebner elements of a graded ideal are homogeneous at q = 0.
  QuotientRing cl = build_quotient(3, 3, 0);
  for (const QPolynomial& g0 : cl.groebner) CHECK(qp_is_homogeneous(g0));
}

TEST_CASE("quotient ranks and Hilbert profiles") {
  CHECK(quotient_rank(2, 2) == 8);
  CHECK(quotient_rank(3, 3) == 20);
  CHECK(quotient_rank(3, 2) == (int)enumerate_index_sets(2, 7).size());
  CHECK(hilbert_series(3, 3) ==
        std::vector<int>{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(m);
    auto h = hilbert_series(n, m);
    CHECK((int)h.size() == build_variety(3, n, m).dimX + 1);
    for (size_t d = 0; d < h.size(); ++d) CHECK(h[d] == h[h.size() - 1 - d]);
  }
}

TEST_CASE("quantum deformation is flat: rank independent of q") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(m);
    const int r0 = build_quotient(n, m, 0).rank();
    CHECK(build_quotient(n, m, 1).rank() == r0);
    CHECK(build_quotient(n, m, Rat(7, 3)).rank() == r0);
  }
}

TEST_CASE("multiplication by t_1 matches the hyperplane operator") {
  // Both describe multiplication by the hyperplane class on the same
  // 20-dimensional ring for IG(3,7); minimal polynomials must agree at any q.
  HoroVariety x = build_variety(3, 3, 3);
  for (Rat q : {Rat(1), Rat(2), Rat(5, 2)}) {
    CAPTURE(q.get_str());
    Poly pres = minpoly_tau1(3, 3, q);
    Poly chev = minimal_polynomial(x.h_matrix(q));
    CHECK(poly_monic(pres) == poly_monic(chev));
  }
  CHECK(poly_squarefree(minpoly_tau1(3, 3, 1)));
  // q = 0: nilpotent, so the minimal polynomial is a pure power of x.
  Poly zero = minpoly_tau1(3, 3, 0);
  for (size_t i = 0; i + 1 < zero.size(); ++i) CHECK(zero[i] == 0);
}

TEST_CASE("staircase containment") {
  CHECK(contains_staircase({}, 0));
  CHECK(contains_staircase({5, 1}, 0));
  CHECK_FALSE(contains_staircase({1}, 2));
  CHECK(contains_staircase({2, 1}, 2));
  CHECK(contains_staircase({7}, 1));
  // Length-one partitions contain the 1-staircase but never the 2-staircase:
  // degree-1 special classes contribute no q^2 terms to quantum products.
  for (int a = 1; a <= 6; ++a) {
    CHECK(contains_staircase({a}, 1));
    CHECK_FALSE(contains_staircase({a}, 2));
  }
}
