// Odd symplectic Grassmannians IG(m, 2n+1): Schubert class indexing by index
// sets and k-strict partitions, and the classical / quantum cohomology
// presentations as exact quotient rings.
//
// The presentation lives in Q[t_1, ..., t_K] with K = 2n+1-m, where t_p is the
// special Schubert class of degree p (the p-th Chern class of the dual
// tautological quotient restricted from the even ambient Grassmannian).  The
// relations are the Jacobi-Trudi determinants d_r = det(t_{1+j-i}) and the
// quadratic combinations b_r = t_r^2 + 2 sum_i (-1)^i t_{r+i} t_{r-i}, with
// quantum corrections of degree 2n+2-m in q.  The quantum parameter is
// specialized to a rational value, so every quotient is a finite-dimensional
// vector space over Q handled by exact Groebner bases.
#pragma once

#include "qh/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace qh {

// ---------------------------------------------------------------------------
// Schubert indexing.

// Strictly increasing sequences 1 <= p_1 < ... < p_m <= N avoiding the
// forbidden pairwise sum (N+1 when N is even, N+2 when N is odd), enumerated
// in lexicographic order.
std::vector<std::vector<int>> enumerate_index_sets(int m, int N);
bool is_index_set(const std::vector<int>& p, int N);

// "No part greater than k is repeated."
bool is_k_strict(const std::vector<int>& parts, int k);

// Membership in the partition family indexing the Schubert classes of
// IG(m, N): weakly decreasing, k-strict for k = floor(N/2) - m, parts in
// [0, N-m] (even N) or [-1, N-m] with first part N-m forced when the last
// part is -1 (odd N).
bool is_valid_partition(const std::vector<int>& parts, int m, int N);

// Mutually inverse bijections between index sets and the partitions above.
std::vector<int> partition_from_index_set(const std::vector<int>& p, int N);
std::vector<int> index_set_from_partition(const std::vector<int>& parts,
                                          int N);

// True iff the partition contains the staircase (d, d-1, ..., 1), i.e.
// parts[i-1] >= d+1-i for 1 <= i <= d.  Controls which quantum corrections
// survive in the quantum-to-classical comparison.
bool contains_staircase(const std::vector<int>& parts, int d);

// ---------------------------------------------------------------------------
// Exact polynomial ring Q[t_1, ..., t_K].

using Monomial = std::vector<int>;  // exponents of t_1..t_K, fixed length K

// Graded reverse-lexicographic order with t_1 < t_2 < ... < t_K, graded by
// the weighted degree deg t_p = p.  operator() returns true when a comes
// strictly before b, i.e. a is the larger monomial.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int weighted_degree(const Monomial& mono);

// Sparse polynomial; begin() is the leading term under MonomialOrder.
using QPolynomial = std::map<Monomial, Rat, MonomialOrder>;

QPolynomial poly_zero();
QPolynomial poly_constant(int nvars, const Rat& c);
QPolynomial poly_variable(int nvars, int p);  // t_p, 1-based
QPolynomial qp_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial qp_sub(const QPolynomial& a, const QPolynomial& b);
QPolynomial qp_mul(const QPolynomial& a, const QPolynomial& b);
QPolynomial qp_scale(const QPolynomial& a, const Rat& c);
bool qp_is_homogeneous(const QPolynomial& a, int* degree_out = nullptr);
std::string qp_to_string(const QPolynomial& a);

// d_r = det(t_{1+j-i})_{r x r} with t_0 = 1 and t_p = 0 outside [0, K];
// homogeneous of weighted degree r.
QPolynomial d_poly(int r, int n, int m);
// b_r = t_r^2 + 2 sum_{i>=1} (-1)^i t_{r+i} t_{r-i}, weighted degree 2r.
QPolynomial b_poly(int r, int n, int m);

// Presentation ideals (q specialized to a rational value in the quantum one):
//   classical: d_r = 0 for m+1 <= r <= 2n+2-m, b_s = 0 for n+2-m <= s <= n;
//   quantum:   d_r = 0 for m+1 <= r <= 2n+1-m,
//              d_{2n+2-m} = 0 (m even) or -q (m odd),
//              b_s = (-1)^{2n+1-m-s} q t_{2s-2n-2+m}  (t_0 = 1, t_{<0} = 0).
std::vector<QPolynomial> classical_ideal(int n, int m);
std::vector<QPolynomial> quantum_ideal(int n, int m, const Rat& q);

// ---------------------------------------------------------------------------
// Quotient rings via reduced Groebner bases.

struct QuotientRing {
  int n = 0, m = 0;
  int nvars = 0;  // K = 2n+1-m
  Rat qval;       // specialization of the quantum parameter
  std::vector<QPolynomial> generators;      // as handed to the builder
  std::vector<QPolynomial> groebner;        // reduced Groebner basis, monic
  std::vector<Monomial> monomial_basis;     // standard monomials, ascending

  QPolynomial normal_form(QPolynomial f) const;
  // Matrix of multiplication by f on the standard-monomial basis.
  Matrix multiplication_matrix(const QPolynomial& f) const;
  int rank() const { return (int)monomial_basis.size(); }
};

// Quotient by the quantum ideal at the given q (q = 0 recovers the classical
// presentation).  Requires n >= 2 and 2 <= m <= n.
QuotientRing build_quotient(int n, int m, const Rat& q);

// Vector-space dimension of the classical quotient; equals the number of
// index sets of IG(m, 2n+1).
int quotient_rank(int n, int m);

// Dimensions of the graded pieces of the classical quotient under the
// weighted degree; palindromic for these varieties.
std::vector<int> hilbert_series(int n, int m);

// Minimal polynomial of multiplication by t_1 (the hyperplane class) on the
// quotient at the given q specialization.
Poly minpoly_tau1(int n, int m, const Rat& q);

// JSON export of the presentation (generators, relations, rank, Hilbert
// profile of the q = 0 quotient).
std::string export_presentation_json(const QuotientRing& ring);

}  // namespace qh
