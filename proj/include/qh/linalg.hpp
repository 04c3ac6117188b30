// Exact linear algebra over the rationals: determinants, minimal polynomials
// and squarefreeness checks used by the semisimplicity reports.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qh {

using Rat = mpq_class;
using Matrix = std::vector<std::vector<Rat>>;   // row major, square
using Poly = std::vector<Rat>;                  // coefficients, low to high

Matrix identity_matrix(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Rat det(Matrix a);  // exact Gaussian elimination

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
// Returns {quotient, remainder} of a / b (b nonzero).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(Poly p);
Poly poly_gcd(Poly a, Poly b);
Poly poly_derivative(const Poly& p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
bool poly_squarefree(const Poly& p);
std::string poly_to_string(const Poly& p, const std::string& var = "x");

// Minimal polynomial of a square matrix: least common multiple of the
// minimal annihilators of the standard basis vectors (Krylov subspaces with
// exact elimination).
Poly minimal_polynomial(const Matrix& a);

// True when a^k = 0 for some k <= dim.
bool is_nilpotent(const Matrix& a);

}  // namespace qh
