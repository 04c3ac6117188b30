#include "qh/linalg.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qh {

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix c(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Rat det(Matrix a) {
  const int n = static_cast<int>(a.size());
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = -d;
    }
    d *= a[col][col];
    const Rat inv = 1 / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rat f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return poly_trim(c);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly r = poly_trim(a);
  const Poly d = poly_trim(b);
  if (d.empty()) throw std::invalid_argument("division by zero polynomial");
  Poly q(r.size() > d.size() ? r.size() - d.size() + 1 : 1, 0);
  while (r.size() >= d.size() && !r.empty()) {
    const Rat f = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    q[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    r = poly_trim(r);
  }
  return {poly_trim(q), r};
}

Poly poly_monic(Poly p) {
  p = poly_trim(p);
  if (p.empty()) return p;
  const Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(i));
  return poly_trim(d);
}

bool poly_squarefree(const Poly& p) {
  const Poly g = poly_gcd(p, poly_derivative(p));
  return poly_degree(g) <= 0;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  const Poly t = poly_trim(p);
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly_degree(t); i >= 0; --i) {
    if (t[i] == 0) continue;
    Rat c = t[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0 || c != 1) os << c.get_str();
    if (i > 0) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Minimal annihilator of the vector v under a: the monic polynomial p of
// least degree with p(a) v = 0, found by exact elimination on the Krylov
// sequence v, av, a^2 v, ...
Poly vector_annihilator(const Matrix& a, std::vector<Rat> v) {
  const int n = static_cast<int>(a.size());
  // Reduced Krylov vectors together with the polynomial combination that
  // produced each reduced vector from v.
  std::vector<std::vector<Rat>> basis;     // reduced, in echelon form
  std::vector<int> pivots;                 // pivot column of each basis row
  std::vector<Poly> combos;                // combos[i](a) v = basis[i]
  std::vector<Rat> cur = std::move(v);
  Poly cur_poly = {1};
  for (int step = 0; step <= n; ++step) {
    // Reduce cur against the basis, tracking the combination.
    std::vector<Rat> red = cur;
    Poly red_poly = cur_poly;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rat f = red[pivots[i]] / basis[i][pivots[i]];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) red[c] -= f * basis[i][c];
      Poly scaled = combos[i];
      for (auto& x : scaled) x *= f;
      if (red_poly.size() < scaled.size()) red_poly.resize(scaled.size(), 0);
      for (std::size_t c = 0; c < scaled.size(); ++c) red_poly[c] -= scaled[c];
    }
    int pivot = -1;
    for (int c = 0; c < n; ++c)
      if (red[c] != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) return poly_monic(red_poly);  // dependence found
    basis.push_back(red);
    pivots.push_back(pivot);
    combos.push_back(red_poly);
    // Advance: cur = a * cur, cur_poly = x * cur_poly.
    std::vector<Rat> nxt(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[i][j] != 0 && cur[j] != 0) nxt[i] += a[i][j] * cur[j];
    cur = std::move(nxt);
    cur_poly.insert(cur_poly.begin(), Rat(0));
  }
  throw std::logic_error("Krylov sequence failed to terminate");
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (poly_degree(a) < 0) return poly_monic(b);
  if (poly_degree(b) < 0) return poly_monic(a);
  const Poly g = poly_gcd(a, b);
  return poly_monic(poly_divmod(poly_mul(a, b), g).first);
}

}  // namespace

Poly minimal_polynomial(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Poly m = {1};
  for (int i = 0; i < n; ++i) {
    if (poly_degree(m) == n) break;  // cannot grow further
    std::vector<Rat> e(n, 0);
    e[i] = 1;
    // Skip vectors already annihilated by the current candidate: evaluate
    // m(a) e_i cheaply via Horner on the vector.
    std::vector<Rat> acc(n, 0);
    for (int k = poly_degree(m); k >= 0; --k) {
      std::vector<Rat> nxt(n, 0);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (a[r][c] != 0 && acc[c] != 0) nxt[r] += a[r][c] * acc[c];
      for (int r = 0; r < n; ++r) nxt[r] += m[k] * e[r];
      acc = std::move(nxt);
    }
    bool zero = true;
    for (const Rat& x : acc)
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) continue;
    m = poly_lcm(m, vector_annihilator(a, e));
  }
  return m;
}

bool is_nilpotent(const Matrix& a) {
  const Poly m = minimal_polynomial(a);
  for (int i = 0; i < poly_degree(m); ++i)
    if (m[i] != 0) return false;
  return true;
}

}  // namespace qh
