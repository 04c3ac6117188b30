#include "qh/oddsymp.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qh {

namespace {

// Forbidden pairwise sum for index sets: p_i + p_j may never hit the index of
// the line spanned by a vector pairing trivially with everything.
int forbidden_sum(int N) { return (N % 2 == 0) ? N + 1 : N + 2; }

void check_parameters(int n, int m) {
  if (n < 2 || m < 2 || m > n) {
    throw std::invalid_argument("presentation requires n >= 2 and 2 <= m <= n");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Index sets and partitions.

bool is_index_set(const std::vector<int>& p, int N) {
  const int bad = forbidden_sum(N);
  for (size_t j = 0; j < p.size(); ++j) {
    if (p[j] < 1 || p[j] > N) return false;
    if (j > 0 && p[j] <= p[j - 1]) return false;
    for (size_t i = 0; i <= j; ++i) {
      if (p[i] + p[j] == bad) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> enumerate_index_sets(int m, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int bad = forbidden_sum(N);
  // Depth-first in lexicographic order.
  auto extend = [&](auto&& self, int low) -> void {
    if ((int)cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (int p = low; p <= N; ++p) {
      bool ok = (2 * p != bad);
      for (int q : cur) {
        if (q + p == bad) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  if (m >= 1 && m <= N) extend(extend, 1);
  return out;
}

bool is_k_strict(const std::vector<int>& parts, int k) {
  for (size_t j = 0; j + 1 < parts.size(); ++j) {
    if (parts[j] < parts[j + 1]) return false;
    if (parts[j] > k && parts[j] == parts[j + 1]) return false;
  }
  return true;
}

bool is_valid_partition(const std::vector<int>& parts, int m, int N) {
  if ((int)parts.size() != m) return false;
  const int k = N / 2 - m;
  if (!is_k_strict(parts, k)) return false;
  const int lo = (N % 2 == 0) ? 0 : -1;
  for (int part : parts) {
    if (part < lo || part > N - m) return false;
  }
  if (N % 2 == 1 && parts.back() == -1 && parts.front() != N - m) return false;
  return true;
}

std::vector<int> partition_from_index_set(const std::vector<int>& p, int N) {
  if (!is_index_set(p, N)) throw std::invalid_argument("not an index set");
  const int m = (int)p.size();
  const int bad = forbidden_sum(N);
  // part_j = N+1-m - p_j + #{i < j | p_i + p_j > bad} in both parities.
  std::vector<int> parts(m);
  for (int j = 0; j < m; ++j) {
    int bump = 0;
    for (int i = 0; i < j; ++i) {
      if (p[i] + p[j] > bad) ++bump;
    }
    parts[j] = N + 1 - m - p[j] + bump;
  }
  return parts;
}

std::vector<int> index_set_from_partition(const std::vector<int>& parts,
                                          int N) {
  const int m = (int)parts.size();
  if (!is_valid_partition(parts, m, N)) {
    throw std::invalid_argument("not a valid partition for IG(m, N)");
  }
  const int k = N / 2 - m;
  std::vector<int> p(m);
  for (int j = 0; j < m; ++j) {
    int bump = 0;
    for (int i = 0; i < j; ++i) {
      if (parts[i] + parts[j] <= 2 * k + (j - i)) ++bump;
    }
    p[j] = N + 1 - m - parts[j] + bump;
  }
  return p;
}

bool contains_staircase(const std::vector<int>& parts, int d) {
  for (int i = 1; i <= d; ++i) {
    const int part = (i <= (int)parts.size()) ? parts[i - 1] : 0;
    if (part < d + 1 - i) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomials and polynomials.

int weighted_degree(const Monomial& mono) {
  int d = 0;
  for (size_t i = 0; i < mono.size(); ++i) d += (int)(i + 1) * mono[i];
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da > db;
  // Reverse lexicographic with t_1 < ... < t_K: among monomials of equal
  // degree the larger one has the smaller exponent at the first variable
  // where they differ.
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

QPolynomial poly_zero() { return QPolynomial(); }

QPolynomial poly_constant(int nvars, const Rat& c) {
  QPolynomial f;
  if (c != 0) f[Monomial(nvars, 0)] = c;
  return f;
}

QPolynomial poly_variable(int nvars, int p) {
  Monomial mono(nvars, 0);
  mono[p - 1] = 1;
  QPolynomial f;
  f[mono] = 1;
  return f;
}

namespace {

void add_term(QPolynomial& f, const Monomial& mono, const Rat& c) {
  auto it = f.find(mono);
  if (it == f.end()) {
    if (c != 0) f.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// f += c * x^mono * g
void add_scaled_shift(QPolynomial& f, const Rat& c, const Monomial& mono,
                      const QPolynomial& g) {
  for (const auto& [gm, gc] : g) add_term(f, mono_mul(mono, gm), c * gc);
}

}  // namespace

QPolynomial qp_add(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out = a;
  for (const auto& [mono, c] : b) add_term(out, mono, c);
  return out;
}

QPolynomial qp_sub(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out = a;
  for (const auto& [mono, c] : b) add_term(out, mono, -c);
  return out;
}

QPolynomial qp_mul(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [am, ac] : a) add_scaled_shift(out, ac, am, b);
  return out;
}

QPolynomial qp_scale(const QPolynomial& a, const Rat& c) {
  QPolynomial out;
  if (c == 0) return out;
  for (const auto& [mono, ac] : a) out[mono] = ac * c;
  return out;
}

bool qp_is_homogeneous(const QPolynomial& a, int* degree_out) {
  int deg = -1;
  for (const auto& [mono, c] : a) {
    (void)c;
    const int d = weighted_degree(mono);
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  if (degree_out) *degree_out = deg;
  return true;
}

std::string qp_to_string(const QPolynomial& a) {
  if (a.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : a) {
    Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "t" + std::to_string(i + 1);
      if (mono[i] > 1) vars += "^" + std::to_string(mono[i]);
    }
    if (vars.empty()) {
      out << abs.get_str();
    } else {
      if (abs != 1) out << abs.get_str() << "*";
      out << vars;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Presentation generators.

namespace {

// t_p with the truncation t_0 = 1, t_p = 0 outside [0, K].
QPolynomial special_class(int p, int nvars) {
  if (p == 0) return poly_constant(nvars, 1);
  if (p < 0 || p > nvars) return poly_zero();
  return poly_variable(nvars, p);
}

}  // namespace

QPolynomial d_poly(int r, int n, int m) {
  check_parameters(n, m);
  if (r < 0) throw std::invalid_argument("d_poly needs r >= 0");
  const int nvars = 2 * n + 1 - m;
  // det(t_{1+j-i}) obeys the Jacobi-Trudi recurrence
  //   d_r = sum_{i=1}^{r} (-1)^{i+1} t_i d_{r-i},  d_0 = 1,
  // obtained by expanding the determinant along its first row.
  std::vector<QPolynomial> d(r + 1);
  d[0] = poly_constant(nvars, 1);
  for (int s = 1; s <= r; ++s) {
    QPolynomial acc;
    for (int i = 1; i <= s && i <= nvars; ++i) {
      const Rat sign = (i % 2 == 1) ? 1 : -1;
      acc = qp_add(acc, qp_scale(qp_mul(special_class(i, nvars), d[s - i]), sign));
    }
    d[s] = acc;
  }
  return d[r];
}

QPolynomial b_poly(int r, int n, int m) {
  check_parameters(n, m);
  if (r < 1) throw std::invalid_argument("b_poly needs r >= 1");
  const int nvars = 2 * n + 1 - m;
  QPolynomial out = qp_mul(special_class(r, nvars), special_class(r, nvars));
  for (int i = 1; r - i >= 0; ++i) {
    if (r + i > nvars) break;
    const Rat sign = (i % 2 == 1) ? -2 : 2;
    out = qp_add(out, qp_scale(qp_mul(special_class(r + i, nvars),
                                      special_class(r - i, nvars)),
                               sign));
  }
  return out;
}

std::vector<QPolynomial> classical_ideal(int n, int m) {
  check_parameters(n, m);
  std::vector<QPolynomial> gens;
  for (int r = m + 1; r <= 2 * n + 2 - m; ++r) gens.push_back(d_poly(r, n, m));
  for (int s = n + 2 - m; s <= n; ++s) gens.push_back(b_poly(s, n, m));
  return gens;
}

std::vector<QPolynomial> quantum_ideal(int n, int m, const Rat& q) {
  check_parameters(n, m);
  const int nvars = 2 * n + 1 - m;
  std::vector<QPolynomial> gens;
  for (int r = m + 1; r <= 2 * n + 1 - m; ++r) gens.push_back(d_poly(r, n, m));
  {
    // d_{2n+2-m} = 0 when m is even, -q when m is odd.
    QPolynomial top = d_poly(2 * n + 2 - m, n, m);
    if (m % 2 == 1) top = qp_add(top, poly_constant(nvars, q));
    gens.push_back(top);
  }
  for (int s = n + 2 - m; s <= n; ++s) {
    // b_s = (-1)^{2n+1-m-s} q t_{2s-2n-2+m}, with t_0 = 1 and t_{<0} = 0.
    const int idx = 2 * s - 2 * n - 2 + m;
    const Rat sign = ((2 * n + 1 - m - s) % 2 == 0) ? 1 : -1;
    QPolynomial rhs = qp_scale(special_class(idx, nvars), sign * q);
    gens.push_back(qp_sub(b_poly(s, n, m), rhs));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Groebner machinery.

namespace {

const std::pair<const Monomial, Rat>& leading(const QPolynomial& f) {
  return *f.begin();
}

QPolynomial make_monic(QPolynomial f) {
  if (f.empty()) return f;
  const Rat lc = leading(f).second;
  for (auto& [mono, c] : f) {
    (void)mono;
    c /= lc;
  }
  return f;
}

// Full normal form of f modulo basis (every term reduced).
QPolynomial reduce_full(QPolynomial f, const std::vector<QPolynomial>& basis) {
  QPolynomial out;
  while (!f.empty()) {
    const auto& [mono, c] = leading(f);
    bool reduced = false;
    for (const QPolynomial& g : basis) {
      if (g.empty()) continue;
      const auto& [gm, gc] = leading(g);
      if (!mono_divides(gm, mono)) continue;
      add_scaled_shift(f, -c / gc, mono_div(mono, gm), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      out[mono] = c;
      f.erase(f.begin());
    }
  }
  return out;
}

std::vector<QPolynomial> buchberger(std::vector<QPolynomial> gens) {
  std::vector<QPolynomial> g;
  for (QPolynomial& f : gens) {
    if (!f.empty()) g.push_back(make_monic(std::move(f)));
  }
  struct Pair {
    int i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      pending.push_back({i, j, mono_lcm(leading(g[i]).first, leading(g[j]).first)});
    }
  };
  for (int j = 0; j < (int)g.size(); ++j) push_pairs(j);
  while (!pending.empty()) {
    // Normal strategy: smallest lcm degree first.
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      if (weighted_degree(pending[k].lcm) < weighted_degree(pending[best].lcm)) {
        best = k;
      }
    }
    Pair pr = pending[best];
    pending[best] = pending.back();
    pending.pop_back();
    const Monomial& li = leading(g[pr.i]).first;
    const Monomial& lj = leading(g[pr.j]).first;
    // Product criterion: coprime leading monomials reduce to zero.
    if (pr.lcm == mono_mul(li, lj)) continue;
    QPolynomial s;
    add_scaled_shift(s, 1, mono_div(pr.lcm, li), g[pr.i]);
    add_scaled_shift(s, -1, mono_div(pr.lcm, lj), g[pr.j]);
    s = reduce_full(std::move(s), g);
    if (s.empty()) continue;
    g.push_back(make_monic(std::move(s)));
    push_pairs((int)g.size() - 1);
  }
  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<QPolynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = leading(g[i]).first;
      const Monomial& lj = leading(g[j]).first;
      if (mono_divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Tail-reduce each element against the others.
  std::vector<QPolynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPolynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(make_monic(reduce_full(minimal[i], others)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const QPolynomial& a, const QPolynomial& b) {
              return MonomialOrder()(b.begin()->first, a.begin()->first);
            });
  return reduced;
}

}  // namespace

QPolynomial QuotientRing::normal_form(QPolynomial f) const {
  return reduce_full(std::move(f), groebner);
}

Matrix QuotientRing::multiplication_matrix(const QPolynomial& f) const {
  const int r = rank();
  std::map<Monomial, int> index;
  for (int i = 0; i < r; ++i) index[monomial_basis[i]] = i;
  Matrix mat(r, std::vector<Rat>(r, 0));
  for (int j = 0; j < r; ++j) {
    QPolynomial col;
    add_scaled_shift(col, 1, monomial_basis[j], f);
    col = normal_form(std::move(col));
    for (const auto& [mono, c] : col) {
      mat[index.at(mono)][j] = c;
    }
  }
  return mat;
}

QuotientRing build_quotient(int n, int m, const Rat& q) {
  check_parameters(n, m);
  QuotientRing ring;
  ring.n = n;
  ring.m = m;
  ring.nvars = 2 * n + 1 - m;
  ring.qval = q;
  ring.generators = quantum_ideal(n, m, q);
  ring.groebner = buchberger(ring.generators);
  // Standard monomials: not divisible by any Groebner leading monomial.
  // Breadth-first closure from 1 under multiplication by the variables; the
  // quotient is finite dimensional so this terminates.
  std::set<Monomial> seen;
  std::vector<Monomial> queue{Monomial(ring.nvars, 0)};
  auto standard = [&](const Monomial& mono) {
    for (const QPolynomial& g : ring.groebner) {
      if (mono_divides(g.begin()->first, mono)) return false;
    }
    return true;
  };
  while (!queue.empty()) {
    Monomial mono = queue.back();
    queue.pop_back();
    if (!standard(mono) || !seen.insert(mono).second) continue;
    for (int i = 0; i < ring.nvars; ++i) {
      Monomial next = mono;
      ++next[i];
      queue.push_back(next);
    }
  }
  ring.monomial_basis.assign(seen.begin(), seen.end());
  std::sort(ring.monomial_basis.begin(), ring.monomial_basis.end(),
            [](const Monomial& a, const Monomial& b) {
              return MonomialOrder()(b, a);  // ascending
            });
  return ring;
}

int quotient_rank(int n, int m) { return build_quotient(n, m, 0).rank(); }

std::vector<int> hilbert_series(int n, int m) {
  QuotientRing ring = build_quotient(n, m, 0);
  int top = 0;
  for (const Monomial& mono : ring.monomial_basis) {
    top = std::max(top, weighted_degree(mono));
  }
  std::vector<int> out(top + 1, 0);
  for (const Monomial& mono : ring.monomial_basis) {
    ++out[weighted_degree(mono)];
  }
  return out;
}

Poly minpoly_tau1(int n, int m, const Rat& q) {
  QuotientRing ring = build_quotient(n, m, q);
  return minimal_polynomial(
      ring.multiplication_matrix(poly_variable(ring.nvars, 1)));
}

std::string export_presentation_json(const QuotientRing& ring) {
  nlohmann::json j;
  j["n"] = ring.n;
  j["m"] = ring.m;
  j["q"] = ring.qval.get_str();
  j["rank"] = ring.rank();
  j["deg_q"] = 2 * ring.n + 2 - ring.m;
  j["generators"] = nlohmann::json::array();
  for (int p = 1; p <= ring.nvars; ++p) {
    j["generators"].push_back({{"name", "t" + std::to_string(p)}, {"degree", p}});
  }
  j["relations"] = nlohmann::json::array();
  const int m = ring.m, n = ring.n;
  size_t idx = 0;
  for (int r = m + 1; r <= 2 * n + 2 - m; ++r, ++idx) {
    j["relations"].push_back({{"name", "d" + std::to_string(r)},
                              {"polynomial", qp_to_string(ring.generators[idx])}});
  }
  for (int s = n + 2 - m; s <= n; ++s, ++idx) {
    j["relations"].push_back({{"name", "b" + std::to_string(s)},
                              {"polynomial", qp_to_string(ring.generators[idx])}});
  }
  j["groebner"] = nlohmann::json::array();
  for (const QPolynomial& g : ring.groebner) j["groebner"].push_back(qp_to_string(g));
  if (ring.qval == 0) {
    j["hilbert"] = hilbert_series(ring.n, ring.m);
  }
  return j.dump(2);
}

}  // namespace qh
