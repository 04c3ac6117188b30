#include "qh/horo.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qh {

namespace {

// Assigns the display names u0, u'2, v3, ... within one poset.  Classes are
// grouped by length; a singleton gets the plain name.  When several classes
// share a length, reduced words pin down which one is primed (the engine's
// BFS order is otherwise not meaningful); unlisted classes fall back to BFS
// order with increasing prime counts.
std::vector<std::string> assign_names(
    const CosetPoset& poset, char letter,
    const std::vector<std::vector<int>>& primed_words,
    const std::vector<std::vector<int>>& unprimed_words) {
  std::vector<int> primed_idx, unprimed_idx;
  for (const auto& w : primed_words) {
    const int i = poset.index_of(WeylElement{w});
    if (i < 0) throw std::logic_error("primed word not a coset representative");
    primed_idx.push_back(i);
  }
  for (const auto& w : unprimed_words) {
    const int i = poset.index_of(WeylElement{w});
    if (i < 0) throw std::logic_error("unprimed word not a representative");
    unprimed_idx.push_back(i);
  }
  auto listed = [](const std::vector<int>& v, int i) {
    return std::find(v.begin(), v.end(), i) != v.end();
  };
  std::vector<std::string> names(poset.size());
  for (int len = 0; len <= poset.max_length; ++len) {
    std::vector<int> at;
    for (int i = 0; i < poset.size(); ++i)
      if (poset.lengths[i] == len) at.push_back(i);
    // Order: explicitly unprimed first, explicitly primed last, the rest in
    // BFS order in between.
    std::stable_sort(at.begin(), at.end(), [&](int a, int b) {
      auto rank = [&](int i) {
        if (listed(unprimed_idx, i)) return 0;
        if (listed(primed_idx, i)) return 2;
        return 1;
      };
      return rank(a) < rank(b);
    });
    for (std::size_t k = 0; k < at.size(); ++k) {
      std::string nm(1, letter);
      nm += std::string(k, '\'');
      nm += std::to_string(len);
      names[at[k]] = nm;
    }
  }
  return names;
}

struct CaseConfig {
  LieType type;
  int rank;
  int node_y;
  int node_z;
  std::vector<std::vector<int>> y_primed, y_unprimed, z_primed, z_unprimed;
};

CaseConfig case_config(int case_id, int n, int m) {
  switch (case_id) {
    case 1:
      if (n < 3) throw std::invalid_argument("case 1 requires n >= 3");
      if (n == 3)
        return {LieType::B, n, n - 2, n - 1,
                // u'_2 = s1 s2, u'_3 = s3 s1 s2, u'_4 = s2 s3 s1 s2,
                // u'_5 = s3 s2 s3 s1 s2 (1-based letters in the comments).
                {{0, 1}, {2, 0, 1}, {1, 2, 0, 1}, {2, 1, 2, 0, 1}},
                {},
                {{2, 1, 2}},  // v'_3 = s3 s2 s3
                {}};
      return {LieType::B, n, n - 2, n - 1, {}, {}, {}, {}};
    case 2:
      return {LieType::B, 3, 0, 2, {}, {}, {{2, 1, 2}}, {}};
    case 3:
      if (m < 2 || m > n) throw std::invalid_argument("case 3 needs 2<=m<=n");
      if (n == 3 && m == 3)
        return {LieType::C, n, m - 1, m - 2,
                {},
                {{0, 1, 2}},  // u_3 = s1 s2 s3 unprimed
                {},
                // v_2 = s1 s2, v_3 = s3 s1 s2, v_4 = s2 s3 s1 s2,
                // v_5 = s3 s2 s3 s1 s2 are the unprimed classes.
                {{0, 1}, {2, 0, 1}, {1, 2, 0, 1}, {2, 1, 2, 0, 1}}};
      return {LieType::C, n, m - 1, m - 2, {}, {}, {}, {}};
    case 4:
      return {LieType::F4, 4, 1, 2, {}, {}, {}, {}};
    case 5:
      // Y is the adjoint fivefold G2/P_beta, Z the quadric G2/P_alpha.
      return {LieType::G2, 2, 1, 0, {}, {}, {}, {}};
    default:
      throw std::invalid_argument("case_id must be 1..5");
  }
}

std::vector<int> complement_nodes(int rank, std::initializer_list<int> out) {
  std::vector<int> par;
  for (int i = 0; i < rank; ++i)
    if (std::find(out.begin(), out.end(), i) == out.end()) par.push_back(i);
  return par;
}

}  // namespace

HoroVariety build_variety(int case_id, int n, int m) {
  const CaseConfig cfg = case_config(case_id, n, m);
  HoroVariety x;
  x.case_id = case_id;
  x.n = n;
  x.m = m;
  x.rs = build_root_system(cfg.type, cfg.rank);
  x.node_y = cfg.node_y;
  x.node_z = cfg.node_z;
  x.posetY = coset_poset(x.rs, complement_nodes(x.rs.rank, {cfg.node_y}));
  x.posetZ = coset_poset(x.rs, complement_nodes(x.rs.rank, {cfg.node_z}));
  x.posetE = coset_poset(
      x.rs, complement_nodes(x.rs.rank, {cfg.node_y, cfg.node_z}), false);

  x.dimY = x.posetY.max_length;
  x.dimZ = x.posetZ.max_length;
  x.dimX = x.posetE.max_length + 1;  // X is a cone-like closure of a line
                                     // bundle over the two-orbit quotient
  x.codimY = x.dimX - x.dimY;
  x.codimZ = x.dimX - x.dimZ;
  x.c1X = x.codimY + x.codimZ;
  x.c1Y = fano_index(x.rs, x.posetY);
  x.c1Z = fano_index(x.rs, x.posetZ);

  const auto y_names =
      assign_names(x.posetY, 'u', cfg.y_primed, cfg.y_unprimed);
  const auto z_names =
      assign_names(x.posetZ, 'v', cfg.z_primed, cfg.z_unprimed);

  x.y_class.assign(x.posetY.size(), -1);
  x.z_class.assign(x.posetZ.size(), -1);
  for (int u = 0; u < x.posetY.size(); ++u)
    x.basis.push_back({false, u, x.posetY.lengths[u], y_names[u]});
  for (int v = 0; v < x.posetZ.size(); ++v)
    x.basis.push_back({true, v, x.posetZ.lengths[v] + x.codimZ, z_names[v]});
  std::stable_sort(x.basis.begin(), x.basis.end(),
                   [](const BasisClass& a, const BasisClass& b) {
                     if (a.degree != b.degree) return a.degree < b.degree;
                     if (a.zside != b.zside) return !a.zside;
                     return a.name < b.name;
                   });
  for (int i = 0; i < static_cast<int>(x.basis.size()); ++i) {
    if (x.basis[i].zside)
      x.z_class[x.basis[i].rep] = i;
    else
      x.y_class[x.basis[i].rep] = i;
  }

  // Quantum support: every one-pointed invariant in the hyperplane product
  // must be decided by the degree-1 reductions.  This holds whenever
  // c1(X) >= c1(Z) (cases (2) and (3)), and in the two boundary cases
  // c1(X) = c1(Z) - 1 with a shipped class identity in degree dim X - 2
  // (case (1) with n = 3 and case (5)); the remaining configurations hit an
  // excess-intersection wall.
  if (x.c1X >= x.c1Z) {
    x.quantum_supported = true;
  } else if (x.c1X == x.c1Z - 1 && (case_id == 5 || (case_id == 1 && n == 3))) {
    x.quantum_supported = true;
  } else {
    x.quantum_supported = false;
    x.quantum_note =
        "quantum products need excess-intersection data (c1(X) <= c1(Z)-1 "
        "without a known class identity)";
  }

  auto label_by_name = [&](const std::string& nm, bool zside) {
    for (const auto& b : x.basis)
      if (b.zside == zside && b.name == nm) return b.rep;
    throw std::logic_error("missing class " + nm);
  };
  if (case_id == 1 && n == 3) {
    // tau_{v_4} = sigma_{u_5} - sigma'_{u_7} in degree dim X - 2 = 7.
    x.tau_identities_[label_by_name("v4", true)] = {
        {1, label_by_name("u5", false), 1},
        {0, label_by_name("u7", false), -1}};
  }
  if (case_id == 5) {
    // tau_{v_3} = tau'_{v_5} in degree dim X - 2 = 5.
    x.tau_identities_[label_by_name("v3", true)] = {
        {2, label_by_name("v5", true), 1}};
  }
  return x;
}

int HoroVariety::basis_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    if (basis[i].name == name) return i;
  return -1;
}

std::vector<Term> HoroVariety::classical_chevalley(int cls) const {
  const BasisClass& c = basis[cls];
  std::vector<Term> out;
  if (!c.zside) {
    for (const auto& cov : posetY.covers[c.rep])
      out.push_back({y_class[cov.target], 0, cov.coeff});
    const HatImage h = hat_image(rs, posetY, posetZ, codimZ, c.rep);
    if (h.drop == 0) out.push_back({z_class[h.v], 0, 1});
  } else {
    for (const auto& cov : posetZ.covers[c.rep])
      out.push_back({z_class[cov.target], 0, cov.coeff});
  }
  return out;
}

std::int64_t HoroVariety::gw1_homogeneous(const RootSystem& rs,
                                          const CosetPoset& poset, int a,
                                          int b) {
  const Coord c1 = fano_index(rs, poset);
  if (poset.lengths[a] + poset.lengths[b] + 1 != poset.max_length + c1)
    return 0;
  std::vector<bool> in_par(rs.rank, false);
  for (int i : poset.parabolic) in_par[i] = true;
  Weight omega(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    if (!in_par[i]) omega[i] = 1;
  const int target = poset.dual(b);
  const WeylElement& u = poset.reps[a];
  // Quantum Chevalley term of degree one: q sigma_v appears in h * sigma_u
  // with coefficient summing <omega, gamma^vee> over the roots gamma of
  // curve degree one whose reflection moves the coset of u to the coset of
  // v; the degree grading pins l(v) = l(u) + 1 - c1 so only cosets in that
  // length stratum can receive a contribution.
  std::int64_t total = 0;
  for (const Root& gamma : rs.positive) {
    bool in_levi = true;
    for (int i = 0; i < rs.rank && in_levi; ++i)
      if (gamma.simple[i] != 0 && !in_par[i]) in_levi = false;
    if (in_levi) continue;
    if (rs.pair_coroot(omega, gamma) != 1) continue;  // q-degree 1 only
    const int idx =
        poset.index_of_weight(weyl_apply(rs, u, root_reflect(rs, gamma,
                                                             poset.seed)));
    if (poset.lengths[idx] != poset.lengths[a] + 1 - static_cast<int>(c1))
      continue;
    if (idx == target) ++total;
  }
  return total;
}

std::int64_t HoroVariety::inv_ss_prime(int, int) const { return 0; }

std::int64_t HoroVariety::inv_st(int u, int v) const {
  const int tu = tilde_lift(rs, posetY, posetE, u);
  const int tv = tilde_lift(rs, posetZ, posetE, v);
  return posetE.dual(tu) == tv ? 1 : 0;
}

std::int64_t HoroVariety::inv_sprime_tprime(int u, int v) const {
  if (c1X >= c1Z) return 0;
  if (c1X != c1Z - 1)
    throw std::runtime_error(
        "excess intersection: <h,s'_u,t'_v> with c1(X) <= c1(Z)-2");
  const HatImage h = hat_image(rs, posetY, posetZ, codimZ, u);
  if (h.drop != 0) return 0;  // degree mismatch on Z
  return gw1_homogeneous(rs, posetZ, h.v, v);
}

std::int64_t HoroVariety::inv_s_tprime(int u, int v) const {
  if (c1X - c1Y + 1 - codimY != 0) return 0;  // the quantity is always <= 0
  const HatImage h = hat_image(rs, posetZ, posetY, codimY, v);
  if (h.drop != 0) return 0;
  return gw1_homogeneous(rs, posetY, u, h.v);
}

std::int64_t HoroVariety::inv_tprime_tprime(int v1, int v2) const {
  const Coord diff = c1X - c1Y - (codimY - 2);
  if (diff > 0) return 0;
  if (diff < 0)
    throw std::runtime_error("excess intersection in <h,t'_{v1},t'_{v2}>");
  const HatImage h1 = hat_image(rs, posetZ, posetY, codimY, v1);
  const HatImage h2 = hat_image(rs, posetZ, posetY, codimY, v2);
  if (h1.drop != 0 || h2.drop != 0) return 0;
  return gw1_homogeneous(rs, posetY, h1.v, h2.v);
}

std::int64_t HoroVariety::inv_t_tprime(int v1, int v2) const {
  if (c1X > c1Z) return 0;
  if (c1X == c1Z) return gw1_homogeneous(rs, posetZ, v1, v2);
  if (c1X != c1Z - 1)
    throw std::runtime_error(
        "excess intersection: <h,t_v,t'_w> with c1(X) <= c1(Z)-2");
  const int deg = posetZ.lengths[v1] + codimZ;
  // In the top two degrees the Z-pushforward class coincides with the
  // Y-pushforward class ([pt] and [line]); rewrite and use the mixed lemma.
  if (deg >= dimX - 1) {
    const int want_len = dimY - (dimX - deg);
    int u_top = -1;
    for (int u = 0; u < posetY.size(); ++u)
      if (posetY.lengths[u] == want_len) {
        if (u_top >= 0)
          throw std::logic_error("point/line class not unique on Y");
        u_top = u;
      }
    return inv_s_tprime(u_top, v2);
  }
  const auto it = tau_identities_.find(v1);
  if (it == tau_identities_.end())
    throw std::runtime_error(
        "missing class identity for a degree-" + std::to_string(deg) +
        " invariant <h,t_v,t'_w>");
  std::int64_t total = 0;
  for (const MixedTerm& t : it->second) {
    switch (t.kind) {
      case 0:  // sigma'_{u} (basis A)
        total += t.coeff * inv_sprime_tprime(t.u, v2);
        break;
      case 1:  // sigma_{u} (basis B)
        total += t.coeff * inv_s_tprime(t.u, v2);
        break;
      case 2:  // tau'_{w} (basis B)
        total += t.coeff * inv_tprime_tprime(t.u, v2);
        break;
      default:
        throw std::logic_error("bad identity term");
    }
  }
  return total;
}

std::vector<Term> HoroVariety::quantum_chevalley(int cls) const {
  if (!quantum_supported) throw std::runtime_error(quantum_note);
  std::vector<Term> out = classical_chevalley(cls);
  const BasisClass& c = basis[cls];
  const int qdeg = c.degree + 1 - static_cast<int>(c1X);
  if (qdeg >= 0) {
    for (int g = 0; g < static_cast<int>(basis.size()); ++g) {
      if (basis[g].degree != qdeg) continue;
      std::int64_t coeff = 0;
      if (!c.zside) {
        if (!basis[g].zside)
          coeff = inv_ss_prime(c.rep, posetY.dual(basis[g].rep));
        else
          coeff = inv_sprime_tprime(c.rep, posetZ.dual(basis[g].rep));
      } else {
        if (!basis[g].zside)
          coeff = inv_st(posetY.dual(basis[g].rep), c.rep);
        else
          coeff = inv_t_tprime(c.rep, posetZ.dual(basis[g].rep));
      }
      if (coeff != 0) out.push_back({g, 1, coeff});
    }
  }
  // Unique degree-2 correction: 2 q^2 on the point class, exactly when both
  // X and Y sit on the dimension boundary dim = 2 c1 - 1.
  if (dimX == 2 * c1X - 1 && dimY == 2 * c1Y - 1 && c.zside &&
      posetZ.lengths[c.rep] == dimZ)
    out.push_back({y_class[0], 2, 2});
  return out;
}

Matrix HoroVariety::h_matrix(const Rat& q) const {
  const int n_ = static_cast<int>(basis.size());
  Matrix m(n_, std::vector<Rat>(n_, 0));
  for (int j = 0; j < n_; ++j) {
    for (const Term& t : quantum_chevalley(j)) {
      Rat f = t.coeff;
      for (int k = 0; k < t.qpow; ++k) f *= q;
      m[t.cls][j] += f;
    }
  }
  return m;
}

Matrix HoroVariety::poincare_pairing_matrix() const {
  // Rows: basis A.  Columns: basis B in the order (tau'_v by posetZ index,
  // sigma_u by posetY index).  Entries from the orbit geometry: primed
  // classes pair with the unprimed classes of the same side through the
  // poset duality, the mixed products vanish.
  const int nz = posetZ.size(), ny = posetY.size();
  const int n_ = static_cast<int>(basis.size());
  Matrix m(n_, std::vector<Rat>(n_, 0));
  for (int i = 0; i < n_; ++i) {
    const BasisClass& c = basis[i];
    if (!c.zside) {
      // integral of sigma'_u cup sigma_{u'} = delta_{u', dual(u)}
      m[i][nz + posetY.dual(c.rep)] = 1;
    } else {
      m[i][posetZ.dual(c.rep)] = 1;
    }
  }
  return m;
}

SemisimplicityReport semisimplicity_report(const HoroVariety& x) {
  SemisimplicityReport r;
  const Matrix m1 = x.h_matrix(1);
  r.minpoly_q1 = minimal_polynomial(m1);
  r.squarefree_q1 = poly_squarefree(r.minpoly_q1);
  r.invertible_q1 = det(m1) != 0;
  r.nilpotent_q0 = is_nilpotent(x.h_matrix(0));
  r.semisimple = r.squarefree_q1 && r.invertible_q1;
  return r;
}

namespace {

nlohmann::json terms_to_json(const HoroVariety& x, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    if (a.qpow != b.qpow) return a.qpow < b.qpow;
    if (x.basis[a.cls].degree != x.basis[b.cls].degree)
      return x.basis[a.cls].degree < x.basis[b.cls].degree;
    return x.basis[a.cls].name < x.basis[b.cls].name;
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const Term& t : terms)
    arr.push_back({{"label", x.basis[t.cls].name},
                   {"coeff", t.coeff},
                   {"qpow", t.qpow}});
  return arr;
}

}  // namespace

std::string export_table_json(const HoroVariety& x, bool quantum) {
  nlohmann::json j;
  j["case"] = x.case_id;
  if (x.n) j["n"] = x.n;
  if (x.m) j["m"] = x.m;
  j["dim"] = x.dimX;
  j["c1"] = x.c1X;
  j["quantum"] = quantum;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : x.basis)
    basis.push_back({{"name", b.name},
                     {"side", b.zside ? "Z" : "Y"},
                     {"degree", b.degree}});
  j["basis"] = basis;
  nlohmann::json products;
  for (int i = 0; i < static_cast<int>(x.basis.size()); ++i)
    products[x.basis[i].name] = terms_to_json(
        x, quantum ? x.quantum_chevalley(i) : x.classical_chevalley(i));
  j["products"] = products;
  return j.dump(2) + "\n";
}

std::string export_hasse_dot(const HoroVariety& x, bool quantum) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& b : x.basis)
    os << "  \"" << b.name << "\" [degree=" << b.degree << "];\n";
  for (int i = 0; i < static_cast<int>(x.basis.size()); ++i) {
    auto terms = quantum ? x.quantum_chevalley(i) : x.classical_chevalley(i);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      if (a.qpow != b.qpow) return a.qpow < b.qpow;
      return x.basis[a.cls].name < x.basis[b.cls].name;
    });
    for (const Term& t : terms)
      os << "  \"" << x.basis[i].name << "\" -> \"" << x.basis[t.cls].name
         << "\" [coeff=" << t.coeff << ", qpow=" << t.qpow << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_hasse_markdown(const HoroVariety& x, bool quantum) {
  std::ostringstream os;
  os << "| class | degree | h " << (quantum ? "*" : "cup") << " class |\n";
  os << "| --- | --- | --- |\n";
  for (int i = 0; i < static_cast<int>(x.basis.size()); ++i) {
    auto terms = quantum ? x.quantum_chevalley(i) : x.classical_chevalley(i);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      if (a.qpow != b.qpow) return a.qpow < b.qpow;
      return x.basis[a.cls].name < x.basis[b.cls].name;
    });
    os << "| " << x.basis[i].name << " | " << x.basis[i].degree << " | ";
    if (terms.empty()) os << "0";
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k) os << " + ";
      if (terms[k].coeff != 1) os << terms[k].coeff << " ";
      for (int p = 0; p < terms[k].qpow; ++p) os << "q ";
      os << x.basis[terms[k].cls].name;
    }
    os << " |\n";
  }
  return os.str();
}

}  // namespace qh
