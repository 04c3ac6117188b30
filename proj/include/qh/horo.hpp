// The five non-homogeneous horospherical varieties of Picard rank one and
// their (quantum) hyperplane multiplication.
//
// X contains two closed orbits Y = G/P_Y and Z = G/P_Z.  Cohomology has two
// adapted bases:
//   basis A = (sigma'_u)_{u in W^{P_Y}} together with (tau_v)_{v in W^{P_Z}},
//   basis B = (tau'_v) together with (sigma_u),
// where primed classes restrict from the ambient projective space side and
// unprimed classes push forward from the closed orbits; deg sigma'_u = l(u),
// deg tau_v = l(v) + codim_X Z, and Poincare duality pairs A with B.  The
// hyperplane operator is computed on basis A: its classical part is the
// Chevalley formula with one "hat" correction from Y to Z, and its quantum
// part reduces one-pointed degree-1 invariants to the closed orbits.
#pragma once

#include "qh/linalg.hpp"
#include "qh/rootsys.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qh {

struct BasisClass {
  bool zside = false;  // false: Y-side sigma'_u, true: Z-side tau_v
  int rep = -1;        // index into posetY / posetZ
  int degree = 0;      // cohomological (complex) degree
  std::string name;    // "u3", "u'3", "v0", "v'2", ...
};

struct Term {
  int cls = -1;   // basis index; -1 is never stored
  int qpow = 0;
  std::int64_t coeff = 0;
};

class HoroVariety {
 public:
  int case_id = 0;  // 1..5
  int n = 0;        // rank parameter (cases 1 and 3)
  int m = 0;        // second parameter (case 3)
  RootSystem rs;
  int node_y = -1;  // simple node defining P_Y (0-based)
  int node_z = -1;
  CosetPoset posetY, posetZ, posetE;  // E: both nodes removed
  int dimX = 0, dimY = 0, dimZ = 0;
  int codimY = 0, codimZ = 0;
  Coord c1X = 0, c1Y = 0, c1Z = 0;

  std::vector<BasisClass> basis;  // basis A, ordered by (degree, name)
  std::vector<int> y_class;       // posetY index -> basis index
  std::vector<int> z_class;       // posetZ index -> basis index

  bool quantum_supported = false;
  std::string quantum_note;  // reason when unsupported

  int basis_index(const std::string& name) const;  // -1 if unknown
  const BasisClass& unit() const { return basis[y_class[0]]; }

  // h cup c for a single basis class (no q terms).
  std::vector<Term> classical_chevalley(int cls) const;
  // h * c including q and q^2 corrections; throws when unsupported.
  std::vector<Term> quantum_chevalley(int cls) const;

  // Matrix of h* on basis A with q specialized to a rational value.
  Matrix h_matrix(const Rat& q) const;

  // Poincare pairing of basis A against basis B in the dual ordering:
  // entry (i,j) = integral of basis[i] cup PD-partner... concretely the
  // matrix with rows basis A and columns basis B classes ordered as the
  // duals of basis A; duality predicts the identity matrix.
  Matrix poincare_pairing_matrix() const;

  // One-pointed degree-1 invariant <h, a, b> on a homogeneous space given by
  // its coset poset, via the quantum Chevalley formula for G/P.  Arguments
  // are codimension labels; returns 0 when degrees do not match.
  static std::int64_t gw1_homogeneous(const RootSystem& rs,
                                      const CosetPoset& poset, int a, int b);

 private:
  // X-level degree-1 invariants by lemma reduction; arguments are poset
  // labels.  Throw on the documented excess-intersection configurations.
  std::int64_t inv_ss_prime(int u1, int u2) const;       // <h,s'_{u1},s_{u2}>
  std::int64_t inv_st(int u, int v) const;               // <h,s_u,t_v>
  std::int64_t inv_sprime_tprime(int u, int v) const;    // <h,s'_u,t'_v>
  std::int64_t inv_t_tprime(int v1, int v2) const;       // <h,t_{v1},t'_{v2}>
  std::int64_t inv_s_tprime(int u, int v) const;         // <h,s_u,t'_v>
  std::int64_t inv_tprime_tprime(int v1, int v2) const;  // <h,t'_{v1},t'_{v2}>

  // Shipped classical identity rewriting tau_v as a combination of other
  // classes in degree dim X - 2; used only when c1(X) = c1(Z) - 1.
  // kind: 0 = sigma'_{u} (basis A), 1 = sigma_{u} (basis B),
  // 2 = tau'_{u} (basis B); u is the poset label on the matching side.
  struct MixedTerm {
    int kind;
    int u;
    std::int64_t coeff;
  };
  std::map<int, std::vector<MixedTerm>> tau_identities_;  // v -> expansion

  friend HoroVariety build_variety(int case_id, int n, int m);
};

// case_id in 1..5; n is required for case (1) (n >= 3) and case (3)
// (2 <= m <= n), m only for case (3).
HoroVariety build_variety(int case_id, int n = 0, int m = 0);

// Diagnostics for the acceptance gate and the CLI.
struct SemisimplicityReport {
  Poly minpoly_q1;          // minimal polynomial of h* at q = 1
  bool squarefree_q1 = false;
  bool invertible_q1 = false;  // det(h* at q=1) != 0
  bool nilpotent_q0 = false;
  bool semisimple = false;  // squarefree and invertible at q = 1
};
SemisimplicityReport semisimplicity_report(const HoroVariety& x);

// Serialization used by the CLI and the golden-table tests.
std::string export_table_json(const HoroVariety& x, bool quantum);
std::string export_hasse_dot(const HoroVariety& x, bool quantum);
std::string export_hasse_markdown(const HoroVariety& x, bool quantum);

}  // namespace qh
