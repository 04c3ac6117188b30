// Root systems, Weyl groups and parabolic coset posets for types B, C, F4, G2.
//
// Weights are stored in fundamental-weight coordinates (lambda_i = <lambda,
// alpha_i^vee>), so a simple reflection acts by s_i(lambda) = lambda -
// lambda[i] * alpha_i with alpha_i expressed in the same coordinates.  All
// pairings with coroots are integers; intermediate length-ratio arithmetic is
// checked for divisibility.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qh {

using Coord = std::int64_t;
using Weight = std::vector<Coord>;  // fundamental-weight coordinates

enum class LieType { B, C, F4, G2 };

std::string lie_type_name(LieType t);

struct Root {
  Weight fw;                  // fundamental-weight coordinates
  std::vector<Coord> simple;  // expansion in simple roots (nonnegative)
  Coord len2 = 0;             // normalized squared length (long root = 2 or 6)
};

struct RootSystem {
  LieType type;
  int rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee>; column j is alpha_j in fw coords.
  std::vector<std::vector<Coord>> cartan;
  std::vector<Coord> simple_len2;  // squared lengths of the simple roots
  std::vector<Root> positive;     // all positive roots, simple roots first
  Weight rho;                      // (1,...,1)

  int num_positive() const { return static_cast<int>(positive.size()); }
  Weight simple_root(int i) const;          // alpha_i in fw coordinates
  Weight reflect(const Weight& w, int i) const;  // s_i(w)
  // <lambda, gamma^vee> for a (positive) root gamma.
  Coord pair_coroot(const Weight& lambda, const Root& gamma) const;
};

// Builds the root system by closing the simple roots under the simple
// reflections.  rank is ignored for F4 (4) and G2 (2).
RootSystem build_root_system(LieType type, int rank);

// A Weyl group element as a word in simple reflections; w = s_{word[0]} *
// s_{word[1]} * ... acts with the rightmost letter applied first.
struct WeylElement {
  std::vector<int> word;
};

Weight weyl_apply(const RootSystem& rs, const WeylElement& w, Weight lambda);
// Applies gamma's reflection: lambda - <lambda,gamma^vee> gamma.
Weight root_reflect(const RootSystem& rs, const Root& gamma, Weight lambda);
// Length of w as #{gamma > 0 : w(gamma) < 0}; independent of the word.
int weyl_length(const RootSystem& rs, const WeylElement& w);
// Length of w * s_gamma where gamma is a positive root.
int weyl_length_times_reflection(const RootSystem& rs, const WeylElement& w,
                                 const Root& gamma);
// Longest element of the standard parabolic subgroup generated by `gens`
// (0-based simple root indices), as a reduced word.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& gens);

// Minimal-length coset representatives of W/W_P with the Bruhat order.
// Cosets are identified by the orbit weight w(seed) where seed is the sum of
// the fundamental weights omega_i, i not in `parabolic`; W_P stabilizes seed.
struct CosetPoset {
  const RootSystem* rs = nullptr;
  std::vector<int> parabolic;   // 0-based simple indices generating W_P
  Weight seed;
  std::vector<WeylElement> reps;      // minimal representatives, by length
  std::vector<Weight> rep_weights;    // reps[i](seed), the coset key
  std::vector<int> lengths;           // lengths[i] = l(reps[i])
  int max_length = 0;                 // dimension of G/P
  // covers[i] = list of (j, root index, chevalley coefficient): reps[j] =
  // reps[i] * s_gamma is a Bruhat cover of reps[i] inside W^P, and the
  // coefficient is <omega, gamma^vee> for the defining fundamental weight
  // omega of the unique simple root not in `parabolic` (only populated when
  // exactly one node is removed, i.e. P is maximal).
  struct Cover {
    int target;
    int root;       // index into rs->positive
    Coord coeff;    // <omega_P, gamma^vee>, 0 when P is not maximal
  };
  std::vector<std::vector<Cover>> covers;

  int size() const { return static_cast<int>(reps.size()); }
  // Index of the coset with key `weight`, or -1.
  int index_of_weight(const Weight& weight) const;
  // Index of the coset of the element w.
  int index_of(const WeylElement& w) const;
  // Poincare duality on labels: the coset of w_0 * reps[i]; uses that -1 is
  // in the Weyl group for B, C, F4, G2, so the dual key is -rep_weights[i].
  int dual(int i) const;
  // Number of representatives of each length 0..max_length.
  std::vector<int> length_histogram() const;

 private:
  std::map<Weight, int> weight_index_;
  friend CosetPoset coset_poset(const RootSystem& rs,
                                const std::vector<int>& parabolic,
                                bool with_covers);
};

// BFS enumeration of W/W_P from the identity coset.  Cover computation is
// quadratic in the poset size; callers that only need sizes and lengths can
// skip it.
CosetPoset coset_poset(const RootSystem& rs, const std::vector<int>& parabolic,
                       bool with_covers = true);

// First Chern class coordinate: sum over gamma in Phi+ \ Phi_P of
// <omega_P, gamma^vee>-weighted... concretely, c1(G/P) = coefficient of the
// removed node in the fw-expansion of sum_{gamma in Phi+ \ Phi_P} gamma.
Coord fano_index(const RootSystem& rs, const CosetPoset& poset);

// Pushforward/pullback combinatorics between two one-node parabolic posets
// sharing the same root system.  For u in posetA (codimension labels),
// hat_image returns the codimension label of the image in G/P_B of the
// preimage in G/(P_A cap P_B) of the Schubert variety labeled u, together
// with the non-negative degree drop
//   drop = l(v) - (l(u) + 1 - codim), codim = max_length(B-poset through
// the correspondence); drop == 0 is the transverse case in which the hat term
// enters the Chevalley formula.
struct HatImage {
  int v = -1;       // label in the target poset
  int drop = 0;     // >= 0
};
HatImage hat_image(const RootSystem& rs, const CosetPoset& from,
                   const CosetPoset& to, int codim_drop_offset, int u);

// Label in the two-node poset (W^{P_A cap P_B}) of the preimage of the
// Schubert variety labeled u in `from`; preserves the codimension label.
int tilde_lift(const RootSystem& rs, const CosetPoset& from,
               const CosetPoset& both, int u);

}  // namespace qh
