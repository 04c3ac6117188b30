#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qh/rootsys.hpp"

#include <algorithm>
#include <set>

using namespace qh;

// Oracle: positive root counts n^2 for B_n/C_n, 24 for F4, 6 for G2
// (classical closed forms, independent of the reflection-closure code path).
TEST_CASE("positive root counts") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(build_root_system(LieType::B, n).num_positive() == n * n);
    CHECK(build_root_system(LieType::C, n).num_positive() == n * n);
  }
  CHECK(build_root_system(LieType::F4, 4).num_positive() == 24);
  CHECK(build_root_system(LieType::G2, 2).num_positive() == 6);
}

TEST_CASE("sum of positive roots is twice rho") {
  for (auto rs : {build_root_system(LieType::B, 4),
                  build_root_system(LieType::C, 3),
                  build_root_system(LieType::F4, 4),
                  build_root_system(LieType::G2, 2)}) {
    Weight sum(rs.rank, 0);
    for (const Root& g : rs.positive)
      for (int i = 0; i < rs.rank; ++i) sum[i] += g.fw[i];
    for (int i = 0; i < rs.rank; ++i) CHECK(sum[i] == 2);
  }
}

// Oracle: the highest root is the fw-dominant weight of the adjoint
// representation: omega_2 for B_n (n>=3), 2*omega_1 for C_n, omega_1 for F4,
// omega_2 (the long simple node) for G2.
TEST_CASE("highest root identifies the type, not its dual") {
  auto highest = [](const RootSystem& rs) {
    return rs.positive.back().fw;
  };
  CHECK(highest(build_root_system(LieType::B, 3)) == Weight{0, 1, 0});
  CHECK(highest(build_root_system(LieType::C, 3)) == Weight{2, 0, 0});
  CHECK(highest(build_root_system(LieType::F4, 4)) == Weight{1, 0, 0, 0});
  CHECK(highest(build_root_system(LieType::G2, 2)) == Weight{0, 1});
}

TEST_CASE("G2 conventions: alpha short, beta long") {
  auto rs = build_root_system(LieType::G2, 2);
  // alpha = 2 omega_alpha - omega_beta, i.e. omega_beta - 2 omega_alpha is
  // the negative of the short simple root.
  CHECK(rs.simple_root(0) == Weight{2, -1});
  CHECK(rs.simple_root(1) == Weight{-3, 2});
  CHECK(rs.simple_len2[0] * 3 == rs.simple_len2[1]);
}

TEST_CASE("longest element negates weights and has full length") {
  for (auto rs : {build_root_system(LieType::B, 3),
                  build_root_system(LieType::C, 3),
                  build_root_system(LieType::F4, 4),
                  build_root_system(LieType::G2, 2)}) {
    std::vector<int> all(rs.rank);
    for (int i = 0; i < rs.rank; ++i) all[i] = i;
    WeylElement w0 = longest_element(rs, all);
    CHECK(weyl_length(rs, w0) == rs.num_positive());
    CHECK(static_cast<int>(w0.word.size()) == rs.num_positive());
    Weight probe = {3, 1, 4};
    probe.resize(rs.rank, 2);
    Weight image = weyl_apply(rs, w0, probe);
    for (int i = 0; i < rs.rank; ++i) CHECK(image[i] == -probe[i]);
  }
}

// Oracle: Betti numbers of the small quotients used throughout, from the
// classical Poincare polynomials (quadrics, Lagrangian and odd orthogonal
// Grassmannians).
TEST_CASE("coset posets: sizes, dimensions, Betti numbers") {
  auto rsB3 = build_root_system(LieType::B, 3);
  auto rsC3 = build_root_system(LieType::C, 3);
  auto rsG2 = build_root_system(LieType::G2, 2);

  auto q5 = coset_poset(rsB3, {1, 2});  // B3/P1, the 5-dim quadric
  CHECK(q5.size() == 6);
  CHECK(q5.max_length == 5);
  CHECK(q5.length_histogram() == std::vector<int>{1, 1, 1, 1, 1, 1});

  auto q6 = coset_poset(rsB3, {0, 1});  // B3/P3 = spinor sixfold = Q6
  CHECK(q6.size() == 8);
  CHECK(q6.max_length == 6);
  CHECK(q6.length_histogram() == std::vector<int>{1, 1, 1, 2, 1, 1, 1});

  auto og27 = coset_poset(rsB3, {0, 2});  // B3/P2 = OG(2,7)
  CHECK(og27.size() == 12);
  CHECK(og27.max_length == 7);
  CHECK(og27.length_histogram() ==
        std::vector<int>{1, 1, 2, 2, 2, 2, 1, 1});

  auto lg36 = coset_poset(rsC3, {0, 1});  // C3/P3 = LG(3,6)
  CHECK(lg36.size() == 8);
  CHECK(lg36.max_length == 6);
  CHECK(lg36.length_histogram() == std::vector<int>{1, 1, 1, 2, 1, 1, 1});

  auto ig26 = coset_poset(rsC3, {0, 2});  // C3/P2 = IG(2,6)
  CHECK(ig26.size() == 12);
  CHECK(ig26.max_length == 7);
  CHECK(ig26.length_histogram() ==
        std::vector<int>{1, 1, 2, 2, 2, 2, 1, 1});

  auto g2ad = coset_poset(rsG2, {0});  // G2/P_beta, the adjoint fivefold
  CHECK(g2ad.size() == 6);
  CHECK(g2ad.max_length == 5);
  auto g2q5 = coset_poset(rsG2, {1});  // G2/P_alpha, a 5-dim quadric
  CHECK(g2q5.size() == 6);
  CHECK(g2q5.max_length == 5);
}

// Oracle: Fano indices of the base spaces (quadric Q^d has index d; the
// remaining values are the classical indices of OG(2,2n+1), IG(m,2n),
// LG(n,2n), the F4 spaces and the G2 adjoint variety).
TEST_CASE("fano indices") {
  auto rsB3 = build_root_system(LieType::B, 3);
  auto rsC3 = build_root_system(LieType::C, 3);
  auto rsF4 = build_root_system(LieType::F4, 4);
  auto rsG2 = build_root_system(LieType::G2, 2);
  CHECK(fano_index(rsB3, coset_poset(rsB3, {1, 2}, false)) == 5);   // Q5
  CHECK(fano_index(rsB3, coset_poset(rsB3, {0, 1}, false)) == 6);   // Q6
  CHECK(fano_index(rsB3, coset_poset(rsB3, {0, 2}, false)) == 4);   // OG(2,7)
  CHECK(fano_index(rsC3, coset_poset(rsC3, {0, 1}, false)) == 4);   // LG(3,6)
  CHECK(fano_index(rsC3, coset_poset(rsC3, {0, 2}, false)) == 5);   // IG(2,6)
  CHECK(fano_index(rsF4, coset_poset(rsF4, {0, 2, 3}, false)) == 5);
  CHECK(fano_index(rsF4, coset_poset(rsF4, {0, 1, 3}, false)) == 7);
  CHECK(fano_index(rsG2, coset_poset(rsG2, {0}, false)) == 3);  // adjoint
  CHECK(fano_index(rsG2, coset_poset(rsG2, {1}, false)) == 5);  // quadric
}

// Oracle: hyperplane products on a quadric double exactly at the middle
// step (h . sigma_j = sigma_{j+1} for j != middle, 2 sigma_{middle+1} at the
// middle of an odd quadric).
TEST_CASE("chevalley coefficients on Q5") {
  auto rsB3 = build_root_system(LieType::B, 3);
  auto q5 = coset_poset(rsB3, {1, 2});
  // Index classes by length: one per degree.
  std::vector<int> by_len(q5.size(), -1);
  for (int i = 0; i < q5.size(); ++i) by_len[q5.lengths[i]] = i;
  for (int j = 0; j < 5; ++j) {
    const auto& cov = q5.covers[by_len[j]];
    REQUIRE(cov.size() == 1);
    CHECK(cov[0].target == by_len[j + 1]);
    CHECK(cov[0].coeff == (j == 2 ? 2 : 1));
  }
}

TEST_CASE("poincare duality on posets is a length-reversing involution") {
  auto rsC3 = build_root_system(LieType::C, 3);
  auto ig26 = coset_poset(rsC3, {0, 2}, false);
  for (int i = 0; i < ig26.size(); ++i) {
    const int d = ig26.dual(i);
    CHECK(ig26.dual(d) == i);
    CHECK(ig26.lengths[d] == ig26.max_length - ig26.lengths[i]);
  }
}

TEST_CASE("hat image and tilde lift on the rank-one B3 pair") {
  auto rs = build_root_system(LieType::B, 3);
  auto posetY = coset_poset(rs, {0, 2}, false);  // OG(2,7) classes
  auto posetZ = coset_poset(rs, {0, 1}, false);  // Q6 classes
  auto posetE = coset_poset(rs, {0}, false);     // two-node quotient
  const int codim_z = 3;  // codim of the closed orbit over Z here

  // u'_2 = s1 s2 maps onto all of Z transversally; u_2 = s3 s2 drops.
  WeylElement up2{{0, 1}};
  const int up2_idx = posetY.index_of(up2);
  REQUIRE(up2_idx >= 0);
  CHECK(posetY.lengths[up2_idx] == 2);
  auto h1 = hat_image(rs, posetY, posetZ, codim_z, up2_idx);
  CHECK(h1.drop == 0);
  CHECK(posetZ.lengths[h1.v] == 0);

  WeylElement u2{{2, 1}};
  const int u2_idx = posetY.index_of(u2);
  REQUIRE(u2_idx >= 0);
  CHECK(u2_idx != up2_idx);
  CHECK(posetY.lengths[u2_idx] == 2);
  auto h2 = hat_image(rs, posetY, posetZ, codim_z, u2_idx);
  CHECK(h2.drop > 0);

  // Tilde lifts preserve the codimension label and are injective.
  std::set<int> seen;
  for (int u = 0; u < posetY.size(); ++u) {
    const int t = tilde_lift(rs, posetY, posetE, u);
    CHECK(posetE.lengths[t] == posetY.lengths[u]);
    CHECK(seen.insert(t).second);
  }
  for (int v = 0; v < posetZ.size(); ++v) {
    const int t = tilde_lift(rs, posetZ, posetE, v);
    CHECK(posetE.lengths[t] == posetZ.lengths[v]);
  }
}
