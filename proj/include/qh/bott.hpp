// Cohomology of line bundles on a full flag variety G/B by the dot-action
// algorithm: H^i(G/B, L_chi) vanishes entirely when chi + rho lies on a wall,
// and otherwise is concentrated in a single degree equal to the number of
// simple reflections needed to bring chi + rho into the dominant chamber,
// where it is the irreducible module of highest weight w(chi + rho) - rho.
//
// On top of this sit Euler characteristics of weight-filtered homogeneous
// bundles (additive along the filtration) and a declarative claims checker
// that replays the vanishing statements behind the rank-12 exceptional
// collection on the G2 two-orbit variety.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qh/rootsys.hpp"

namespace qh {

enum class CohomOutcome { all_zero, concentrated };

struct CohomologyResult {
  CohomOutcome outcome = CohomOutcome::all_zero;
  int degree = -1;           // when concentrated, in [0, |Phi+|]
  Weight highest_weight;     // dominant, when concentrated
  mpz_class dimension = 0;   // Weyl dimension of the resulting module
};

// Dimension of the irreducible module of dominant highest weight lambda:
// prod_{gamma > 0} <lambda + rho, gamma^vee> / <rho, gamma^vee>.
// Throws on non-dominant input.
mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Full cohomology of the line bundle L_chi on G/B for any integral weight.
CohomologyResult line_bundle_cohomology(const RootSystem& rs,
                                        const Weight& chi);

// Signed Euler characteristic sum over a weight filtration, each step
// twisted by `twist`.  Exact for any filtered homogeneous bundle because
// Euler characteristics are additive in short exact sequences.
mpz_class euler_char_filtered(const RootSystem& rs,
                              const std::vector<Weight>& weights,
                              const Weight& twist);

// ---------------------------------------------------------------------------
// Declarative vanishing claims.

struct VanishingClaim {
  std::string name;
  std::string citation;          // free text, shown in reports
  LieType type = LieType::G2;
  int rank = 2;
  std::vector<Weight> weights;   // filtration steps (one entry = line bundle)
  Weight twist;                  // added to every step
  // assertion kinds: "all_cohomology_zero", "euler_char_equals",
  // "concentrated_in".
  std::string assertion;
  long euler_value = 0;          // for euler_char_equals
  int degree = -1;               // for concentrated_in
  mpz_class dimension = 0;       // for concentrated_in
};

enum class Verdict { verified, refuted, not_decidable };

struct ClaimReport {
  std::string name;
  Verdict verdict = Verdict::not_decidable;
  std::string detail;  // evidence: per-step outcomes or computed values
};

// Parses a JSON array of claims; throws std::runtime_error on malformed
// input.
std::vector<VanishingClaim> load_claims_json(const std::string& text);

ClaimReport verify_claim(const VanishingClaim& claim);
std::vector<ClaimReport> verify_claims(const std::vector<VanishingClaim>& cs);

std::string claims_report_json(const std::vector<ClaimReport>& reports);
std::string claims_report_markdown(const std::vector<ClaimReport>& reports);

}  // namespace qh
