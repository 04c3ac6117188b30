#include "qh/bott.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qh {

mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  for (Coord c : lambda) {
    if (c < 0) throw std::invalid_argument("weyl_dimension needs dominant weight");
  }
  Weight shifted(lambda);
  for (int i = 0; i < rs.rank; ++i) shifted[i] += 1;  // lambda + rho
  mpz_class num = 1, den = 1;
  for (const Root& gamma : rs.positive) {
    num *= (long)rs.pair_coroot(shifted, gamma);
    den *= (long)rs.pair_coroot(rs.rho, gamma);
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

CohomologyResult line_bundle_cohomology(const RootSystem& rs,
                                        const Weight& chi) {
  Weight lambda(chi);
  for (int i = 0; i < rs.rank; ++i) lambda[i] += 1;  // chi + rho
  CohomologyResult res;
  int length = 0;
  // Bring chi + rho into the dominant chamber by simple reflections; a zero
  // coordinate at any point means chi + rho lies on a wall (singular).
  for (int guard = 0; guard <= rs.num_positive() + 1; ++guard) {
    int negative = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (lambda[i] == 0) {
        res.outcome = CohomOutcome::all_zero;
        return res;
      }
      if (lambda[i] < 0 && negative == -1) negative = i;
    }
    if (negative == -1) {
      res.outcome = CohomOutcome::concentrated;
      res.degree = length;
      res.highest_weight = lambda;
      for (int i = 0; i < rs.rank; ++i) res.highest_weight[i] -= 1;
      res.dimension = weyl_dimension(rs, res.highest_weight);
      return res;
    }
    lambda = rs.reflect(lambda, negative);
    ++length;
  }
  throw std::logic_error("dominance search did not terminate");
}

mpz_class euler_char_filtered(const RootSystem& rs,
                              const std::vector<Weight>& weights,
                              const Weight& twist) {
  mpz_class total = 0;
  for (const Weight& w : weights) {
    Weight chi(w);
    for (int i = 0; i < rs.rank; ++i) chi[i] += twist[i];
    CohomologyResult r = line_bundle_cohomology(rs, chi);
    if (r.outcome == CohomOutcome::concentrated) {
      total += (r.degree % 2 == 0) ? r.dimension : -r.dimension;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Claims.

namespace {

LieType lie_type_from_string(const std::string& s) {
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "F4") return LieType::F4;
  if (s == "G2") return LieType::G2;
  throw std::runtime_error("unknown Lie type: " + s);
}

Weight parse_weight(const nlohmann::json& j, int rank) {
  if (!j.is_array() || (int)j.size() != rank) {
    throw std::runtime_error("weight must be an array of length rank");
  }
  Weight w;
  for (const auto& c : j) w.push_back(c.get<Coord>());
  return w;
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    default: return "not_decidable";
  }
}

}  // namespace

std::vector<VanishingClaim> load_claims_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::runtime_error("claims file must be an array");
  std::vector<VanishingClaim> out;
  for (const auto& c : j) {
    VanishingClaim claim;
    claim.name = c.at("name").get<std::string>();
    claim.citation = c.value("citation", std::string());
    claim.type = lie_type_from_string(c.value("type", std::string("G2")));
    claim.rank = c.value("rank", 2);
    for (const auto& w : c.at("weights")) {
      claim.weights.push_back(parse_weight(w, claim.rank));
    }
    if (claim.weights.empty()) throw std::runtime_error("empty weight list");
    claim.twist = c.contains("twist") ? parse_weight(c.at("twist"), claim.rank)
                                      : Weight(claim.rank, 0);
    claim.assertion = c.at("assertion").get<std::string>();
    if (claim.assertion == "euler_char_equals") {
      claim.euler_value = c.at("value").get<long>();
    } else if (claim.assertion == "concentrated_in") {
      claim.degree = c.at("degree").get<int>();
      claim.dimension = mpz_class(c.at("dimension").get<long>());
    } else if (claim.assertion != "all_cohomology_zero") {
      throw std::runtime_error("unknown assertion: " + claim.assertion);
    }
    out.push_back(std::move(claim));
  }
  return out;
}

ClaimReport verify_claim(const VanishingClaim& claim) {
  RootSystem rs = build_root_system(claim.type, claim.rank);
  ClaimReport report;
  report.name = claim.name;
  std::ostringstream detail;

  std::vector<CohomologyResult> steps;
  for (const Weight& w : claim.weights) {
    Weight chi(w);
    for (int i = 0; i < rs.rank; ++i) chi[i] += claim.twist[i];
    steps.push_back(line_bundle_cohomology(rs, chi));
    const CohomologyResult& r = steps.back();
    detail << weight_str(chi) << ": ";
    if (r.outcome == CohomOutcome::all_zero) {
      detail << "0; ";
    } else {
      detail << "H^" << r.degree << " dim " << r.dimension.get_str() << "; ";
    }
  }

  if (claim.assertion == "euler_char_equals") {
    mpz_class chi_total = euler_char_filtered(rs, claim.weights, claim.twist);
    detail << "euler = " << chi_total.get_str();
    report.verdict = (chi_total == claim.euler_value) ? Verdict::verified
                                                      : Verdict::refuted;
  } else if (claim.assertion == "concentrated_in") {
    if (claim.weights.size() != 1) {
      // Filtration steps only bound the cohomology; a single concentrated
      // degree for the filtered bundle is not decidable at this level.
      report.verdict = Verdict::not_decidable;
    } else {
      const CohomologyResult& r = steps[0];
      report.verdict = (r.outcome == CohomOutcome::concentrated &&
                        r.degree == claim.degree &&
                        r.dimension == claim.dimension)
                           ? Verdict::verified
                           : Verdict::refuted;
    }
  } else {  // all_cohomology_zero
    bool all_zero = true, any_nonzero_step = false;
    for (const CohomologyResult& r : steps) {
      if (r.outcome != CohomOutcome::all_zero) {
        all_zero = false;
        any_nonzero_step = true;
      }
    }
    if (all_zero) {
      report.verdict = Verdict::verified;
    } else if (claim.weights.size() == 1) {
      report.verdict = Verdict::refuted;
    } else {
      // Some filtration steps survive: vanishing of the filtered bundle can
      // still hold through connecting maps, which this level cannot see.
      (void)any_nonzero_step;
      report.verdict = Verdict::not_decidable;
    }
  }
  report.detail = detail.str();
  return report;
}

std::vector<ClaimReport> verify_claims(const std::vector<VanishingClaim>& cs) {
  std::vector<ClaimReport> out;
  out.reserve(cs.size());
  for (const VanishingClaim& c : cs) out.push_back(verify_claim(c));
  return out;
}

std::string claims_report_json(const std::vector<ClaimReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const ClaimReport& r : reports) {
    j.push_back({{"name", r.name},
                 {"verdict", verdict_str(r.verdict)},
                 {"detail", r.detail}});
  }
  return j.dump(2);
}

std::string claims_report_markdown(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  out << "| claim | verdict | evidence |\n|---|---|---|\n";
  for (const ClaimReport& r : reports) {
    out << "| " << r.name << " | " << verdict_str(r.verdict) << " | "
        << r.detail << " |\n";
  }
  return out.str();
}

}  // namespace qh
