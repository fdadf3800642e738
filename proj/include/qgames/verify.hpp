// verify.hpp
// Claim-by-claim recomputation of the reference payoff tables and numeric
// claims this engine models. Printed reference values are stored here as
// golden fixtures and never feed back into the computations they check.
//
// Known discrepancy families among the reference values:
//   D1  quantum Hawk-Dove table, cell (Q,Q): printed (15,15), the scheme
//       yields (-25,-25).
//   D2  the closed-form expected-payoff formula is described as holding
//       for either player but matches only one orientation.
//   D3  R-row/column entries of the extended tables: printed as the
//       surface maximum instead of the 50/50-mixture value.
//   D4  the classical Hawk-Dove Nash claim (D,D): the computed pure Nash
//       set is {(H,D),(D,H)}.

#pragma once

#include <string>
#include <vector>

namespace qgames::verify {

struct ClaimReport {
    std::string claim_id;        // stable identifier, e.g. "T16-QQ"
    std::string location;        // reference anchor
    std::vector<double> reported;  // value(s) as printed
    std::vector<double> computed;  // value(s) recomputed by the engine
    std::string verdict;         // "MATCH" | "DISCREPANCY"
    std::string family;          // "D1".."D4" for known discrepancies, else ""
    std::string note;

    bool operator==(const ClaimReport&) const = default;
};

// Recomputes every golden claim. Deterministic, including the random
// parameter sampling (fixed seed).
std::vector<ClaimReport> run_all_claims();

std::string report_to_json(const std::vector<ClaimReport>& claims);
std::vector<ClaimReport> parse_report_json(const std::string& text);

}  // namespace qgames::verify
