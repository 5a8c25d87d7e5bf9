#pragma once

#include <adlv/mapfile.hpp>

#include <string>
#include <vector>

namespace adlv {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, a minimal counterexample on failure
};

// Pipeline vs closed formula on every shrunken alcove of the window.
CheckResult check_formula(const RootSystem& rs, int radius, int window);
CheckResult check_formula(const RootSystem& rs, const DimensionMap& dm);

// k_level_dimension == <mu, rho> for every dominant mu up to the bound.
CheckResult check_mu_rho(const RootSystem& rs, int max_pairing, const DimensionMap& dm);
CheckResult check_mu_rho(const RootSystem& rs, int max_pairing);

CheckResult check_golden(const MapFile& mf, const std::vector<GoldenRow>& rows);

// The invariant bundle: Q1 tie-break independence, easy-choice bounds,
// fundamental-domain agreement, symmetry invariance, stability, collision
// audits. `radius` bounds the exhaustive sweeps.
std::vector<CheckResult> check_properties(const RootSystem& rs, int radius);

// Dominant coroot-lattice vectors with <mu, rho> <= bound.
std::vector<IVec> dominant_mu_up_to(const RootSystem& rs, int bound);

}  // namespace adlv
