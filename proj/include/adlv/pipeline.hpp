#pragma once

#include <adlv/folding.hpp>

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace adlv {

struct NotInShrunkenRegion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OddNumerator : std::logic_error {
    using std::logic_error::logic_error;
};
struct RadiusTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EnumMode { AllVertices, FundamentalDomain };

// One (dim, v1-special) contribution to an alcove; kept for the data audits.
struct Contribution {
    int dim;
    bool special;
    bool operator<(const Contribution& o) const {
        return dim != o.dim ? dim < o.dim : special < o.special;
    }
};

struct DimensionMap {
    RootSystemKind group;
    int radius = 0;
    int window = 0;
    EnumMode mode = EnumMode::AllVertices;
    bool stable = false;

    std::vector<Alcove> window_alcoves;       // every alcove of length <= window
    std::map<AlcoveKey, int> dims;            // all accumulated values, any length
    std::map<AlcoveKey, std::set<Contribution>> contributions;  // pieces only
    long long superpieces = 0;
    long long omega_rejects = 0;              // self-intersecting omegas (skipped)
    long long same_final_collisions = 0;      // two paths, one final, different cf-dims

    // Dim value for a window alcove; nullopt = Empty. Throws outside the window.
    std::optional<int> entry(const RootSystem& rs, const Alcove& a) const;
};

struct MuSpec {
    IVec mu;
    long long pairing = 0;
    std::vector<Alcove> coset;  // the full double coset W t_mu W
};

std::map<AlcoveKey, int> base_case_entries(const RootSystem& rs);

// Vertices v1 with every positive-root pairing of magnitude <= R, v1 not a
// vertex of C_M, in deterministic order.
std::vector<Vec> enumerate_vertices(const RootSystem& rs, int radius);

DimensionMap dimension_map(const RootSystem& rs, int radius, int window,
                           EnumMode mode = EnumMode::AllVertices,
                           bool require_stability = false);

std::optional<int> formula_eval(const RootSystem& rs, const Alcove& a);

MuSpec make_mu_spec(const RootSystem& rs, const IVec& mu);
int k_level_dimension(const RootSystem& rs, const MuSpec& mu, const DimensionMap& dm);

struct ConjectureVerdict {
    bool in_region = false;
    bool predicted_nonempty = false;  // meaningful only when in_region
};
ConjectureVerdict conjecture_region(const RootSystem& rs, const IVec& b_lambda, const Alcove& a);

}  // namespace adlv
