#pragma once

#include <adlv/galleries.hpp>

#include <map>
#include <optional>

namespace adlv {

// Folded galleries may stutter; every non-stutter step is still adjacent.
using FoldedGallery = std::vector<Alcove>;

struct FoldOutcome {
    Alcove final;
    int n_hard = 0;
    int n_easy = 0;
    std::vector<int> fold_positions;  // edge indices where the easy choice was taken
};

// Minimal edge index j >= from_index whose hyperplane strictly separates
// C_M from g[j]; stutter edges never qualify.
std::optional<std::pair<int, Hyperplane>> next_choice_edge(const RootSystem& rs,
                                                           const FoldedGallery& g,
                                                           int from_index);

// Depth-first traversal of the choice tree: one outcome per root-to-leaf path.
std::vector<FoldOutcome> enumerate_outcomes(const RootSystem& rs, const Gallery& omega);

int cf_dimension(const FoldOutcome& outcome, const SuperpieceSpec& spec);

// Piece dimensions per comprehensive folding result: max cf-dimension per final alcove.
std::map<AlcoveKey, int> superpiece_map(const RootSystem& rs, const SuperpieceSpec& spec);

}  // namespace adlv
