#include <adlv/folding.hpp>

namespace adlv {

namespace {

Hyperplane edge_hyperplane(const RootSystem& rs, const Alcove& a, const Alcove& b) {
    AlcoveKey ka = alcove_key(rs, a), kb = alcove_key(rs, b);
    for (size_t r = 0; r < ka.size(); ++r)
        if (ka[r] != kb[r]) return Hyperplane{static_cast<int>(r), std::max(ka[r], kb[r])};
    throw std::logic_error("stutter edge has no hyperplane");
}

void explore(const RootSystem& rs, FoldedGallery g, int from, int n_hard, int n_easy,
             std::vector<int> folds, std::vector<FoldOutcome>& out) {
    auto edge = next_choice_edge(rs, g, from);
    if (!edge) {
        out.push_back(FoldOutcome{g.back(), n_hard, n_easy, std::move(folds)});
        return;
    }
    auto [j, h] = *edge;
    explore(rs, g, j + 1, n_hard + 1, n_easy, folds, out);  // hard: keep crossing
    // easy: reflect the tail about h_j, creating a stutter at j+1
    FoldedGallery folded = g;
    for (size_t i = j + 1; i < folded.size(); ++i) folded[i] = reflect(rs, h, folded[i]);
    folds.push_back(j);
    explore(rs, std::move(folded), j + 1, n_hard, n_easy + 1, std::move(folds), out);
}

}  // namespace

std::optional<std::pair<int, Hyperplane>> next_choice_edge(const RootSystem& rs,
                                                           const FoldedGallery& g,
                                                           int from_index) {
    Vec b0 = base_barycenter(rs);
    for (int j = std::max(from_index, 0); j + 1 < static_cast<int>(g.size()); ++j) {
        if (g[j].bary == g[j + 1].bary) continue;
        Hyperplane h = edge_hyperplane(rs, g[j], g[j + 1]);
        Rat side_cm = rs.pairing(h.root, b0) - Rat(h.k);
        Rat side_j = rs.pairing(h.root, g[j].bary) - Rat(h.k);
        if ((side_cm < Rat(0)) != (side_j < Rat(0))) return std::make_pair(j, h);
    }
    return std::nullopt;
}

std::vector<FoldOutcome> enumerate_outcomes(const RootSystem& rs, const Gallery& omega) {
    std::vector<FoldOutcome> out;
    explore(rs, omega, 0, 0, 0, {}, out);
    return out;
}

int cf_dimension(const FoldOutcome& outcome, const SuperpieceSpec& spec) {
    return static_cast<int>(spec.gamma.size()) + static_cast<int>(spec.gamma_c.size()) -
           outcome.n_hard - 2;
}

std::map<AlcoveKey, int> superpiece_map(const RootSystem& rs, const SuperpieceSpec& spec) {
    std::map<AlcoveKey, int> piece;
    for (const auto& outcome : enumerate_outcomes(rs, spec.omega)) {
        int dim = cf_dimension(outcome, spec);
        AlcoveKey key = alcove_key(rs, outcome.final);
        auto it = piece.find(key);
        if (it == piece.end() || it->second < dim) piece[key] = dim;
    }
    return piece;
}

}  // namespace adlv
