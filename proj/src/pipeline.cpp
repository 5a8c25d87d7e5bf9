#include <adlv/pipeline.hpp>

#include <algorithm>

namespace adlv {

std::optional<int> DimensionMap::entry(const RootSystem& rs, const Alcove& a) const {
    if (alcove_length(rs, a) > window) throw WindowTooSmall("alcove outside certified window");
    auto it = dims.find(alcove_key(rs, a));
    if (it == dims.end()) return std::nullopt;
    return it->second;
}

std::map<AlcoveKey, int> base_case_entries(const RootSystem& rs) {
    // Alcoves whose closure meets closure(C_M) carry the classical value l(wtilde).
    std::map<AlcoveKey, int> out;
    Alcove cm = base_alcove(rs);
    out[alcove_key(rs, cm)] = 0;
    for (const auto& v : base_vertices(rs)) {
        for (const auto& a : star(rs, v)) out[alcove_key(rs, a)] = alcove_length(rs, a);
    }
    return out;
}

std::vector<Vec> enumerate_vertices(const RootSystem& rs, int radius) {
    std::vector<Vec> out;
    std::set<Vec> cm_verts;
    for (const auto& v : base_vertices(rs)) cm_verts.insert(v);

    auto keep = [&](const Vec& v) {
        for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
            Rat p = rs.pairing(static_cast<int>(r), v);
            if (p < Rat(-radius) || p > Rat(radius)) return false;
        }
        return cm_verts.count(v) == 0;
    };

    if (rs.kind == RootSystemKind::A1) {
        for (long long x = -radius; x <= radius; ++x) {
            Vec v{Rat(x)};
            if (keep(v)) out.push_back(v);
        }
    } else if (rs.kind == RootSystemKind::A2) {
        for (long long x = -radius; x <= radius; ++x)
            for (long long y = -radius; y <= radius; ++y) {
                Vec v{Rat(x), Rat(y)};
                if (keep(v)) out.push_back(v);
            }
    } else {
        // C2 vertices in the chart: first coordinate a half-integer, second an integer.
        for (long long two_x = -2 * radius; two_x <= 2 * radius; ++two_x)
            for (long long y = -radius; y <= radius; ++y) {
                Vec v{Rat(two_x, 2), Rat(y)};
                if (keep(v)) out.push_back(v);
            }
    }
    return out;
}

namespace {

long long vertex_radius_bound(const RootSystem& rs, const Vec& v) {
    Rat best(0);
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        Rat p = rs.pairing(static_cast<int>(r), v);
        if (p < Rat(0)) p = -p;
        if (p > best) best = p;
    }
    return rat_floor(best) + (is_integer(best) ? 0 : 1);
}

}  // namespace

DimensionMap dimension_map(const RootSystem& rs, int radius, int window, EnumMode mode,
                           bool require_stability) {
    DimensionMap dm;
    dm.group = rs.kind;
    dm.radius = radius;
    dm.window = window;
    dm.mode = mode;

    std::map<AlcoveKey, int> dims_sub;  // same run, restricted to radius-1
    std::map<AlcoveKey, int> base = base_case_entries(rs);
    dm.dims = base;
    dims_sub = base;

    std::vector<AffineMap> syms = cm_symmetries(rs);
    std::vector<Vec> verts = enumerate_vertices(rs, radius);
    std::set<Vec> in_ball(verts.begin(), verts.end());

    for (const auto& v1 : verts) {
        // In fundamental-domain mode only the lexicographically minimal in-ball
        // orbit member is folded; results are pushed through each symmetry whose
        // image of v1 stays in the ball.
        std::vector<std::pair<const AffineMap*, bool>> expanders;  // (sym, sub-radius?)
        if (mode == EnumMode::FundamentalDomain) {
            Vec best = v1;
            for (const auto& g : syms) {
                Vec img = g.apply(rs.rank, v1);
                if (in_ball.count(img) && img < best) best = img;
            }
            if (best != v1) continue;
            for (const auto& g : syms) {
                Vec img = g.apply(rs.rank, v1);
                if (in_ball.count(img))
                    expanders.emplace_back(&g, vertex_radius_bound(rs, img) <= radius - 1);
            }
        }

        auto [gamma, q1] = minimal_gallery_to_vertex(rs, v1);
        bool within_sub = vertex_radius_bound(rs, v1) <= radius - 1;
        for (const auto& [q2p, m] : local_positions(rs, v1, q1)) {
            SuperpieceSpec spec;
            try {
                spec = assemble_omega(rs, v1, q2p);
            } catch (const OmegaSelfIntersects&) {
                ++dm.omega_rejects;
                continue;
            }
            ++dm.superpieces;
            std::map<AlcoveKey, int> piece;
            std::map<AlcoveKey, Alcove> finals;
            for (const auto& outcome : enumerate_outcomes(rs, spec.omega)) {
                int dim = cf_dimension(outcome, spec);
                AlcoveKey key = alcove_key(rs, outcome.final);
                auto it = piece.find(key);
                if (it == piece.end()) {
                    piece[key] = dim;
                    finals.emplace(key, outcome.final);
                } else if (it->second != dim) {
                    ++dm.same_final_collisions;
                    it->second = std::max(it->second, dim);
                }
            }
            auto merge = [&](const AlcoveKey& key, int dim, bool sub) {
                auto it = dm.dims.find(key);
                if (it == dm.dims.end() || it->second < dim) dm.dims[key] = dim;
                dm.contributions[key].insert(Contribution{dim, spec.v1.special});
                if (sub) {
                    auto jt = dims_sub.find(key);
                    if (jt == dims_sub.end() || jt->second < dim) dims_sub[key] = dim;
                }
            };
            for (const auto& [key, dim] : piece) {
                if (mode == EnumMode::AllVertices) {
                    merge(key, dim, within_sub);
                } else {
                    for (const auto& [g, sub] : expanders) {
                        Alcove image = g->apply(rs.rank, finals.at(key));
                        merge(alcove_key(rs, image), dim, sub);
                    }
                }
            }
        }
    }

    BfsBall ball = bfs_ball(rs, window);
    for (const auto& a : ball.order)
        if (ball.depth[ball.at(alcove_key(rs, a))] <= window) dm.window_alcoves.push_back(a);

    dm.stable = true;
    for (const auto& a : dm.window_alcoves) {
        AlcoveKey key = alcove_key(rs, a);
        auto full = dm.dims.find(key);
        auto sub = dims_sub.find(key);
        bool has_full = full != dm.dims.end(), has_sub = sub != dims_sub.end();
        if (has_full != has_sub || (has_full && full->second != sub->second)) {
            dm.stable = false;
            break;
        }
    }
    if (require_stability && !dm.stable)
        throw RadiusTooSmall("window entries changed between radius-1 and radius");
    return dm;
}

std::optional<int> formula_eval(const RootSystem& rs, const Alcove& a) {
    if (!in_shrunken(rs, a)) throw NotInShrunkenRegion("alcove is not in the shrunken union");
    const WeylElement& w = eta1(rs, a);
    const WeylElement& u = eta2(rs, a);
    const WeylElement& conj = rs.multiply(rs.multiply(rs.inverse(u), w), u);
    if (!is_full_support(rs, conj)) return std::nullopt;
    int numerator = alcove_length(rs, a) + conj.length;
    if (numerator % 2 != 0) throw OddNumerator("l(wtilde) + l(eta2^-1 eta1 eta2) is odd");
    return numerator / 2;
}

MuSpec make_mu_spec(const RootSystem& rs, const IVec& mu) {
    IVec chart = chart_of_coroot_vector(rs, mu);
    for (int i = 0; i < rs.rank; ++i)
        if (chart[i] < 0) throw std::invalid_argument("mu must be dominant");
    MuSpec spec;
    spec.mu = mu;
    Rat pairing = pair_mu_rho(rs, mu);
    if (!is_integer(pairing)) throw std::logic_error("<mu,rho> not integral on coroot lattice");
    spec.pairing = pairing.numerator();

    std::set<AlcoveKey> seen;
    Vec b0 = base_barycenter(rs);
    for (const auto& u : rs.weyl) {
        for (const auto& v : rs.weyl) {
            // alcove of u t_mu v: u(chart(mu) + v(b0))
            Vec y = mat_apply(rs.rank, v.matrix, b0);
            for (int i = 0; i < rs.rank; ++i) y[i] += Rat(chart[i]);
            y = mat_apply(rs.rank, u.matrix, y);
            Alcove a{y};
            if (seen.insert(alcove_key(rs, a)).second) spec.coset.push_back(a);
        }
    }
    return spec;
}

int k_level_dimension(const RootSystem& rs, const MuSpec& mu, const DimensionMap& dm) {
    std::optional<int> best;
    for (const auto& a : mu.coset) {
        std::optional<int> d = dm.entry(rs, a);  // throws WindowTooSmall when outside
        if (d && (!best || *d > *best)) best = d;
    }
    if (!best) throw std::logic_error("double coset has no non-empty member");
    return *best - rs.longest_length;
}

ConjectureVerdict conjecture_region(const RootSystem& rs, const IVec& b_lambda, const Alcove& a) {
    if (!b_shifted_region(rs, b_lambda, a)) return ConjectureVerdict{false, false};
    const WeylElement& w = eta1(rs, a);
    const WeylElement& u = eta2(rs, a);
    const WeylElement& conj = rs.multiply(rs.multiply(rs.inverse(u), w), u);
    return ConjectureVerdict{true, is_full_support(rs, conj)};
}

}  // namespace adlv
