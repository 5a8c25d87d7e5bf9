#include <adlv/checks.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace adlv {

namespace {

std::string entry_name(const RootSystem& rs, const Alcove& a) {
    CanonicalPair cp = canonical_pair(rs, a);
    std::string s = "lambda=(";
    for (size_t i = 0; i < cp.lambda.size(); ++i)
        s += (i ? "," : "") + std::to_string(cp.lambda[i]);
    s += ") word=" + (cp.w->word.empty() ? "e" : word_string(*cp.w));
    return s;
}

std::string show(const std::optional<int>& d) {
    return d ? std::to_string(*d) : std::string("empty");
}

}  // namespace

CheckResult check_formula(const RootSystem& rs, const DimensionMap& dm) {
    CheckResult res{"formula-" + kind_name(rs.kind), true, ""};
    int compared = 0;
    for (const auto& a : dm.window_alcoves) {
        if (!in_shrunken(rs, a)) continue;
        ++compared;
        std::optional<int> expect = formula_eval(rs, a);
        std::optional<int> got = dm.entry(rs, a);
        if (expect != got) {
            res.pass = false;
            res.detail = "first mismatch at " + entry_name(rs, a) + ": pipeline " + show(got) +
                         ", formula " + show(expect);
            return res;
        }
    }
    res.detail = std::to_string(compared) + " shrunken alcoves agree (window " +
                 std::to_string(dm.window) + ", radius " + std::to_string(dm.radius) + ")";
    return res;
}

CheckResult check_formula(const RootSystem& rs, int radius, int window) {
    DimensionMap dm = dimension_map(rs, radius, window);
    CheckResult res = check_formula(rs, dm);
    if (!dm.stable) {
        res.pass = false;
        res.detail += "; map not stable between radius-1 and radius";
    }
    return res;
}

std::vector<IVec> dominant_mu_up_to(const RootSystem& rs, int bound) {
    std::vector<IVec> out;
    auto dominant = [&](const IVec& mu) {
        IVec chart = chart_of_coroot_vector(rs, mu);
        return std::all_of(chart.begin(), chart.end(), [](long long c) { return c >= 0; });
    };
    if (rs.rank == 1) {
        for (long long a = 0; a <= bound; ++a)
            if (pair_mu_rho(rs, {a}) <= Rat(bound)) out.push_back({a});
        return out;
    }
    for (long long a = 0; a <= 2 * bound; ++a)
        for (long long b = 0; b <= 2 * bound; ++b) {
            IVec mu{a, b};
            if (!dominant(mu)) continue;
            if (pair_mu_rho(rs, mu) <= Rat(bound)) out.push_back(mu);
        }
    return out;
}

CheckResult check_mu_rho(const RootSystem& rs, int max_pairing, const DimensionMap& dm) {
    CheckResult res{"mu-rho-" + kind_name(rs.kind), true, ""};
    int tested = 0;
    for (const auto& mu_vec : dominant_mu_up_to(rs, max_pairing)) {
        MuSpec mu = make_mu_spec(rs, mu_vec);
        int got = k_level_dimension(rs, mu, dm);
        ++tested;
        if (got != mu.pairing) {
            res.pass = false;
            std::ostringstream os;
            os << "mu=(";
            for (size_t i = 0; i < mu_vec.size(); ++i) os << (i ? "," : "") << mu_vec[i];
            os << "): k-level " << got << " != <mu,rho> = " << mu.pairing;
            res.detail = os.str();
            return res;
        }
    }
    res.detail = std::to_string(tested) + " dominant mu with <mu,rho> <= " +
                 std::to_string(max_pairing);
    return res;
}

CheckResult check_mu_rho(const RootSystem& rs, int max_pairing) {
    // longest coset element has length 2*max_pairing + delta
    int window = 2 * max_pairing + rs.longest_length;
    int radius = window + 4;
    DimensionMap dm = dimension_map(rs, radius, window);
    return check_mu_rho(rs, max_pairing, dm);
}

CheckResult check_golden(const MapFile& mf, const std::vector<GoldenRow>& rows) {
    CheckResult res{"golden-" + mf.group, true, ""};
    std::vector<std::string> mismatches = compare_with_golden(mf, rows);
    if (!mismatches.empty()) {
        res.pass = false;
        res.detail = mismatches.front();
        if (mismatches.size() > 1)
            res.detail += " (and " + std::to_string(mismatches.size() - 1) + " more)";
        return res;
    }
    res.detail = std::to_string(rows.size()) + " transcribed cells match";
    return res;
}

namespace {

Alcove bfs_q1_with_order(const RootSystem& rs, const Vec& v1, int variant) {
    Alcove cm = base_alcove(rs);
    std::vector<Alcove> order{cm};
    std::map<AlcoveKey, int> index{{alcove_key(rs, cm), 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        auto verts = alcove_vertices(rs, order[cur]);
        if (std::count(verts.begin(), verts.end(), v1)) return order[cur];
        auto wa = walls(rs, order[cur]);
        if (variant == 1) std::reverse(wa.begin(), wa.end());
        if (variant == 2) std::rotate(wa.begin(), wa.begin() + 1, wa.end());
        for (const auto& [h, nb] : wa) {
            AlcoveKey key = alcove_key(rs, nb);
            if (index.count(key)) continue;
            index.emplace(std::move(key), static_cast<int>(order.size()));
            order.push_back(nb);
            queue.push_back(static_cast<int>(order.size()) - 1);
        }
    }
    throw std::logic_error("unreachable vertex");
}

}  // namespace

std::vector<CheckResult> check_properties(const RootSystem& rs, int radius) {
    std::vector<CheckResult> results;
    std::string g = kind_name(rs.kind);

    {  // Q1 uniqueness across tie-break orders, 500 sampled vertices
        CheckResult res{"q1-uniqueness-" + g, true, ""};
        std::vector<Vec> verts = enumerate_vertices(rs, std::max(radius, 9));
        std::mt19937 rng(20240001);
        std::shuffle(verts.begin(), verts.end(), rng);
        int n = std::min<size_t>(500, verts.size());
        for (int i = 0; i < n && res.pass; ++i) {
            auto [gal, q1] = minimal_gallery_to_vertex(rs, verts[i]);
            for (int variant : {1, 2}) {
                Alcove other = bfs_q1_with_order(rs, verts[i], variant);
                if (alcove_key(rs, other) != alcove_key(rs, q1)) {
                    res.pass = false;
                    res.detail = "Q1 differs at v1 index " + std::to_string(i);
                    break;
                }
            }
        }
        if (res.pass) res.detail = std::to_string(n) + " vertices, 3 tie-break orders";
        results.push_back(res);
    }

    if (rs.rank == 2) {  // easy-choice bound, exhaustive
        CheckResult res{"easy-bound-" + g, true, ""};
        int bound_base = (rs.kind == RootSystemKind::A2) ? 3 : 4;
        long long outcomes = 0;
        for (const auto& v1 : enumerate_vertices(rs, radius)) {
            auto [gal, q1] = minimal_gallery_to_vertex(rs, v1);
            for (const auto& [q2p, m] : local_positions(rs, v1, q1)) {
                SuperpieceSpec spec = assemble_omega(rs, v1, q2p);
                for (const auto& o : enumerate_outcomes(rs, spec.omega)) {
                    ++outcomes;
                    if (o.n_easy > bound_base - m) {
                        res.pass = false;
                        res.detail = "n_easy = " + std::to_string(o.n_easy) + " > " +
                                     std::to_string(bound_base - m) + " at some superpiece with m=" +
                                     std::to_string(m);
                    }
                }
            }
        }
        if (res.pass)
            res.detail = std::to_string(outcomes) + " outcomes within radius " +
                         std::to_string(radius);
        results.push_back(res);
    }

    int window = radius + 2;
    DimensionMap all = dimension_map(rs, radius, window);
    {  // fundamental-domain mode equals all-vertices mode
        CheckResult res{"fundamental-domain-" + g, true, ""};
        DimensionMap fund = dimension_map(rs, radius, window, EnumMode::FundamentalDomain);
        for (const auto& a : all.window_alcoves) {
            if (all.entry(rs, a) != fund.entry(rs, a)) {
                res.pass = false;
                res.detail = "modes differ at " + entry_name(rs, a);
                break;
            }
        }
        if (res.pass)
            res.detail = "maps equal; " + std::to_string(fund.superpieces) + " vs " +
                         std::to_string(all.superpieces) + " superpieces";
        results.push_back(res);
    }

    {  // symmetry invariance of the final map
        CheckResult res{"symmetry-" + g, true, ""};
        for (const auto& sym : cm_symmetries(rs)) {
            for (const auto& a : all.window_alcoves) {
                Alcove image = sym.apply(rs.rank, a);
                if (all.entry(rs, a) != all.entry(rs, image)) {
                    res.pass = false;
                    res.detail = "entry differs at the symmetric image of " + entry_name(rs, a);
                    break;
                }
            }
            if (!res.pass) break;
        }
        if (res.pass)
            res.detail = std::to_string(cm_symmetries(rs).size()) + " symmetries preserve the map";
        results.push_back(res);
    }

    {  // stability between radius-1 and radius
        CheckResult res{"stability-" + g, all.stable, ""};
        res.detail = all.stable ? "window unchanged between radius-1 and radius"
                                : "window changed between radius-1 and radius";
        results.push_back(res);
    }

    if (rs.kind == RootSystemKind::A2) {  // no-collision audit
        CheckResult res{"a2-no-collision", true, ""};
        for (const auto& [key, contribs] : all.contributions) {
            std::set<int> dims;
            for (const auto& c : contribs) dims.insert(c.dim);
            if (dims.size() > 1) {
                res.pass = false;
                res.detail = "two piece dimensions at one alcove";
                break;
            }
        }
        if (res.pass) res.detail = "no alcove received two distinct piece dimensions";
        results.push_back(res);
    }

    if (rs.kind == RootSystemKind::C2) {  // non-special audit
        CheckResult res{"c2-non-special", true, ""};
        long long differing = 0;
        for (const auto& [key, contribs] : all.contributions) {
            std::set<int> special_dims, nonspecial_dims;
            for (const auto& c : contribs)
                (c.special ? special_dims : nonspecial_dims).insert(c.dim);
            if (special_dims.size() > 1 || nonspecial_dims.size() > 1) {
                res.pass = false;
                res.detail = "pieces of equal specialness disagree at one alcove";
                break;
            }
            if (!special_dims.empty() && !nonspecial_dims.empty() &&
                *special_dims.begin() != *nonspecial_dims.begin()) {
                ++differing;
                if (*nonspecial_dims.begin() > *special_dims.begin()) {
                    res.pass = false;
                    res.detail = "a non-special piece exceeded the special piece";
                    break;
                }
            }
        }
        if (res.pass)
            res.detail = std::to_string(differing) +
                         " alcoves where the non-special piece is strictly smaller";
        results.push_back(res);
    }

    return results;
}

}  // namespace adlv
