#include <adlv/galleries.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace adlv {

bool is_special(const RootSystem& rs, const Vec& point) {
    for (size_t r = 0; r < rs.positive_roots.size(); ++r)
        if (!is_integer(rs.pairing(static_cast<int>(r), point))) return false;
    return true;
}

Vertex make_vertex(const RootSystem& rs, const Vec& point) {
    return Vertex{point, is_special(rs, point)};
}

namespace {

bool point_on(const RootSystem& rs, const Hyperplane& h, const Vec& p) {
    return rs.pairing(h.root, p) == Rat(h.k);
}

bool vertex_of(const RootSystem& rs, const Alcove& a, const Vec& v) {
    for (const auto& av : alcove_vertices(rs, a))
        if (av == v) return true;
    return false;
}

Alcove some_alcove_at(const RootSystem& rs, const Vec& v) {
    // Perturb toward the interior of the dominant chamber; small enough to
    // stay inside one alcove incident to v.
    Vec p = v;
    Vec d = base_barycenter(rs);
    for (int i = 0; i < rs.rank; ++i) p[i] += d[i] / Rat(1024);
    Alcove a = alcove_containing(rs, p);
    if (!vertex_of(rs, a, v)) throw std::invalid_argument("point is not a vertex");
    return a;
}

}  // namespace

std::vector<Alcove> star(const RootSystem& rs, const Vec& v) {
    Alcove start = some_alcove_at(rs, v);
    if (rs.rank == 1) {
        for (const auto& [h, nb] : walls(rs, start))
            if (point_on(rs, h, v)) return {start, nb};
        throw std::logic_error("rank-1 star failed");
    }
    std::vector<Alcove> cycle{start};
    AlcoveKey start_key = alcove_key(rs, start);
    AlcoveKey prev_key = start_key;
    Alcove cur = start;
    for (int guard = 0; guard < 64; ++guard) {
        bool advanced = false;
        for (const auto& [h, nb] : walls(rs, cur)) {
            if (!point_on(rs, h, v)) continue;
            AlcoveKey nk = alcove_key(rs, nb);
            if (nk == prev_key) continue;
            if (nk == start_key) return cycle;
            prev_key = alcove_key(rs, cur);
            cur = nb;
            cycle.push_back(cur);
            advanced = true;
            break;
        }
        if (!advanced) throw std::logic_error("star walk stalled");
    }
    throw std::logic_error("star walk did not close");
}

int star_distance(const RootSystem& rs, const std::vector<Alcove>& st, const Alcove& a,
                  const Alcove& b) {
    auto pos = [&](const Alcove& x) {
        AlcoveKey k = alcove_key(rs, x);
        for (size_t i = 0; i < st.size(); ++i)
            if (alcove_key(rs, st[i]) == k) return static_cast<int>(i);
        throw std::invalid_argument("alcove not in star");
    };
    int n = static_cast<int>(st.size());
    int d = std::abs(pos(a) - pos(b));
    return std::min(d, n - d);
}

Gallery minimal_gallery_between(const RootSystem& rs, const Alcove& from, const Alcove& to) {
    AlcoveKey target = alcove_key(rs, to);
    std::map<AlcoveKey, int> index;
    std::vector<Alcove> order{from};
    std::vector<int> parent{-1};
    index.emplace(alcove_key(rs, from), 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (alcove_key(rs, order[cur]) == target) {
            Gallery path;
            for (int i = cur; i != -1; i = parent[i]) path.push_back(order[i]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (const auto& [h, nb] : walls(rs, order[cur])) {
            AlcoveKey key = alcove_key(rs, nb);
            if (index.count(key)) continue;
            int id = static_cast<int>(order.size());
            order.push_back(nb);
            index.emplace(std::move(key), id);
            parent.push_back(cur);
            queue.push_back(id);
        }
    }
    throw std::logic_error("BFS did not reach target");
}

std::pair<Gallery, Alcove> minimal_gallery_to_vertex(const RootSystem& rs, const Vec& v1) {
    Alcove cm = base_alcove(rs);
    if (vertex_of(rs, cm, v1)) throw VertexInBaseAlcove("v1 is a vertex of C_M");

    std::map<AlcoveKey, int> index;
    std::vector<Alcove> order{cm};
    std::vector<int> parent{-1};
    index.emplace(alcove_key(rs, cm), 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (vertex_of(rs, order[cur], v1)) {
            Gallery path;
            for (int i = cur; i != -1; i = parent[i]) path.push_back(order[i]);
            std::reverse(path.begin(), path.end());
            return {path, order[cur]};
        }
        for (const auto& [h, nb] : walls(rs, order[cur])) {
            AlcoveKey key = alcove_key(rs, nb);
            if (index.count(key)) continue;
            int id = static_cast<int>(order.size());
            order.push_back(nb);
            index.emplace(std::move(key), id);
            parent.push_back(cur);
            queue.push_back(id);
        }
    }
    throw std::logic_error("vertex unreachable");
}

std::vector<std::pair<Alcove, int>> local_positions(const RootSystem& rs, const Vec& v1,
                                                    const Alcove& q1) {
    std::vector<Alcove> st = star(rs, v1);
    int n = static_cast<int>(st.size());
    AlcoveKey qk = alcove_key(rs, q1);
    int q = -1;
    for (int i = 0; i < n; ++i)
        if (alcove_key(rs, st[i]) == qk) q = i;
    if (q < 0) throw std::invalid_argument("q1 not in star(v1)");

    int min_m = (rs.rank == 1) ? 1 : 2;
    std::vector<std::pair<Alcove, int>> out;
    for (int m = min_m; m <= n / 2; ++m) {
        out.emplace_back(st[(q + m) % n], m);
        if (m < n - m)  // antipode only once
            out.emplace_back(st[((q - m) % n + n) % n], m);
    }
    return out;
}

AffineMap z_map(const RootSystem& rs, const Vec& v1, const Alcove& q1, const Alcove& q2prime) {
    // Local group: closure of the reflections in hyperplanes through v1.
    std::vector<Hyperplane> hs;
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        Rat v = rs.pairing(static_cast<int>(r), v1);
        if (is_integer(v)) hs.push_back(Hyperplane{static_cast<int>(r), v.numerator()});
    }
    std::vector<AffineMap> group{AffineMap{mat_identity(rs.rank), Vec(rs.rank, Rat(0))}};
    auto key_of = [&](const AffineMap& g) {
        std::vector<Rat> k;
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) k.emplace_back(g.linear[i][j]);
        for (int i = 0; i < rs.rank; ++i) k.push_back(g.translation[i]);
        return k;
    };
    std::set<std::vector<Rat>> seen{key_of(group[0])};
    for (size_t i = 0; i < group.size(); ++i) {
        for (const auto& h : hs) {
            AffineMap refl;
            refl.linear = mat_identity(rs.rank);
            refl.translation = Vec(rs.rank, Rat(0));
            const IVec& cochart = rs.coroot_charts[h.root];
            const IVec& c = rs.positive_roots[h.root];
            for (int a = 0; a < rs.rank; ++a) {
                for (int b = 0; b < rs.rank; ++b) refl.linear[a][b] -= cochart[a] * c[b];
                refl.translation[a] = Rat(h.k * cochart[a]);
            }
            AffineMap g = refl.compose(rs.rank, group[i]);
            if (seen.insert(key_of(g)).second) group.push_back(g);
        }
    }
    for (const auto& g : group) {
        if (g.apply(rs.rank, Alcove{q1.bary}).bary == q2prime.bary) {
            if (g.apply(rs.rank, v1) != v1) throw std::logic_error("z does not fix v1");
            return g;
        }
    }
    throw NoSuchIsometry("q2prime is not in the local orbit of q1");
}

bool gallery_is_valid(const RootSystem& rs, const Gallery& g) {
    std::set<AlcoveKey> seen;
    for (size_t i = 0; i < g.size(); ++i) {
        if (!seen.insert(alcove_key(rs, g[i])).second) return false;
        if (i > 0) {
            AlcoveKey a = alcove_key(rs, g[i - 1]), b = alcove_key(rs, g[i]);
            int diffs = 0;
            for (size_t r = 0; r < a.size(); ++r)
                if (a[r] != b[r]) diffs += static_cast<int>(std::abs(a[r] - b[r]));
            if (diffs != 1) return false;
        }
    }
    return true;
}

SuperpieceSpec assemble_omega(const RootSystem& rs, const Vec& v1, const Alcove& q2prime) {
    SuperpieceSpec spec;
    spec.v1 = make_vertex(rs, v1);
    auto [gamma, q1] = minimal_gallery_to_vertex(rs, v1);
    spec.gamma = gamma;
    spec.q1 = q1;
    spec.q2prime = q2prime;
    spec.z = z_map(rs, v1, q1, q2prime);
    spec.m = star_distance(rs, star(rs, v1), q1, q2prime);
    spec.gamma_c = minimal_gallery_between(rs, q1, q2prime);
    if (static_cast<int>(spec.gamma_c.size()) != spec.m + 1)
        throw std::logic_error("connecting gallery has wrong length");

    Gallery folded_out;
    for (const auto& a : spec.gamma) folded_out.push_back(spec.z.apply(rs.rank, a));
    std::reverse(folded_out.begin(), folded_out.end());  // zQ1 .. zC_M

    spec.omega = spec.gamma;
    spec.omega.insert(spec.omega.end(), spec.gamma_c.begin() + 1, spec.gamma_c.end());
    spec.omega.insert(spec.omega.end(), folded_out.begin() + 1, folded_out.end());
    if (!gallery_is_valid(rs, spec.omega))
        throw OmegaSelfIntersects("omega repeats an alcove or breaks adjacency");
    return spec;
}

}  // namespace adlv
