#include <adlv/alcoves.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace adlv {

Vec AffineMap::apply(int rank, const Vec& x) const {
    Vec out = mat_apply(rank, linear, x);
    for (int i = 0; i < rank; ++i) out[i] += translation[i];
    return out;
}

Alcove AffineMap::apply(int rank, const Alcove& a) const { return Alcove{apply(rank, a.bary)}; }

AffineMap AffineMap::compose(int rank, const AffineMap& then) const {
    // x |-> this(then(x))
    AffineMap out;
    out.linear = mat_mul(rank, linear, then.linear);
    out.translation = mat_apply(rank, linear, then.translation);
    for (int i = 0; i < rank; ++i) out.translation[i] += translation[i];
    return out;
}

IVec chart_of_coroot_vector(const RootSystem& rs, const IVec& coroot_coords) {
    IVec chart(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) chart[i] += rs.cartan[i][j] * coroot_coords[j];
    return chart;
}

std::vector<Vec> base_vertices(const RootSystem& rs) {
    // 0, plus for each simple i the solution of {<alpha_j,x> = 0 (j != i), <theta,x> = 1}.
    std::vector<Vec> verts;
    verts.push_back(Vec(rs.rank, Rat(0)));
    const IVec& theta = rs.positive_roots[rs.theta_index];
    for (int i = 0; i < rs.rank; ++i) {
        Vec v(rs.rank, Rat(0));
        v[i] = Rat(1, theta[i]);
        verts.push_back(v);
    }
    return verts;
}

Vec base_barycenter(const RootSystem& rs) {
    Vec b(rs.rank, Rat(0));
    for (const auto& v : base_vertices(rs))
        for (int i = 0; i < rs.rank; ++i) b[i] += v[i];
    for (int i = 0; i < rs.rank; ++i) b[i] /= Rat(rs.rank + 1);
    return b;
}

Alcove base_alcove(const RootSystem& rs) { return Alcove{base_barycenter(rs)}; }

AlcoveKey alcove_key(const RootSystem& rs, const Alcove& a) {
    AlcoveKey key(rs.positive_roots.size());
    for (size_t r = 0; r < rs.positive_roots.size(); ++r)
        key[r] = rat_floor(rs.pairing(static_cast<int>(r), a.bary));
    return key;
}

int alcove_length(const RootSystem& rs, const Alcove& a) {
    // Number of hyperplanes separating barycenters of a and C_M: both pairings
    // are non-integral, so per root this is |floor(a) - floor(C_M)| = |floor(a)|.
    long long total = 0;
    for (size_t r = 0; r < rs.positive_roots.size(); ++r)
        total += std::abs(rat_floor(rs.pairing(static_cast<int>(r), a.bary)));
    return static_cast<int>(total);
}

CanonicalPair canonical_pair(const RootSystem& rs, const Alcove& a) {
    Vec b0 = base_barycenter(rs);
    for (const auto& w : rs.weyl) {
        Vec shift = a.bary;
        Vec wb = mat_apply(rs.rank, w.matrix, b0);
        for (int i = 0; i < rs.rank; ++i) shift[i] -= wb[i];
        // lambda_coroot = cartan^{-1} * shift, must be integral.
        if (rs.rank == 1) {
            Rat m = shift[0] / Rat(rs.cartan[0][0]);
            if (!is_integer(m)) continue;
            return CanonicalPair{{m.numerator()}, &w};
        }
        long long det = rs.cartan[0][0] * rs.cartan[1][1] - rs.cartan[0][1] * rs.cartan[1][0];
        Rat m0 = (Rat(rs.cartan[1][1]) * shift[0] - Rat(rs.cartan[0][1]) * shift[1]) / Rat(det);
        Rat m1 = (Rat(-rs.cartan[1][0]) * shift[0] + Rat(rs.cartan[0][0]) * shift[1]) / Rat(det);
        if (!is_integer(m0) || !is_integer(m1)) continue;
        return CanonicalPair{{m0.numerator(), m1.numerator()}, &w};
    }
    throw std::logic_error("no canonical pair: point is not an alcove barycenter");
}

Alcove alcove_from_pair(const RootSystem& rs, const IVec& lambda, const WeylElement& w) {
    Vec b = mat_apply(rs.rank, w.matrix, base_barycenter(rs));
    IVec chart = chart_of_coroot_vector(rs, lambda);
    for (int i = 0; i < rs.rank; ++i) b[i] += Rat(chart[i]);
    return Alcove{b};
}

std::vector<Vec> alcove_vertices(const RootSystem& rs, const Alcove& a) {
    CanonicalPair cp = canonical_pair(rs, a);
    IVec chart = chart_of_coroot_vector(rs, cp.lambda);
    std::vector<Vec> verts;
    for (const auto& v0 : base_vertices(rs)) {
        Vec v = mat_apply(rs.rank, cp.w->matrix, v0);
        for (int i = 0; i < rs.rank; ++i) v[i] += Rat(chart[i]);
        verts.push_back(v);
    }
    return verts;
}

namespace {

AffineMap affine_of_pair(const RootSystem& rs, const IVec& lambda, const WeylElement& w) {
    AffineMap g;
    g.linear = w.matrix;
    g.translation = to_vec(chart_of_coroot_vector(rs, lambda));
    return g;
}

Hyperplane wall_between(const RootSystem& rs, const Alcove& a, const Alcove& b) {
    AlcoveKey ka = alcove_key(rs, a), kb = alcove_key(rs, b);
    int root = -1;
    long long k = 0;
    int diffs = 0;
    for (size_t r = 0; r < ka.size(); ++r) {
        if (ka[r] != kb[r]) {
            ++diffs;
            root = static_cast<int>(r);
            k = std::max(ka[r], kb[r]);
        }
    }
    if (diffs != 1) throw std::logic_error("alcoves are not adjacent");
    return Hyperplane{root, k};
}

}  // namespace

std::vector<std::pair<Hyperplane, Alcove>> walls(const RootSystem& rs, const Alcove& a) {
    CanonicalPair cp = canonical_pair(rs, a);
    AffineMap g = affine_of_pair(rs, cp.lambda, *cp.w);
    Vec b0 = base_barycenter(rs);

    std::vector<Vec> neighbor_seeds;
    for (int j = 0; j < rs.rank; ++j) {
        Mat sj = mat_identity(rs.rank);
        for (int i = 0; i < rs.rank; ++i) sj[i][j] -= rs.cartan[i][j];
        neighbor_seeds.push_back(mat_apply(rs.rank, sj, b0));
    }
    {
        // s_0 = reflection about <theta, x> = 1
        Vec y = b0;
        Rat t = rs.pairing(rs.theta_index, b0) - Rat(1);
        const IVec& cochart = rs.coroot_charts[rs.theta_index];
        for (int i = 0; i < rs.rank; ++i) y[i] -= t * Rat(cochart[i]);
        neighbor_seeds.push_back(y);
    }

    std::vector<std::pair<Hyperplane, Alcove>> out;
    for (const auto& seed : neighbor_seeds) {
        Alcove nb{g.apply(rs.rank, seed)};
        out.emplace_back(wall_between(rs, a, nb), nb);
    }
    return out;
}

Vec reflect_point(const RootSystem& rs, const Hyperplane& h, const Vec& x) {
    Rat t = rs.pairing(h.root, x) - Rat(h.k);
    Vec y = x;
    const IVec& cochart = rs.coroot_charts[h.root];
    for (int i = 0; i < rs.rank; ++i) y[i] -= t * Rat(cochart[i]);
    return y;
}

Alcove reflect(const RootSystem& rs, const Hyperplane& h, const Alcove& a) {
    return Alcove{reflect_point(rs, h, a.bary)};
}

const WeylElement& eta1(const RootSystem& rs, const Alcove& a) {
    return *canonical_pair(rs, a).w;
}

const WeylElement& eta2(const RootSystem& rs, const Alcove& a) {
    for (const auto& u : rs.weyl) {
        const WeylElement& uinv = rs.inverse(u);
        Vec y = mat_apply(rs.rank, uinv.matrix, a.bary);
        bool dominant = true;
        for (int i = 0; i < rs.rank; ++i)
            if (!(y[i] > Rat(0))) dominant = false;
        if (dominant) return u;
    }
    throw std::logic_error("barycenter lies on a linear wall");
}

std::vector<Strip> shrunken_strips(const RootSystem& rs) {
    // One strip per positive-root direction: between the nearest parallel
    // hyperplanes enclosing C_M. For the wall directions of C_M this is the
    // wall together with its closest parallel on the far side of C_M; the
    // non-wall direction of C2 carries a strip as well, matching the bold
    // boundary overlay of the result diagrams.
    Vec b0 = base_barycenter(rs);
    std::vector<Strip> strips;
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        long long lo = rat_floor(rs.pairing(static_cast<int>(r), b0));
        strips.push_back(Strip{static_cast<int>(r), Rat(lo), Rat(lo + 1)});
    }
    return strips;
}

bool in_shrunken(const RootSystem& rs, const Alcove& a) {
    for (const auto& strip : shrunken_strips(rs)) {
        Rat v = rs.pairing(strip.root, a.bary);
        if (strip.lo < v && v < strip.hi) return false;
    }
    return true;
}

bool b_shifted_region(const RootSystem& rs, const IVec& b_lambda, const Alcove& a) {
    IVec chart = chart_of_coroot_vector(rs, b_lambda);
    for (int i = 0; i < rs.rank; ++i)
        if (chart[i] < 0) throw std::invalid_argument("b_lambda must be dominant");
    for (const auto& w : rs.weyl) {
        Vec shift = mat_apply(rs.rank, w.matrix, to_vec(chart));
        Alcove moved{a.bary};
        for (int i = 0; i < rs.rank; ++i) moved.bary[i] -= shift[i];
        if (in_shrunken(rs, moved) && eta2(rs, moved).index == w.index) return true;
    }
    return false;
}

std::vector<AffineMap> cm_symmetries(const RootSystem& rs) {
    // g = t_mu w fixes C_M iff g(b0) = b0; it preserves the arrangement iff the
    // chart coordinates of mu are integers (mu in the coweight lattice).
    Vec b0 = base_barycenter(rs);
    std::vector<AffineMap> out;
    for (const auto& w : rs.weyl) {
        Vec mu = b0;
        Vec wb = mat_apply(rs.rank, w.matrix, b0);
        bool integral = true;
        for (int i = 0; i < rs.rank; ++i) {
            mu[i] -= wb[i];
            if (!is_integer(mu[i])) integral = false;
        }
        if (!integral) continue;
        out.push_back(AffineMap{w.matrix, mu});
    }
    return out;
}

BfsBall bfs_ball(const RootSystem& rs, int max_depth) {
    BfsBall ball;
    Alcove start = base_alcove(rs);
    ball.order.push_back(start);
    ball.index.emplace(alcove_key(rs, start), 0);
    ball.parent.push_back(-1);
    ball.depth.push_back(0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (ball.depth[cur] >= max_depth) continue;
        for (const auto& [h, nb] : walls(rs, ball.order[cur])) {
            AlcoveKey key = alcove_key(rs, nb);
            if (ball.index.count(key)) continue;
            int id = static_cast<int>(ball.order.size());
            ball.order.push_back(nb);
            ball.index.emplace(std::move(key), id);
            ball.parent.push_back(cur);
            ball.depth.push_back(ball.depth[cur] + 1);
            queue.push_back(id);
        }
    }
    return ball;
}

Alcove alcove_containing(const RootSystem& rs, const Vec& p) {
    Alcove cur = base_alcove(rs);
    AlcoveKey target(rs.positive_roots.size());
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        Rat v = rs.pairing(static_cast<int>(r), p);
        if (is_integer(v)) throw std::invalid_argument("point lies on a hyperplane");
        target[r] = rat_floor(v);
    }
    for (int guard = 0; guard < 100000; ++guard) {
        if (alcove_key(rs, cur) == target) return cur;
        // Cross any wall whose hyperplane separates the current alcove from p.
        bool moved = false;
        for (const auto& [h, nb] : walls(rs, cur)) {
            Rat vc = rs.pairing(h.root, cur.bary) - Rat(h.k);
            Rat vp = rs.pairing(h.root, p) - Rat(h.k);
            if ((vc < Rat(0)) != (vp < Rat(0))) {
                cur = nb;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("alcove walk stalled");
    }
    throw std::logic_error("alcove walk did not terminate");
}

}  // namespace adlv
