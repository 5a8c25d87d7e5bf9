#include <adlv/root_system.hpp>

#include <algorithm>
#include <map>

namespace adlv {

std::string kind_name(RootSystemKind k) {
    switch (k) {
        case RootSystemKind::A1: return "a1";
        case RootSystemKind::A2: return "a2";
        case RootSystemKind::C2: return "c2";
    }
    return "?";
}

std::optional<RootSystemKind> kind_from_name(const std::string& name) {
    if (name == "a1" || name == "A1") return RootSystemKind::A1;
    if (name == "a2" || name == "A2") return RootSystemKind::A2;
    if (name == "c2" || name == "C2") return RootSystemKind::C2;
    return std::nullopt;
}

Mat mat_identity(int rank) {
    Mat m{{{1, 0}, {0, 1}}};
    if (rank == 1) m[1][1] = 1;
    return m;
}

Mat mat_mul(int rank, const Mat& a, const Mat& b) {
    Mat c{{{0, 0}, {0, 0}}};
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k) c[i][j] += a[i][k] * b[k][j];
    if (rank == 1) c[1][1] = 1;
    return c;
}

bool mat_eq(int rank, const Mat& a, const Mat& b) {
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

Vec mat_apply(int rank, const Mat& m, const Vec& v) {
    Vec out(rank, Rat(0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) out[i] += Rat(m[i][j]) * v[j];
    return out;
}

Rat RootSystem::pairing(int root_index, const Vec& x) const {
    const IVec& c = positive_roots[root_index];
    Rat acc(0);
    for (int i = 0; i < rank; ++i) acc += Rat(c[i]) * x[i];
    return acc;
}

const WeylElement& RootSystem::element_by_matrix(const Mat& m) const {
    for (const auto& w : weyl)
        if (mat_eq(rank, w.matrix, m)) return w;
    throw std::logic_error("matrix is not a Weyl group element");
}

const WeylElement& RootSystem::multiply(const WeylElement& a, const WeylElement& b) const {
    return element_by_matrix(mat_mul(rank, a.matrix, b.matrix));
}

const WeylElement& RootSystem::inverse(const WeylElement& a) const {
    for (const auto& w : weyl)
        if (mat_eq(rank, mat_mul(rank, a.matrix, w.matrix), mat_identity(rank))) return w;
    throw std::logic_error("no inverse found");
}

IVec RootSystem::act_on_root(const WeylElement& w, const IVec& root) const {
    // Apply the word right-to-left: s_j(root) changes only the j-th coordinate.
    IVec c = root;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        int j = *it - 1;
        long long dot = 0;
        for (int i = 0; i < rank; ++i) dot += c[i] * cartan[i][j];
        c[j] -= dot;
    }
    return c;
}

namespace {

Mat simple_reflection_matrix(int rank, const Mat& cartan, int j) {
    // s_j on the chart: y_i -> y_i - cartan[i][j] * y_j
    Mat m = mat_identity(rank);
    for (int i = 0; i < rank; ++i) m[i][j] -= cartan[i][j];
    return m;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
    int count = 0;
    for (const auto& root : rs.positive_roots) {
        IVec image = rs.act_on_root(w, root);
        bool negative = true;
        for (int i = 0; i < rs.rank; ++i)
            if (image[i] > 0) negative = false;
        if (negative) ++count;
    }
    return count;
}

struct MatLess {
    int rank;
    bool operator()(const Mat& a, const Mat& b) const {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (a[i][j] != b[i][j]) return a[i][j] < b[i][j];
        return false;
    }
};

void enumerate_weyl(RootSystem& rs) {
    std::vector<Mat> gens(rs.rank);
    for (int j = 0; j < rs.rank; ++j) gens[j] = simple_reflection_matrix(rs.rank, rs.cartan, j);

    std::map<Mat, WeylElement, MatLess> seen{MatLess{rs.rank}};
    WeylElement id{mat_identity(rs.rank), {}, 0, 0};
    seen.emplace(id.matrix, id);
    std::vector<WeylElement> frontier{id};
    while (!frontier.empty()) {
        // Lex order within a layer so the first word found is the canonical one.
        std::sort(frontier.begin(), frontier.end(),
                  [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (int j = 1; j <= rs.rank; ++j) {
                Mat m = mat_mul(rs.rank, w.matrix, gens[j - 1]);
                if (seen.count(m)) continue;
                WeylElement e;
                e.matrix = m;
                e.word = w.word;
                e.word.push_back(j);
                e.length = w.length + 1;
                seen.emplace(m, e);
                next.push_back(e);
            }
        }
        frontier = std::move(next);
    }

    rs.weyl.clear();
    for (auto& [m, e] : seen) rs.weyl.push_back(e);
    std::sort(rs.weyl.begin(), rs.weyl.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    for (size_t i = 0; i < rs.weyl.size(); ++i) rs.weyl[i].index = static_cast<int>(i);

    rs.longest_index = static_cast<int>(rs.weyl.size()) - 1;
    rs.longest_length = rs.weyl.back().length;
    for (const auto& w : rs.weyl)
        if (inversion_count(rs, w) != w.length)
            throw std::logic_error("inversion count disagrees with word length");
}

}  // namespace

RootSystem build_root_system(RootSystemKind kind) {
    RootSystem rs;
    rs.kind = kind;
    switch (kind) {
        case RootSystemKind::A1:
            rs.rank = 1;
            rs.cartan = {{{2, 0}, {0, 0}}};
            rs.positive_roots = {{1}};
            rs.positive_coroots = {{1}};
            rs.theta_index = 0;
            break;
        case RootSystemKind::A2:
            rs.rank = 2;
            rs.cartan = {{{2, -1}, {-1, 2}}};
            rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}};
            rs.positive_coroots = {{1, 0}, {0, 1}, {1, 1}};
            rs.theta_index = 2;
            break;
        case RootSystemKind::C2:
            // alpha1 short, alpha2 long; (alpha1+alpha2)^vee = alpha1^vee + 2 alpha2^vee.
            rs.rank = 2;
            rs.cartan = {{{2, -1}, {-2, 2}}};
            rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
            rs.positive_coroots = {{1, 0}, {0, 1}, {1, 2}, {1, 1}};
            rs.theta_index = 3;
            break;
    }
    rs.coroot_charts.resize(rs.positive_coroots.size());
    for (size_t a = 0; a < rs.positive_coroots.size(); ++a) {
        IVec chart(rs.rank, 0);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) chart[i] += rs.cartan[i][j] * rs.positive_coroots[a][j];
        rs.coroot_charts[a] = chart;
    }
    rs.rho.assign(rs.rank, Rat(0));
    for (const auto& root : rs.positive_roots)
        for (int i = 0; i < rs.rank; ++i) rs.rho[i] += Rat(root[i], 2);
    enumerate_weyl(rs);
    return rs;
}

std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w) {
    if (w.length == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int j = 1; j <= rs.rank; ++j) {
        Mat m = mat_mul(rs.rank, w.matrix,
                        simple_reflection_matrix(rs.rank, rs.cartan, j - 1));
        const WeylElement& shorter = rs.element_by_matrix(m);
        if (shorter.length != w.length - 1) continue;
        for (auto word : all_reduced_words(rs, shorter)) {
            word.push_back(j);
            out.push_back(std::move(word));
        }
    }
    return out;
}

bool is_full_support(const RootSystem& rs, const WeylElement& w) {
    std::vector<bool> seen(rs.rank + 1, false);
    for (int letter : w.word) seen[letter] = true;
    for (int j = 1; j <= rs.rank; ++j)
        if (!seen[j]) return false;
    return true;
}

Rat pair_mu_rho(const RootSystem& rs, const IVec& mu) {
    // <mu, rho> = sum_j mu_j <rho, alpha_j^vee>, with <rho, alpha_j^vee> from the Cartan matrix.
    Rat acc(0);
    for (int j = 0; j < rs.rank; ++j) {
        Rat rho_pair(0);
        for (int i = 0; i < rs.rank; ++i) rho_pair += rs.rho[i] * Rat(rs.cartan[i][j]);
        acc += Rat(mu[j]) * rho_pair;
    }
    return acc;
}

}  // namespace adlv
