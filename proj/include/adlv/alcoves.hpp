#pragma once

#include <adlv/root_system.hpp>

#include <map>
#include <optional>
#include <vector>

namespace adlv {

// The locus <alpha, x> = k, with alpha a positive root (index into rs.positive_roots).
struct Hyperplane {
    int root;
    long long k;
    bool operator==(const Hyperplane& o) const { return root == o.root && k == o.k; }
};

// An alcove, identified by its barycenter in the pairing chart. The canonical
// pair (lambda, w) with wtilde = t_lambda * w is recovered on demand.
struct Alcove {
    Vec bary;
    bool operator==(const Alcove& o) const { return bary == o.bary; }
    bool operator!=(const Alcove& o) const { return !(bary == o.bary); }
};

// Integer linear part plus rational translation, acting on the chart.
struct AffineMap {
    Mat linear;
    Vec translation;

    Vec apply(int rank, const Vec& x) const;
    Alcove apply(int rank, const Alcove& a) const;
    AffineMap compose(int rank, const AffineMap& then) const;  // this after then
};

// Unique key: floor of <alpha, barycenter> per positive root.
using AlcoveKey = IVec;

struct CanonicalPair {
    IVec lambda;              // simple-coroot coordinates
    const WeylElement* w;
};

Alcove base_alcove(const RootSystem& rs);
Vec base_barycenter(const RootSystem& rs);
std::vector<Vec> base_vertices(const RootSystem& rs);

AlcoveKey alcove_key(const RootSystem& rs, const Alcove& a);
int alcove_length(const RootSystem& rs, const Alcove& a);
CanonicalPair canonical_pair(const RootSystem& rs, const Alcove& a);
Alcove alcove_from_pair(const RootSystem& rs, const IVec& lambda, const WeylElement& w);
std::vector<Vec> alcove_vertices(const RootSystem& rs, const Alcove& a);

// The rank+1 walls of a, each with the neighbor across it, ordered s_1, .., s_rank, s_0.
std::vector<std::pair<Hyperplane, Alcove>> walls(const RootSystem& rs, const Alcove& a);

Alcove reflect(const RootSystem& rs, const Hyperplane& h, const Alcove& a);
Vec reflect_point(const RootSystem& rs, const Hyperplane& h, const Vec& x);

const WeylElement& eta1(const RootSystem& rs, const Alcove& a);
const WeylElement& eta2(const RootSystem& rs, const Alcove& a);

// Open strips between each wall of C_M and its nearest parallel on the far
// side of C_M; an alcove is shrunken iff it avoids all of them.
struct Strip {
    int root;
    Rat lo, hi;
};
std::vector<Strip> shrunken_strips(const RootSystem& rs);
bool in_shrunken(const RootSystem& rs, const Alcove& a);

bool b_shifted_region(const RootSystem& rs, const IVec& b_lambda, const Alcove& a);

// Alcove-preserving isometries fixing C_M setwise (translation-lattice symmetries).
std::vector<AffineMap> cm_symmetries(const RootSystem& rs);

// Deterministic BFS over the walls graph from C_M; depth-limited.
struct BfsBall {
    std::vector<Alcove> order;                 // discovery order
    std::map<AlcoveKey, int> index;            // key -> position in order
    std::vector<int> parent;                   // -1 for C_M
    std::vector<int> depth;

    bool contains(const AlcoveKey& k) const { return index.count(k) != 0; }
    int at(const AlcoveKey& k) const { return index.at(k); }
};
BfsBall bfs_ball(const RootSystem& rs, int max_depth);

// Walk from C_M to the alcove whose interior contains p; p must be generic.
Alcove alcove_containing(const RootSystem& rs, const Vec& p);

IVec chart_of_coroot_vector(const RootSystem& rs, const IVec& coroot_coords);

}  // namespace adlv
