#pragma once

#include <adlv/alcoves.hpp>

#include <stdexcept>
#include <vector>

namespace adlv {

struct Vertex {
    Vec point;
    bool special = false;
};

using Gallery = std::vector<Alcove>;  // consecutive alcoves share a wall

struct VertexInBaseAlcove : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoSuchIsometry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OmegaSelfIntersects : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One (v1, p_r) superpiece: q2prime = z(q1), omega = gamma ++ gamma_c ++ reverse(z gamma).
struct SuperpieceSpec {
    Vertex v1;
    Alcove q1;
    Alcove q2prime;
    AffineMap z;
    Gallery gamma;     // minimal gallery C_M -> Q1
    Gallery gamma_c;   // minimal gallery Q1 -> zQ1, m+1 alcoves
    Gallery omega;
    int m = 0;         // star distance of q1 and q2prime = length of p_r
};

bool is_special(const RootSystem& rs, const Vec& point);
Vertex make_vertex(const RootSystem& rs, const Vec& point);

// All alcoves whose closure contains v, in cyclic order around v.
std::vector<Alcove> star(const RootSystem& rs, const Vec& v);

int star_distance(const RootSystem& rs, const std::vector<Alcove>& st, const Alcove& a,
                  const Alcove& b);

// Shortest gallery between two alcoves; deterministic wall-index tie-break.
Gallery minimal_gallery_between(const RootSystem& rs, const Alcove& from, const Alcove& to);

// Shortest gallery from C_M to the first BFS-discovered alcove containing v1.
std::pair<Gallery, Alcove> minimal_gallery_to_vertex(const RootSystem& rs, const Vec& v1);

// Candidate (q2prime, m) with m >= 2 for rank 2, m = 1 for rank 1.
std::vector<std::pair<Alcove, int>> local_positions(const RootSystem& rs, const Vec& v1,
                                                    const Alcove& q1);

// The isometry generated by reflections through v1 sending q1 to q2prime.
AffineMap z_map(const RootSystem& rs, const Vec& v1, const Alcove& q1, const Alcove& q2prime);

SuperpieceSpec assemble_omega(const RootSystem& rs, const Vec& v1, const Alcove& q2prime);

bool gallery_is_valid(const RootSystem& rs, const Gallery& g);

}  // namespace adlv
