#pragma once

#include <adlv/rational.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adlv {

enum class RootSystemKind { A1, A2, C2 };

std::string kind_name(RootSystemKind k);
std::optional<RootSystemKind> kind_from_name(const std::string& name);

// Integer linear map on the pairing chart, row-major, rank x rank.
using Mat = std::array<std::array<long long, 2>, 2>;

struct WeylElement {
    Mat matrix;                 // chart action: y |-> matrix * y
    std::vector<int> word;      // canonical reduced word over {1, .., rank}
    int length = 0;
    int index = 0;              // position in RootSystem::weyl

    bool is_identity() const { return length == 0; }
};

struct RootSystem {
    RootSystemKind kind;
    int rank;
    Mat cartan;                               // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<IVec> positive_roots;         // simple-root coordinates
    std::vector<IVec> positive_coroots;       // simple-coroot coordinates, same order
    std::vector<IVec> coroot_charts;          // chart coords of each positive coroot
    int theta_index;                          // highest root, as index into positive_roots
    Vec rho;                                  // half sum of positive roots, simple-root coords
    std::vector<WeylElement> weyl;            // all of W, sorted by (length, word)
    int longest_index;                        // index of w0
    int longest_length;                       // delta

    const WeylElement& identity() const { return weyl.front(); }
    const WeylElement& longest() const { return weyl[longest_index]; }

    // <alpha, x> for the positive root with the given index; exact.
    Rat pairing(int root_index, const Vec& x) const;

    // Look up a group element by its chart matrix.
    const WeylElement& element_by_matrix(const Mat& m) const;
    const WeylElement& multiply(const WeylElement& a, const WeylElement& b) const;
    const WeylElement& inverse(const WeylElement& a) const;

    // Action of w on a root given in simple-root coordinates.
    IVec act_on_root(const WeylElement& w, const IVec& root) const;
};

RootSystem build_root_system(RootSystemKind kind);

// All reduced words of w, used to test that support is word-independent.
std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w);

// True iff w lies in no proper standard parabolic: its reduced-word support is all of S.
bool is_full_support(const RootSystem& rs, const WeylElement& w);

// <mu, rho> for mu in simple-coroot coordinates; exact rational.
Rat pair_mu_rho(const RootSystem& rs, const IVec& mu);

Mat mat_identity(int rank);
Mat mat_mul(int rank, const Mat& a, const Mat& b);
bool mat_eq(int rank, const Mat& a, const Mat& b);
Vec mat_apply(int rank, const Mat& m, const Vec& v);

}  // namespace adlv
