#include <doctest.h>

#include <adlv/root_system.hpp>

#include <algorithm>
#include <set>

using namespace adlv;

TEST_CASE("root counts and cartan matrices") {
    RootSystem a1 = build_root_system(RootSystemKind::A1);
    RootSystem a2 = build_root_system(RootSystemKind::A2);
    RootSystem c2 = build_root_system(RootSystemKind::C2);

    CHECK(a1.positive_roots.size() == 1);
    CHECK(a2.positive_roots.size() == 3);
    CHECK(c2.positive_roots.size() == 4);

    CHECK(a2.cartan[0][0] == 2);
    CHECK(a2.cartan[0][1] == -1);
    CHECK(a2.cartan[1][0] == -1);
    CHECK(c2.cartan[0][1] == -1);
    CHECK(c2.cartan[1][0] == -2);

    std::set<IVec> a2roots(a2.positive_roots.begin(), a2.positive_roots.end());
    CHECK(a2roots == std::set<IVec>{{1, 0}, {0, 1}, {1, 1}});
    std::set<IVec> c2roots(c2.positive_roots.begin(), c2.positive_roots.end());
    CHECK(c2roots == std::set<IVec>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("rho pairs to 1 with every simple coroot") {
    for (auto kind : {RootSystemKind::A1, RootSystemKind::A2, RootSystemKind::C2}) {
        RootSystem rs = build_root_system(kind);
        for (int j = 0; j < rs.rank; ++j) {
            IVec mu(rs.rank, 0);
            mu[j] = 1;
            CHECK(pair_mu_rho(rs, mu) == Rat(1));
        }
    }
    RootSystem a1 = build_root_system(RootSystemKind::A1);
    CHECK(a1.rho[0] == Rat(1, 2));
}

TEST_CASE("finite Weyl enumeration") {
    RootSystem a1 = build_root_system(RootSystemKind::A1);
    RootSystem a2 = build_root_system(RootSystemKind::A2);
    RootSystem c2 = build_root_system(RootSystemKind::C2);

    CHECK(a1.weyl.size() == 2);
    CHECK(a2.weyl.size() == 6);
    CHECK(c2.weyl.size() == 8);

    std::multiset<int> a2lengths;
    for (const auto& w : a2.weyl) a2lengths.insert(w.length);
    CHECK(a2lengths == std::multiset<int>{0, 1, 1, 2, 2, 3});

    int longest = 0;
    for (const auto& w : c2.weyl)
        if (w.length == 4) ++longest;
    CHECK(longest == 1);
    CHECK(c2.longest_length == 4);
    CHECK(a2.longest_length == 3);
    CHECK(a1.longest_length == 1);
}

TEST_CASE("pairing examples") {
    RootSystem a2 = build_root_system(RootSystemKind::A2);
    CHECK(pair_mu_rho(a2, {0, 0}) == Rat(0));
    CHECK(pair_mu_rho(a2, {1, 1}) == Rat(2));
    RootSystem a1 = build_root_system(RootSystemKind::A1);
    CHECK(pair_mu_rho(a1, {1}) == Rat(1));
}

TEST_CASE("full support") {
    RootSystem a2 = build_root_system(RootSystemKind::A2);
    int full = 0;
    std::set<std::vector<int>> full_words;
    for (const auto& w : a2.weyl) {
        if (is_full_support(a2, w)) {
            ++full;
            full_words.insert(w.word);
        }
    }
    CHECK(full == 3);
    CHECK(full_words == std::set<std::vector<int>>{{1, 2}, {2, 1}, {1, 2, 1}});

    const WeylElement* s1 = nullptr;
    for (const auto& w : a2.weyl)
        if (w.word == std::vector<int>{1}) s1 = &w;
    REQUIRE(s1 != nullptr);
    CHECK_FALSE(is_full_support(a2, *s1));
}

TEST_CASE("support does not depend on the reduced word") {
    for (auto kind : {RootSystemKind::A2, RootSystemKind::C2}) {
        RootSystem rs = build_root_system(kind);
        for (const auto& w : rs.weyl) {
            std::set<std::set<int>> supports;
            for (const auto& word : all_reduced_words(rs, w))
                supports.insert(std::set<int>(word.begin(), word.end()));
            CHECK(supports.size() == 1);
        }
    }
}

TEST_CASE("full support equals length >= rank for these groups") {
    for (auto kind : {RootSystemKind::A1, RootSystemKind::A2, RootSystemKind::C2}) {
        RootSystem rs = build_root_system(kind);
        for (const auto& w : rs.weyl)
            CHECK(is_full_support(rs, w) == (w.length >= rs.rank));
    }
}

TEST_CASE("every element permutes the root set") {
    for (auto kind : {RootSystemKind::A2, RootSystemKind::C2}) {
        RootSystem rs = build_root_system(kind);
        std::set<IVec> roots;
        for (const auto& r : rs.positive_roots) {
            roots.insert(r);
            IVec neg = r;
            for (auto& x : neg) x = -x;
            roots.insert(neg);
        }
        for (const auto& w : rs.weyl) {
            std::set<IVec> image;
            for (const auto& r : roots) image.insert(rs.act_on_root(w, r));
            CHECK(image == roots);
        }
    }
}
