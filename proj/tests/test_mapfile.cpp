#include <doctest.h>

#include <adlv/checks.hpp>
#include <adlv/render.hpp>

#include <algorithm>

using namespace adlv;

namespace {

MapFile small_map(RootSystemKind kind, int radius, int window) {
    RootSystem rs = build_root_system(kind);
    return to_mapfile(rs, dimension_map(rs, radius, window));
}

}  // namespace

TEST_CASE("map files round-trip losslessly") {
    for (auto kind : {RootSystemKind::A1, RootSystemKind::A2, RootSystemKind::C2}) {
        MapFile mf = small_map(kind, 6, 6);
        MapFile back = parse_mapfile(serialize_mapfile(mf));
        CHECK(back == mf);
        CHECK(serialize_mapfile(back) == serialize_mapfile(mf));
    }
}

TEST_CASE("entries are sorted by length, lambda, word") {
    MapFile mf = small_map(RootSystemKind::A2, 6, 7);
    auto key = [](const MapEntry& e) { return std::make_tuple(e.length, e.lambda, e.word); };
    for (size_t i = 1; i < mf.entries.size(); ++i) CHECK(key(mf.entries[i - 1]) < key(mf.entries[i]));
    CHECK(mf.entries.front().length == 0);
    CHECK(mf.entries.front().dim == 0);
}

TEST_CASE("every window alcove appears exactly once") {
    RootSystem a1 = build_root_system(RootSystemKind::A1);
    MapFile mf = to_mapfile(a1, dimension_map(a1, 11, 7));
    CHECK(mf.entries.size() == 15);
    int empties = 0;
    for (const auto& e : mf.entries)
        if (!e.dim) ++empties;
    CHECK(empties == 6);  // even lengths 2, 4, 6, both sides
}

TEST_CASE("csv export and golden comparison") {
    MapFile mf = small_map(RootSystemKind::A2, 6, 5);
    std::string csv = mapfile_to_csv(mf);
    auto rows = parse_golden_csv(csv);
    CHECK(rows.size() == mf.entries.size());
    CHECK(compare_with_golden(mf, rows).empty());

    SUBCASE("a corrupted entry is reported by alcove") {
        REQUIRE(rows.size() > 3);
        auto& victim = rows[3];
        victim.dim = victim.dim ? std::optional<int>() : std::optional<int>(7);
        auto mismatches = compare_with_golden(mf, rows);
        REQUIRE(mismatches.size() == 1);
        CHECK(mismatches[0].find("lambda=(") != std::string::npos);
        CheckResult r = check_golden(mf, rows);
        CHECK_FALSE(r.pass);
    }

    SUBCASE("an alcove outside the window is reported") {
        rows[0].lambda = {40, 40};
        auto mismatches = compare_with_golden(mf, rows);
        REQUIRE(mismatches.size() == 1);
        CHECK(mismatches[0].find("not present") != std::string::npos);
    }
}

TEST_CASE("rendering is byte-stable and well-formed") {
    for (auto kind : {RootSystemKind::A1, RootSystemKind::A2, RootSystemKind::C2}) {
        MapFile mf = small_map(kind, 6, 5);
        std::string one = render_svg(mf);
        std::string two = render_svg(mf);
        CHECK(one == two);
        CHECK(one.find("<svg") != std::string::npos);
        CHECK(one.rfind("</svg>\n") == one.size() - 7);
        // one polygon/rect per alcove, one text per non-empty entry
        size_t labels = 0;
        for (const auto& e : mf.entries)
            if (e.dim) ++labels;
        size_t text_count = 0;
        for (size_t pos = 0; (pos = one.find("<text", pos)) != std::string::npos; ++pos)
            ++text_count;
        CHECK(text_count == labels);

        std::string ascii = render_ascii(mf);
        CHECK(ascii == render_ascii(mf));
        CHECK(!ascii.empty());
    }
}

TEST_CASE("A2 svg labels the three neighbors of C_M with 1") {
    MapFile mf = small_map(RootSystemKind::A2, 6, 4);
    int ones = 0;
    for (const auto& e : mf.entries)
        if (e.length == 1 && e.dim == 1) ++ones;
    CHECK(ones == 3);
    std::string svg = render_svg(mf);
    size_t one_labels = 0;
    for (size_t pos = 0; (pos = svg.find(">1</text>", pos)) != std::string::npos; ++pos)
        ++one_labels;
    CHECK(one_labels == 3);
}

TEST_CASE("empty map renders the tiling and overlay only") {
    MapFile mf;
    mf.group = "a2";
    mf.radius = 2;
    mf.window = 2;
    mf.stability = true;
    RootSystem rs = build_root_system(RootSystemKind::A2);
    BfsBall ball = bfs_ball(rs, 2);
    for (const auto& a : ball.order) {
        CanonicalPair cp = canonical_pair(rs, a);
        mf.entries.push_back(MapEntry{cp.lambda, word_string(*cp.w), alcove_length(rs, a), {}});
    }
    std::string svg = render_svg(mf);
    CHECK(svg.find("<text") == std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
}

TEST_CASE("alcove_of_entry inverts the canonical pair") {
    RootSystem c2 = build_root_system(RootSystemKind::C2);
    BfsBall ball = bfs_ball(c2, 6);
    for (const auto& a : ball.order) {
        CanonicalPair cp = canonical_pair(c2, a);
        Alcove back = alcove_of_entry(c2, cp.lambda, word_string(*cp.w));
        CHECK(back == a);
    }
}
