#include <adlv/render.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace adlv {

namespace {

// Display frames. A1: the line. A2: fundamental coweights at 60 degrees (the
// exact y value carries an extra factor sqrt(3)/2 applied at pixel rounding).
// C2: the rotated frame (x1+x2, x1-x2), which tiles by unit squares cut by
// both diagonals.
struct Frame {
    RootSystemKind kind = RootSystemKind::A1;

    std::pair<Rat, Rat> point(const Vec& chart) const {
        switch (kind) {
            case RootSystemKind::A1: return {chart[0], Rat(0)};
            case RootSystemKind::A2: return {chart[0] + chart[1] / Rat(2), chart[1]};
            case RootSystemKind::C2: return {chart[0] + chart[1], chart[0]};
        }
        return {Rat(0), Rat(0)};
    }
};

constexpr long long kScale = 42;
constexpr long long kSqrt3Num = 1732050808;  // sqrt(3) * 1e9
constexpr long long kSqrt3Den = 1000000000;

long long round_div(long long num, long long den) {
    // round-half-up on a positive denominator
    if (num >= 0) return (2 * num + den) / (2 * den);
    return -((2 * (-num) + den) / (2 * den));
}

struct Board {
    Frame frame;
    long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;

    long long px(const Rat& ex) const { return round_div(ex.numerator() * kScale, ex.denominator()); }
    long long py_raw(const Rat& ey) const {
        if (frame.kind == RootSystemKind::A2) {
            // ey carries the chart x2 value; scale by sqrt(3)/2
            return round_div(ey.numerator() * kScale * kSqrt3Num, ey.denominator() * 2 * kSqrt3Den);
        }
        return round_div(ey.numerator() * kScale, ey.denominator());
    }
    std::pair<long long, long long> to_screen(const Vec& chart) const {
        auto [ex, ey] = frame.point(chart);
        return {px(ex) - min_x, max_y - py_raw(ey)};
    }
};

}  // namespace

std::string render_svg(const MapFile& mf) {
    auto kind = kind_from_name(mf.group);
    if (!kind) throw std::invalid_argument("unknown group in map file");
    RootSystem rs = build_root_system(*kind);
    Frame frame{rs.kind};
    Board board{frame};

    struct Cell {
        Alcove alcove;
        std::vector<Vec> verts;
        std::optional<int> dim;
    };
    std::vector<Cell> cells;
    for (const auto& e : mf.entries) {
        Cell c{alcove_of_entry(rs, e.lambda, e.word), {}, e.dim};
        if (rs.rank == 1) {
            // draw intervals as unit-height boxes
            Rat lo = c.alcove.bary[0] - Rat(1, 2), hi = c.alcove.bary[0] + Rat(1, 2);
            c.verts = {Vec{lo}, Vec{hi}};
        } else {
            c.verts = alcove_vertices(rs, c.alcove);
        }
        cells.push_back(std::move(c));
    }

    bool first = true;
    for (const auto& c : cells) {
        for (const auto& v : c.verts) {
            auto [ex, ey] = frame.point(v);
            long long x = board.px(ex), y = board.py_raw(ey);
            if (first || x < board.min_x) board.min_x = x;
            if (first || x > board.max_x) board.max_x = x;
            if (first || y < board.min_y) board.min_y = y;
            if (first || y > board.max_y) board.max_y = y;
            first = false;
        }
    }
    long long margin = kScale;
    board.min_x -= margin;
    board.max_y += margin;
    long long width = board.max_x - board.min_x + margin;
    long long height = (board.max_y - board.min_y) + margin;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<g font-family=\"sans-serif\" font-size=\"" << kScale * 2 / 5
        << "\" text-anchor=\"middle\">\n";

    // tiling
    for (const auto& c : cells) {
        if (rs.rank == 1) {
            auto [x0, yb] = board.to_screen(c.verts[0]);
            auto [x1, yt] = board.to_screen(c.verts[1]);
            svg << "<rect x=\"" << x0 << "\" y=\"" << yb - kScale << "\" width=\"" << x1 - x0
                << "\" height=\"" << kScale << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        } else {
            svg << "<polygon points=\"";
            for (size_t i = 0; i < c.verts.size(); ++i) {
                auto [x, y] = board.to_screen(c.verts[i]);
                svg << (i ? " " : "") << x << "," << y;
            }
            svg << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        }
    }

    // labels at barycenters
    for (const auto& c : cells) {
        if (!c.dim) continue;
        std::string label = std::to_string(*c.dim);
        auto [x, y] = board.to_screen(c.alcove.bary);
        long long dy = (rs.rank == 1) ? -kScale * 2 / 5 : kScale / 7;
        svg << "<text x=\"" << x << "\" y=\"" << y + dy << "\">" << label << "</text>\n";
    }

    // bold boundary of the shrunken region: facets where membership flips
    std::map<AlcoveKey, bool> inside;
    for (const auto& c : cells) inside[alcove_key(rs, c.alcove)] = in_shrunken(rs, c.alcove);
    for (const auto& c : cells) {
        bool mine = inside.at(alcove_key(rs, c.alcove));
        for (const auto& [h, nb] : walls(rs, c.alcove)) {
            if (in_shrunken(rs, nb) == mine) continue;
            if (rs.rank == 1) {
                Rat xv = (c.alcove.bary[0] + nb.bary[0]) / Rat(2);
                auto [x, y] = board.to_screen(Vec{xv});
                svg << "<line x1=\"" << x << "\" y1=\"" << y - kScale << "\" x2=\"" << x
                    << "\" y2=\"" << y << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
                continue;
            }
            // shared facet endpoints = common vertices of the two alcoves
            std::vector<Vec> shared;
            for (const auto& va : alcove_vertices(rs, c.alcove))
                for (const auto& vb : alcove_vertices(rs, nb))
                    if (va == vb) shared.push_back(va);
            if (shared.size() != 2) continue;
            auto [x1, y1] = board.to_screen(shared[0]);
            auto [x2, y2] = board.to_screen(shared[1]);
            svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
                << y2 << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
        }
    }

    svg << "</g>\n</svg>\n";
    return svg.str();
}

std::string render_ascii(const MapFile& mf) {
    auto kind = kind_from_name(mf.group);
    if (!kind) throw std::invalid_argument("unknown group in map file");
    RootSystem rs = build_root_system(*kind);
    Frame frame{rs.kind};

    // bucket by display row (descending), then by display column
    std::map<Rat, std::map<Rat, std::string>, std::greater<Rat>> rows;
    for (const auto& e : mf.entries) {
        Alcove a = alcove_of_entry(rs, e.lambda, e.word);
        auto [ex, ey] = frame.point(a.bary);
        rows[ey][ex] = e.dim ? std::to_string(*e.dim) : std::string(".");
    }
    // uniform columns across the grid: order all distinct ex values
    std::map<Rat, int> col_of;
    for (const auto& [ey, row] : rows)
        for (const auto& [ex, s] : row) col_of.emplace(ex, 0);
    int col = 0;
    for (auto& [ex, idx] : col_of) idx = col++;

    std::ostringstream out;
    for (const auto& [ey, row] : rows) {
        std::string line;
        for (const auto& [ex, label] : row) {
            size_t target = static_cast<size_t>(col_of.at(ex)) * 3;
            if (line.size() < target) line.resize(target, ' ');
            std::string cell = label;
            while (cell.size() < 3) cell = " " + cell;
            line += cell;
        }
        out << line << "\n";
    }
    return out.str();
}

}  // namespace adlv
