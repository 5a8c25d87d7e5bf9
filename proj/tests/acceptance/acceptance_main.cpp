// Acceptance suite: every comparison is integer-exact. One PASS/FAIL line per
// criterion; exit status 0 iff all pass.

#include <adlv/checks.hpp>
#include <adlv/render.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace adlv;

namespace {

int failures = 0;

void line(const std::string& name, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// criterion 1 / 2: pipeline vs formula on every shrunken alcove of length <= 18
void formula_criterion(const std::string& name, const RootSystem& rs, const DimensionMap& dm,
                       int max_len, double elapsed, double budget) {
    int compared = 0;
    for (const auto& a : dm.window_alcoves) {
        if (alcove_length(rs, a) > max_len || !in_shrunken(rs, a)) continue;
        ++compared;
        std::optional<int> expect = formula_eval(rs, a);
        std::optional<int> got = dm.entry(rs, a);
        if (expect != got) {
            CanonicalPair cp = canonical_pair(rs, a);
            std::ostringstream os;
            os << "mismatch at lambda=(";
            for (size_t i = 0; i < cp.lambda.size(); ++i) os << (i ? "," : "") << cp.lambda[i];
            os << ") word=" << (cp.w->word.empty() ? "e" : word_string(*cp.w));
            line(name, false, os.str());
            return;
        }
    }
    std::ostringstream os;
    os << compared << " shrunken alcoves of length <= " << max_len
       << " agree with the formula (radius 14, all-vertices); " << elapsed << "s";
    line(name, elapsed < budget && compared > 0, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string data_dir = "data";
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--data-dir") data_dir = argv[i + 1];

    RootSystem a1 = build_root_system(RootSystemKind::A1);
    RootSystem a2 = build_root_system(RootSystemKind::A2);
    RootSystem c2 = build_root_system(RootSystemKind::C2);

    // Windows 28 / 34 cover the transcribed reference diagrams; criteria 1-2 read the
    // length <= 18 portion from the same radius-14 all-vertices runs.
    auto t0 = std::chrono::steady_clock::now();
    DimensionMap dm_a2 = dimension_map(a2, 14, 28);
    double a2_time = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    DimensionMap dm_c2 = dimension_map(c2, 14, 34);
    double c2_time = seconds_since(t0);

    formula_criterion("criterion 1 (formula cross-check, A2)", a2, dm_a2, 18, a2_time, 300.0);
    formula_criterion("criterion 2 (formula cross-check, C2)", c2, dm_c2, 18, c2_time, 600.0);

    {  // criterion 3: near-C_M rings, plus the transcribed reference diagrams
        bool pass = true;
        std::string detail;
        auto ring_check = [&](const RootSystem& rs, const DimensionMap& dm) {
            Alcove cm = base_alcove(rs);
            if (dm.entry(rs, cm) != 0) {
                pass = false;
                detail = "C_M is not 0";
            }
            for (const auto& v : base_vertices(rs)) {
                for (const auto& a : star(rs, v)) {
                    int len = alcove_length(rs, a);
                    if (dm.entry(rs, a) != len) {
                        pass = false;
                        detail = "ring alcove of length " + std::to_string(len) +
                                 " has entry != length";
                    }
                }
            }
        };
        ring_check(a2, dm_a2);
        ring_check(c2, dm_c2);
        if (pass)
            detail = "C_M 0; wall-neighbor and vertex-ring entries equal their lengths "
                     "(A2 up to 3; C2 up to 4 at special, up to 2 at non-special vertices)";
        line("criterion 3 (near-C_M goldens)", pass, detail);

        CheckResult ga = check_golden(to_mapfile(a2, dm_a2),
                                      parse_golden_csv(read_file(data_dir + "/golden_a2.csv")));
        line("criterion 3 (reference diagram, SL3)", ga.pass, ga.detail);
        CheckResult gc = check_golden(to_mapfile(c2, dm_c2),
                                      parse_golden_csv(read_file(data_dir + "/golden_c2.csv")));
        line("criterion 3 (reference diagram, Sp4)", gc.pass, gc.detail);
    }

    {  // criterion 4: the worked example superpiece
        bool found = false;
        for (const auto& v1 : enumerate_vertices(a2, 8)) {
            auto [g, q1] = minimal_gallery_to_vertex(a2, v1);
            for (const auto& [q2p, m] : local_positions(a2, v1, q1)) {
                SuperpieceSpec spec = assemble_omega(a2, v1, q2p);
                auto piece = superpiece_map(a2, spec);
                if (piece.size() != 3) continue;
                std::multiset<int> dims;
                for (const auto& [key, dim] : piece) dims.insert(dim);
                if (dims == std::multiset<int>{7, 8, 9}) found = true;
            }
            if (found) break;
        }
        line("criterion 4 (example superpiece)", found,
             found ? "an A2 superpiece within radius 8 yields exactly three pieces with "
                     "cf-dimensions {7,8,9}"
                   : "no A2 superpiece within radius 8 has three pieces with cf-dimensions "
                     "{7,8,9}; the worked-example superpiece (v1 = alpha1v+alpha2v-vertex at "
                     "chart (3,2), m = 2) has exactly one choice edge and two pieces {8, 9}, "
                     "which is what the aggregate result diagram shows at its final alcoves");

        // supplementary: the example superpiece's actual content, corroborated
        // cell-for-cell by the aggregate diagram (criterion 3 transcription)
        Vec v1{Rat(3), Rat(2)};
        auto [g, q1] = minimal_gallery_to_vertex(a2, v1);
        auto cands = local_positions(a2, v1, q1);
        bool two_pieces_ok = false;
        for (const auto& [q2p, m] : cands) {
            if (m != 2) continue;
            SuperpieceSpec spec = assemble_omega(a2, v1, q2p);
            auto piece = superpiece_map(a2, spec);
            std::multiset<int> dims;
            for (const auto& [key, dim] : piece) dims.insert(dim);
            if (piece.size() == 2 && dims == std::multiset<int>{8, 9}) two_pieces_ok = true;
        }
        line("criterion 4 supplement (example superpiece content)", two_pieces_ok,
             "the example superpiece yields two pieces with cf-dimensions {8, 9}; the "
             "aggregate diagram reads 8, empty, 9 at the three alcoves the reference example "
             "marks 7, 8, 9");
    }

    {  // criterion 5: <mu, rho>
        DimensionMap dm_a1 = dimension_map(a1, 16, 12);
        auto t5 = std::chrono::steady_clock::now();
        CheckResult r1 = check_mu_rho(a1, 5, dm_a1);
        CheckResult r2 = check_mu_rho(a2, 5, dm_a2);
        CheckResult r3 = check_mu_rho(c2, 5, dm_c2);
        double elapsed = seconds_since(t5);
        bool pass = r1.pass && r2.pass && r3.pass && elapsed < 120.0;
        std::ostringstream os;
        if (pass)
            os << "k-level dimension equals <mu,rho> for all dominant mu with <mu,rho> <= 5 "
               << "(a1: " << r1.detail << "; a2: " << r2.detail << "; c2: " << r3.detail << "); "
               << elapsed << "s";
        else
            os << r1.detail << " | " << r2.detail << " | " << r3.detail;
        line("criterion 5 (<mu,rho>)", pass, os.str());
    }

    {  // criterion 6: rank-1 closed form, window 9
        DimensionMap dm = dimension_map(a1, 13, 9);
        bool pass = true;
        std::string detail;
        int checked = 0;
        for (const auto& a : dm.window_alcoves) {
            int len = alcove_length(a1, a);
            std::optional<int> want;
            if (len == 0)
                want = 0;
            else if (len % 2 == 1)
                want = (len + 1) / 2;
            if (dm.entry(a1, a) != want) {
                pass = false;
                detail = "closed form fails at length " + std::to_string(len);
                break;
            }
            ++checked;
        }
        if (pass)
            detail = std::to_string(checked) +
                     " entries match {C_M -> 0; odd 2k+1 -> k+1; even -> empty}";
        line("criterion 6 (rank-1 closed form)", pass, detail);
    }

    {  // criterion 7: property suites
        bool pass = true;
        std::ostringstream os;
        for (const RootSystem* rs : {&a2, &c2}) {
            for (const auto& r : check_properties(*rs, 8)) {
                pass = pass && r.pass;
                os << r.name << (r.pass ? " ok" : " FAILED (" + r.detail + ")") << "; ";
            }
        }
        // stability of the certified radius-14 windows
        pass = pass && dm_a2.stable && dm_c2.stable;
        os << "radius-14 window stability " << ((dm_a2.stable && dm_c2.stable) ? "ok" : "FAILED");
        line("criterion 7 (property suites)", pass, os.str());
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
