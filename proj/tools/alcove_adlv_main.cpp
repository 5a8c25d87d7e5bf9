#include <adlv/checks.hpp>
#include <adlv/render.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace adlv;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

RootSystem group_or_throw(const std::string& name) {
    auto kind = kind_from_name(name);
    if (!kind) throw CLI::ValidationError("--group must be one of a1, a2, c2");
    return build_root_system(*kind);
}

void report(const CheckResult& r) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Alcove-level nonemptiness and dimension maps for affine "
                 "Deligne-Lusztig varieties of SL2, SL3 and Sp4"};
    app.require_subcommand(1);

    std::string group = "a2";
    int radius = -1;
    int window = 12;
    std::string mode = "all-vertices";
    std::string format = "json";
    std::string out_path;
    std::string in_path;
    bool allow_unstable = false;

    auto* compute = app.add_subcommand("compute", "compute a dimension map");
    compute->add_option("--group", group, "a1, a2 or c2");
    compute->add_option("--radius", radius, "vertex enumeration radius (default window+4)");
    compute->add_option("--window", window, "certified window of lengths");
    compute->add_option("--mode", mode, "all-vertices or fundamental-domain")
        ->check(CLI::IsMember({"all-vertices", "fundamental-domain"}));
    compute->add_option("--format", format, "json, csv, svg or ascii")
        ->check(CLI::IsMember({"json", "csv", "svg", "ascii"}));
    compute->add_option("--out", out_path, "output path (default stdout)");
    compute->add_flag("--allow-unstable", allow_unstable,
                      "do not fail when the window changed between radius-1 and radius");

    auto* render = app.add_subcommand("render", "render a map file as a diagram");
    std::string render_format = "svg";
    render->add_option("--in", in_path, "map file (default stdin)");
    render->add_option("--format", render_format, "svg or ascii")
        ->check(CLI::IsMember({"svg", "ascii"}));
    render->add_option("--out", out_path, "output path (default stdout)");

    auto* exportcmd = app.add_subcommand("export", "export a map file as CSV");
    exportcmd->add_option("--in", in_path, "map file (default stdin)");
    exportcmd->add_option("--out", out_path, "output path (default stdout)");

    auto* check = app.add_subcommand("check", "run a verification suite");
    std::string suite;
    int max_pairing = 5;
    int check_radius = 8;
    std::string map_path, csv_path;
    check->add_option("suite", suite, "formula, mu-rho, golden or properties")
        ->required()
        ->check(CLI::IsMember({"formula", "mu-rho", "golden", "properties"}));
    check->add_option("--group", group, "a1, a2 or c2");
    check->add_option("--window", window, "window for the formula suite");
    check->add_option("--radius", check_radius, "radius for formula/properties suites");
    bool radius_given = false;
    check->callback([&] { radius_given = check->count("--radius") > 0; });
    check->add_option("--max-pairing", max_pairing, "bound on <mu,rho> for mu-rho");
    check->add_option("--map", map_path, "map file for the golden suite");
    check->add_option("--csv", csv_path, "transcribed golden CSV");

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) {
        RootSystem rs = group_or_throw(group);
        if (radius < 0) radius = window + 4;
        std::cerr << "computing " << kind_name(rs.kind) << " map: radius " << radius
                  << ", window " << window << ", mode " << mode << "\n";
        EnumMode emode =
            mode == "fundamental-domain" ? EnumMode::FundamentalDomain : EnumMode::AllVertices;
        DimensionMap dm = dimension_map(rs, radius, window, emode);
        std::cerr << "superpieces: " << dm.superpieces
                  << ", omega rejects: " << dm.omega_rejects
                  << ", same-final collisions: " << dm.same_final_collisions << "\n";
        std::cerr << "stability: " << (dm.stable ? "stable" : "UNSTABLE") << "\n";
        MapFile mf = to_mapfile(rs, dm);
        if (format == "json")
            write_output(out_path, serialize_mapfile(mf));
        else if (format == "csv")
            write_output(out_path, mapfile_to_csv(mf));
        else if (format == "svg")
            write_output(out_path, render_svg(mf));
        else
            write_output(out_path, render_ascii(mf));
        if (!dm.stable && !allow_unstable) {
            std::cerr << "window entries changed between radius-1 and radius; "
                         "raise --radius or pass --allow-unstable\n";
            return kExitFailure;
        }
        return 0;
    }

    if (render->parsed()) {
        MapFile mf = parse_mapfile(read_input(in_path));
        write_output(out_path, render_format == "svg" ? render_svg(mf) : render_ascii(mf));
        return 0;
    }

    if (exportcmd->parsed()) {
        MapFile mf = parse_mapfile(read_input(in_path));
        write_output(out_path, mapfile_to_csv(mf));
        return 0;
    }

    // check
    if (suite == "formula") {
        RootSystem rs = group_or_throw(group);
        if (!radius_given) check_radius = window + 4;
        CheckResult r = check_formula(rs, check_radius, window);
        report(r);
        return r.pass ? 0 : kExitFailure;
    }
    if (suite == "mu-rho") {
        RootSystem rs = group_or_throw(group);
        CheckResult r = check_mu_rho(rs, max_pairing);
        report(r);
        return r.pass ? 0 : kExitFailure;
    }
    if (suite == "golden") {
        if (map_path.empty() || csv_path.empty())
            throw CLI::ValidationError("golden needs --map and --csv");
        MapFile mf = parse_mapfile(read_input(map_path));
        CheckResult r = check_golden(mf, parse_golden_csv(read_input(csv_path)));
        report(r);
        return r.pass ? 0 : kExitFailure;
    }
    RootSystem rs = group_or_throw(group);
    bool all_pass = true;
    for (const auto& r : check_properties(rs, check_radius)) {
        report(r);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
