#include <adlv/checks.hpp>
#include <adlv/render.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace adlv;

namespace {

RootSystem group_of(const std::string& name) {
    auto kind = kind_from_name(name);
    if (!kind) throw py::value_error("group must be one of a1, a2, c2");
    return build_root_system(*kind);
}

EnumMode mode_of(const std::string& name) {
    if (name == "all-vertices") return EnumMode::AllVertices;
    if (name == "fundamental-domain") return EnumMode::FundamentalDomain;
    throw py::value_error("mode must be all-vertices or fundamental-domain");
}

py::dict mapfile_to_dict(const MapFile& mf) {
    py::dict out;
    out["group"] = mf.group;
    out["radius"] = mf.radius;
    out["window"] = mf.window;
    out["stability"] = mf.stability;
    py::list entries;
    for (const auto& e : mf.entries) {
        py::dict row;
        row["lambda"] = e.lambda;
        row["word"] = e.word;
        row["length"] = e.length;
        row["dim"] = e.dim ? py::object(py::int_(*e.dim)) : py::none();
        entries.append(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

MapFile mapfile_from_dict(const py::dict& d) {
    MapFile mf;
    mf.group = d["group"].cast<std::string>();
    mf.radius = d["radius"].cast<int>();
    mf.window = d["window"].cast<int>();
    mf.stability = d["stability"].cast<bool>();
    for (auto row : d["entries"].cast<py::list>()) {
        py::dict r = row.cast<py::dict>();
        MapEntry e;
        e.lambda = r["lambda"].cast<IVec>();
        e.word = r["word"].cast<std::string>();
        e.length = r["length"].cast<int>();
        if (!r["dim"].is_none()) e.dim = r["dim"].cast<int>();
        mf.entries.push_back(std::move(e));
    }
    return mf;
}

}  // namespace

PYBIND11_MODULE(adlv, m) {
    m.doc() = "Alcove-level nonemptiness and dimension maps for affine Deligne-Lusztig "
              "varieties of SL2, SL3 and Sp4 (Iwahori level, b = 1)";

    m.def(
        "compute_map",
        [](const std::string& group, int radius, int window, const std::string& mode) {
            RootSystem rs = group_of(group);
            if (radius < 0) radius = window + 4;
            DimensionMap dm = dimension_map(rs, radius, window, mode_of(mode));
            return mapfile_to_dict(to_mapfile(rs, dm));
        },
        py::arg("group"), py::arg("radius") = -1, py::arg("window") = 12,
        py::arg("mode") = "all-vertices",
        "Aggregate the folding pipeline into a per-alcove dimension map.");

    m.def(
        "alcove_length",
        [](const std::string& group, const IVec& lambda, const std::string& word) {
            RootSystem rs = group_of(group);
            return alcove_length(rs, alcove_of_entry(rs, lambda, word));
        },
        py::arg("group"), py::arg("lambda"), py::arg("word"));

    m.def(
        "in_shrunken",
        [](const std::string& group, const IVec& lambda, const std::string& word) {
            RootSystem rs = group_of(group);
            return in_shrunken(rs, alcove_of_entry(rs, lambda, word));
        },
        py::arg("group"), py::arg("lambda"), py::arg("word"));

    m.def(
        "formula_eval",
        [](const std::string& group, const IVec& lambda,
           const std::string& word) -> std::optional<int> {
            RootSystem rs = group_of(group);
            return formula_eval(rs, alcove_of_entry(rs, lambda, word));
        },
        py::arg("group"), py::arg("lambda"), py::arg("word"),
        "Closed-form dimension on the shrunken region; None means empty.");

    m.def(
        "k_level_dimension",
        [](const std::string& group, const IVec& mu) {
            RootSystem rs = group_of(group);
            MuSpec spec = make_mu_spec(rs, mu);
            int window = static_cast<int>(2 * spec.pairing) + rs.longest_length;
            DimensionMap dm = dimension_map(rs, window + 4, window);
            return k_level_dimension(rs, spec, dm);
        },
        py::arg("group"), py::arg("mu"),
        "Dimension at special maximal compact level for a dominant coweight.");

    m.def(
        "mu_rho_pairing",
        [](const std::string& group, const IVec& mu) {
            RootSystem rs = group_of(group);
            Rat p = pair_mu_rho(rs, mu);
            if (!is_integer(p)) throw py::value_error("pairing is not integral");
            return p.numerator();
        },
        py::arg("group"), py::arg("mu"));

    m.def(
        "cm_symmetry_count",
        [](const std::string& group) { return cm_symmetries(group_of(group)).size(); },
        py::arg("group"));

    m.def(
        "render_svg",
        [](const py::dict& map) { return render_svg(mapfile_from_dict(map)); },
        py::arg("map"));

    m.def(
        "render_ascii",
        [](const py::dict& map) { return render_ascii(mapfile_from_dict(map)); },
        py::arg("map"));

    m.def(
        "map_to_json", [](const py::dict& map) { return serialize_mapfile(mapfile_from_dict(map)); },
        py::arg("map"));

    m.def(
        "map_from_json", [](const std::string& text) { return mapfile_to_dict(parse_mapfile(text)); },
        py::arg("text"));
}
