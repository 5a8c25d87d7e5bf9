#include <adlv/mapfile.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace adlv {

std::string word_string(const WeylElement& w) {
    std::string s;
    for (int letter : w.word) s += static_cast<char>('0' + letter);
    return s;
}

Alcove alcove_of_entry(const RootSystem& rs, const IVec& lambda, const std::string& word) {
    Mat m = mat_identity(rs.rank);
    for (char c : word) {
        int j = c - '0';
        if (j < 1 || j > rs.rank) throw std::invalid_argument("bad word letter");
        Mat sj = mat_identity(rs.rank);
        for (int i = 0; i < rs.rank; ++i) sj[i][j - 1] -= rs.cartan[i][j - 1];
        m = mat_mul(rs.rank, m, sj);
    }
    return alcove_from_pair(rs, lambda, rs.element_by_matrix(m));
}

MapFile to_mapfile(const RootSystem& rs, const DimensionMap& dm) {
    MapFile mf;
    mf.group = kind_name(rs.kind);
    mf.radius = dm.radius;
    mf.window = dm.window;
    mf.stability = dm.stable;
    for (const auto& a : dm.window_alcoves) {
        CanonicalPair cp = canonical_pair(rs, a);
        MapEntry e;
        e.lambda = cp.lambda;
        e.word = word_string(*cp.w);
        e.length = alcove_length(rs, a);
        e.dim = dm.entry(rs, a);
        mf.entries.push_back(std::move(e));
    }
    std::sort(mf.entries.begin(), mf.entries.end(), [](const MapEntry& a, const MapEntry& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.word < b.word;
    });
    return mf;
}

std::string serialize_mapfile(const MapFile& mf) {
    nlohmann::json doc;
    doc["group"] = mf.group;
    doc["radius"] = mf.radius;
    doc["window"] = mf.window;
    doc["stability"] = mf.stability;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : mf.entries) {
        nlohmann::json row;
        row["lambda"] = e.lambda;
        row["word"] = e.word;
        row["length"] = e.length;
        if (e.dim)
            row["dim"] = *e.dim;
        else
            row["dim"] = nullptr;
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

MapFile parse_mapfile(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    MapFile mf;
    mf.group = doc.at("group").get<std::string>();
    mf.radius = doc.at("radius").get<int>();
    mf.window = doc.at("window").get<int>();
    mf.stability = doc.at("stability").get<bool>();
    for (const auto& row : doc.at("entries")) {
        MapEntry e;
        e.lambda = row.at("lambda").get<IVec>();
        e.word = row.at("word").get<std::string>();
        e.length = row.at("length").get<int>();
        if (!row.at("dim").is_null()) e.dim = row.at("dim").get<int>();
        mf.entries.push_back(std::move(e));
    }
    return mf;
}

std::string mapfile_to_csv(const MapFile& mf) {
    std::ostringstream out;
    out << "group,lambda1,lambda2,word,length,dim\n";
    for (const auto& e : mf.entries) {
        out << mf.group << "," << e.lambda[0] << ","
            << (e.lambda.size() > 1 ? std::to_string(e.lambda[1]) : std::string("0")) << ","
            << e.word << "," << e.length << ",";
        if (e.dim) out << *e.dim;
        out << "\n";
    }
    return out.str();
}

std::vector<GoldenRow> parse_golden_csv(const std::string& csv_text) {
    std::vector<GoldenRow> rows;
    std::istringstream in(csv_text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {  // header
            first = false;
            continue;
        }
        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 6) throw std::invalid_argument("golden CSV needs 6 columns");
        GoldenRow row;
        row.group = fields[0];
        row.lambda = {std::stoll(fields[1]), std::stoll(fields[2])};
        if (row.group == "a1") row.lambda.resize(1);
        row.word = fields[3];
        row.length = std::stoi(fields[4]);
        if (!fields[5].empty()) row.dim = std::stoi(fields[5]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> compare_with_golden(const MapFile& mf,
                                             const std::vector<GoldenRow>& rows) {
    auto describe = [](const std::string& group, const IVec& lambda, const std::string& word) {
        std::string s = group + " alcove lambda=(";
        for (size_t i = 0; i < lambda.size(); ++i)
            s += (i ? "," : "") + std::to_string(lambda[i]);
        s += ") word=" + (word.empty() ? "e" : word);
        return s;
    };
    std::vector<std::string> mismatches;
    for (const auto& row : rows) {
        if (row.group != mf.group) {
            mismatches.push_back(describe(row.group, row.lambda, row.word) +
                                 ": group differs from map group " + mf.group);
            continue;
        }
        const MapEntry* found = nullptr;
        for (const auto& e : mf.entries)
            if (e.lambda == row.lambda && e.word == row.word) found = &e;
        if (!found) {
            mismatches.push_back(describe(row.group, row.lambda, row.word) +
                                 ": not present in the map window");
            continue;
        }
        if (found->length != row.length)
            mismatches.push_back(describe(row.group, row.lambda, row.word) + ": length " +
                                 std::to_string(found->length) + " != golden " +
                                 std::to_string(row.length));
        if (found->dim != row.dim) {
            auto show = [](const std::optional<int>& d) {
                return d ? std::to_string(*d) : std::string("empty");
            };
            mismatches.push_back(describe(row.group, row.lambda, row.word) + ": dim " +
                                 show(found->dim) + " != golden " + show(row.dim));
        }
    }
    return mismatches;
}

}  // namespace adlv
