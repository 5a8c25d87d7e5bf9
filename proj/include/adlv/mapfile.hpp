#pragma once

#include <adlv/pipeline.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace adlv {

struct MapEntry {
    IVec lambda;
    std::string word;   // digits of the canonical reduced word, "" for e
    int length = 0;
    std::optional<int> dim;

    bool operator==(const MapEntry& o) const = default;
};

// The on-disk map document; entries sorted by (length, lambda, word).
struct MapFile {
    std::string group;
    int radius = 0;
    int window = 0;
    bool stability = false;
    std::vector<MapEntry> entries;

    bool operator==(const MapFile& o) const = default;
};

MapFile to_mapfile(const RootSystem& rs, const DimensionMap& dm);

std::string serialize_mapfile(const MapFile& mf);
MapFile parse_mapfile(const std::string& json_text);

std::string mapfile_to_csv(const MapFile& mf);

struct GoldenRow {
    std::string group;
    IVec lambda;
    std::string word;
    int length = 0;
    std::optional<int> dim;
};

std::vector<GoldenRow> parse_golden_csv(const std::string& csv_text);

// Compare a map against transcribed golden rows; returns human-readable
// mismatch descriptions, empty when everything listed matches.
std::vector<std::string> compare_with_golden(const MapFile& mf,
                                             const std::vector<GoldenRow>& rows);

Alcove alcove_of_entry(const RootSystem& rs, const IVec& lambda, const std::string& word);

std::string word_string(const WeylElement& w);

}  // namespace adlv
