#pragma once

#include <adlv/mapfile.hpp>

#include <string>

namespace adlv {

// SVG diagram of a dimension map: one cell per alcove, labeled with its
// dimension, blank when empty, with the shrunken-chamber boundary in bold.
std::string render_svg(const MapFile& mf);

// Row-major text grid, "." for empty alcoves.
std::string render_ascii(const MapFile& mf);

}  // namespace adlv
