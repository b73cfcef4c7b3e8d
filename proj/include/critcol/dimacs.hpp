#pragma once

#include "critcol/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace critcol::dimacs {

// DIMACS edge format: `p edge <n> <m>` followed by m lines `e <u> <v>`,
// 1-indexed. Lines starting with `c` are comments; `c label <v> <text>`
// comments carry vertex labels and are read back.

Graph read(std::istream& in);
Graph parse(std::string_view text);
Graph read_file(const std::filesystem::path& path);

/// Edges are written with u < v in ascending order.
void write(std::ostream& out, const Graph& g, std::string_view comment = {});
std::string to_string(const Graph& g, std::string_view comment = {});
void write_file(const std::filesystem::path& path, const Graph& g, std::string_view comment = {});

} // namespace critcol::dimacs
