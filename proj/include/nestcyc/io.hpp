#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "nestcyc/graph.hpp"

namespace nestcyc {

// Edge-list text format: a header line "n m" followed by m lines "u v" with
// 0 <= u < v < n. Parse errors are InputErrors carrying "line L, column C".

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
Graph parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

/// Writes to a sibling temp file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

/// 64-bit FNV-1a over the canonical edge-list text of g.
std::uint64_t graph_hash(const Graph& g);
std::string hash_hex(std::uint64_t h);

}  // namespace nestcyc
