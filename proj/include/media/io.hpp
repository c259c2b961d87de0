#pragma once

// Text formats: token systems and set families as JSON, plain graphs as edge
// lists, and deterministic GraphViz output.

#include <string>
#include <string_view>

#include "media/family.hpp"
#include "media/graph.hpp"
#include "media/token_system.hpp"

namespace media {

/// {"states": [...], "tokens": {"t": {"A": "B", ...}, ...}}. Unlisted states
/// are fixed. State and token order follow the file. Duplicate object keys
/// are rejected.
TokenSystem parse_token_system(std::string_view text);
std::string serialize_token_system(const TokenSystem& sys);

/// {"ground": [...], "sets": [[...], ...]}.
SetFamily parse_family(std::string_view text);
std::string serialize_family(const SetFamily& f);

/// One "U V" pair per line, optionally followed by the forward and backward
/// token labels. A line holding a single name declares a vertex. '#' starts
/// a comment. Vertices are numbered by first appearance.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// graph { "A"; ... "A" -- "B" [label="t/t~"]; }, vertices and edges in
/// canonical order.
std::string export_dot(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace media
