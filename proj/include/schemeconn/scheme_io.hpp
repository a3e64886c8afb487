#pragma once

#include <string>

#include "schemeconn/catalog.hpp"
#include "schemeconn/scheme.hpp"

namespace schemeconn {

// Scheme file: {"name": string, "v": int, "d": int, "classes": [[int]]}.
// Parsing always re-validates; malformed input raises ParseError.
SchemeDescriptor parse_scheme_json(const std::string& text);
std::string scheme_to_json(const SchemeDescriptor& scheme);
SchemeDescriptor load_scheme(const std::string& path);
void save_scheme(const SchemeDescriptor& scheme, const std::string& path);

// Group file: {"v": int, "mul": [[int]]}.
GroupTable parse_group_json(const std::string& text);
GroupTable load_group(const std::string& path);

// Graph file: {"n": int, "edges": [[u, v], ...]}.
Graph parse_graph_json(const std::string& text);
Graph load_graph(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace schemeconn
