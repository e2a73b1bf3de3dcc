#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperthresh/hypergraph.hpp"

namespace hyperthresh {

using Json = nlohmann::ordered_json;

// Text format:
//
//   k n m
//   v1 v2 ... vk        (m lines, increasing indices, lines in lexicographic order)
//
// Lines starting with '#' are comments. Blank lines are ignored.

void write_text(std::ostream& os, const Hypergraph& h);
std::string to_text(const Hypergraph& h);

/// Throws ParseError on malformed input, including out-of-order or repeated lines.
Hypergraph parse_text(std::istream& is);
Hypergraph parse_text(const std::string& text);

/// {"k":..,"n":..,"edges":[[..],..]}
Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json to_json(VertexSet s);

/// Reads either format; JSON when the first non-blank character is '{'.
Hypergraph read_hypergraph_file(const std::string& path);

} // namespace hyperthresh
