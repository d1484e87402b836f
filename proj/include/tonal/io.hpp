#pragma once

#include <string>
#include <string_view>

#include "tonal/errors.hpp"
#include "tonal/graph.hpp"

namespace tonal {

// Text formats.
//
// Edge list (primary interchange format, bit-exact on output):
//   UTF-8 lines; '#' starts a comment; first line "p <n>"; then one
//   "e <u> <v>" or "e <u> <v> <R|B>" line per edge. The header may be
//   omitted on input, in which case n is inferred from the largest index.
//
// graph6: standard ASCII encoding, uncoloured graphs only. A line without
// spaces is taken as graph6; anything else as an edge list.

// Edge list or graph6, auto-detected. Colour tokens are rejected here.
Graph parse_graph(std::string_view text);

// Coloured edge list; every edge line must carry a colour token.
PatternColouring parse_coloured(std::string_view text);

// Coloured edge list that must cover every edge of K_n.
ColouredHost parse_host(std::string_view text);

Graph parse_graph6(std::string_view text);

std::string serialize_graph(const Graph& g);
std::string serialize_coloured(const PatternColouring& pc);
std::string serialize_host(const ColouredHost& host);
std::string serialize_graph6(const Graph& g);

}  // namespace tonal
