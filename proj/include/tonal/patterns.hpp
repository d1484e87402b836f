#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tonal/graph.hpp"

namespace tonal {

// Image array: vertex v maps to perm[v].
using VertexPermutation = std::vector<int>;

// The full automorphism group of G, by brute force over all vertex
// permutations. Guarded at |V(G)| <= 10; throws size_limit_error beyond.
std::vector<VertexPermutation> automorphisms(const Graph& g);

// Lexicographically minimal colour-adjacency serialization over all vertex
// permutations: one symbol per vertex pair (i<j), 0 = non-edge, 1 = red,
// 2 = blue. Two colourings are equivalent iff their codes agree.
std::vector<uint8_t> canonical_code(const PatternColouring& pc);

// True iff some isomorphism of the underlying graphs maps every edge to an
// edge of the same colour. Guarded at 10 vertices.
bool patterns_equivalent(const PatternColouring& a, const PatternColouring& b);

// Colour-preserving relabelling equivalence of two complete-host colourings.
bool hosts_equivalent(const ColouredHost& a, const ColouredHost& b);

// One equivalence class of edge colourings of G under Aut(G).
struct PatternClass {
    PatternColouring representative;  // minimal red-mask member of the orbit
    Tone tone;
    long long orbit_size = 0;
};

// Burnside count of colour orbits: (1/|Aut|) * sum over automorphisms of
// 2^(number of induced edge cycles). Computed without enumerating orbits.
long long burnside_class_count(const Graph& g);

// The orbits of all 2^e(G) edge colourings under Aut(G), sorted by tone
// (red count descending) then by representative mask. Guarded at
// e(G) <= 20 and |V(G)| <= 10. Cross-checked against the Burnside count.
std::vector<PatternClass> enumerate_pattern_classes(const Graph& g);

// Every connected component is a star; K_1 and K_2 count as stars.
bool is_star_forest(const Graph& g);

// Star sizes p_1 >= ... >= p_q of the components that carry edges.
// Throws std::invalid_argument when G is not a star forest.
std::vector<int> star_forest_parts(const Graph& g);

// Absent iff G is a star forest. Otherwise an (e(G)-1, 1)-colouring no
// balanced clique colouring contains: one edge of a triangle blue if G has
// a triangle, else the middle edge of a P4 blue, everything else red.
// Throws std::invalid_argument when G has no edges.
std::optional<PatternColouring> witness_pattern(const Graph& g);

}  // namespace tonal
