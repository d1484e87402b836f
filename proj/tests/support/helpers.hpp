#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tonal/graph.hpp"

namespace testutil {

inline tonal::Graph path_graph(int n) {
    std::vector<tonal::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return tonal::Graph(n, std::move(edges));
}

inline tonal::Graph cycle_graph(int n) {
    std::vector<tonal::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return tonal::Graph(n, std::move(edges));
}

// Graph on n vertices selected by one bit per vertex pair, pairs in
// lexicographic order.
inline tonal::Graph graph_from_mask(int n, uint32_t mask) {
    std::vector<tonal::Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return tonal::Graph(n, std::move(edges));
}

inline uint32_t graph_mask_count(int n) { return uint32_t{1} << (n * (n - 1) / 2); }

inline tonal::ColouredHost random_host(int n, std::mt19937_64& rng) {
    std::vector<tonal::Edge> red;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) red.push_back({u, v});
    return tonal::ColouredHost(n, red);
}

inline tonal::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<tonal::Edge> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.push_back({u, v});
    return tonal::Graph(n, std::move(edges));
}

// Every coloured pattern on at most max_vertices vertices.
inline std::vector<tonal::PatternColouring> all_coloured_patterns(int max_vertices) {
    std::vector<tonal::PatternColouring> out;
    for (int m = 1; m <= max_vertices; ++m)
        for (uint32_t gmask = 0; gmask < graph_mask_count(m); ++gmask) {
            tonal::Graph g = graph_from_mask(m, gmask);
            for (uint32_t cmask = 0; cmask < (uint32_t{1} << g.edge_count()); ++cmask)
                out.push_back(tonal::PatternColouring::from_red_mask(g, cmask));
        }
    return out;
}

}  // namespace testutil
