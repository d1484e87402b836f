#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tonal/bitset.hpp"

namespace tonal {

enum class Colour : unsigned char { Red, Blue };

constexpr Colour opposite(Colour c) {
    return c == Colour::Red ? Colour::Blue : Colour::Red;
}

constexpr char colour_char(Colour c) { return c == Colour::Red ? 'R' : 'B'; }

// (r,b): how many red and how many blue edges a colouring of a fixed graph
// carries. r + b = e(G).
struct Tone {
    int red = 0;
    int blue = 0;
    friend bool operator==(const Tone&, const Tone&) = default;
};

// Normalized as u < v.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// edges are kept sorted lexicographically and mirrored into per-vertex
// adjacency bitsets.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints, self-loops or
    // duplicate edges.
    Graph(int n, std::vector<Edge> edges);

    static Graph complete(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const Bitset64& neighbours(int v) const { return adj_[v]; }

    // Index of {u,v} in edges(), or -1 when not an edge.
    int edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset64> adj_;
};

// Disjoint union of stars K_{1,p_1}, ..., K_{1,p_q}. part_sizes must be
// non-empty, non-increasing and positive. Component j occupies a contiguous
// vertex block with its centre first.
Graph star_forest(const std::vector<int>& part_sizes);

// A graph together with a red/blue label on every edge. colours[i] labels
// edges()[i].
class PatternColouring {
public:
    PatternColouring(Graph graph, std::vector<Colour> colours);

    const Graph& graph() const { return graph_; }

    Colour colour(int edge_idx) const { return colours_[edge_idx]; }
    Colour colour(int u, int v) const;  // throws std::invalid_argument on non-edges
    const std::vector<Colour>& colours() const { return colours_; }

    int red_count() const { return red_; }
    int blue_count() const { return blue_; }
    Tone tone() const { return {red_, blue_}; }

    int red_degree(int v) const { return red_deg_[v]; }
    int blue_degree(int v) const { return blue_deg_[v]; }

    // Bit i set iff edges()[i] is red. Requires e(G) <= 63.
    uint64_t red_mask() const;
    static PatternColouring from_red_mask(Graph graph, uint64_t mask);

    friend bool operator==(const PatternColouring& a, const PatternColouring& b) {
        return a.graph_ == b.graph_ && a.colours_ == b.colours_;
    }

private:
    Graph graph_;
    std::vector<Colour> colours_;
    std::vector<int> red_deg_, blue_deg_;
    int red_ = 0, blue_ = 0;
};

PatternColouring swap_colours(const PatternColouring& pc);

// Complete graph K_n with a total red/blue edge colouring, stored as two
// complementary symmetric bit matrices. Immutable after construction.
class ColouredHost {
public:
    // All listed edges red, every other edge blue.
    ColouredHost(int n, const std::vector<Edge>& red_edges);

    // Requires the pattern's graph to be complete on its vertex set.
    static ColouredHost from_pattern(const PatternColouring& pc);

    int order() const { return n_; }

    bool is_red(int u, int v) const { return red_[u].test(v); }
    Colour colour(int u, int v) const;  // throws std::invalid_argument if u == v

    const Bitset64& red_row(int v) const { return red_[v]; }
    const Bitset64& blue_row(int v) const { return blue_[v]; }

    int red_degree(int v) const { return red_deg_[v]; }
    int blue_degree(int v) const { return blue_deg_[v]; }

    long long red_count() const { return red_count_; }
    long long blue_count() const { return blue_count_; }
    long long min_count() const { return red_count_ < blue_count_ ? red_count_ : blue_count_; }

    ColouredHost flip_edge(int u, int v) const;

    PatternColouring as_pattern() const;

    friend bool operator==(const ColouredHost& a, const ColouredHost& b) {
        return a.n_ == b.n_ && a.red_ == b.red_;
    }

private:
    explicit ColouredHost(int n);
    void finish();  // recompute degrees, counts and blue rows from red rows

    int n_ = 0;
    std::vector<Bitset64> red_, blue_;
    std::vector<int> red_deg_, blue_deg_;
    long long red_count_ = 0, blue_count_ = 0;
};

ColouredHost swap_colours(const ColouredHost& host);

}  // namespace tonal
