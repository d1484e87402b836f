#include "tonal/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tonal {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} out of range for n=" +
                                        std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("duplicate edge {" + std::to_string(edges[i].first) +
                                        "," + std::to_string(edges[i].second) + "}");
    edges_ = std::move(edges);
    adj_.assign(n_, Bitset64(n_));
    for (const auto& [u, v] : edges_) {
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return int(it - edges_.begin());
}

Graph star_forest(const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        throw std::invalid_argument("star forest needs at least one part");
    for (std::size_t j = 0; j < part_sizes.size(); ++j) {
        if (part_sizes[j] < 1)
            throw std::invalid_argument("star part sizes must be positive");
        if (j > 0 && part_sizes[j] > part_sizes[j - 1])
            throw std::invalid_argument("star part sizes must be non-increasing");
    }
    int n = 0;
    for (int p : part_sizes) n += p + 1;
    std::vector<Edge> edges;
    int base = 0;
    for (int p : part_sizes) {
        for (int i = 1; i <= p; ++i) edges.push_back({base, base + i});
        base += p + 1;
    }
    return Graph(n, std::move(edges));
}

PatternColouring::PatternColouring(Graph graph, std::vector<Colour> colours)
    : graph_(std::move(graph)), colours_(std::move(colours)) {
    if (int(colours_.size()) != graph_.edge_count())
        throw std::invalid_argument("colouring must label every edge exactly once");
    red_deg_.assign(graph_.vertex_count(), 0);
    blue_deg_.assign(graph_.vertex_count(), 0);
    for (int i = 0; i < graph_.edge_count(); ++i) {
        const auto& [u, v] = graph_.edges()[i];
        if (colours_[i] == Colour::Red) {
            ++red_;
            ++red_deg_[u];
            ++red_deg_[v];
        } else {
            ++blue_;
            ++blue_deg_[u];
            ++blue_deg_[v];
        }
    }
}

Colour PatternColouring::colour(int u, int v) const {
    int idx = graph_.edge_index(u, v);
    if (idx < 0)
        throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                    "} is not an edge");
    return colours_[idx];
}

uint64_t PatternColouring::red_mask() const {
    if (graph_.edge_count() > 63)
        throw std::invalid_argument("red_mask requires at most 63 edges");
    uint64_t m = 0;
    for (int i = 0; i < graph_.edge_count(); ++i)
        if (colours_[i] == Colour::Red) m |= uint64_t{1} << i;
    return m;
}

PatternColouring PatternColouring::from_red_mask(Graph graph, uint64_t mask) {
    std::vector<Colour> colours(graph.edge_count());
    for (int i = 0; i < graph.edge_count(); ++i)
        colours[i] = (mask >> i) & 1 ? Colour::Red : Colour::Blue;
    return PatternColouring(std::move(graph), std::move(colours));
}

PatternColouring swap_colours(const PatternColouring& pc) {
    std::vector<Colour> colours(pc.colours());
    for (auto& c : colours) c = opposite(c);
    return PatternColouring(pc.graph(), std::move(colours));
}

ColouredHost::ColouredHost(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("host order must be non-negative");
    red_.assign(n_, Bitset64(n_));
    blue_.assign(n_, Bitset64(n_));
}

ColouredHost::ColouredHost(int n, const std::vector<Edge>& red_edges) : ColouredHost(n) {
    for (auto [u, v] : red_edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("red edge out of range");
        red_[u].set(v);
        red_[v].set(u);
    }
    finish();
}

ColouredHost ColouredHost::from_pattern(const PatternColouring& pc) {
    const Graph& g = pc.graph();
    const long long want = (long long)g.vertex_count() * (g.vertex_count() - 1) / 2;
    if (g.edge_count() != want)
        throw std::invalid_argument("host colouring must cover all " + std::to_string(want) +
                                    " edges of the complete graph");
    ColouredHost host(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        if (pc.colour(i) == Colour::Red) {
            const auto& [u, v] = g.edges()[i];
            host.red_[u].set(v);
            host.red_[v].set(u);
        }
    }
    host.finish();
    return host;
}

void ColouredHost::finish() {
    red_deg_.assign(n_, 0);
    blue_deg_.assign(n_, 0);
    red_count_ = blue_count_ = 0;
    for (int v = 0; v < n_; ++v) {
        blue_[v] = red_[v];
        for (int u = 0; u < n_; ++u)
            if (u != v) {
                if (red_[v].test(u))
                    blue_[v].reset(u);
                else
                    blue_[v].set(u);
            }
        red_deg_[v] = red_[v].count();
        blue_deg_[v] = blue_[v].count();
        red_count_ += red_deg_[v];
        blue_count_ += blue_deg_[v];
    }
    red_count_ /= 2;
    blue_count_ /= 2;
}

Colour ColouredHost::colour(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("not a host edge");
    return red_[u].test(v) ? Colour::Red : Colour::Blue;
}

ColouredHost ColouredHost::flip_edge(int u, int v) const {
    ColouredHost host(*this);
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("not a host edge");
    if (host.red_[u].test(v)) {
        host.red_[u].reset(v);
        host.red_[v].reset(u);
    } else {
        host.red_[u].set(v);
        host.red_[v].set(u);
    }
    host.finish();
    return host;
}

PatternColouring ColouredHost::as_pattern() const {
    Graph g = Graph::complete(n_);
    std::vector<Colour> colours;
    colours.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) colours.push_back(colour(u, v));
    return PatternColouring(std::move(g), std::move(colours));
}

ColouredHost swap_colours(const ColouredHost& host) {
    std::vector<Edge> red_edges;
    for (int u = 0; u < host.order(); ++u)
        host.blue_row(u).for_each_set([&](int v) {
            if (u < v) red_edges.push_back({u, v});
        });
    return ColouredHost(host.order(), red_edges);
}

}  // namespace tonal
