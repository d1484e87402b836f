#include "tonal/reference.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tonal/errors.hpp"
#include "tonal/patterns.hpp"

namespace tonal {

std::optional<Embedding> naive_find_embedding(const ColouredHost& host,
                                              const PatternColouring& pattern) {
    const Graph& g = pattern.graph();
    const int k = g.vertex_count();
    const int n = host.order();
    if (k > n) throw std::invalid_argument("pattern has more vertices than the host");

    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);

    auto extend = [&](auto&& self, int v) -> bool {
        if (v == k) return true;
        for (int h = 0; h < n; ++h) {
            if (used[h]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                int idx = g.edge_index(u, v);
                if (idx >= 0 && host.colour(map[u], h) != pattern.colour(idx)) ok = false;
            }
            if (!ok) continue;
            map[v] = h;
            used[h] = 1;
            if (self(self, v + 1)) return true;
            used[h] = 0;
            map[v] = -1;
        }
        return false;
    };

    if (!extend(extend, 0)) return std::nullopt;
    return Embedding{map};
}

ObstructionReport verify_obstructions_reference(const ColouredHost& host) {
    const int n = host.order();
    ObstructionReport report;
    for (int i = 0; i < n && !report.k3_two_red_found; ++i)
        for (int j = i + 1; j < n && !report.k3_two_red_found; ++j)
            for (int k = j + 1; k < n; ++k) {
                int reds = int(host.is_red(i, j)) + int(host.is_red(i, k)) +
                           int(host.is_red(j, k));
                if (reds == 2) {
                    report.k3_two_red_found = true;
                    break;
                }
            }
    for (int a = 0; a < n && !report.rbr_p4_found; ++a)
        for (int b = 0; b < n && !report.rbr_p4_found; ++b)
            for (int c = 0; c < n && !report.rbr_p4_found; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (host.is_red(a, b) && !host.is_red(b, c) && host.is_red(c, d)) {
                        report.rbr_p4_found = true;
                        break;
                    }
                }
    return report;
}

std::vector<CanonicalSize> canonical_sizes_reference(long long limit) {
    std::vector<CanonicalSize> out;
    for (long long n = 2; n <= limit; ++n)
        for (long long r = 2; r < n; ++r)
            if (2 * r * (r - 1) == n * (n - 1))
                out.push_back({n, r, 2 * r - 1, 2 * n - 1});
    return out;
}

ExtremalResult exhaustive_reference(int n, const Graph& g, CoverageLevel level) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("tones are undefined for edgeless graphs");
    if (g.vertex_count() > n)
        throw std::invalid_argument("pattern graph has more vertices than the host");
    const int E = n * (n - 1) / 2;
    if (E > 30)
        throw size_limit_error("exhaustive_reference is limited to n(n-1)/2 <= 30");

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});

    auto classes = enumerate_pattern_classes(g);
    const int e = g.edge_count();

    auto fails = [&](const ColouredHost& host) {
        if (level == CoverageLevel::Class) {
            for (const auto& c : classes)
                if (!naive_find_embedding(host, c.representative)) return true;
            return false;
        }
        for (int r = 0; r <= e; ++r) {
            bool covered = false;
            for (const auto& c : classes)
                if (c.tone.red == r && naive_find_embedding(host, c.representative)) {
                    covered = true;
                    break;
                }
            if (!covered) return true;
        }
        return false;
    };

    auto host_of = [&](uint64_t mask) {
        std::vector<Edge> red;
        for (int i = 0; i < E; ++i)
            if ((mask >> (E - 1 - i)) & 1) red.push_back(edges[i]);
        return ColouredHost(n, red);
    };

    long long best_value = -1;
    uint64_t best_mask = 0;
    const uint64_t total = uint64_t{1} << E;
    for (uint64_t mask = 0; mask < total; ++mask) {
        int red = std::popcount(mask);
        long long value = std::min<long long>(red, E - red);
        if (value <= best_value) continue;
        if (fails(host_of(mask))) {
            best_value = value;
            best_mask = mask;
        }
    }

    return ExtremalResult{best_value, best_value == E / 2, level, host_of(best_mask),
                          best_mask, total};
}

}  // namespace tonal
