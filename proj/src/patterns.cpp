#include "tonal/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tonal/errors.hpp"

namespace tonal {

namespace {

constexpr int kPermutationGuard = 10;

void check_vertex_guard(const Graph& g, const char* op) {
    if (g.vertex_count() > kPermutationGuard)
        throw size_limit_error(std::string(op) + " is brute-force over vertex permutations and is guarded at " +
                               std::to_string(kPermutationGuard) + " vertices; got " +
                               std::to_string(g.vertex_count()));
}

}  // namespace

std::vector<VertexPermutation> automorphisms(const Graph& g) {
    check_vertex_guard(g, "automorphisms");
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexPermutation> out;
    do {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (!g.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<uint8_t> canonical_code(const PatternColouring& pc) {
    check_vertex_guard(pc.graph(), "canonical_code");
    const Graph& g = pc.graph();
    const int n = g.vertex_count();

    // Symbol for the (possibly absent) edge {a,b}.
    auto category = [&](int a, int b) -> uint8_t {
        int idx = g.edge_index(a, b);
        if (idx < 0) return 0;
        return pc.colour(idx) == Colour::Red ? 1 : 2;
    };

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint8_t> best, cur;
    best.reserve(std::size_t(n) * (n - 1) / 2);
    cur.reserve(best.capacity());
    do {
        cur.clear();
        bool worse = false;
        std::size_t k = 0;
        for (int i = 0; i < n && !worse; ++i)
            for (int j = i + 1; j < n; ++j, ++k) {
                uint8_t c = category(perm[i], perm[j]);
                if (!best.empty()) {
                    if (c > best[k]) {
                        worse = true;
                        break;
                    }
                    if (c < best[k]) {
                        // Strictly better: finish without further compares.
                        cur.push_back(c);
                        for (int i2 = i; i2 < n; ++i2)
                            for (int j2 = (i2 == i ? j + 1 : i2 + 1); j2 < n; ++j2)
                                cur.push_back(category(perm[i2], perm[j2]));
                        best = cur;
                        worse = true;  // stop outer loops; best already updated
                        break;
                    }
                }
                cur.push_back(c);
            }
        if (best.empty()) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool patterns_equivalent(const PatternColouring& a, const PatternColouring& b) {
    if (a.graph().vertex_count() != b.graph().vertex_count()) return false;
    if (a.graph().edge_count() != b.graph().edge_count()) return false;
    if (a.red_count() != b.red_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

bool hosts_equivalent(const ColouredHost& a, const ColouredHost& b) {
    if (a.order() != b.order()) return false;
    return patterns_equivalent(a.as_pattern(), b.as_pattern());
}

namespace {

// Action of a vertex permutation on edge indices: edge i maps to
// edge_perm[i].
std::vector<int> edge_permutation(const Graph& g, const VertexPermutation& perm) {
    std::vector<int> ep(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& [u, v] = g.edges()[i];
        ep[i] = g.edge_index(perm[u], perm[v]);
    }
    return ep;
}

int cycle_count(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = std::size_t(perm[j])) seen[j] = 1;
    }
    return cycles;
}

}  // namespace

long long burnside_class_count(const Graph& g) {
    auto auts = automorphisms(g);
    long long total = 0;
    for (const auto& perm : auts) {
        auto ep = edge_permutation(g, perm);
        total += 1LL << cycle_count(ep);
    }
    return total / (long long)auts.size();
}

std::vector<PatternClass> enumerate_pattern_classes(const Graph& g) {
    check_vertex_guard(g, "enumerate_pattern_classes");
    const int e = g.edge_count();
    if (e > 20)
        throw size_limit_error("enumerate_pattern_classes is guarded at 20 edges; got " +
                               std::to_string(e));

    auto auts = automorphisms(g);
    std::vector<std::vector<int>> edge_perms;
    for (const auto& perm : auts) edge_perms.push_back(edge_permutation(g, perm));
    std::sort(edge_perms.begin(), edge_perms.end());
    edge_perms.erase(std::unique(edge_perms.begin(), edge_perms.end()), edge_perms.end());

    auto apply = [&](const std::vector<int>& ep, uint32_t mask) {
        uint32_t out = 0;
        while (mask) {
            int i = std::countr_zero(mask);
            out |= uint32_t{1} << ep[i];
            mask &= mask - 1;
        }
        return out;
    };

    const uint32_t total = uint32_t{1} << e;
    std::vector<char> visited(total, 0);
    std::vector<PatternClass> classes;
    std::vector<uint32_t> stack;
    for (uint32_t m = 0; m < total; ++m) {
        if (visited[m]) continue;
        // m is the minimal member of a fresh orbit.
        long long orbit = 0;
        stack.assign(1, m);
        visited[m] = 1;
        while (!stack.empty()) {
            uint32_t cur = stack.back();
            stack.pop_back();
            ++orbit;
            for (const auto& ep : edge_perms) {
                uint32_t img = apply(ep, cur);
                if (!visited[img]) {
                    visited[img] = 1;
                    stack.push_back(img);
                }
            }
        }
        int red = std::popcount(m);
        classes.push_back({PatternColouring::from_red_mask(g, m), Tone{red, e - red}, orbit});
    }

    std::sort(classes.begin(), classes.end(), [](const PatternClass& a, const PatternClass& b) {
        if (a.tone.red != b.tone.red) return a.tone.red > b.tone.red;
        return a.representative.red_mask() < b.representative.red_mask();
    });

    long long orbit_sum = 0;
    for (const auto& c : classes) orbit_sum += c.orbit_size;
    if (orbit_sum != (long long)total)
        throw std::logic_error("pattern class orbit sizes do not cover the colour space");
    if ((long long)classes.size() != burnside_class_count(g))
        throw std::logic_error("pattern class count disagrees with the Burnside count");
    return classes;
}

namespace {

// Vertices of the component containing start.
std::vector<int> component_of(const Graph& g, int start, std::vector<char>& seen) {
    std::vector<int> comp, queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        comp.push_back(v);
        g.neighbours(v).for_each_set([&](int u) {
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
        });
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

}  // namespace

bool is_star_forest(const Graph& g) {
    // A connected component is a star iff at most one of its vertices has
    // degree >= 2.
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        auto comp = component_of(g, v, seen);
        int heavy = 0;
        for (int u : comp)
            if (g.degree(u) >= 2) ++heavy;
        if (heavy > 1) return false;
    }
    return true;
}

std::vector<int> star_forest_parts(const Graph& g) {
    if (!is_star_forest(g)) throw std::invalid_argument("graph is not a star forest");
    std::vector<int> parts;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        auto comp = component_of(g, v, seen);
        if (comp.size() >= 2) parts.push_back(int(comp.size()) - 1);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::optional<PatternColouring> witness_pattern(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("witness_pattern needs at least one edge");
    if (is_star_forest(g)) return std::nullopt;

    const int n = g.vertex_count();
    int blue_edge = -1;

    // A triangle anywhere: blue its lexicographically first edge.
    for (int i = 0; i < n && blue_edge < 0; ++i)
        for (int j = i + 1; j < n && blue_edge < 0; ++j) {
            if (!g.adjacent(i, j)) continue;
            Bitset64 common(n);
            common.assign_and(g.neighbours(i), g.neighbours(j));
            if (common.any()) blue_edge = g.edge_index(i, j);
        }

    // Otherwise a P4 a-b-c-d: blue its middle edge. Stars contain neither a
    // triangle nor a P4, so any hit lies in a non-star component.
    if (blue_edge < 0) {
        for (int idx = 0; idx < g.edge_count() && blue_edge < 0; ++idx) {
            const auto& [b, c] = g.edges()[idx];
            Bitset64 nb = g.neighbours(b);
            nb.reset(c);
            Bitset64 nc = g.neighbours(c);
            nc.reset(b);
            if (nb.none() || nc.none()) continue;
            if (nb == nc && nb.count() == 1) continue;
            blue_edge = idx;
        }
    }

    if (blue_edge < 0)
        throw std::logic_error("non-star-forest graph without triangle or P4");

    std::vector<Colour> colours(g.edge_count(), Colour::Red);
    colours[blue_edge] = Colour::Blue;
    return PatternColouring(g, std::move(colours));
}

}  // namespace tonal
