#include "tonal/embed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tonal {

bool validate_embedding(const ColouredHost& host, const PatternColouring& pattern,
                        const Embedding& emb) {
    const Graph& g = pattern.graph();
    if (int(emb.map.size()) != g.vertex_count()) return false;
    std::vector<char> used(host.order(), 0);
    for (int h : emb.map) {
        if (h < 0 || h >= host.order() || used[h]) return false;
        used[h] = 1;
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& [u, v] = g.edges()[i];
        if (host.colour(emb.map[u], emb.map[v]) != pattern.colour(i)) return false;
    }
    return true;
}

namespace {

// Decreasing degree, ties towards vertices adjacent to already-ordered ones,
// then lowest index.
std::vector<int> search_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        bool best_touch = false;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool touch = false;
            for (int u : order)
                if (g.adjacent(u, v)) {
                    touch = true;
                    break;
                }
            if (best < 0 || g.degree(v) > g.degree(best) ||
                (g.degree(v) == g.degree(best) && touch && !best_touch)) {
                best = v;
                best_touch = touch;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

}  // namespace

std::optional<Embedding> find_embedding(const ColouredHost& host,
                                        const PatternColouring& pattern) {
    const Graph& g = pattern.graph();
    const int k = g.vertex_count();
    const int n = host.order();
    if (k > n)
        throw std::invalid_argument("pattern has more vertices than the host");

    std::vector<int> order = search_order(g);

    // Host vertices whose red/blue degrees cover each pattern vertex's needs.
    std::vector<Bitset64> feasible(k, Bitset64(n));
    for (int u = 0; u < k; ++u)
        for (int h = 0; h < n; ++h)
            if (host.red_degree(h) >= pattern.red_degree(u) &&
                host.blue_degree(h) >= pattern.blue_degree(u))
                feasible[u].set(h);

    std::vector<int> map(k, -1);
    Bitset64 used(n);
    // One candidate buffer per depth: the recursion below must not clobber a
    // set an outer frame is still iterating.
    std::vector<Bitset64> cand_at(k, Bitset64(n));

    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == k) return true;
        const int u = order[depth];
        Bitset64& cand = cand_at[depth];
        cand = feasible[u];
        for (int d = 0; d < depth; ++d) {
            const int w = order[d];
            if (!g.adjacent(u, w)) continue;
            cand &= pattern.colour(u, w) == Colour::Red ? host.red_row(map[w])
                                                        : host.blue_row(map[w]);
        }
        bool found = false;
        cand.for_each_set([&](int h) {
            if (found || used.test(h)) return;
            used.set(h);
            map[u] = h;
            if (self(self, depth + 1)) {
                found = true;
                return;
            }
            used.reset(h);
            map[u] = -1;
        });
        return found;
    };

    if (!backtrack(backtrack, 0)) return std::nullopt;
    return Embedding{map};
}

namespace {

void check_coverage_args(const ColouredHost& host, const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("tones are undefined for edgeless graphs");
    if (g.vertex_count() > host.order())
        throw std::invalid_argument("pattern graph has more vertices than the host");
}

}  // namespace

CoverageReport tone_coverage(const ColouredHost& host, const Graph& g) {
    check_coverage_args(host, g);
    auto classes = enumerate_pattern_classes(g);
    const int e = g.edge_count();
    CoverageReport report{CoverageLevel::Tone, {}};
    for (int r = e; r >= 0; --r) {
        CoverageTarget target{Tone{r, e - r}, -1, classes.front().representative, std::nullopt};
        bool have_rep = false;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].tone.red != r) continue;
            if (!have_rep) {
                target.representative = classes[i].representative;
                target.class_index = int(i);
                have_rep = true;
            }
            if (auto emb = find_embedding(host, classes[i].representative)) {
                target.representative = classes[i].representative;
                target.class_index = int(i);
                target.embedding = std::move(emb);
                break;
            }
        }
        report.targets.push_back(std::move(target));
    }
    return report;
}

CoverageReport class_coverage(const ColouredHost& host, const Graph& g) {
    check_coverage_args(host, g);
    auto classes = enumerate_pattern_classes(g);
    CoverageReport report{CoverageLevel::Class, {}};
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CoverageTarget target{classes[i].tone, int(i), classes[i].representative,
                              find_embedding(host, classes[i].representative)};
        report.targets.push_back(std::move(target));
    }
    return report;
}

namespace {

struct StarComponent {
    int centre = -1;
    std::vector<int> red_leaves, blue_leaves;  // pattern vertices, ascending
    int p = 0;
};

long long residual_red(const ColouredHost& host, const Bitset64& remaining) {
    long long total = 0;
    for (int v = 0; v < host.order(); ++v)
        if (remaining.test(v)) total += host.red_row(v).count_and(remaining);
    return total / 2;
}

long long residual_blue(const ColouredHost& host, const Bitset64& remaining) {
    long long total = 0;
    for (int v = 0; v < host.order(); ++v)
        if (remaining.test(v)) total += host.blue_row(v).count_and(remaining);
    return total / 2;
}

}  // namespace

Embedding greedy_star_forest_embed(const ColouredHost& host, const PatternColouring& target) {
    const Graph& g = target.graph();
    std::vector<int> parts = star_forest_parts(g);  // throws when not a star forest

    // Decompose into star components and isolated vertices.
    std::vector<StarComponent> stars;
    std::vector<int> isolated;
    {
        std::vector<char> assigned(g.vertex_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (assigned[v]) continue;
            if (g.degree(v) == 0) {
                isolated.push_back(v);
                assigned[v] = 1;
                continue;
            }
            // The component's centre: its unique vertex of degree >= 2, or the
            // lower-indexed endpoint of a K_2.
            int centre = v;
            g.neighbours(v).for_each_set([&](int u) {
                if (g.degree(u) >= 2) centre = u;
            });
            if (g.degree(v) >= 2) centre = v;
            StarComponent comp;
            comp.centre = centre;
            comp.p = g.degree(centre);
            assigned[centre] = 1;
            g.neighbours(centre).for_each_set([&](int leaf) {
                assigned[leaf] = 1;
                (target.colour(centre, leaf) == Colour::Red ? comp.red_leaves
                                                            : comp.blue_leaves)
                    .push_back(leaf);
            });
            stars.push_back(std::move(comp));
        }
    }

    long long sum_p = std::accumulate(parts.begin(), parts.end(), 0LL);
    long long q = (long long)parts.size();
    const long long n = host.order();
    if (g.vertex_count() > host.order())
        throw std::invalid_argument("target has more vertices than the host");
    if (q > 0 && n < 4 * (sum_p + q - 1))
        throw std::domain_error("host order violates n >= 4(p_1+...+p_q+q-1) = " +
                                std::to_string(4 * (sum_p + q - 1)) + " (n = " +
                                std::to_string(n) + ")");
    if (q > 0 && host.min_count() <= (sum_p + q - 2) * n)
        throw std::domain_error("host colour balance violates min{|R|,|B|} > (p_1+...+p_q+q-2)n = " +
                                std::to_string((sum_p + q - 2) * n) + " (min = " +
                                std::to_string(host.min_count()) + ")");

    // Smallest star first; ties towards the earlier component.
    std::stable_sort(stars.begin(), stars.end(),
                     [](const StarComponent& a, const StarComponent& b) { return a.p < b.p; });

    std::vector<int> map(g.vertex_count(), -1);
    Bitset64 remaining(host.order());
    remaining.set_all();
    long long res_min = host.min_count();
    int res_n = host.order();

    for (const StarComponent& comp : stars) {
        const int need_red = int(comp.red_leaves.size());
        const int need_blue = int(comp.blue_leaves.size());

        int centre = -1, centre_score = -1;
        for (int h = 0; h < host.order(); ++h) {
            if (!remaining.test(h)) continue;
            int rd = host.red_row(h).count_and(remaining);
            int bd = host.blue_row(h).count_and(remaining);
            if (rd < need_red || bd < need_blue) continue;
            int score = std::min(rd, bd);
            if (score > centre_score) {
                centre = h;
                centre_score = score;
            }
        }
        if (centre < 0)
            throw std::logic_error("no feasible centre for K_{1," + std::to_string(comp.p) +
                                   "} under valid preconditions");

        map[comp.centre] = centre;
        remaining.reset(centre);
        Bitset64 red_avail = host.red_row(centre);
        red_avail &= remaining;
        Bitset64 blue_avail = host.blue_row(centre);
        blue_avail &= remaining;
        std::size_t taken_red = 0, taken_blue = 0;
        red_avail.for_each_set([&](int h) {
            if (taken_red < comp.red_leaves.size()) {
                map[comp.red_leaves[taken_red++]] = h;
                remaining.reset(h);
            }
        });
        blue_avail.for_each_set([&](int h) {
            if (taken_blue < comp.blue_leaves.size()) {
                map[comp.blue_leaves[taken_blue++]] = h;
                remaining.reset(h);
            }
        });
        if (taken_red != comp.red_leaves.size() || taken_blue != comp.blue_leaves.size())
            throw std::logic_error("feasible centre ran out of leaf slots");

        // The deletion of p+1 vertices removes at most (p+1) * (old order)
        // edges of either colour.
        long long new_min =
            std::min(residual_red(host, remaining), residual_blue(host, remaining));
        if (new_min < res_min - (comp.p + 1) * (long long)res_n)
            throw std::logic_error("colour balance dropped faster than the deletion bound");
        res_min = new_min;
        res_n -= comp.p + 1;
    }

    for (int v : isolated) {
        int h = remaining.first_set();
        if (h < 0) throw std::logic_error("ran out of host vertices for isolated pattern vertices");
        map[v] = h;
        remaining.reset(h);
    }

    Embedding emb{std::move(map)};
    if (!validate_embedding(host, target, emb))
        throw std::logic_error("greedy star-forest embedding failed validation");
    return emb;
}

}  // namespace tonal
