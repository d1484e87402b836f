#include "tonal/extremal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tonal/errors.hpp"

namespace tonal {

long long ot_star_formula(long long n, long long k) {
    if (k < 1) throw std::domain_error("ot_star_formula needs k >= 1");
    if (n < 4 * k)
        throw std::domain_error("ot_star_formula needs n >= 4k (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
    if (k <= 3) return (k - 1) * n / 2;
    return (k - 2) * n - k * (k - 3) / 2 - 1;
}

long long tot_star_forest_bound(long long n, const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        throw std::invalid_argument("tot_star_forest_bound needs at least one part");
    long long sum = 0;
    for (std::size_t j = 0; j < part_sizes.size(); ++j) {
        if (part_sizes[j] < 1) throw std::invalid_argument("star part sizes must be positive");
        if (j > 0 && part_sizes[j] > part_sizes[j - 1])
            throw std::invalid_argument("star part sizes must be non-increasing");
        sum += part_sizes[j];
    }
    long long q = (long long)part_sizes.size();
    if (n < 4 * (sum + q - 1))
        throw std::domain_error("bound needs n >= 4(p_1+...+p_q+q-1) = " +
                                std::to_string(4 * (sum + q - 1)) + " (n = " +
                                std::to_string(n) + ")");
    return (sum + q - 2) * n;
}

namespace {

struct EnumSetup {
    int n = 0;
    int num_edges = 0;
    std::vector<Edge> edges;            // lex order; edge i <-> bit (E-1-i)
    std::vector<uint64_t> incidence;    // per vertex, over counter bit positions

    // Single-star fast path: coverage of K_{1,p} needs, for every r <= p,
    // a vertex with red degree >= r and blue degree >= p-r. Tone and class
    // coverage coincide for stars.
    bool single_star = false;
    int star_p = 0;

    // Generic path: class representatives grouped by tone, in class order.
    const Graph* g = nullptr;
    std::vector<PatternClass> classes;
    std::vector<std::vector<int>> tone_members;  // per tone r: class indices
    CoverageLevel level = CoverageLevel::Tone;
};

ColouredHost host_from_mask(const EnumSetup& s, uint64_t mask) {
    std::vector<Edge> red;
    for (int i = 0; i < s.num_edges; ++i)
        if ((mask >> (s.num_edges - 1 - i)) & 1) red.push_back(s.edges[i]);
    return ColouredHost(s.n, red);
}

bool mask_fails_coverage(const EnumSetup& s, uint64_t mask) {
    if (s.single_star) {
        const int p = s.star_p;
        int deg[64];
        for (int v = 0; v < s.n; ++v) deg[v] = std::popcount(s.incidence[v] & mask);
        for (int r = 0; r <= p; ++r) {
            bool covered = false;
            for (int v = 0; v < s.n && !covered; ++v)
                covered = deg[v] >= r && s.n - 1 - deg[v] >= p - r;
            if (!covered) return true;
        }
        return false;
    }

    ColouredHost host = host_from_mask(s, mask);
    if (s.level == CoverageLevel::Class) {
        for (const auto& c : s.classes)
            if (!find_embedding(host, c.representative)) return true;
        return false;
    }
    for (const auto& members : s.tone_members) {
        bool covered = false;
        for (int idx : members)
            if (find_embedding(host, s.classes[idx].representative)) {
                covered = true;
                break;
            }
        if (!covered) return true;
    }
    return false;
}

struct ShardBest {
    long long value = -1;
    uint64_t mask = 0;
};

ExtremalResult exact_search(int n, const Graph& g, CoverageLevel level,
                            const SearchOptions& opts) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("tones are undefined for edgeless graphs");
    if (g.vertex_count() > n)
        throw std::invalid_argument("pattern graph has more vertices than the host");

    const int E = n * (n - 1) / 2;
    if (E > 30 && !opts.force)
        throw size_limit_error("exhaustive search over 2^" + std::to_string(E) +
                               " colourings exceeds the n(n-1)/2 <= 30 guard; "
                               "pass force to override");
    if (E > 62)
        throw size_limit_error("exhaustive search needs n(n-1)/2 <= 62; got " +
                               std::to_string(E));

    EnumSetup s;
    s.n = n;
    s.num_edges = E;
    s.level = level;
    s.g = &g;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) s.edges.push_back({u, v});
    s.incidence.assign(n, 0);
    for (int i = 0; i < E; ++i) {
        s.incidence[s.edges[i].first] |= uint64_t{1} << (E - 1 - i);
        s.incidence[s.edges[i].second] |= uint64_t{1} << (E - 1 - i);
    }

    auto parts = is_star_forest(g) ? star_forest_parts(g) : std::vector<int>{};
    bool isolated_free = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) isolated_free = false;
    if (parts.size() == 1 && isolated_free) {
        s.single_star = true;
        s.star_p = parts[0];
    } else {
        s.classes = enumerate_pattern_classes(g);
        s.tone_members.assign(std::size_t(g.edge_count()) + 1, {});
        for (std::size_t i = 0; i < s.classes.size(); ++i)
            s.tone_members[std::size_t(s.classes[i].tone.red)].push_back(int(i));
    }

    const uint64_t lo = opts.prune ? uint64_t{1} << (E - 1) : 0;
    const uint64_t hi = uint64_t{1} << E;

    // Contiguous shards over the counter; a shard is a fixed colour prefix.
    int shard_bits = 0;
    while (shard_bits < 10 && (uint64_t{1} << shard_bits) * 4096 < hi - lo) ++shard_bits;
    const uint64_t num_shards = uint64_t{1} << shard_bits;
    const uint64_t width = (hi - lo) >> shard_bits;
    std::vector<ShardBest> best(num_shards);

#ifdef _OPENMP
    const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long shard = 0; shard < (long long)num_shards; ++shard) {
        ShardBest local;
        const uint64_t begin = lo + uint64_t(shard) * width;
        const uint64_t end = begin + width;
        for (uint64_t mask = begin; mask < end; ++mask) {
            int red = std::popcount(mask);
            long long value = std::min<long long>(red, E - red);
            if (value <= local.value) continue;
            if (mask_fails_coverage(s, mask)) {
                local.value = value;
                local.mask = mask;
            }
        }
        best[std::size_t(shard)] = local;
    }

    ShardBest overall;  // earliest shard wins ties: first failing host in counter order
    for (const ShardBest& b : best)
        if (b.value > overall.value) overall = b;

    ExtremalResult result{overall.value, overall.value == E / 2, level,
                          host_from_mask(s, overall.mask), overall.mask, hi - lo};
    return result;
}

}  // namespace

ExtremalResult ot_exact(int n, const Graph& g, const SearchOptions& opts) {
    return exact_search(n, g, CoverageLevel::Tone, opts);
}

ExtremalResult tot_exact(int n, const Graph& g, const SearchOptions& opts) {
    return exact_search(n, g, CoverageLevel::Class, opts);
}

}  // namespace tonal
