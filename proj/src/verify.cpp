#include "tonal/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "tonal/canonical.hpp"
#include "tonal/embed.hpp"
#include "tonal/extremal.hpp"
#include "tonal/patterns.hpp"
#include "tonal/reference.hpp"

namespace tonal {

namespace {

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph graph_from_mask(int n, uint32_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// Uniform host colouring; bit i of the stream colours edge i red.
ColouredHost random_host(int n, std::mt19937_64& rng) {
    std::vector<Edge> red;
    uint64_t bits = 0;
    int have = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (have == 0) {
                bits = rng();
                have = 64;
            }
            if (bits & 1) red.push_back({u, v});
            bits >>= 1;
            --have;
        }
    return ColouredHost(n, red);
}

struct Runner {
    const VerifyOptions& opts;
    VerifyReport report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    void run(int id, const std::string& name, const std::function<std::string()>& body) {
        ClaimResult result{id, name, false, false, "", 0.0};
        if (elapsed() > opts.budget_seconds) {
            result.skipped = true;
            result.detail = "skipped: budget exhausted";
            report.incomplete = true;
        } else {
            auto t0 = std::chrono::steady_clock::now();
            try {
                result.detail = body();
                result.pass = true;
            } catch (const std::exception& e) {
                result.pass = false;
                result.detail = e.what();
            }
            result.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        if (opts.on_claim) opts.on_claim(result);
        report.claims.push_back(std::move(result));
    }
};

void expect(bool cond, const std::string& message) {
    if (!cond) throw std::runtime_error(message);
}

std::string claim_canonical_family(const VerifyOptions& opts) {
    auto got = canonical_sizes(opts.canonical_limit);
    auto want = canonical_sizes_reference(opts.canonical_limit);
    expect(got == want, "recurrence disagrees with the brute-force scan");
    std::vector<std::pair<long long, long long>> head = {{4, 3}, {21, 15}, {120, 85}, {697, 493}};
    for (std::size_t i = 0; i < head.size() && i < got.size(); ++i)
        expect(got[i].n == head[i].first && got[i].r == head[i].second,
               "unexpected entry at position " + std::to_string(i));
    expect(opts.canonical_limit < 697 || got.size() >= 4, "missing small canonical sizes");
    std::ostringstream out;
    out << got.size() << " sizes up to " << opts.canonical_limit << " match the brute-force scan";
    return out.str();
}

std::string claim_obstructions(const VerifyOptions& opts) {
    std::ostringstream out;
    for (long long n : {4, 21, 120}) {
        auto size = canonical_size_for(n);
        expect(size.has_value(), "no canonical size at n = " + std::to_string(n));
        ColouredHost host = canonical_colouring(*size);
        if (opts.corrupt_canonical) host = host.flip_edge(0, 1);
        expect(host.red_count() == host.blue_count(),
               "|R| != |B| at n = " + std::to_string(n));
        auto obs = verify_obstructions(host);
        expect(!obs.rbr_p4_found, "red-blue-red P4 found at n = " + std::to_string(n));
        expect(!obs.k3_two_red_found, "2-red triangle found at n = " + std::to_string(n));
        out << "n=" << n << " |R|=|B|=" << host.red_count() << " clean; ";
    }
    return out.str();
}

std::string claim_star_formula(const VerifyOptions& opts) {
    SearchOptions search{false, true, opts.workers};
    Graph k2 = star_forest({1});
    for (int n : {4, 5}) {
        auto r = ot_exact(n, k2, search);
        expect(r.value == 0, "ot(" + std::to_string(n) + ", K2) != 0");
    }
    Graph k12 = star_forest({2});
    auto r = ot_exact(8, k12, search);
    long long formula = ot_star_formula(8, 2);
    expect(r.value == 4, "ot(8, K_{1,2}) = " + std::to_string(r.value) + ", expected 4");
    expect(formula == 4, "closed form at (8,2) is not 4");
    std::ostringstream out;
    out << "ot(8,K_{1,2}) = 4 = floor(n/2) over " << r.hosts_scanned
        << " pruned colourings; ot(4,K2) = ot(5,K2) = 0";
    return out.str();
}

std::string claim_p4_k3(const VerifyOptions& opts) {
    // The 64-colouring enumerations, unpruned.
    SearchOptions search{false, false, opts.workers};
    ColouredHost canonical4 = canonical_colouring(*canonical_size_for(4));
    std::ostringstream out;
    struct Case {
        const char* name;
        Graph g;
    };
    for (const auto& [name, g] : {Case{"P4", path_graph(4)}, Case{"K3", Graph::complete(3)}}) {
        auto r = tot_exact(4, g, search);
        expect(r.value == 3, std::string(name) + ": value != 3");
        expect(r.saturated, std::string(name) + ": not saturated");
        expect(r.hosts_scanned == 64, std::string(name) + ": enumeration was not the full 64");
        expect(!class_coverage(r.witness, g).complete(),
               std::string(name) + ": witness unexpectedly covers all classes");
        expect(hosts_equivalent(r.witness, canonical4),
               std::string(name) + ": witness is not canonical(4,3) up to relabelling");
        out << "tot(4," << name << ") = 3 saturated, witness ~ canonical(4,3); ";
    }
    return out.str();
}

std::string claim_stars(const VerifyOptions& opts) {
    SearchOptions search{false, true, opts.workers};
    int checked = 0;
    for (int p = 1; p <= 3; ++p) {
        Graph star = star_forest({p});
        for (int n = p + 1; n <= 6; ++n) {
            auto tot = tot_exact(n, star, search);
            auto ot = ot_exact(n, star, search);
            expect(tot.value == ot.value, "tot != ot for K_{1," + std::to_string(p) +
                                              "} at n = " + std::to_string(n));
            ++checked;
        }
    }
    return "tot = ot on " + std::to_string(checked) + " (n, K_{1,p}) instances, n <= 6, p <= 3";
}

std::string claim_forward(const VerifyOptions&) {
    ColouredHost host21 = canonical_colouring(*canonical_size_for(21));
    int star_forests = 0, witnesses = 0;
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (uint32_t{1} << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (g.edge_count() == 0) {
                expect(is_star_forest(g), "edgeless graph misclassified");
                continue;
            }
            auto witness = witness_pattern(g);
            if (is_star_forest(g)) {
                expect(!witness.has_value(), "star forest received a witness pattern");
                ++star_forests;
            } else {
                expect(witness.has_value(), "non-star-forest without witness pattern");
                expect(witness->tone() == Tone{g.edge_count() - 1, 1},
                       "witness tone is not (e-1, 1)");
                expect(!find_embedding(host21, *witness).has_value(),
                       "canonical(21,15) contains a witness pattern");
                ++witnesses;
            }
        }
    }
    std::ostringstream out;
    out << witnesses << " non-star-forest graphs excluded from canonical(21,15), "
        << star_forests << " star forests witness-free";
    return out.str();
}

std::string claim_converse(const VerifyOptions& opts) {
    const int n = 16;
    Graph g = star_forest({2, 1});
    long long bound = tot_star_forest_bound(n, {2, 1});
    expect(bound == 48, "bound at (16, [2,1]) is not 48");
    auto classes = enumerate_pattern_classes(g);
    expect(classes.size() == 6, "K_{1,2} u K_2 must have 6 classes");
    std::mt19937_64 rng(opts.seed);
    int hosts = 0, embeddings = 0;
    while (hosts < 1000) {
        ColouredHost host = random_host(n, rng);
        if (host.min_count() <= bound) continue;
        ++hosts;
        for (const auto& cls : classes) {
            Embedding emb = greedy_star_forest_embed(host, cls.representative);
            expect(validate_embedding(host, cls.representative, emb),
                   "greedy embedding failed validation");
            expect(find_embedding(host, cls.representative).has_value(),
                   "backtracking engine disagrees with greedy success");
            ++embeddings;
        }
    }
    return std::to_string(embeddings) + " greedy embeddings on 1000 hosts with min{|R|,|B|} > 48, all re-validated";
}

std::string claim_oracle(const VerifyOptions& opts) {
    // Every coloured pattern on <= 4 vertices.
    std::vector<PatternColouring> patterns;
    for (int m = 1; m <= 4; ++m) {
        int pairs = m * (m - 1) / 2;
        for (uint32_t gmask = 0; gmask < (uint32_t{1} << pairs); ++gmask) {
            Graph g = graph_from_mask(m, gmask);
            for (uint32_t cmask = 0; cmask < (uint32_t{1} << g.edge_count()); ++cmask)
                patterns.push_back(PatternColouring::from_red_mask(g, cmask));
        }
    }
    std::mt19937_64 rng(opts.seed);
    long long pairs_checked = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 2 + i % 4;
        ColouredHost host = random_host(n, rng);
        for (const auto& pattern : patterns) {
            if (pattern.graph().vertex_count() > n) continue;
            auto fast = find_embedding(host, pattern);
            auto slow = naive_find_embedding(host, pattern);
            expect(fast.has_value() == slow.has_value(), "engines disagree on containment");
            if (fast)
                expect(validate_embedding(host, pattern, *fast), "embedding failed validation");
            ++pairs_checked;
        }
    }
    return std::to_string(pairs_checked) + " (host, pattern) pairs agree with the naive oracle";
}

std::string claim_class_counts(const VerifyOptions&) {
    long long graphs = 0;
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (uint32_t{1} << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            auto classes = enumerate_pattern_classes(g);
            expect((long long)classes.size() == burnside_class_count(g),
                   "class count disagrees with Burnside");
            long long orbit_sum = 0;
            for (const auto& c : classes) orbit_sum += c.orbit_size;
            expect(orbit_sum == (1LL << g.edge_count()), "orbit sizes do not sum to 2^e");
            ++graphs;
        }
    }
    auto count = [](const Graph& g) { return enumerate_pattern_classes(g).size(); };
    expect(count(path_graph(4)) == 6, "P4 must have 6 classes");
    expect(count(Graph::complete(3)) == 4, "K3 must have 4 classes");
    expect(count(star_forest({3})) == 4, "K_{1,3} must have 4 classes");
    int p4_21 = 0;
    for (const auto& c : enumerate_pattern_classes(path_graph(4)))
        if (c.tone == Tone{2, 1}) ++p4_21;
    expect(p4_21 == 2, "P4 must have exactly 2 classes of tone (2,1)");
    return std::to_string(graphs) + " graphs match their Burnside counts; P4:6 K3:4 K_{1,3}:4";
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
    Runner runner{opts, {}};
    runner.run(1, "canonical-family", [&] { return claim_canonical_family(opts); });
    runner.run(2, "canonical-obstructions", [&] { return claim_obstructions(opts); });
    runner.run(3, "star-formula-boundary", [&] { return claim_star_formula(opts); });
    runner.run(4, "p4-k3-not-totally-omnitonal", [&] { return claim_p4_k3(opts); });
    runner.run(5, "stars-totally-omnitonal", [&] { return claim_stars(opts); });
    runner.run(6, "star-forest-forward", [&] { return claim_forward(opts); });
    runner.run(7, "star-forest-converse-bound", [&] { return claim_converse(opts); });
    runner.run(8, "embedding-oracle-agreement", [&] { return claim_oracle(opts); });
    runner.run(9, "pattern-class-counts", [&] { return claim_class_counts(opts); });
    return runner.report;
}

}  // namespace tonal
