#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "support/helpers.hpp"
#include "tonal/errors.hpp"
#include "tonal/patterns.hpp"

using namespace tonal;
using testutil::cycle_graph;
using testutil::graph_from_mask;
using testutil::graph_mask_count;
using testutil::path_graph;

TEST_CASE("automorphism groups of the named graphs") {
    auto a_p4 = automorphisms(path_graph(4));
    CHECK(a_p4.size() == 2);
    auto a_k3 = automorphisms(Graph::complete(3));
    CHECK(a_k3.size() == 6);
    auto a_star = automorphisms(star_forest({3}));
    CHECK(a_star.size() == 6);
    for (const auto& perm : a_star) CHECK(perm[0] == 0);  // leaves permute, centre fixed
}

TEST_CASE("automorphisms form a group") {
    for (const Graph& g : {path_graph(4), star_forest({3}), cycle_graph(5)}) {
        auto auts = automorphisms(g);
        std::set<VertexPermutation> group(auts.begin(), auts.end());
        VertexPermutation identity(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) identity[v] = v;
        CHECK(group.count(identity) == 1);
        for (const auto& a : auts) {
            VertexPermutation inverse(a.size());
            for (std::size_t v = 0; v < a.size(); ++v) inverse[a[v]] = int(v);
            CHECK(group.count(inverse) == 1);
            for (const auto& b : auts) {
                VertexPermutation composed(a.size());
                for (std::size_t v = 0; v < a.size(); ++v) composed[v] = a[b[v]];
                CHECK(group.count(composed) == 1);
            }
        }
    }
}

TEST_CASE("the permutation guard names its limit") {
    Graph big(11, {});
    CHECK_THROWS_AS(automorphisms(big), size_limit_error);
}

TEST_CASE("pattern equivalence on P4 colourings") {
    Graph p4 = path_graph(4);
    PatternColouring first_end_blue(p4, {Colour::Blue, Colour::Red, Colour::Red});
    PatternColouring last_end_blue(p4, {Colour::Red, Colour::Red, Colour::Blue});
    PatternColouring middle_blue(p4, {Colour::Red, Colour::Blue, Colour::Red});
    CHECK(patterns_equivalent(first_end_blue, last_end_blue));
    CHECK(!patterns_equivalent(middle_blue, last_end_blue));
    CHECK(patterns_equivalent(middle_blue, middle_blue));
}

TEST_CASE("pattern equivalence is an equivalence relation") {
    // Reflexivity and symmetry, exhaustively on 3 vertices.
    std::vector<PatternColouring> all3;
    for (uint32_t gmask = 0; gmask < graph_mask_count(3); ++gmask) {
        Graph g = graph_from_mask(3, gmask);
        for (uint32_t cmask = 0; cmask < (uint32_t{1} << g.edge_count()); ++cmask)
            all3.push_back(PatternColouring::from_red_mask(g, cmask));
    }
    for (const auto& a : all3) CHECK(patterns_equivalent(a, a));
    for (const auto& a : all3)
        for (const auto& b : all3)
            CHECK(patterns_equivalent(a, b) == patterns_equivalent(b, a));

    // Reflexivity on a sample of 4-vertex colourings.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = graph_from_mask(4, uint32_t(rng() % graph_mask_count(4)));
        auto pc = PatternColouring::from_red_mask(g, rng() & ((1u << g.edge_count()) - 1));
        CHECK(patterns_equivalent(pc, pc));
    }

    // Transitivity across members of enumerated orbits: any two members of
    // one orbit are equivalent, members of distinct orbits are not.
    for (const Graph& g : {path_graph(4), Graph::complete(4), star_forest({2, 1})}) {
        auto classes = enumerate_pattern_classes(g);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = 0; j < classes.size(); ++j)
                CHECK(patterns_equivalent(classes[i].representative, classes[j].representative) ==
                      (i == j));
    }
}

TEST_CASE("stars have one class per tone") {
    for (int p = 1; p <= 5; ++p) {
        Graph star = star_forest({p});
        auto classes = enumerate_pattern_classes(star);
        CHECK(int(classes.size()) == p + 1);
        std::set<int> reds;
        for (const auto& c : classes) reds.insert(c.tone.red);
        CHECK(int(reds.size()) == p + 1);
    }
}

TEST_CASE("P4 and K3 class structure") {
    auto p4_classes = enumerate_pattern_classes(path_graph(4));
    CHECK(p4_classes.size() == 6);
    int tone21 = 0;
    for (const auto& c : p4_classes)
        if (c.tone == Tone{2, 1}) ++tone21;
    CHECK(tone21 == 2);  // middle-blue and end-blue

    auto k3_classes = enumerate_pattern_classes(Graph::complete(3));
    CHECK(k3_classes.size() == 4);

    // Classes arrive sorted by red count, descending.
    for (std::size_t i = 1; i < p4_classes.size(); ++i)
        CHECK(p4_classes[i - 1].tone.red >= p4_classes[i].tone.red);
}

TEST_CASE("orbit sizes and Burnside counts agree on every graph up to 5 vertices") {
    for (int n = 1; n <= 5; ++n)
        for (uint32_t mask = 0; mask < graph_mask_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            auto classes = enumerate_pattern_classes(g);  // self-checks internally
            long long orbit_sum = 0;
            for (const auto& c : classes) orbit_sum += c.orbit_size;
            CHECK(orbit_sum == (1LL << g.edge_count()));
            CHECK((long long)classes.size() == burnside_class_count(g));
        }
}

TEST_CASE("class enumeration guard") {
    CHECK_THROWS_AS(enumerate_pattern_classes(Graph::complete(7)), size_limit_error);
}

TEST_CASE("star forest recognition") {
    CHECK(is_star_forest(star_forest({3, 1})));
    CHECK(is_star_forest(Graph(1, {})));
    CHECK(is_star_forest(Graph(5, {})));
    CHECK(is_star_forest(Graph(2, {{0, 1}})));
    CHECK(!is_star_forest(Graph::complete(3)));
    CHECK(!is_star_forest(path_graph(4)));
    CHECK(!is_star_forest(cycle_graph(4)));
    CHECK(is_star_forest(path_graph(3)));

    CHECK(star_forest_parts(star_forest({3, 2, 2})) == std::vector<int>{3, 2, 2});
    CHECK_THROWS_AS(star_forest_parts(path_graph(4)), std::invalid_argument);
}

TEST_CASE("witness patterns for the named graphs") {
    CHECK(!witness_pattern(star_forest({3})).has_value());

    auto p4_witness = witness_pattern(path_graph(4));
    REQUIRE(p4_witness.has_value());
    CHECK(p4_witness->tone() == Tone{2, 1});
    CHECK(p4_witness->colour(1, 2) == Colour::Blue);  // the middle edge

    // K_{1,2} u P4: the blue edge is the middle edge of the P4 part.
    Graph g(7, {{0, 1}, {0, 2}, {3, 4}, {4, 5}, {5, 6}});
    auto w = witness_pattern(g);
    REQUIRE(w.has_value());
    CHECK(w->tone() == Tone{4, 1});
    CHECK(w->colour(4, 5) == Colour::Blue);

    // A triangle takes precedence and gets the blue edge.
    Graph tri_plus(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
    auto wt = witness_pattern(tri_plus);
    REQUIRE(wt.has_value());
    CHECK(wt->tone() == Tone{4, 1});
    CHECK(wt->colour(0, 1) == Colour::Blue);

    CHECK_THROWS_AS(witness_pattern(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("witness exists exactly off the star forests, up to 7 vertices") {
    long long star_forests = 0, witnesses = 0, mismatches = 0;
    for (int n = 1; n <= 7; ++n) {
        for (uint32_t mask = 0; mask < graph_mask_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (g.edge_count() == 0) continue;
            bool sf = is_star_forest(g);
            auto w = witness_pattern(g);
            if (w.has_value() == sf)
                ++mismatches;
            else if (sf)
                ++star_forests;
            else {
                ++witnesses;
                if (!(w->tone() == Tone{g.edge_count() - 1, 1})) ++mismatches;
            }
        }
    }
    CHECK(mismatches == 0);
    CHECK(star_forests > 0);
    CHECK(witnesses > 0);
}
