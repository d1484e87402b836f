#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/helpers.hpp"
#include "tonal/errors.hpp"
#include "tonal/io.hpp"
#include "tonal/patterns.hpp"

using namespace tonal;
using testutil::graph_from_mask;
using testutil::graph_mask_count;
using testutil::path_graph;

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.adjacent(2, 0));
    CHECK(g.degree(0) == 2);
    CHECK(g.edge_index(2, 0) == 1);
    CHECK(g.edge_index(1, 2) == -1);
}

TEST_CASE("star_forest builds the expected stars") {
    Graph k13 = star_forest({3});
    CHECK(k13.vertex_count() == 4);
    CHECK(k13.edge_count() == 3);
    CHECK(k13.degree(0) == 3);

    Graph f = star_forest({2, 1});
    CHECK(f.vertex_count() == 5);
    CHECK(f.edge_count() == 3);
    std::vector<int> degs;
    for (int v = 0; v < 5; ++v) degs.push_back(f.degree(v));
    std::sort(degs.rbegin(), degs.rend());
    CHECK(degs == std::vector<int>{2, 1, 1, 1, 1});

    Graph matching = star_forest({1, 1});
    CHECK(matching.vertex_count() == 4);
    CHECK(matching.edge_count() == 2);
    for (int v = 0; v < 4; ++v) CHECK(matching.degree(v) == 1);

    CHECK_THROWS_AS(star_forest({}), std::invalid_argument);
    CHECK_THROWS_AS(star_forest({0}), std::invalid_argument);
    CHECK_THROWS_AS(star_forest({1, 2}), std::invalid_argument);
}

TEST_CASE("star_forest components are stars and parts round-trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int q = 1 + int(rng() % 4);
        std::vector<int> parts;
        for (int j = 0; j < q; ++j) parts.push_back(1 + int(rng() % 4));
        std::sort(parts.rbegin(), parts.rend());
        Graph f = star_forest(parts);
        CHECK(is_star_forest(f));
        CHECK(star_forest_parts(f) == parts);
    }
}

TEST_CASE("edge-list parsing round-trips and reports byte offsets") {
    Graph p4 = parse_graph("p 4\ne 0 1\ne 1 2\ne 2 3");
    CHECK(p4 == path_graph(4));
    CHECK(parse_graph(serialize_graph(p4)) == p4);

    CHECK_THROWS_AS(parse_graph("e 0 0"), parse_error);
    try {
        parse_graph("p 4\ne 0 0\n");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 4);  // the 'e' token of the offending line
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("p x\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p 3\ne 0 5\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p 3\ne 0 1\ne 1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p 3\ne 0 1 R\n"), parse_error);  // colours rejected here
    CHECK_THROWS_AS(parse_graph(""), parse_error);

    // Header optional on input: n inferred.
    Graph inferred = parse_graph("e 0 1\ne 1 2\n");
    CHECK(inferred.vertex_count() == 3);
}

TEST_CASE("coloured edge-list parsing") {
    PatternColouring rbr = parse_coloured("p 4\ne 0 1 R\ne 1 2 B\ne 2 3 R");
    CHECK(rbr.tone() == Tone{2, 1});
    CHECK(rbr.colour(1, 2) == Colour::Blue);

    PatternColouring all_red = parse_coloured("p 3\ne 0 1 R\ne 0 2 R\ne 1 2 R");
    CHECK(all_red.tone() == Tone{3, 0});

    CHECK_THROWS_AS(parse_coloured("p 2\ne 0 1 R\ne 0 1 B\n"), parse_error);
    CHECK_THROWS_AS(parse_coloured("p 2\ne 0 1\n"), parse_error);  // missing colour
    CHECK_THROWS_AS(parse_coloured("p 2\ne 0 1 X\n"), parse_error);
    try {
        parse_coloured("p 2\ne 0 1 R\ne 0 1 B\n");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("conflicting") != std::string::npos);
    }
}

TEST_CASE("graph6 decoding matches an independent decoder") {
    Graph k4 = parse_graph("C~");
    CHECK(k4 == Graph::complete(4));
    CHECK(k4.edge_count() == 6);
    CHECK(parse_graph("A_") == Graph(2, {{0, 1}}));
    CHECK(serialize_graph6(path_graph(4)) == "Ch");

    // Independent decode: expand every data byte into a bit string, then read
    // the upper triangle column by column.
    auto decode_by_bitstring = [](const std::string& text) {
        int n = text[0] - 63;
        std::string bits;
        for (std::size_t i = 1; i < text.size(); ++i) {
            int value = text[i] - 63;
            for (int b = 5; b >= 0; --b) bits.push_back(char('0' + ((value >> b) & 1)));
        }
        std::vector<Edge> edges;
        int k = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++k)
                if (bits[k] == '1') edges.push_back({u, v});
        return Graph(n, edges);
    };
    for (const char* s : {"C~", "Ch", "A_", "DQc", "E?~o"})
        CHECK(parse_graph6(s) == decode_by_bitstring(s));

    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("C~~~"), parse_error);  // length mismatch
    CHECK_THROWS_AS(parse_graph6("C\x01"), parse_error); // byte out of range
}

TEST_CASE("serialization round-trips exhaustively on small graphs") {
    for (int n = 0; n <= 5; ++n)
        for (uint32_t mask = 0; mask < graph_mask_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            CHECK(parse_graph(serialize_graph(g)) == g);
            CHECK(parse_graph6(serialize_graph6(g)) == g);
        }
}

TEST_CASE("serialization round-trips on random graphs up to 10 vertices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + int(rng() % 5);
        Graph g = testutil::random_graph(n, 0.4, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
        CHECK(parse_graph6(serialize_graph6(g)) == g);

        // Random colouring round-trip; r + b recounts to e(G).
        std::vector<Colour> colours;
        int red = 0;
        for (int i = 0; i < g.edge_count(); ++i) {
            bool r = rng() & 1;
            red += r;
            colours.push_back(r ? Colour::Red : Colour::Blue);
        }
        PatternColouring pc(g, colours);
        CHECK(pc.red_count() == red);
        CHECK(pc.red_count() + pc.blue_count() == g.edge_count());
        CHECK(parse_coloured(serialize_coloured(pc)) == pc);
    }
}

TEST_CASE("coloured round-trip is exhaustive for up to 4 vertices") {
    for (int n = 2; n <= 4; ++n)
        for (uint32_t gmask = 0; gmask < graph_mask_count(n); ++gmask) {
            Graph g = graph_from_mask(n, gmask);
            for (uint32_t cmask = 0; cmask < (uint32_t{1} << g.edge_count()); ++cmask) {
                PatternColouring pc = PatternColouring::from_red_mask(g, cmask);
                CHECK(parse_coloured(serialize_coloured(pc)) == pc);
                CHECK(pc.red_count() + pc.blue_count() == g.edge_count());
            }
        }
}

TEST_CASE("coloured hosts keep both matrices complementary") {
    ColouredHost host(4, {{0, 1}, {1, 2}});
    CHECK(host.red_count() == 2);
    CHECK(host.blue_count() == 4);
    CHECK(host.min_count() == 2);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(host.red_row(u).test(v) != host.blue_row(u).test(v));
    CHECK(host.colour(0, 1) == Colour::Red);
    CHECK(host.colour(0, 2) == Colour::Blue);
    CHECK_THROWS_AS(host.colour(1, 1), std::invalid_argument);

    ColouredHost flipped = host.flip_edge(0, 1);
    CHECK(flipped.red_count() == 1);
    CHECK(flipped.colour(0, 1) == Colour::Blue);

    ColouredHost swapped = swap_colours(host);
    CHECK(swapped.red_count() == 4);
    CHECK(swapped.colour(0, 1) == Colour::Blue);

    CHECK(ColouredHost::from_pattern(host.as_pattern()) == host);
    CHECK(parse_host(serialize_host(host)) == host);
    // Incomplete host colouring is rejected.
    CHECK_THROWS_AS(parse_host("p 3\ne 0 1 R\n"), std::invalid_argument);
}

TEST_CASE("pattern colouring degree caches and masks") {
    PatternColouring rbr = parse_coloured("p 4\ne 0 1 R\ne 1 2 B\ne 2 3 R");
    CHECK(rbr.red_degree(1) == 1);
    CHECK(rbr.blue_degree(1) == 1);
    CHECK(rbr.red_mask() == 0b101);
    CHECK(PatternColouring::from_red_mask(path_graph(4), 0b101) == rbr);
    CHECK(swap_colours(rbr).tone() == Tone{1, 2});
    CHECK_THROWS_AS(rbr.colour(0, 2), std::invalid_argument);
}
