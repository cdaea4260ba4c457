#include <doctest.h>

#include <algorithm>

#include "dist2/corpus.hpp"
#include "dist2/errors.hpp"
#include "dist2/graph.hpp"
#include "support/oracles.hpp"

using namespace dist2;

namespace {
Graph path3() { return Graph::from_edges({{0, 1}, {1, 2}}); }
}  // namespace

TEST_CASE("graph rejects loops and duplicates") {
    Graph g;
    CHECK_THROWS_AS(g.add_edge(1, 1), NotSimple);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), NotSimple);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("adjacency stays symmetric and sorted") {
    Graph g = wegner_graph();
    for (VertexId v : g.vertices()) {
        auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (VertexId w : nb) CHECK(g.has_edge(w, v));
    }
}

TEST_CASE("degree") {
    Graph cube = cube_graph();
    for (VertexId v : cube.vertices()) CHECK(degree(cube, v) == 3);
    CHECK(degree(path3(), 1) == 2);
    Graph iso;
    iso.add_vertex(7);
    CHECK(degree(iso, 7) == 0);
    CHECK_THROWS_AS(degree(iso, 8), UnknownVertex);
}

TEST_CASE("validate_subcubic") {
    CHECK(!validate_subcubic(cube_graph()));
    Graph k5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    auto witness = validate_subcubic(k5);
    REQUIRE(witness.has_value());
    CHECK(k5.degree(*witness) == 4);
    CHECK(!validate_subcubic(wegner_graph()));
}

TEST_CASE("distance2_neighbors") {
    Graph w = wegner_graph();
    CHECK(distance2_neighbors(w, 0) == VertexSet{1, 2, 3, 4, 5, 6});

    Graph cube = cube_graph();
    for (VertexId v : cube.vertices()) {
        auto d2 = distance2_neighbors(cube, v);
        CHECK(d2.size() == 6);  // everything except the antipode
    }

    CHECK(distance2_neighbors(path3(), 0) == VertexSet{1, 2});
}

TEST_CASE("square") {
    Graph c5 = cycle_graph(5);
    Graph sq5 = square(c5);
    CHECK(sq5.edge_count() == 10);  // K5

    Graph sqw = square(wegner_graph());
    CHECK(sqw.edge_count() == 21);  // K7

    Graph sqp = square(path3());
    CHECK(sqp.edge_count() == 3);  // triangle
}

TEST_CASE("square equals the distance-2 neighborhoods") {
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = random_subcubic_planar(20, seed);
        Graph sq = square(g);
        for (VertexId v : g.vertices()) {
            auto d2 = distance2_neighbors(g, v);
            CHECK(d2 == sq.neighbors(v));
            CHECK(d2.size() <= 9);
        }
    }
}

TEST_CASE("shortest_cycle") {
    auto cube_cycle = shortest_cycle(cube_graph());
    REQUIRE(cube_cycle.has_value());
    CHECK(cube_cycle->size() == 4);
    CHECK(is_chordless_cycle(cube_graph(), *cube_cycle));

    auto w = shortest_cycle(wegner_graph());
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<VertexId>{4, 5, 6});

    auto d = shortest_cycle(dodecahedron_graph());
    REQUIRE(d.has_value());
    CHECK(static_cast<int>(d->size()) == testsupport::bfs_girth(dodecahedron_graph()));
    CHECK(d->size() == 5);

    CHECK(!shortest_cycle(path3()).has_value());
}

TEST_CASE("shortest_cycle length matches an independent girth computation") {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 100; ++seed) {
        Graph g = random_subcubic_planar(8 + static_cast<int>(seed % 20), seed);
        auto cyc = shortest_cycle(g);
        int girth = testsupport::bfs_girth(g);
        if (!cyc) {
            CHECK(girth == std::numeric_limits<int>::max());
        } else {
            CHECK(static_cast<int>(cyc->size()) == girth);
            CHECK(is_chordless_cycle(g, *cyc));
        }
        ++checked;
    }
}

TEST_CASE("shortest_cycle beyond length five") {
    CHECK(shortest_cycle(cycle_graph(6))->size() == 6);
    CHECK(shortest_cycle(cycle_graph(9))->size() == 9);

    // theta graph: three paths of lengths 3, 3 and 4 between two hubs
    Graph theta = Graph::from_edges({{0, 2}, {2, 3}, {3, 1},
                                     {0, 4}, {4, 5}, {5, 1},
                                     {0, 6}, {6, 7}, {7, 8}, {8, 1}});
    auto cyc = shortest_cycle(theta);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 6);
    CHECK(static_cast<int>(cyc->size()) == testsupport::bfs_girth(theta));
    CHECK(is_chordless_cycle(theta, *cyc));
}

TEST_CASE("components") {
    auto one = components(cube_graph());
    REQUIRE(one.size() == 1);
    CHECK(one[0] == cube_graph());

    Graph c5 = cycle_graph(5);
    std::map<VertexId, VertexId> shift;
    for (VertexId v : c5.vertices()) shift[v] = v + 100;
    Graph both = disjoint_union(cube_graph(), testsupport::relabel(c5, shift));
    auto two = components(both);
    REQUIRE(two.size() == 2);
    CHECK(two[0].vertex_count() == 8);
    CHECK(two[1].vertex_count() == 5);

    CHECK(components(Graph{}).empty());
}

TEST_CASE("components partition the vertex set") {
    for (std::uint64_t seed : {4, 5, 6}) {
        Graph g = random_subcubic_planar(25, seed);
        VertexSet all;
        for (const Graph& comp : components(g))
            all.insert(all.end(), comp.vertices().begin(), comp.vertices().end());
        std::sort(all.begin(), all.end());
        CHECK(all == g.vertices());
    }
}

TEST_CASE("enumerate_short_cycles") {
    auto cube_cycles = enumerate_short_cycles(cube_graph(), 5);
    CHECK(cube_cycles.size() == 6);
    for (const auto& c : cube_cycles) CHECK(c.size() == 4);
    CHECK(cube_cycles == testsupport::brute_chordless_cycles(cube_graph(), 5));

    auto k4_tris = enumerate_short_cycles(k4_graph(), 3);
    CHECK(k4_tris.size() == 4);

    CHECK(enumerate_short_cycles(path_graph(6), 5).empty());
    CHECK_THROWS_AS(enumerate_short_cycles(path3(), 6), ContractViolation);
}

TEST_CASE("enumerate_short_cycles matches brute force on random graphs") {
    for (std::uint64_t seed : {7, 8, 9, 10}) {
        Graph g = random_subcubic_planar(14, seed);
        CHECK(enumerate_short_cycles(g, 5) == testsupport::brute_chordless_cycles(g, 5));
    }
}

TEST_CASE("canonical_cycle picks the least rotation or reflection") {
    CHECK(canonical_cycle({2, 0, 1}) == std::vector<VertexId>{0, 1, 2});
    CHECK(canonical_cycle({3, 2, 1, 0}) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(canonical_cycle({1, 3, 2, 4}) == std::vector<VertexId>{1, 3, 2, 4});
}

TEST_CASE("induced_subgraph keeps ids") {
    Graph g = cube_graph();
    Graph sub = induced_subgraph(g, {0, 1, 2, 3});
    CHECK(sub.vertices() == VertexSet{0, 1, 2, 3});
    CHECK(sub.edge_count() == 4);
    CHECK_THROWS_AS(induced_subgraph(g, {99}), UnknownVertex);
}
