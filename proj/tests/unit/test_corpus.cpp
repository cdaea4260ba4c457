#include <doctest.h>

#include "dist2/corpus.hpp"
#include "dist2/document.hpp"
#include "dist2/embedding.hpp"
#include "dist2/oracle.hpp"
#include "support/oracles.hpp"

using namespace dist2;

TEST_CASE("wegner fixture shape") {
    Graph w = wegner_graph();
    CHECK(w.vertex_count() == 7);
    CHECK(w.degree(0) == 3);
    for (VertexId m : {1, 2, 3}) CHECK(w.degree(m) == 2);
    for (VertexId t : {4, 5, 6}) CHECK(w.degree(t) == 3);
    CHECK(!validate_subcubic(w));
    CHECK(is_planar(w));
    CHECK(exact_chromatic2(w, 8)->chi == 7);
}

TEST_CASE("generator determinism") {
    Graph a = random_cubic_planar(20, 1);
    Graph b = random_cubic_planar(20, 1);
    CHECK(a == b);
    CHECK(save_document(document_from_graph(a)) == save_document(document_from_graph(b)));

    Graph c = random_subcubic_planar(30, 7);
    Graph d = random_subcubic_planar(30, 7);
    CHECK(c == d);

    CHECK(!(random_cubic_planar(20, 1) == random_cubic_planar(20, 2)));
}

TEST_CASE("prism girth") {
    CHECK(shortest_cycle(prism_graph(5))->size() == 4);
    CHECK(shortest_cycle(prism_graph(3))->size() == 3);
    CHECK(testsupport::bfs_girth(prism_graph(5)) == 4);
}

TEST_CASE("petersen is the non-planar negative fixture") {
    Graph p = petersen_graph();
    CHECK(p.vertex_count() == 10);
    for (VertexId v : p.vertices()) CHECK(p.degree(v) == 3);
    CHECK(!is_planar(p));
}

TEST_CASE("dodecahedron counts") {
    Graph d = dodecahedron_graph();
    CHECK(d.vertex_count() == 20);
    CHECK(d.edge_count() == 30);
    for (VertexId v : d.vertices()) CHECK(d.degree(v) == 3);
    CHECK(is_planar(d));
}

TEST_CASE("dual construction follows the size law") {
    for (int n : {4, 10, 20, 36}) {
        Graph g = random_cubic_planar(n, 3);
        CHECK(static_cast<int>(g.vertex_count()) == n);  // 2k-4 with k = n/2+2
        for (VertexId v : g.vertices()) CHECK(g.degree(v) == 3);
        CHECK(is_planar(g));
    }
    CHECK_THROWS_AS(random_cubic_planar(7, 1), std::invalid_argument);
}

TEST_CASE("generated cubic graphs embed with a short face") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Graph g = random_cubic_planar(24, seed);
        CHECK(!validate_subcubic(g));
        auto r = embed(g);
        auto* e = std::get_if<Embedding>(&r);
        REQUIRE(e != nullptr);
        CHECK(short_face_exists(*e).length() <= 5);
    }
}

TEST_CASE("subcubic generator respects degree and planarity filters") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_subcubic_planar(40, seed);
        CHECK(!validate_subcubic(g));
        CHECK(is_planar(g));
    }
}

TEST_CASE("pentagon sandwich is cubic, planar and triangle free") {
    Graph g = pentagon_sandwich_graph();
    CHECK(g.vertex_count() == 20);
    for (VertexId v : g.vertices()) CHECK(g.degree(v) == 3);
    CHECK(is_planar(g));
    CHECK(testsupport::bfs_girth(g) == 4);
    CHECK(is_chordless_cycle(g, {0, 1, 2, 3, 4}));
}

TEST_CASE("truncated icosahedron shape") {
    Graph g = truncated_icosahedron_graph();
    CHECK(g.vertex_count() == 60);
    CHECK(g.edge_count() == 90);
    for (VertexId v : g.vertices()) CHECK(g.degree(v) == 3);
    CHECK(is_planar(g));
    CHECK(testsupport::bfs_girth(g) == 5);
    auto r = embed(g);
    auto* e = std::get_if<Embedding>(&r);
    REQUIRE(e != nullptr);
    // 12 pentagons and 20 hexagons
    int pent = 0, hexa = 0;
    for (const auto& f : trace_faces(*e)) {
        if (f.length() == 5) ++pent;
        if (f.length() == 6) ++hexa;
    }
    CHECK(pent == 12);
    CHECK(hexa == 20);
}

TEST_CASE("nanotubes are cubic planar girth-5 fullerenes") {
    for (int n : {20, 30, 50, 80}) {
        Graph g = nanotube_graph(n);
        CHECK(static_cast<int>(g.vertex_count()) == n);
        for (VertexId v : g.vertices()) CHECK(g.degree(v) == 3);
        CHECK(is_planar(g));
        CHECK(testsupport::bfs_girth(g) == 5);
    }
    CHECK_THROWS_AS(nanotube_graph(25), std::invalid_argument);
    CHECK_THROWS_AS(nanotube_graph(10), std::invalid_argument);
}

TEST_CASE("random sandwiches carry a separating cycle") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6}) {
        Graph g = random_sandwich(seed);
        for (VertexId v : g.vertices()) CHECK(g.degree(v) == 3);
        CHECK(is_planar(g));
        std::vector<VertexId> cyc;
        for (VertexId v : g.vertices())
            if (v < 10) cyc.push_back(v);
        CHECK(is_chordless_cycle(g, cyc));
        CHECK(random_sandwich(seed) == g);
    }
}

TEST_CASE("generator spec parsing") {
    auto s = GeneratorSpec::parse("random-cubic-planar:n=20,seed=7");
    CHECK(s.kind == "random-cubic-planar");
    CHECK(s.n == 20);
    CHECK(s.seed == 7);
    CHECK(s.to_string() == "random-cubic-planar:n=20,seed=7");

    CHECK(GeneratorSpec::parse("wegner").kind == "wegner");
    CHECK_THROWS_AS(build("no-such-kind"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec::parse("prism:n"), std::invalid_argument);
}

TEST_CASE("the reproducible generator matches its documented recurrence") {
    Lcg rng(1);
    std::uint64_t s = 1;
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    CHECK(rng.next() == static_cast<std::uint32_t>(s >> 32));
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    CHECK(rng.next() == static_cast<std::uint32_t>(s >> 32));
}

TEST_CASE("every fixture builds and is subcubic planar except petersen") {
    for (const auto& name : fixture_names()) {
        Graph g = build(name);
        CHECK(g.vertex_count() > 0);
        CHECK(!validate_subcubic(g));
        CHECK(is_planar(g));
    }
}
