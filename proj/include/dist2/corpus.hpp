#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

/// Reproducible generator. Same state sequence on every platform:
///   s' = s * 6364136223846793005 + 1442695040888963407   (mod 2^64)
/// and each draw returns the top 32 bits of the new state.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint32_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 32);
    }
    std::uint32_t below(std::uint32_t n) { return n ? next() % n : 0; }
};

/// Parsed fixture/generator request, e.g. "wegner", "prism:n=5",
/// "random-cubic-planar:n=20,seed=7".
struct GeneratorSpec {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;

    static GeneratorSpec parse(const std::string& text);
    std::string to_string() const;
};

/// Seven vertices: a center joined through three midpoints to the corners of
/// a triangle. The extremal fixture whose square is complete.
Graph wegner_graph();

Graph k4_graph();
Graph cube_graph();               // the 3-cube, same as prism(4)
Graph prism_graph(int n);         // n-gonal prism, 2n vertices
Graph dodecahedron_graph();
Graph petersen_graph();           // non-planar negative fixture
Graph icosahedron_graph();        // planar but degree five; embedding tests only
Graph truncated_tetrahedron_graph();
Graph truncated_icosahedron_graph();  // 60 vertices, cubic, girth 5

/// Cylindrical fullerene: pentagon caps joined by hexagon rings. n must be a
/// multiple of ten, at least 20; n = 20 is the dodecahedron.
Graph nanotube_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph diamond_graph();            // 4-cycle plus one chord

/// A 5-cycle with a cubic gadget attached on each side, so the cycle is
/// chordless and separates two nonempty sides. 20 vertices, cubic, girth 4.
Graph pentagon_sandwich_graph();

/// Cubic planar graph with 2k-4 vertices built as the dual of a randomly
/// stacked triangulation on k vertices. n must be even and at least 4.
Graph random_cubic_planar(int n, std::uint64_t seed);

/// Subcubic planar graph grown by random edge insertion; every insertion is
/// filtered through degree and planarity checks. May be disconnected.
Graph random_subcubic_planar(int n, std::uint64_t seed);

/// Cubic planar graph with a guaranteed separating chordless cycle on
/// vertices 0..k-1 (k is 4 or 5, seed-dependent): two random cubic planar
/// gadgets are opened up and glued to the two sides of the cycle.
Graph random_sandwich(std::uint64_t seed);

/// Builds any spec. Throws std::invalid_argument on bad parameters.
Graph build(const GeneratorSpec& spec);
Graph build(const std::string& spec_text);

/// Names of all deterministic fixtures (no random kinds).
std::vector<std::string> fixture_names();

}  // namespace dist2
