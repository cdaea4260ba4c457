#pragma once

#include <optional>
#include <vector>

#include "dist2/coloring.hpp"
#include "dist2/graph.hpp"

namespace dist2 {

/// A same-colored pair at distance one or two. For second-order pairs the
/// witness is a common neighbor.
struct Violation {
    VertexId u = 0;
    VertexId v = 0;
    bool second_order = false;
    std::optional<VertexId> witness;
};

/// Checks that a total coloring is proper on the square of g. Returns every
/// violating pair; empty means valid. Partial colorings are rejected.
std::vector<Violation> verify_coloring(const Graph& g, const Coloring& c);

struct ChromaticResult {
    int chi;
    Coloring witness;
};

/// Default cap on exact search input size.
inline constexpr int kExactSearchMaxVertices = 24;

/// Exact distance-2 chromatic number by saturation-ordered backtracking on
/// the square graph, with canonical color-order pruning. Returns nullopt when
/// max_palette colors do not suffice. size_bound overrides the safety cap.
std::optional<ChromaticResult> exact_chromatic2(
    const Graph& g, int max_palette,
    std::optional<int> size_bound = std::nullopt);

/// Is the square of g properly colorable with exactly k colors?
/// Exposed for tests that need to enumerate or cross-check at fixed k.
std::optional<Coloring> color_square_with(const Graph& g, int k);

/// A valid coloring with at most eight colors, via exact search. Intended for
/// small recursion base cases; throws TheoremViolation if eight colors do not
/// suffice, which cannot happen for planar subcubic input.
Coloring base_case_color(const Graph& g,
                         std::optional<int> size_bound = std::nullopt);

}  // namespace dist2
