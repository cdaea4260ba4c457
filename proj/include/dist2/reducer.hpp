#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dist2/coloring.hpp"
#include "dist2/embedding.hpp"
#include "dist2/graph.hpp"

namespace dist2 {

/// Base cases at or below this size go straight to exact search.
inline constexpr int kBaseCaseMaxVertices = 6;

enum class StepKind {
    base,
    component_split,
    low_degree_a,
    low_degree_b,
    triangle_c,
    inside_outside,
    four_cycle,
    five_cycle,
};

const char* to_string(StepKind k);
StepKind step_kind_from_string(const std::string& name);

enum class EmptySide { inside, outside, none };

/// A chordless 4- or 5-cycle x_1..x_k together with the exterior neighbor
/// y_i of each x_i and the side of the cycle that holds no vertices.
/// Valid only while the graph is cubic with girth at least four.
struct CycleContext {
    std::vector<VertexId> cycle;     // x_1..x_k in cyclic order
    std::vector<VertexId> exterior;  // y_1..y_k, aligned with cycle
    EmptySide empty_side = EmptySide::none;

    int k() const { return static_cast<int>(cycle.size()); }
};

/// One rewrite of the reduction recursion. added_edges are synthetic: they
/// exist in the reduced graph only, and extensions work in the parent graph
/// where they are absent. margins log the observed count of admissible
/// colors at the labeled extension points.
struct ReductionStep {
    StepKind kind = StepKind::base;
    std::vector<VertexId> removed;
    std::vector<Edge> added_edges;
    std::optional<CycleContext> context;
    std::map<std::string, int> margins;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

/// A counting claim that failed at run time. The engine completes the run
/// through exact search and reports these for diagnosis.
struct AssertionEvent {
    std::string step;
    std::string detail;
    std::size_t subgraph_vertices = 0;
};

struct RunReport {
    Coloring coloring;
    ReductionTrace trace;
    std::vector<AssertionEvent> events;
};

/// Colors a planar graph of maximum degree three so that vertices within
/// distance two receive different colors, using at most eight colors.
/// Throws DegreeViolation or NonPlanarInput on bad input. The trace records
/// every reduction in application order and replays deterministically.
RunReport color_graph(const Graph& g, int palette = 8);

/// Re-derives the coloring by following a recorded trace instead of
/// searching for reductions. Produces the exact coloring of the original run.
Coloring replay_trace(const Graph& g, const ReductionTrace& trace, int palette = 8);

// Individual reduction and extension operations. color_graph composes these;
// they are exposed for direct testing.

/// Removes a vertex of degree at most two. For degree two the neighbors are
/// joined when not already adjacent.
std::pair<Graph, ReductionStep> reduce_low_degree(const Graph& g, VertexId v);
Coloring extend_low_degree(const Coloring& reduced, ReductionStep& step, const Graph& g);

/// Removes a degree-three vertex lying in a triangle u,v,w with third
/// neighbor a; joins a and w when needed.
std::pair<Graph, ReductionStep> reduce_triangle(const Graph& g, VertexId v);
Coloring extend_triangle(const Coloring& reduced, ReductionStep& step, const Graph& g);

/// Splits a cubic graph along a chordless cycle (length 3..5) whose sides
/// are both nonempty: H0 keeps the cycle plus inside, H1 the cycle plus
/// outside.
std::pair<Graph, Graph> split_on_cycle(const Graph& g, const Embedding& e,
                                       const std::vector<VertexId>& cycle);

/// Combines valid colorings of the two halves by matching palette colors
/// along the shared cycle (rainbow on both sides, so the matching is a
/// bijection extended over unused colors in increasing order).
Coloring merge_colorings(const Coloring& c0, const Coloring& c1,
                         const std::vector<VertexId>& cycle);

/// Labels a chordless 4/5-cycle with its exterior neighbors and empty side,
/// asserting that the y_i are pairwise distinct and that no two exterior
/// neighbors at cycle distance two are adjacent.
CycleContext build_cycle_context(const Graph& g, const Embedding& e,
                                 const std::vector<VertexId>& cycle);

std::pair<Graph, ReductionStep> reduce_4cycle(const Graph& g, const CycleContext& ctx);
Coloring extend_4cycle(const Coloring& reduced, const CycleContext& ctx,
                       const Graph& g, ReductionStep& step);

std::pair<Graph, ReductionStep> reduce_5cycle(const Graph& g, const CycleContext& ctx);
Coloring extend_5cycle(const Coloring& reduced, const CycleContext& ctx,
                       const Graph& g, ReductionStep& step);

}  // namespace dist2
