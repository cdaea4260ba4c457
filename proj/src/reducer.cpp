#include "dist2/reducer.hpp"

#include <algorithm>
#include <set>

#include "dist2/errors.hpp"
#include "dist2/oracle.hpp"

namespace dist2 {

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::base: return "base";
        case StepKind::component_split: return "component-split";
        case StepKind::low_degree_a: return "low-degree-a";
        case StepKind::low_degree_b: return "low-degree-b";
        case StepKind::triangle_c: return "triangle-c";
        case StepKind::inside_outside: return "inside-outside";
        case StepKind::four_cycle: return "four-cycle";
        case StepKind::five_cycle: return "five-cycle";
    }
    return "?";
}

StepKind step_kind_from_string(const std::string& name) {
    for (StepKind k : {StepKind::base, StepKind::component_split, StepKind::low_degree_a,
                       StepKind::low_degree_b, StepKind::triangle_c, StepKind::inside_outside,
                       StepKind::four_cycle, StepKind::five_cycle})
        if (name == to_string(k)) return k;
    throw std::invalid_argument("unknown step kind: " + name);
}

namespace {

// Colors admissible for v: the palette minus colors seen on colored vertices
// within distance two.
std::vector<int> admissible_colors(const Graph& g, const Coloring& c, VertexId v) {
    std::vector<char> taken(c.palette_size, 0);
    for (VertexId w : distance2_neighbors(g, v))
        if (auto col = c.get(w)) taken[*col] = 1;
    std::vector<int> out;
    for (int i = 0; i < c.palette_size; ++i)
        if (!taken[i]) out.push_back(i);
    return out;
}

int count_colored(const Graph& g, const Coloring& c, VertexId v) {
    int n = 0;
    for (VertexId w : distance2_neighbors(g, v))
        if (c.has(w)) ++n;
    return n;
}

void check_reduction_closure(const Graph& g2, const char* which) {
    if (validate_subcubic(g2))
        throw TheoremViolation(std::string(which) + " produced a degree above three");
}

}  // namespace

std::pair<Graph, ReductionStep> reduce_low_degree(const Graph& g, VertexId v) {
    int deg = g.degree(v);
    if (deg > 2) throw ContractViolation("reduce_low_degree needs degree at most two");
    ReductionStep step;
    step.kind = deg == 2 ? StepKind::low_degree_b : StepKind::low_degree_a;
    step.removed = {v};
    Graph g2 = g;
    g2.remove_vertex(v);
    if (deg == 2) {
        VertexId u = g.neighbors(v)[0], w = g.neighbors(v)[1];
        if (!g.has_edge(u, w)) {
            g2.add_edge(u, w);
            step.added_edges = {make_edge(u, w)};
        }
    }
    check_reduction_closure(g2, "low degree rule");
    return {std::move(g2), std::move(step)};
}

Coloring extend_low_degree(const Coloring& reduced, ReductionStep& step, const Graph& g) {
    VertexId v = step.removed.at(0);
    int deg = g.degree(v);
    int colored = count_colored(g, reduced, v);
    int bound = deg == 2 ? 6 : 3;
    if (colored > bound)
        throw ProofAssertion("low-degree extension",
                             "vertex sees " + std::to_string(colored) +
                                 " colored distance-2 neighbors, bound " + std::to_string(bound));
    Coloring c = reduced;
    auto free = admissible_colors(g, c, v);
    if (free.empty())
        throw ProofAssertion("low-degree extension", "no admissible color");
    step.margins["v"] = static_cast<int>(free.size());
    c.set(v, free.front());
    return c;
}

std::pair<Graph, ReductionStep> reduce_triangle(const Graph& g, VertexId v) {
    if (g.degree(v) != 3) throw ContractViolation("reduce_triangle needs a degree-three vertex");
    const auto& nb = g.neighbors(v);
    // w is one triangle partner, a the neighbor off the triangle. The new
    // edge aw keeps a at distance two from both former triangle partners:
    // the surviving uw edge carries the constraint to u.
    VertexId w = -1, a = -1;
    if (g.has_edge(nb[0], nb[1])) {
        w = nb[1]; a = nb[2];
    } else if (g.has_edge(nb[0], nb[2])) {
        w = nb[2]; a = nb[1];
    } else if (g.has_edge(nb[1], nb[2])) {
        w = nb[2]; a = nb[0];
    } else {
        throw ContractViolation("vertex is not in a triangle");
    }
    ReductionStep step;
    step.kind = StepKind::triangle_c;
    step.removed = {v};
    Graph g2 = g;
    g2.remove_vertex(v);
    if (a != w && !g.has_edge(a, w)) {
        g2.add_edge(a, w);
        step.added_edges = {make_edge(a, w)};
    }
    check_reduction_closure(g2, "triangle rule");
    return {std::move(g2), std::move(step)};
}

Coloring extend_triangle(const Coloring& reduced, ReductionStep& step, const Graph& g) {
    VertexId v = step.removed.at(0);
    int colored = count_colored(g, reduced, v);
    if (colored > 7)
        throw ProofAssertion("triangle extension",
                             "vertex sees " + std::to_string(colored) +
                                 " colored distance-2 neighbors, bound 7");
    Coloring c = reduced;
    auto free = admissible_colors(g, c, v);
    if (free.empty()) throw ProofAssertion("triangle extension", "no admissible color");
    step.margins["v"] = static_cast<int>(free.size());
    c.set(v, free.front());
    return c;
}

std::pair<Graph, Graph> split_on_cycle(const Graph& g, const Embedding& e,
                                       const std::vector<VertexId>& cycle) {
    if (cycle.size() < 3 || cycle.size() > 5)
        throw ContractViolation("split cycle length must be 3..5");
    for (VertexId v : g.vertices())
        if (g.degree(v) != 3) throw ContractViolation("split_on_cycle needs a cubic graph");
    auto sc = classify_sides(e, cycle);
    if (sc.inside.empty() || sc.outside.empty())
        throw ContractViolation("split_on_cycle needs both sides nonempty");

    // A cycle vertex has exactly one neighbor off the cycle, so it cannot
    // reach both sides.
    for (VertexId x : cycle) {
        bool in = false, out = false;
        for (VertexId w : g.neighbors(x)) {
            if (std::binary_search(sc.inside.begin(), sc.inside.end(), w)) in = true;
            if (std::binary_search(sc.outside.begin(), sc.outside.end(), w)) out = true;
        }
        if (in && out)
            throw TheoremViolation("cycle vertex adjacent to both sides");
    }

    VertexSet keep0(cycle.begin(), cycle.end());
    std::sort(keep0.begin(), keep0.end());
    VertexSet keep1 = keep0;
    keep0.insert(keep0.end(), sc.inside.begin(), sc.inside.end());
    std::sort(keep0.begin(), keep0.end());
    keep1.insert(keep1.end(), sc.outside.begin(), sc.outside.end());
    std::sort(keep1.begin(), keep1.end());
    return {induced_subgraph(g, keep0), induced_subgraph(g, keep1)};
}

Coloring merge_colorings(const Coloring& c0, const Coloring& c1,
                         const std::vector<VertexId>& cycle) {
    if (c0.palette_size != c1.palette_size)
        throw ContractViolation("merge needs equal palettes");
    const int m = c0.palette_size;
    std::vector<int> pi(m, -1);
    std::vector<char> target_used(m, 0);
    for (VertexId v : cycle) {
        auto s = c1.get(v), t = c0.get(v);
        if (!s || !t) throw ContractViolation("cycle vertex uncolored in a half");
        if (pi[*s] == -1) {
            if (target_used[*t])
                throw ContractViolation("cycle colors not rainbow in the first half");
            pi[*s] = *t;
            target_used[*t] = 1;
        } else if (pi[*s] != *t) {
            throw ContractViolation("cycle colors not rainbow in the second half");
        }
    }
    int next_target = 0;
    for (int s = 0; s < m; ++s) {
        if (pi[s] != -1) continue;
        while (target_used[next_target]) ++next_target;
        pi[s] = next_target;
        target_used[next_target] = 1;
    }

    std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
    Coloring out = c0;
    for (const auto& [v, col] : c1.assignment)
        if (!on_cycle.count(v)) out.assignment[v] = pi[col];
    return out;
}

CycleContext build_cycle_context(const Graph& g, const Embedding& e,
                                 const std::vector<VertexId>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k != 4 && k != 5)
        throw ContractViolation("cycle context needs length four or five");
    if (!is_chordless_cycle(g, cycle))
        throw ContractViolation("cycle context needs a chordless cycle");

    CycleContext ctx;
    ctx.cycle = cycle;
    for (int i = 0; i < k; ++i) {
        VertexId x = cycle[i];
        if (g.degree(x) != 3)
            throw ContractViolation("cycle vertices must have degree three");
        VertexId prev = cycle[(i + k - 1) % k], next = cycle[(i + 1) % k];
        VertexId y = -1;
        for (VertexId w : g.neighbors(x))
            if (w != prev && w != next) y = w;
        ctx.exterior.push_back(y);
    }

    auto sc = classify_sides(e, cycle);
    if (!sc.inside.empty() && !sc.outside.empty())
        throw ContractViolation("cycle context needs an empty side");
    if (sc.inside.empty() && sc.outside.empty())
        throw ContractViolation("graph is only the cycle");
    ctx.empty_side = sc.inside.empty() ? EmptySide::inside : EmptySide::outside;

    std::set<VertexId> distinct(ctx.exterior.begin(), ctx.exterior.end());
    if (static_cast<int>(distinct.size()) != k)
        throw ProofAssertion("cycle context", "exterior neighbors coincide");
    for (int i = 0; i < k; ++i) {
        int j = (i + 2) % k;
        if (i < j || k == 5) {
            if (g.has_edge(ctx.exterior[i], ctx.exterior[j]))
                throw ProofAssertion("cycle context",
                                     "exterior neighbors at cycle distance two are adjacent");
        }
    }
    return ctx;
}

namespace {

std::pair<Graph, ReductionStep> reduce_cycle(const Graph& g, const CycleContext& ctx,
                                             int endpoint_a, int endpoint_b, StepKind kind) {
    VertexId ya = ctx.exterior[endpoint_a], yb = ctx.exterior[endpoint_b];
    if (g.has_edge(ya, yb))
        throw ContractViolation("joined exterior neighbors already adjacent");
    ReductionStep step;
    step.kind = kind;
    step.removed = ctx.cycle;
    step.added_edges = {make_edge(ya, yb)};
    step.context = ctx;
    Graph g2 = g;
    for (VertexId x : ctx.cycle) g2.remove_vertex(x);
    g2.add_edge(ya, yb);
    check_reduction_closure(g2, "cycle rule");
    return {std::move(g2), std::move(step)};
}

// Dihedral relabelings of a cycle context that keep the joined exterior pair
// in place, expressed as position permutations.
CycleContext permuted(const CycleContext& ctx, const std::vector<int>& p) {
    CycleContext out;
    out.empty_side = ctx.empty_side;
    for (int i : p) {
        out.cycle.push_back(ctx.cycle[i]);
        out.exterior.push_back(ctx.exterior[i]);
    }
    return out;
}

}  // namespace

std::pair<Graph, ReductionStep> reduce_4cycle(const Graph& g, const CycleContext& ctx) {
    if (ctx.k() != 4) throw ContractViolation("context is not a 4-cycle");
    return reduce_cycle(g, ctx, 0, 2, StepKind::four_cycle);
}

std::pair<Graph, ReductionStep> reduce_5cycle(const Graph& g, const CycleContext& ctx) {
    if (ctx.k() != 5) throw ContractViolation("context is not a 5-cycle");
    return reduce_cycle(g, ctx, 0, 3, StepKind::five_cycle);
}

Coloring extend_4cycle(const Coloring& reduced, const CycleContext& ctx_in,
                       const Graph& g, ReductionStep& step) {
    Coloring c = reduced;
    auto color_of = [&](VertexId v) { return *c.get(v); };

    if (color_of(ctx_in.exterior[0]) == color_of(ctx_in.exterior[2]))
        throw ProofAssertion("four-cycle extension", "joined pair shares a color");

    // Pick the relabeling under which y3 and y4 differ. At least one of the
    // four exists: all failing would force equal colors on the joined pair.
    static const std::vector<std::vector<int>> labelings = {
        {0, 1, 2, 3}, {2, 3, 0, 1}, {0, 3, 2, 1}, {2, 1, 0, 3}};
    CycleContext ctx;
    bool found = false;
    for (std::size_t li = 0; li < labelings.size(); ++li) {
        CycleContext cand = permuted(ctx_in, labelings[li]);
        if (color_of(cand.exterior[2]) != color_of(cand.exterior[3])) {
            ctx = std::move(cand);
            step.margins["relabeling"] = static_cast<int>(li);
            found = true;
            break;
        }
    }
    if (!found)
        throw ProofAssertion("four-cycle extension", "no labeling separates y3 from y4");

    const auto& x = ctx.cycle;
    const auto& y = ctx.exterior;

    c.unset(y[1]);
    {
        auto free = admissible_colors(g, c, x[0]);
        if (!std::binary_search(free.begin(), free.end(), color_of(y[2])))
            throw ProofAssertion("four-cycle extension", "x1 cannot take the color of y3");
        c.set(x[0], color_of(y[2]));
    }
    {
        auto d2 = distance2_neighbors(g, y[1]);
        if (d2.size() > 9)
            throw ProofAssertion("four-cycle extension", "y2 has more than nine distance-2 neighbors");
        auto free = admissible_colors(g, c, y[1]);
        if (free.empty()) throw ProofAssertion("four-cycle extension", "y2 cannot be recolored");
        step.margins["y2"] = static_cast<int>(free.size());
        c.set(y[1], free.front());
    }

    // Margins at the start of the cycle completion phase; x4 sees at most six
    // colored distance-2 neighbors of which two (x1 and y3) share a color,
    // hence at least three free colors.
    step.margins["x2_phase"] = static_cast<int>(admissible_colors(g, c, x[1]).size());
    step.margins["x3_phase"] = static_cast<int>(admissible_colors(g, c, x[2]).size());
    {
        int m4 = static_cast<int>(admissible_colors(g, c, x[3]).size());
        step.margins["x4"] = m4;
        if (m4 < 3)
            throw ProofAssertion("four-cycle extension",
                                 "x4 has fewer than three available colors");
    }
    {
        auto free = admissible_colors(g, c, x[1]);
        step.margins["x2"] = static_cast<int>(free.size());
        if (free.size() < 2)
            throw ProofAssertion("four-cycle extension", "x2 has fewer than two available colors");
        c.set(x[1], free.front());
    }
    {
        auto free = admissible_colors(g, c, x[2]);
        step.margins["x3"] = static_cast<int>(free.size());
        if (free.size() < 2)
            throw ProofAssertion("four-cycle extension", "x3 has fewer than two available colors");
        c.set(x[2], free.front());
    }
    {
        auto free = admissible_colors(g, c, x[3]);
        step.margins["x4_assign"] = static_cast<int>(free.size());
        if (free.empty())
            throw ProofAssertion("four-cycle extension", "x4 has no available color");
        c.set(x[3], free.front());
    }
    return c;
}

Coloring extend_5cycle(const Coloring& reduced, const CycleContext& ctx_in,
                       const Graph& g, ReductionStep& step) {
    Coloring c = reduced;
    auto color_of = [&](VertexId v) { return *c.get(v); };

    if (color_of(ctx_in.exterior[0]) == color_of(ctx_in.exterior[3]))
        throw ProofAssertion("five-cycle extension", "joined pair shares a color");

    // Identity or the reflection through x5; both failing would force equal
    // colors on the joined pair.
    static const std::vector<std::vector<int>> labelings = {{0, 1, 2, 3, 4},
                                                            {3, 2, 1, 0, 4}};
    CycleContext ctx;
    bool found = false;
    for (std::size_t li = 0; li < labelings.size(); ++li) {
        CycleContext cand = permuted(ctx_in, labelings[li]);
        if (color_of(cand.exterior[3]) != color_of(cand.exterior[4])) {
            ctx = std::move(cand);
            step.margins["relabeling"] = static_cast<int>(li);
            found = true;
            break;
        }
    }
    if (!found)
        throw ProofAssertion("five-cycle extension", "no labeling separates y4 from y5");

    const auto& x = ctx.cycle;
    const auto& y = ctx.exterior;

    c.unset(y[1]);
    c.unset(y[2]);
    {
        auto free = admissible_colors(g, c, x[0]);
        if (!std::binary_search(free.begin(), free.end(), color_of(y[3])))
            throw ProofAssertion("five-cycle extension", "x1 cannot take the color of y4");
        c.set(x[0], color_of(y[3]));
    }
    {
        auto d2 = distance2_neighbors(g, y[1]);
        if (d2.size() > 9)
            throw ProofAssertion("five-cycle extension", "y2 has more than nine distance-2 neighbors");
        auto free = admissible_colors(g, c, y[1]);
        if (free.empty()) throw ProofAssertion("five-cycle extension", "y2 cannot be recolored");
        step.margins["y2"] = static_cast<int>(free.size());
        c.set(y[1], free.front());
    }
    {
        // Attempt to give x4 the color of y1; when that fails, y1 and y5
        // must share a color, and any admissible color does.
        auto free = admissible_colors(g, c, x[3]);
        step.margins["x4"] = static_cast<int>(free.size());
        if (std::binary_search(free.begin(), free.end(), color_of(y[0]))) {
            step.margins["x4_matched"] = 1;
            c.set(x[3], color_of(y[0]));
        } else {
            step.margins["x4_matched"] = 0;
            if (color_of(y[0]) != color_of(y[4]))
                throw ProofAssertion("five-cycle extension",
                                     "x4 rejected the color of y1 although y1 and y5 differ");
            if (free.empty())
                throw ProofAssertion("five-cycle extension", "x4 has no available color");
            c.set(x[3], free.front());
        }
    }
    {
        auto d2 = distance2_neighbors(g, y[2]);
        if (d2.size() > 9)
            throw ProofAssertion("five-cycle extension", "y3 has more than nine distance-2 neighbors");
        auto free = admissible_colors(g, c, y[2]);
        if (free.empty()) throw ProofAssertion("five-cycle extension", "y3 cannot be recolored");
        step.margins["y3"] = static_cast<int>(free.size());
        c.set(y[2], free.front());
    }

    // Phase margins before x2 and x3 are colored. x5 sees at most seven
    // colored distance-2 neighbors carrying two same-colored pairs, so at
    // least three colors stay free.
    step.margins["x2_phase"] = static_cast<int>(admissible_colors(g, c, x[1]).size());
    {
        int m3 = static_cast<int>(admissible_colors(g, c, x[2]).size());
        step.margins["x3_phase"] = m3;
        if (m3 < 2)
            throw ProofAssertion("five-cycle extension",
                                 "x3 has fewer than two available colors at phase start");
    }
    {
        int m5 = static_cast<int>(admissible_colors(g, c, x[4]).size());
        step.margins["x5"] = m5;
        if (m5 < 3)
            throw ProofAssertion("five-cycle extension",
                                 "x5 has fewer than three available colors");
    }
    for (auto [pos, key] : {std::pair<int, const char*>{1, "x2"}, {2, "x3"}, {4, "x5_assign"}}) {
        auto free = admissible_colors(g, c, x[pos]);
        step.margins[key] = static_cast<int>(free.size());
        if (free.empty())
            throw ProofAssertion("five-cycle extension",
                                 std::string(key) + " has no available color");
        c.set(x[pos], free.front());
    }
    return c;
}

// ---------------------------------------------------------------------------
// The recursion.

namespace {

Graph apply_step(const Graph& g, const ReductionStep& step) {
    Graph g2 = g;
    for (VertexId v : step.removed) {
        if (!g2.has_vertex(v)) throw ContractViolation("trace removes an absent vertex");
        g2.remove_vertex(v);
    }
    for (const auto& [u, w] : step.added_edges) {
        if (g2.has_edge(u, w)) throw ContractViolation("trace adds an existing edge");
        g2.add_edge(u, w);
    }
    return g2;
}

struct Engine {
    int palette = 8;
    bool replaying = false;
    std::vector<ReductionStep> steps;
    const std::vector<ReductionStep>* script = nullptr;
    std::size_t pos = 0;
    std::vector<AssertionEvent> events;
    int depth_limit = 0;

    Coloring base_color(const Graph& g, bool unbounded) {
        std::optional<int> bound;
        if (unbounded)
            bound = std::max<int>(static_cast<int>(g.vertex_count()), kExactSearchMaxVertices);
        auto r = exact_chromatic2(g, palette, bound);
        if (!r) throw TheoremViolation("exact search needs more than the palette");
        Coloring c = std::move(r->witness);
        c.palette_size = palette;
        return c;
    }

    const Embedding& require_embedding(const Graph& g, std::optional<Embedding>& cache) {
        if (!cache) {
            auto r = embed(g);
            auto* e = std::get_if<Embedding>(&r);
            if (!e)
                throw ProofAssertion("embedding", "a reduced graph stopped being planar");
            cache = std::move(*e);
        }
        return *cache;
    }

    Coloring color(const Graph& g, int depth) {
        std::size_t mark = steps.size();
        try {
            return color_inner(g, depth);
        } catch (const ProofAssertion& pa) {
            if (replaying) throw;
            events.push_back({pa.step, pa.what_failed, g.vertex_count()});
            steps.resize(mark);
            ReductionStep s;
            s.kind = StepKind::base;
            steps.push_back(std::move(s));
            return base_color(g, true);
        }
    }

    Coloring color_inner(const Graph& g, int depth) {
        if (depth > depth_limit)
            throw TheoremViolation("recursion depth exceeded the vertex count");

        if (replaying) return run_scripted(g, depth);

        if (static_cast<int>(g.vertex_count()) <= kBaseCaseMaxVertices) {
            emit(ReductionStep{StepKind::base, {}, {}, {}, {}});
            return base_color(g, false);
        }

        auto comps = components(g);
        if (comps.size() > 1) {
            emit(ReductionStep{StepKind::component_split, {}, {}, {}, {}});
            Coloring out;
            out.palette_size = palette;
            for (const Graph& comp : comps) {
                Coloring c = color(comp, depth + 1);
                out.assignment.insert(c.assignment.begin(), c.assignment.end());
            }
            return out;
        }

        VertexId low = -1;
        for (VertexId v : g.vertices())
            if (g.degree(v) <= 1) { low = v; break; }
        if (low < 0)
            for (VertexId v : g.vertices())
                if (g.degree(v) == 2) { low = v; break; }
        if (low >= 0) {
            auto [g2, step] = reduce_low_degree(g, low);
            std::size_t at = emit(std::move(step));
            Coloring c2 = color(g2, depth + 1);
            return extend_low_degree(c2, steps[at], g);
        }

        // Cubic from here on.
        VertexId tri = -1;
        for (VertexId v : g.vertices()) {
            const auto& nb = g.neighbors(v);
            if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) ||
                g.has_edge(nb[1], nb[2])) {
                tri = v;
                break;
            }
        }
        if (tri >= 0) {
            auto [g2, step] = reduce_triangle(g, tri);
            std::size_t at = emit(std::move(step));
            Coloring c2 = color(g2, depth + 1);
            return extend_triangle(c2, steps[at], g);
        }

        // Cubic, girth at least four. Split on any short chordless cycle
        // with two nonempty sides before touching the minimal cycle.
        std::optional<Embedding> emb;
        for (const auto& cyc : enumerate_short_cycles(g, 5)) {
            auto sc = classify_sides(require_embedding(g, emb), cyc);
            if (sc.inside.empty() || sc.outside.empty()) continue;
            CycleContext cctx;
            cctx.cycle = cyc;
            emit(ReductionStep{StepKind::inside_outside, {}, {}, cctx, {}});
            auto [h0, h1] = split_on_cycle(g, *emb, cyc);
            Coloring c0 = color(h0, depth + 1);
            Coloring c1 = color(h1, depth + 1);
            return merge_colorings(c0, c1, cyc);
        }

        auto cyc = shortest_cycle(g);
        if (!cyc || (cyc->size() != 4 && cyc->size() != 5))
            throw ProofAssertion("minimal cycle",
                                 "a cubic planar graph must contain a cycle of length four or five");
        CycleContext ctx = build_cycle_context(g, require_embedding(g, emb), *cyc);
        if (ctx.k() == 4) {
            auto [g2, step] = reduce_4cycle(g, ctx);
            std::size_t at = emit(std::move(step));
            Coloring c2 = color(g2, depth + 1);
            return extend_4cycle(c2, ctx, g, steps[at]);
        }
        auto [g2, step] = reduce_5cycle(g, ctx);
        std::size_t at = emit(std::move(step));
        Coloring c2 = color(g2, depth + 1);
        return extend_5cycle(c2, ctx, g, steps[at]);
    }

    Coloring run_scripted(const Graph& g, int depth) {
        if (pos >= script->size()) throw ContractViolation("trace ended early");
        ReductionStep step = (*script)[pos++];
        switch (step.kind) {
            case StepKind::base:
                return base_color(g, true);
            case StepKind::component_split: {
                Coloring out;
                out.palette_size = palette;
                for (const Graph& comp : components(g)) {
                    Coloring c = color_inner(comp, depth + 1);
                    out.assignment.insert(c.assignment.begin(), c.assignment.end());
                }
                return out;
            }
            case StepKind::inside_outside: {
                if (!step.context) throw ContractViolation("split step without a cycle");
                auto r = embed(g);
                auto* e = std::get_if<Embedding>(&r);
                if (!e) throw ContractViolation("trace replay hit a non-planar graph");
                auto [h0, h1] = split_on_cycle(g, *e, step.context->cycle);
                Coloring c0 = color_inner(h0, depth + 1);
                Coloring c1 = color_inner(h1, depth + 1);
                return merge_colorings(c0, c1, step.context->cycle);
            }
            case StepKind::low_degree_a:
            case StepKind::low_degree_b: {
                Graph g2 = apply_step(g, step);
                Coloring c2 = color_inner(g2, depth + 1);
                return extend_low_degree(c2, step, g);
            }
            case StepKind::triangle_c: {
                Graph g2 = apply_step(g, step);
                Coloring c2 = color_inner(g2, depth + 1);
                return extend_triangle(c2, step, g);
            }
            case StepKind::four_cycle:
            case StepKind::five_cycle: {
                if (!step.context) throw ContractViolation("cycle step without a context");
                Graph g2 = apply_step(g, step);
                Coloring c2 = color_inner(g2, depth + 1);
                return step.kind == StepKind::four_cycle
                           ? extend_4cycle(c2, *step.context, g, step)
                           : extend_5cycle(c2, *step.context, g, step);
            }
        }
        throw ContractViolation("unreachable step kind");
    }

    std::size_t emit(ReductionStep step) {
        steps.push_back(std::move(step));
        return steps.size() - 1;
    }
};

}  // namespace

RunReport color_graph(const Graph& g, int palette) {
    if (palette < 1) throw ContractViolation("palette must be positive");
    if (auto bad = validate_subcubic(g)) throw DegreeViolation(*bad, g.degree(*bad));
    {
        auto r = embed(g);
        if (auto* np = std::get_if<NonPlanar>(&r)) throw NonPlanarInput(np->reason);
    }

    Engine engine;
    engine.palette = palette;
    engine.depth_limit = static_cast<int>(g.vertex_count()) + 8;

    RunReport report;
    report.coloring = engine.color(g, 0);
    report.trace.steps = std::move(engine.steps);
    report.events = std::move(engine.events);

    auto violations = verify_coloring(g, report.coloring);
    if (!violations.empty())
        report.events.push_back({"final verification",
                                 std::to_string(violations.size()) + " distance-2 violations",
                                 g.vertex_count()});
    return report;
}

Coloring replay_trace(const Graph& g, const ReductionTrace& trace, int palette) {
    Engine engine;
    engine.palette = palette;
    engine.replaying = true;
    engine.script = &trace.steps;
    engine.depth_limit = static_cast<int>(g.vertex_count()) + 8;
    Coloring c = engine.color_inner(g, 0);
    if (engine.pos != trace.steps.size())
        throw ContractViolation("trace has unused steps");
    return c;
}

}  // namespace dist2
