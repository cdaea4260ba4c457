#include "dist2/oracle.hpp"

#include <algorithm>

#include "dist2/errors.hpp"

namespace dist2 {

void Coloring::set(VertexId v, int color) {
    if (color < 0 || color >= palette_size)
        throw ContractViolation("color " + std::to_string(color) + " outside palette of " +
                                std::to_string(palette_size));
    assignment[v] = color;
}

bool Coloring::total_on(const Graph& g) const {
    for (VertexId v : g.vertices())
        if (!assignment.count(v)) return false;
    return true;
}

int Coloring::colors_used() const {
    std::vector<int> used;
    for (const auto& [v, c] : assignment) used.push_back(c);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return static_cast<int>(used.size());
}

std::vector<Violation> verify_coloring(const Graph& g, const Coloring& c) {
    if (!c.total_on(g))
        throw ContractViolation("verify_coloring needs a total coloring");
    std::vector<Violation> out;
    for (VertexId u : g.vertices()) {
        int cu = *c.get(u);
        for (VertexId v : g.neighbors(u)) {
            if (u < v && cu == *c.get(v))
                out.push_back({u, v, false, std::nullopt});
            for (VertexId w : g.neighbors(v)) {
                if (w == u || u >= w) continue;
                if (g.has_edge(u, w)) continue;  // reported as first order
                if (cu == *c.get(w)) {
                    // one witness per pair
                    bool dup = false;
                    for (const auto& viol : out)
                        if (viol.u == u && viol.v == w) dup = true;
                    if (!dup) out.push_back({u, w, true, v});
                }
            }
        }
    }
    return out;
}

namespace {

struct SquareSearch {
    std::vector<std::vector<int>> adj;  // square graph, local indices
    std::vector<int> order;             // search order, local indices
    int n = 0;

    explicit SquareSearch(const Graph& g) {
        const auto& vs = g.vertices();
        n = static_cast<int>(vs.size());
        Graph sq = square(g);
        adj.assign(n, {});
        auto loc = [&](VertexId v) {
            return static_cast<int>(
                std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        for (const auto& [u, w] : sq.edges()) {
            adj[loc(u)].push_back(loc(w));
            adj[loc(w)].push_back(loc(u));
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());

        // Descending square degree, saturation-greedy tie-break computed
        // against already ordered vertices, then ascending index.
        std::vector<char> placed(n, 0);
        std::vector<int> sat(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 ||
                    adj[v].size() > adj[best].size() ||
                    (adj[v].size() == adj[best].size() && sat[v] > sat[best]))
                    best = v;
            }
            placed[best] = 1;
            order.push_back(best);
            for (int w : adj[best]) ++sat[w];
        }
    }

    // Backtracking k-coloring with canonical color-order pruning: a vertex
    // may use at most one color index beyond the maximum used so far.
    bool try_color(int k, std::vector<int>& colors) const {
        colors.assign(n, -1);
        return place(0, k, 0, colors);
    }

    bool place(int pos, int k, int max_used, std::vector<int>& colors) const {
        if (pos == n) return true;
        int v = order[pos];
        int limit = std::min(k - 1, max_used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int w : adj[v])
                if (colors[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colors[v] = c;
            if (place(pos + 1, k, std::max(max_used, c + 1), colors)) return true;
            colors[v] = -1;
        }
        return false;
    }

    // Greedy clique in the square graph: a cheap lower bound for chi.
    int clique_lower_bound() const {
        int best = n > 0 ? 1 : 0;
        for (int seed : order) {
            std::vector<int> clique{seed};
            for (int v : order) {
                if (v == seed) continue;
                bool all = true;
                for (int u : clique)
                    if (!std::binary_search(adj[v].begin(), adj[v].end(), u)) {
                        all = false;
                        break;
                    }
                if (all) clique.push_back(v);
            }
            best = std::max(best, static_cast<int>(clique.size()));
        }
        return best;
    }
};

Coloring to_coloring(const Graph& g, const std::vector<int>& colors, int palette) {
    Coloring out;
    out.palette_size = palette;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) out.assignment[vs[i]] = colors[i];
    return out;
}

}  // namespace

std::optional<Coloring> color_square_with(const Graph& g, int k) {
    if (g.vertex_count() == 0) return Coloring{{}, std::max(k, 1)};
    SquareSearch s(g);
    std::vector<int> colors;
    if (!s.try_color(k, colors)) return std::nullopt;
    return to_coloring(g, colors, k);
}

std::optional<ChromaticResult> exact_chromatic2(const Graph& g, int max_palette,
                                                std::optional<int> size_bound) {
    int bound = size_bound.value_or(kExactSearchMaxVertices);
    if (static_cast<int>(g.vertex_count()) > bound)
        throw SizeBoundExceeded("exact search limited to " + std::to_string(bound) +
                                " vertices");
    if (g.vertex_count() == 0) return ChromaticResult{0, Coloring{{}, 1}};

    SquareSearch s(g);
    std::vector<int> colors;
    for (int k = s.clique_lower_bound(); k <= max_palette; ++k)
        if (s.try_color(k, colors)) return ChromaticResult{k, to_coloring(g, colors, k)};
    return std::nullopt;
}

Coloring base_case_color(const Graph& g, std::optional<int> size_bound) {
    auto r = exact_chromatic2(g, 8, size_bound);
    if (!r) throw TheoremViolation("eight colors insufficient on a base case");
    Coloring c = std::move(r->witness);
    c.palette_size = 8;
    return c;
}

}  // namespace dist2
