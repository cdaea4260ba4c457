#pragma once

// Independent reference implementations used only to cross-check the library.
// They deliberately take different routes than the production code.

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <vector>

#include "dist2/coloring.hpp"
#include "dist2/graph.hpp"

#if __has_include(<boost/graph/boyer_myrvold_planar_test.hpp>)
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#define DIST2_HAVE_BOOST_PLANARITY 1
#endif

namespace testsupport {

using dist2::Graph;
using dist2::VertexId;

/// Girth by the classic per-root BFS bound over non-tree edges.
/// Returns INT_MAX for acyclic graphs.
inline int bfs_girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    for (VertexId root : g.vertices()) {
        std::map<VertexId, int> dist;
        std::map<VertexId, VertexId> parent;
        dist[root] = 0;
        parent[root] = root;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : g.neighbors(u)) {
                if (!dist.count(w)) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w && parent[w] != u) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

/// Chordless cycles of length 3..max_len by brute-force subset enumeration:
/// a vertex set forms a chordless cycle iff its induced subgraph is
/// connected and 2-regular. Returns canonical forms, sorted.
inline std::vector<std::vector<VertexId>> brute_chordless_cycles(const Graph& g,
                                                                 int max_len) {
    std::vector<std::vector<VertexId>> out;
    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) >= 3) {
            Graph sub = dist2::induced_subgraph(
                g, [&] {
                    dist2::VertexSet s;
                    for (int i : pick) s.push_back(vs[i]);
                    std::sort(s.begin(), s.end());
                    return s;
                }());
            bool two_regular = true;
            for (VertexId v : sub.vertices())
                if (sub.degree(v) != 2) two_regular = false;
            if (two_regular && dist2::components(sub).size() == 1) {
                // walk the cycle
                std::vector<VertexId> cyc{sub.vertices().front()};
                VertexId prev = -1;
                while (cyc.size() < sub.vertex_count()) {
                    for (VertexId w : sub.neighbors(cyc.back()))
                        if (w != prev) {
                            prev = cyc.back();
                            cyc.push_back(w);
                            break;
                        }
                }
                out.push_back(dist2::canonical_cycle(cyc));
            }
        }
        if (static_cast<int>(pick.size()) == max_len) return;
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

#ifdef DIST2_HAVE_BOOST_PLANARITY
inline bool boost_planar(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>>;
    const auto& vs = g.vertices();
    BoostGraph bg(vs.size());
    auto loc = [&](VertexId v) {
        return std::lower_bound(vs.begin(), vs.end(), v) - vs.begin();
    };
    for (const auto& [u, w] : g.edges()) boost::add_edge(loc(u), loc(w), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}
#endif

/// First valid distance-2 coloring (lexicographic in vertex order) with the
/// extra constraint that two chosen vertices share a color; nullopt if none.
inline std::optional<dist2::Coloring> coloring_with_equal_pair(const Graph& g, int k,
                                                               VertexId a, VertexId b) {
    const auto& vs = g.vertices();
    std::map<VertexId, dist2::VertexSet> d2;
    for (VertexId v : vs) d2[v] = dist2::distance2_neighbors(g, v);
    dist2::Coloring c;
    c.palette_size = k;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == vs.size()) return *c.get(a) == *c.get(b);
        VertexId v = vs[i];
        for (int col = 0; col < k; ++col) {
            bool ok = true;
            for (VertexId w : d2[v])
                if (c.get(w) == col) ok = false;
            if (v == b && c.has(a) && *c.get(a) != col) ok = false;
            if (!ok) continue;
            c.assignment[v] = col;
            if (rec(i + 1)) return true;
            c.assignment.erase(v);
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return c;
}

/// Relabels vertices through the given map, preserving adjacency.
inline Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& perm) {
    Graph out;
    for (VertexId v : g.vertices()) out.add_vertex(perm.at(v));
    for (const auto& [u, w] : g.edges()) out.add_edge(perm.at(u), perm.at(w));
    return out;
}

}  // namespace testsupport
