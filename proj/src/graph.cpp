#include "dist2/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "dist2/errors.hpp"

namespace dist2 {

Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::from_edges(std::initializer_list<Edge> edges) {
    return from_edges(std::vector<Edge>(edges));
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
    Graph g;
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::index_of(VertexId v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

int Graph::index_or_throw(VertexId v) const {
    int i = index_of(v);
    if (i < 0) throw UnknownVertex(v);
    return i;
}

void Graph::add_vertex(VertexId v) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it != verts_.end() && *it == v) return;
    auto pos = it - verts_.begin();
    verts_.insert(it, v);
    adj_.emplace(adj_.begin() + pos);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw NotSimple("self loop at vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    auto& nu = adj_[index_of(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw NotSimple("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[index_of(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    int iu = index_or_throw(u);
    int iv = index_or_throw(v);
    auto& nu = adj_[iu];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v)
        throw ContractViolation("no edge " + std::to_string(u) + "-" + std::to_string(v));
    nu.erase(it);
    auto& nv = adj_[iv];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edges_;
}

void Graph::remove_vertex(VertexId v) {
    int iv = index_or_throw(v);
    edges_ -= adj_[iv].size();
    for (VertexId w : adj_[iv]) {
        auto& nw = adj_[index_of(w)];
        nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
    }
    verts_.erase(verts_.begin() + iv);
    adj_.erase(adj_.begin() + iv);
}

bool Graph::has_vertex(VertexId v) const { return index_of(v) >= 0; }

bool Graph::has_edge(VertexId u, VertexId v) const {
    int iu = index_of(u);
    if (iu < 0 || index_of(v) < 0) return false;
    const auto& nu = adj_[iu];
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::degree(VertexId v) const {
    return static_cast<int>(adj_[index_or_throw(v)].size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    return adj_[index_or_throw(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (VertexId w : adj_[i])
            if (verts_[i] < w) out.emplace_back(verts_[i], w);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return verts_ == other.verts_ && adj_ == other.adj_;
}

int degree(const Graph& g, VertexId v) { return g.degree(v); }

std::optional<VertexId> validate_subcubic(const Graph& g) {
    for (VertexId v : g.vertices())
        if (g.degree(v) > 3) return v;
    return std::nullopt;
}

VertexSet distance2_neighbors(const Graph& g, VertexId v) {
    VertexSet out;
    for (VertexId u : g.neighbors(v)) {
        out.push_back(u);
        for (VertexId w : g.neighbors(u))
            if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph square(const Graph& g) {
    Graph sq;
    for (VertexId v : g.vertices()) sq.add_vertex(v);
    for (VertexId v : g.vertices())
        for (VertexId w : distance2_neighbors(g, v))
            if (v < w) sq.add_edge(v, w);
    return sq;
}

std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
    const std::size_t k = cycle.size();
    if (k == 0) return cycle;
    auto best = cycle;
    auto consider = [&](const std::vector<VertexId>& cand) {
        if (cand < best) best = cand;
    };
    std::vector<VertexId> rot(k);
    for (std::size_t dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t i = 0; i < k; ++i) rot[i] = cycle[(s + i) % k];
            consider(rot);
        }
        std::reverse(cycle.begin(), cycle.end());
    }
    return best;
}

bool is_cycle_in(const Graph& g, const std::vector<VertexId>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 3) return false;
    std::vector<VertexId> sorted(cycle);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (!g.has_vertex(cycle[i])) return false;
        if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
    }
    return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
    if (!is_cycle_in(g, cycle)) return false;
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // cycle edge
            if (g.has_edge(cycle[i], cycle[j])) return false;
        }
    return true;
}

namespace {

// DFS over paths anchored at their smallest vertex; each cycle is produced
// once up to rotation/reflection by requiring path[1] < path.back() at close.
void short_cycle_dfs(const Graph& g, std::vector<VertexId>& path, int max_len,
                     std::vector<std::vector<VertexId>>& out) {
    const VertexId root = path.front();
    const VertexId tip = path.back();
    for (VertexId next : g.neighbors(tip)) {
        if (next == root && path.size() >= 3) {
            if (path[1] < path.back()) out.push_back(path);
            continue;
        }
        if (next <= root) continue;
        if (static_cast<int>(path.size()) >= max_len) continue;
        bool seen = false;
        for (VertexId p : path)
            if (p == next) { seen = true; break; }
        if (seen) continue;
        path.push_back(next);
        short_cycle_dfs(g, path, max_len, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<VertexId>> enumerate_short_cycles(const Graph& g, int max_len) {
    if (max_len < 3 || max_len > 5)
        throw ContractViolation("max_len must be in 3..5");
    std::vector<std::vector<VertexId>> found;
    for (VertexId v : g.vertices()) {
        std::vector<VertexId> path{v};
        short_cycle_dfs(g, path, max_len, found);
    }
    std::vector<std::vector<VertexId>> out;
    for (auto& c : found)
        if (is_chordless_cycle(g, c)) out.push_back(canonical_cycle(std::move(c)));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// BFS-based minimum cycle extraction used once short chordless cycles are
// ruled out. Candidates come from non-tree edges; only vertex-disjoint
// root paths at the current best length are kept.
std::optional<std::vector<VertexId>> bfs_min_cycle(const Graph& g) {
    const auto& vs = g.vertices();
    int best_len = std::numeric_limits<int>::max();
    std::vector<VertexId> best;

    std::map<VertexId, int> dist;
    std::map<VertexId, VertexId> parent;
    auto path_to_root = [&](VertexId v) {
        std::vector<VertexId> p{v};
        while (parent[p.back()] != p.back()) p.push_back(parent[p.back()]);
        return p;  // v .. root
    };

    for (VertexId root : vs) {
        dist.clear();
        parent.clear();
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
                    int len = dist[u] + dist[w] + 1;
                    if (len > best_len) continue;
                    auto pu = path_to_root(u);
                    auto pw = path_to_root(w);
                    std::vector<VertexId> su(pu.begin(), pu.end() - 1);
                    std::sort(su.begin(), su.end());
                    bool disjoint = true;
                    for (auto it = pw.begin(); it != pw.end() - 1; ++it)
                        if (std::binary_search(su.begin(), su.end(), *it)) {
                            disjoint = false;
                            break;
                        }
                    if (!disjoint) continue;
                    std::vector<VertexId> cyc(pu.rbegin(), pu.rend());  // root .. u
                    cyc.insert(cyc.end(), pw.begin(), pw.end() - 1);    // w .. (below root)
                    if (static_cast<int>(cyc.size()) != len) continue;
                    auto canon = canonical_cycle(std::move(cyc));
                    if (len < best_len || (len == best_len && canon < best)) {
                        best_len = len;
                        best = std::move(canon);
                    }
                }
            }
        }
    }
    if (best.empty()) return std::nullopt;
    return best;
}

}  // namespace

std::optional<std::vector<VertexId>> shortest_cycle(const Graph& g) {
    // Complete enumeration settles girth <= 5 exactly; a shortest cycle is
    // always chordless, so the chordless filter loses nothing.
    auto shorts = enumerate_short_cycles(g, 5);
    if (!shorts.empty()) {
        std::size_t girth = shorts.front().size();
        std::vector<VertexId> best = shorts.front();
        for (const auto& c : shorts) {
            if (c.size() != girth) break;
            if (c < best) best = c;
        }
        return best;
    }
    return bfs_min_cycle(g);
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    std::vector<char> seen(g.vertex_count(), 0);
    const auto& vs = g.vertices();
    auto idx = [&](VertexId v) {
        return std::lower_bound(vs.begin(), vs.end(), v) - vs.begin();
    };
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (seen[i]) continue;
        VertexSet comp;
        std::queue<VertexId> q;
        q.push(vs[i]);
        seen[i] = 1;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            comp.push_back(u);
            for (VertexId w : g.neighbors(u)) {
                auto j = idx(w);
                if (!seen[j]) {
                    seen[j] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(induced_subgraph(g, comp));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    Graph out;
    for (VertexId v : keep) {
        if (!g.has_vertex(v)) throw UnknownVertex(v);
        out.add_vertex(v);
    }
    for (VertexId v : keep)
        for (VertexId w : g.neighbors(v))
            if (v < w && std::binary_search(keep.begin(), keep.end(), w))
                out.add_edge(v, w);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out = a;
    for (VertexId v : b.vertices()) {
        if (a.has_vertex(v))
            throw ContractViolation("overlapping vertex id " + std::to_string(v));
        out.add_vertex(v);
    }
    for (const auto& [u, v] : b.edges()) out.add_edge(u, v);
    return out;
}

}  // namespace dist2
