#include "dist2/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "dist2/errors.hpp"

namespace dist2 {

const std::vector<VertexId>& Embedding::rotation_at(VertexId v) const {
    const auto& vs = graph.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) throw UnknownVertex(v);
    return rotation[it - vs.begin()];
}

namespace {

// ---------------------------------------------------------------------------
// Biconnected blocks (edge partition) via DFS lowpoints.

struct BlockDecomposition {
    std::vector<std::vector<Edge>> blocks;
};

BlockDecomposition biconnected_blocks(const Graph& g) {
    BlockDecomposition out;
    std::map<VertexId, int> disc, low;
    std::vector<Edge> stack;
    int timer = 0;

    auto pop_block = [&](const Edge& until) {
        std::vector<Edge> block;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    };

    // Recursive DFS; neighbor order is ascending so the result is
    // deterministic.
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId u, VertexId parent) {
        disc[u] = low[u] = timer++;
        for (VertexId w : g.neighbors(u)) {
            if (!disc.count(w)) {
                Edge e = make_edge(u, w);
                stack.push_back(e);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) pop_block(e);
            } else if (w != parent && disc[w] < disc[u]) {
                stack.push_back(make_edge(u, w));
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };

    for (VertexId v : g.vertices())
        if (!disc.count(v)) dfs(v, -1);

    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

// ---------------------------------------------------------------------------
// Path addition embedding of one biconnected block, on local indices.

struct BlockEmbedder {
    int n = 0;
    std::vector<VertexId> label;           // local -> global id
    std::vector<std::vector<int>> adj;     // local, ascending
    std::set<std::pair<int, int>> eset;    // normalized local edges

    std::vector<char> embedded_v;
    std::set<std::pair<int, int>> embedded_e;
    std::vector<std::vector<int>> faces;       // directed simple cycles
    std::vector<std::vector<int>> face_verts;  // sorted copies

    std::string fail_reason;

    bool build(const std::vector<Edge>& edges) {
        std::vector<VertexId> vs;
        for (const auto& [a, b] : edges) {
            vs.push_back(a);
            vs.push_back(b);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        label = vs;
        n = static_cast<int>(vs.size());
        adj.assign(n, {});
        auto loc = [&](VertexId v) {
            return static_cast<int>(
                std::lower_bound(label.begin(), label.end(), v) - label.begin());
        };
        for (const auto& [a, b] : edges) {
            int u = loc(a), w = loc(b);
            adj[u].push_back(w);
            adj[w].push_back(u);
            eset.insert(std::minmax(u, w));
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
        embedded_v.assign(n, 0);
        return true;
    }

    std::vector<int> find_cycle() const {
        std::vector<int> parent(n, -2);
        std::vector<int> order;
        std::function<std::vector<int>(int)> dfs = [&](int u) -> std::vector<int> {
            for (int w : adj[u]) {
                if (parent[u] == w || parent[w] == u) continue;
                if (parent[w] == -2) {
                    parent[w] = u;
                    auto r = dfs(w);
                    if (!r.empty()) return r;
                } else {
                    // back edge u -> w; unwind u..w
                    std::vector<int> cyc{u};
                    int x = u;
                    while (x != w) {
                        x = parent[x];
                        cyc.push_back(x);
                    }
                    return cyc;
                }
            }
            return {};
        };
        parent[0] = -1;
        auto cyc = dfs(0);
        if (cyc.empty()) throw TheoremViolation("biconnected block without a cycle");
        return cyc;
    }

    void add_face(std::vector<int> walk) {
        std::vector<int> sorted(walk);
        std::sort(sorted.begin(), sorted.end());
        faces.push_back(std::move(walk));
        face_verts.push_back(std::move(sorted));
    }

    void mark_path(const std::vector<int>& path) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            embedded_e.insert(std::minmax(path[i], path[i + 1]));
            embedded_v[path[i]] = 1;
        }
        embedded_v[path.back()] = 1;
    }

    struct Fragment {
        std::vector<int> contacts;  // sorted embedded vertices
        std::vector<int> interior;  // sorted unembedded vertices (may be empty)
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // Single unembedded edges between embedded vertices.
        for (const auto& [u, w] : eset)
            if (!embedded_e.count({u, w}) && embedded_v[u] && embedded_v[w])
                out.push_back({{u, w}, {}});
        // Components of unembedded vertices with their attachments.
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (embedded_v[s] || seen[s]) continue;
            std::vector<int> interior, contacts;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                interior.push_back(u);
                for (int w : adj[u]) {
                    if (embedded_v[w]) {
                        contacts.push_back(w);
                    } else if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
                }
            }
            std::sort(interior.begin(), interior.end());
            std::sort(contacts.begin(), contacts.end());
            contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());
            out.push_back({std::move(contacts), std::move(interior)});
        }
        std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) {
            if (a.contacts != b.contacts) return a.contacts < b.contacts;
            return a.interior < b.interior;
        });
        return out;
    }

    std::vector<int> admissible_faces(const Fragment& f) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const auto& fv = face_verts[i];
            bool ok = true;
            for (int c : f.contacts)
                if (!std::binary_search(fv.begin(), fv.end(), c)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    // Path between two contacts whose interior lies in the fragment.
    std::vector<int> alpha_path(const Fragment& f) const {
        if (f.interior.empty()) return {f.contacts[0], f.contacts[1]};
        int start = f.contacts[0];
        std::map<int, int> parent;
        std::queue<int> q;
        auto interior_has = [&](int v) {
            return std::binary_search(f.interior.begin(), f.interior.end(), v);
        };
        for (int w : adj[start])
            if (interior_has(w) && !parent.count(w)) {
                parent[w] = start;
                q.push(w);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (embedded_v[w] && w != start) {
                    std::vector<int> rev{w, u};
                    int x = u;
                    while (parent[x] != start) {
                        x = parent[x];
                        rev.push_back(x);
                    }
                    rev.push_back(start);
                    std::reverse(rev.begin(), rev.end());
                    return rev;
                }
                if (interior_has(w) && !parent.count(w)) {
                    parent[w] = u;
                    q.push(w);
                }
            }
        }
        throw TheoremViolation("fragment path search failed");
    }

    void split_face(int face_idx, const std::vector<int>& path) {
        std::vector<int> W = faces[face_idx];
        const int L = static_cast<int>(W.size());
        int a = path.front(), b = path.back();
        int i = -1, j = -1;
        for (int t = 0; t < L; ++t) {
            if (W[t] == a) i = t;
            if (W[t] == b) j = t;
        }
        if (i < 0 || j < 0 || i == j)
            throw TheoremViolation("face split endpoints not on face");
        std::vector<int> w1, w2;
        for (int t = i;; t = (t + 1) % L) {
            w1.push_back(W[t]);
            if (t == j) break;
        }
        for (std::size_t t = path.size() - 2; t >= 1; --t) w1.push_back(path[t]);
        for (int t = j;; t = (t + 1) % L) {
            w2.push_back(W[t]);
            if (t == i) break;
        }
        for (std::size_t t = 1; t + 1 < path.size(); ++t) w2.push_back(path[t]);

        faces.erase(faces.begin() + face_idx);
        face_verts.erase(face_verts.begin() + face_idx);
        add_face(std::move(w1));
        add_face(std::move(w2));
    }

    bool run() {
        if (n < 3) throw ContractViolation("blocks below 3 vertices are handled separately");
        auto cyc = find_cycle();
        mark_path(cyc);
        embedded_e.insert(std::minmax(cyc.front(), cyc.back()));
        add_face(cyc);
        std::reverse(cyc.begin(), cyc.end());
        add_face(cyc);

        while (embedded_e.size() < eset.size()) {
            auto frags = fragments();
            if (frags.empty())
                throw TheoremViolation("edges remain but no fragment found");
            int chosen = -1, chosen_face = -1;
            for (std::size_t i = 0; i < frags.size(); ++i) {
                auto adm = admissible_faces(frags[i]);
                if (adm.empty()) {
                    fail_reason = "a bridge fragment fits in no face";
                    return false;
                }
                if (adm.size() == 1 && chosen < 0) {
                    chosen = static_cast<int>(i);
                    chosen_face = adm[0];
                }
            }
            if (chosen < 0) {
                chosen = 0;
                chosen_face = admissible_faces(frags[0])[0];
            }
            auto path = alpha_path(frags[chosen]);
            split_face(chosen_face, path);
            mark_path(path);
        }
        return true;
    }

    // Successor maps derived from face corners, as global-id rotations.
    std::map<VertexId, std::vector<VertexId>> rotations() const {
        std::vector<std::map<int, int>> succ(n);
        for (const auto& W : faces) {
            const int L = static_cast<int>(W.size());
            for (int t = 0; t < L; ++t) {
                int u = W[(t - 1 + L) % L], v = W[t], w = W[(t + 1) % L];
                succ[v][u] = w;
            }
        }
        std::map<VertexId, std::vector<VertexId>> out;
        for (int v = 0; v < n; ++v) {
            if (adj[v].empty()) continue;
            int start = adj[v].front();
            std::vector<VertexId> rot;
            int cur = start;
            do {
                rot.push_back(label[cur]);
                auto it = succ[v].find(cur);
                if (it == succ[v].end())
                    throw TheoremViolation("incomplete rotation successor");
                cur = it->second;
            } while (cur != start && rot.size() <= adj[v].size());
            if (rot.size() != adj[v].size())
                throw TheoremViolation("rotation at a vertex is not a single cycle");
            out[label[v]] = std::move(rot);
        }
        return out;
    }
};

std::vector<VertexId> canonical_rotation(std::vector<VertexId> rot) {
    if (rot.empty()) return rot;
    auto mn = std::min_element(rot.begin(), rot.end());
    std::rotate(rot.begin(), mn, rot.end());
    return rot;
}

}  // namespace

EmbedResult embed(const Graph& g) {
    Embedding emb;
    emb.graph = g;
    std::map<VertexId, std::vector<VertexId>> rot;

    auto decomposition = biconnected_blocks(g);
    for (const auto& block : decomposition.blocks) {
        if (block.size() == 1) {
            auto [a, b] = block[0];
            rot[a].push_back(b);
            rot[b].push_back(a);
            continue;
        }
        BlockEmbedder be;
        be.build(block);
        if (!be.run()) {
            NonPlanar np;
            np.reason = be.fail_reason;
            return np;
        }
        for (auto& [v, r] : be.rotations()) {
            auto& dst = rot[v];
            dst.insert(dst.end(), r.begin(), r.end());
        }
    }

    emb.rotation.reserve(g.vertex_count());
    for (VertexId v : g.vertices()) {
        auto r = canonical_rotation(rot.count(v) ? rot[v] : std::vector<VertexId>{});
        if (r.size() != g.neighbors(v).size())
            throw TheoremViolation("rotation is not a permutation of the adjacency list");
        emb.rotation.push_back(std::move(r));
    }
    return emb;
}

bool is_planar(const Graph& g) {
    return std::holds_alternative<Embedding>(embed(g));
}

namespace {

VertexId rotation_successor(const std::vector<VertexId>& rot, VertexId u) {
    auto it = std::find(rot.begin(), rot.end(), u);
    if (it == rot.end()) throw TheoremViolation("edge missing from rotation");
    ++it;
    return it == rot.end() ? rot.front() : *it;
}

}  // namespace

std::vector<Face> trace_faces(const Embedding& e) {
    const Graph& g = e.graph;
    std::vector<Face> out;
    std::set<std::pair<VertexId, VertexId>> used;

    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 0) out.push_back(Face{{v}});
        for (VertexId w : e.rotation_at(v)) {
            if (used.count({v, w})) continue;
            std::vector<VertexId> walk;
            VertexId a = v, b = w;
            do {
                used.insert({a, b});
                walk.push_back(a);
                VertexId next = rotation_successor(e.rotation_at(b), a);
                a = b;
                b = next;
            } while (!(a == v && b == w));
            out.push_back(Face{std::move(walk)});
        }
    }
    return out;
}

EulerStatus euler_check(const Embedding& e) {
    const Graph& g = e.graph;
    auto comps = components(g);
    std::map<VertexId, int> comp_of;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (VertexId v : comps[i].vertices()) comp_of[v] = static_cast<int>(i);

    std::vector<long> fcount(comps.size(), 0);
    for (const auto& f : trace_faces(e)) ++fcount[comp_of.at(f.walk.front())];

    for (std::size_t i = 0; i < comps.size(); ++i) {
        long V = static_cast<long>(comps[i].vertex_count());
        long E = static_cast<long>(comps[i].edge_count());
        if (V - E + fcount[i] != 2) return EulerStatus::inconsistent;
    }
    return EulerStatus::ok;
}

Face short_face_exists(const Embedding& e) {
    auto faces = trace_faces(e);
    const Face* best = nullptr;
    for (const auto& f : faces)
        if (!best || f.length() < best->length()) best = &f;
    if (!best || best->length() > 5)
        throw TheoremViolation("no face of length at most five");
    return *best;
}

SideClassification classify_sides(const Embedding& e, const std::vector<VertexId>& cycle) {
    const Graph& g = e.graph;
    if (!is_chordless_cycle(g, cycle))
        throw ContractViolation("classify_sides needs a chordless cycle");

    std::set<Edge> cycle_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        cycle_edges.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));

    auto faces = trace_faces(e);
    const int F = static_cast<int>(faces.size());
    std::vector<int> uf(F);
    for (int i = 0; i < F; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };

    std::map<Edge, std::vector<int>> edge_faces;
    for (int i = 0; i < F; ++i) {
        const auto& w = faces[i].walk;
        if (w.size() < 2) continue;
        for (std::size_t t = 0; t < w.size(); ++t) {
            Edge und = make_edge(w[t], w[(t + 1) % w.size()]);
            if (!cycle_edges.count(und)) edge_faces[und].push_back(i);
        }
    }
    for (const auto& [und, fs] : edge_faces)
        for (std::size_t i = 1; i < fs.size(); ++i) uf[find(fs[0])] = find(fs[i]);

    std::vector<int> roots;
    for (int i = 0; i < F; ++i) {
        int r = find(i);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    if (roots.size() != 2)
        throw ContractViolation("cycle does not split the faces into two groups");

    // The group holding the lexicographically smallest canonical boundary is
    // the outside.
    int best_face = 0;
    std::vector<VertexId> best_walk = canonical_cycle(faces[0].walk);
    for (int i = 1; i < F; ++i) {
        auto cw = canonical_cycle(faces[i].walk);
        if (cw < best_walk) {
            best_walk = std::move(cw);
            best_face = i;
        }
    }
    int outside_root = find(best_face);

    SideClassification sc;
    sc.cycle = cycle;
    std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
    std::set<VertexId> inside, outside;
    for (int i = 0; i < F; ++i) {
        auto& dst = (find(i) == outside_root) ? outside : inside;
        for (VertexId v : faces[i].walk)
            if (!on_cycle.count(v)) dst.insert(v);
    }
    sc.inside.assign(inside.begin(), inside.end());
    sc.outside.assign(outside.begin(), outside.end());

    for (VertexId v : sc.inside)
        if (outside.count(v)) throw TheoremViolation("vertex on both sides of a cycle");
    if (sc.inside.size() + sc.outside.size() + cycle.size() != g.vertex_count())
        throw TheoremViolation("side classification does not partition the vertices");
    for (const auto& [u, v] : g.edges()) {
        bool ui = inside.count(u), vi = inside.count(v);
        bool uo = outside.count(u), vo = outside.count(v);
        if ((ui && vo) || (uo && vi))
            throw TheoremViolation("edge joins the two sides of a cycle");
    }
    return sc;
}

}  // namespace dist2
