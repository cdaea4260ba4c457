#include "dist2/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "dist2/embedding.hpp"
#include "dist2/errors.hpp"

namespace dist2 {

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma - pos);
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad generator parameter: " + item);
            std::string key = item.substr(0, eq);
            std::string val = item.substr(eq + 1);
            if (key == "n")
                spec.n = std::stoi(val);
            else if (key == "seed")
                spec.seed = std::stoull(val);
            else
                throw std::invalid_argument("unknown generator parameter: " + key);
            pos = (comma == std::string::npos) ? rest.size() : comma + 1;
        }
    }
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::string out = kind;
    if (n > 0) out += ":n=" + std::to_string(n);
    if (seed != 0) out += (n > 0 ? "," : ":") + ("seed=" + std::to_string(seed));
    return out;
}

Graph wegner_graph() {
    // 0 center, 1..3 midpoints, 4..6 triangle corners.
    return Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6},
                              {4, 5}, {5, 6}, {4, 6}});
}

Graph k4_graph() {
    return Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph prism_graph(int n) {
    if (n < 3) throw std::invalid_argument("prism needs n >= 3");
    Graph g;
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
    }
    return g;
}

Graph cube_graph() { return prism_graph(4); }

Graph dodecahedron_graph() {
    return Graph::from_edges({
        {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 0},    // outer ring
        {0, 5},   {1, 6},   {2, 7},   {3, 8},   {4, 9},    // spokes
        {5, 10},  {5, 14},  {6, 10},  {6, 11},  {7, 11},
        {7, 12},  {8, 12},  {8, 13},  {9, 13},  {9, 14},   // middle ring
        {10, 15}, {11, 16}, {12, 17}, {13, 18}, {14, 19},  // spokes
        {15, 16}, {16, 17}, {17, 18}, {18, 19}, {19, 15},  // inner ring
    });
}

Graph petersen_graph() {
    Graph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph truncated_tetrahedron_graph() {
    return Graph::from_edges({
        {0, 1}, {1, 2}, {0, 2},     // corner triangles
        {3, 4}, {4, 5}, {3, 5},
        {6, 7}, {7, 8}, {6, 8},
        {9, 10}, {10, 11}, {9, 11},
        {0, 3}, {1, 6}, {2, 9},     // joins, one per original edge
        {4, 7}, {5, 10}, {8, 11},
    });
}

Graph icosahedron_graph() {
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    Graph g;
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5;
        int l = 6 + i, ln = 6 + (i + 1) % 5;
        g.add_edge(0, u);
        g.add_edge(u, un);
        g.add_edge(l, ln);
        g.add_edge(11, l);
        g.add_edge(u, l);
        g.add_edge(un, l);
    }
    return g;
}

Graph truncated_icosahedron_graph() {
    // Truncate every icosahedron vertex into a pentagon: the new vertices are
    // (vertex, incident edge) pairs, ordered around each vertex by the
    // embedding rotation, plus one edge per original edge.
    Graph ico = icosahedron_graph();
    auto r = embed(ico);
    auto* e = std::get_if<Embedding>(&r);
    if (!e) throw TheoremViolation("icosahedron failed to embed");

    std::map<Edge, int> edge_index;
    for (const auto& ed : ico.edges())
        edge_index.emplace(ed, static_cast<int>(edge_index.size()));
    auto corner = [&](VertexId v, VertexId w) {
        return 5 * v + [&] {
            const auto& rot = e->rotation_at(v);
            return static_cast<int>(std::find(rot.begin(), rot.end(), w) - rot.begin());
        }();
    };
    Graph g;
    for (VertexId v : ico.vertices()) {
        const auto& rot = e->rotation_at(v);
        for (std::size_t i = 0; i < rot.size(); ++i)
            g.add_edge(corner(v, rot[i]), corner(v, rot[(i + 1) % rot.size()]));
    }
    for (const auto& [u, w] : ico.edges()) g.add_edge(corner(u, w), corner(w, u));
    return g;
}

Graph nanotube_graph(int n) {
    if (n < 20 || n % 10 != 0)
        throw std::invalid_argument("nanotube needs n = 10m with n >= 20");
    // Rings of five: pentagon caps, spokes after even rings, zigzags after
    // odd ones. n = 20 gives the dodecahedron.
    const int rings = n / 5;
    auto id = [](int ring, int i) { return 5 * ring + ((i % 5) + 5) % 5; };
    Graph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(id(0, i), id(0, i + 1));
        g.add_edge(id(rings - 1, i), id(rings - 1, i + 1));
    }
    for (int j = 0; j + 1 < rings; ++j)
        for (int i = 0; i < 5; ++i) {
            g.add_edge(id(j, i), id(j + 1, i));
            if (j % 2 == 1) g.add_edge(id(j, i), id(j + 1, i - 1));
        }
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g;
    g.add_vertex(0);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph diamond_graph() {
    return Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

Graph pentagon_sandwich_graph() {
    // 0..4: the separating 5-cycle. 5..12: a cube with one edge removed,
    // hung inside on vertices 0 and 1. 13..19: a cube with one vertex
    // removed, hung outside on vertices 2, 3 and 4. Every degree is 3.
    return Graph::from_edges({
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
        // cube 5..12 minus the 5-6 edge; ports 5 and 6
        {5, 7}, {5, 9}, {6, 8}, {6, 10}, {7, 8}, {7, 11},
        {8, 12}, {9, 10}, {9, 11}, {10, 12}, {11, 12},
        {0, 5}, {1, 6},
        // cube 13..20 minus vertex 20; ports 16, 18, 19
        {13, 14}, {13, 15}, {13, 17}, {14, 16}, {14, 18},
        {15, 16}, {15, 19}, {17, 18}, {17, 19},
        {2, 16}, {3, 18}, {4, 19},
    });
}

namespace {

struct Tri {
    int a, b, c;
};

}  // namespace

Graph random_cubic_planar(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random-cubic-planar needs even n >= 4");
    // Stack a triangulation on k vertices; its dual is cubic planar on
    // 2k-4 vertices.
    const int k = n / 2 + 2;
    Lcg rng(seed);
    std::vector<Tri> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int v = 4; v < k; ++v) {
        int f = static_cast<int>(rng.below(static_cast<std::uint32_t>(faces.size())));
        Tri t = faces[f];
        faces[f] = {t.a, t.b, v};
        faces.push_back({t.a, t.c, v});
        faces.push_back({t.b, t.c, v});
    }

    std::map<Edge, std::vector<int>> edge_faces;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const Tri& t = faces[i];
        edge_faces[make_edge(t.a, t.b)].push_back(static_cast<int>(i));
        edge_faces[make_edge(t.a, t.c)].push_back(static_cast<int>(i));
        edge_faces[make_edge(t.b, t.c)].push_back(static_cast<int>(i));
    }
    Graph dual;
    for (const auto& [e, fs] : edge_faces) {
        if (fs.size() != 2)
            throw TheoremViolation("triangulation edge not on two faces");
        dual.add_edge(fs[0], fs[1]);
    }
    if (static_cast<int>(dual.vertex_count()) != n)
        throw TheoremViolation("dual size law 2k-4 violated");
    return dual;
}

Graph random_subcubic_planar(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random-subcubic-planar needs n >= 1");
    Lcg rng(seed);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    const int attempts = 6 * n;
    for (int t = 0; t < attempts; ++t) {
        int u = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
        if (u == v || g.has_edge(u, v)) continue;
        if (g.degree(u) >= 3 || g.degree(v) >= 3) continue;
        g.add_edge(u, v);
        // Subdivision of K5 or K3,3 needs at least nine edges; below that the
        // planarity probe cannot fail.
        if (g.edge_count() >= 9 && !is_planar(g)) g.remove_edge(u, v);
    }
    return g;
}

namespace {

// Shifts all ids by a fixed offset.
Graph shifted(const Graph& g, int offset) {
    Graph out;
    for (VertexId v : g.vertices()) out.add_vertex(v + offset);
    for (const auto& [u, w] : g.edges()) out.add_edge(u + offset, w + offset);
    return out;
}

// Opens a cubic gadget by removing its first edge; the two endpoints become
// the ports. They end up on a common face, so any attachment order is planar.
std::pair<Graph, std::array<VertexId, 2>> two_port_gadget(Graph g) {
    Edge first = g.edges().front();
    g.remove_edge(first.first, first.second);
    return {std::move(g), {first.first, first.second}};
}

// Opens a cubic gadget by removing its first vertex; the three neighbors
// become ports. Removing a vertex merges its incident faces, so the ports
// sit on one face in the cyclic order the rotation at the cut had; stacked
// duals are 3-connected, making that rotation unique up to reflection.
std::pair<Graph, std::array<VertexId, 3>> three_port_gadget(Graph g) {
    VertexId cut = g.vertices().front();
    auto r = embed(g);
    auto* e = std::get_if<Embedding>(&r);
    if (!e) throw TheoremViolation("gadget is not planar");
    auto order = e->rotation_at(cut);
    g.remove_vertex(cut);
    return {std::move(g), {order[0], order[1], order[2]}};
}

}  // namespace

Graph random_sandwich(std::uint64_t seed) {
    Lcg rng(seed);
    const int k = 4 + static_cast<int>(rng.below(2));
    auto gadget_size = [&] { return 8 + 2 * static_cast<int>(rng.below(7)); };
    Graph inner = shifted(random_cubic_planar(gadget_size(), rng.next()), 100);
    Graph outer = shifted(random_cubic_planar(gadget_size(), rng.next()), 1000);

    Graph g;
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);

    auto [in_open, in_ports] = two_port_gadget(std::move(inner));
    g = disjoint_union(g, in_open);
    g.add_edge(0, in_ports[0]);
    g.add_edge(1, in_ports[1]);

    if (k == 4) {
        auto [out_open, out_ports] = two_port_gadget(std::move(outer));
        g = disjoint_union(g, out_open);
        g.add_edge(2, out_ports[0]);
        g.add_edge(3, out_ports[1]);
    } else {
        auto [out_open, out_ports] = three_port_gadget(std::move(outer));
        g = disjoint_union(g, out_open);
        g.add_edge(2, out_ports[0]);
        g.add_edge(3, out_ports[1]);
        g.add_edge(4, out_ports[2]);
    }
    return g;
}

Graph build(const GeneratorSpec& spec) {
    const std::string& k = spec.kind;
    if (k == "wegner") return wegner_graph();
    if (k == "k4") return k4_graph();
    if (k == "cube") return cube_graph();
    if (k == "prism") return prism_graph(spec.n);
    if (k == "dodecahedron") return dodecahedron_graph();
    if (k == "petersen") return petersen_graph();
    if (k == "truncated-tetrahedron") return truncated_tetrahedron_graph();
    if (k == "truncated-icosahedron") return truncated_icosahedron_graph();
    if (k == "nanotube") return nanotube_graph(spec.n);
    if (k == "cycle") return cycle_graph(spec.n);
    if (k == "path") return path_graph(spec.n);
    if (k == "diamond") return diamond_graph();
    if (k == "pentagon-sandwich") return pentagon_sandwich_graph();
    if (k == "random-cubic-planar") return random_cubic_planar(spec.n, spec.seed);
    if (k == "random-subcubic-planar") return random_subcubic_planar(spec.n, spec.seed);
    if (k == "random-sandwich") return random_sandwich(spec.seed);
    throw std::invalid_argument("unknown generator kind: " + k);
}

Graph build(const std::string& spec_text) {
    return build(GeneratorSpec::parse(spec_text));
}

std::vector<std::string> fixture_names() {
    return {"wegner",           "k4",
            "diamond",          "cycle:n=5",
            "cube",             "prism:n=5",
            "prism:n=6",        "truncated-tetrahedron",
            "dodecahedron",     "pentagon-sandwich",
            "truncated-icosahedron", "nanotube:n=30",
            "nanotube:n=50",    "path:n=14"};
}

}  // namespace dist2
