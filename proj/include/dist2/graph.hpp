#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace dist2 {

using VertexId = int;

/// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<VertexId, VertexId>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

Edge make_edge(VertexId a, VertexId b);

/// Simple undirected graph over opaque integer vertex ids.
///
/// Vertices and neighbor lists are kept sorted by id, so iteration order is
/// deterministic. Ids survive vertex removal, which the reduction engine
/// relies on when lifting colorings back to larger graphs.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::initializer_list<Edge> edges);
    static Graph from_edges(const std::vector<Edge>& edges);

    /// Inserts an isolated vertex. No effect if already present.
    void add_vertex(VertexId v);

    /// Inserts an edge, adding missing endpoints. Throws NotSimple on a
    /// self loop or duplicate edge.
    void add_edge(VertexId u, VertexId v);

    void remove_edge(VertexId u, VertexId v);

    /// Removes the vertex and all incident edges.
    void remove_vertex(VertexId v);

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    int degree(VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;

    /// Vertex ids in ascending order.
    const std::vector<VertexId>& vertices() const { return verts_; }

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_; }

    /// All edges, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

private:
    int index_of(VertexId v) const;  // -1 when absent
    int index_or_throw(VertexId v) const;

    std::vector<VertexId> verts_;             // ascending
    std::vector<std::vector<VertexId>> adj_;  // parallel to verts_, each ascending
    std::size_t edges_ = 0;
};

int degree(const Graph& g, VertexId v);

/// nullopt when every degree is at most three, otherwise a witness vertex.
std::optional<VertexId> validate_subcubic(const Graph& g);

/// All vertices at distance one or two from v (v excluded).
VertexSet distance2_neighbors(const Graph& g, VertexId v);

/// Same vertices; u and v adjacent iff they are within distance two in g.
Graph square(const Graph& g);

/// A minimum-length cycle as an ordered vertex list, or nullopt when acyclic.
/// The result is chordless and canonical: among all shortest cycles the
/// lexicographically least rotation/reflection is returned.
std::optional<std::vector<VertexId>> shortest_cycle(const Graph& g);

/// Maximal connected induced subgraphs, ordered by smallest contained id.
std::vector<Graph> components(const Graph& g);

/// All chordless cycles of length 3..max_len (max_len in 3..5), each reported
/// once up to rotation and reflection, in lexicographic order of their
/// canonical form.
std::vector<std::vector<VertexId>> enumerate_short_cycles(const Graph& g, int max_len);

// Shared helpers.

Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Union of two graphs with disjoint vertex id sets.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Rotates/reflects a cycle to its lexicographically least vertex sequence.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);

bool is_cycle_in(const Graph& g, const std::vector<VertexId>& cycle);
bool is_chordless_cycle(const Graph& g, const std::vector<VertexId>& cycle);

}  // namespace dist2
