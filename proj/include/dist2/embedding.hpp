#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

/// Combinatorial planar embedding: a cyclic neighbor order per vertex.
/// Rotation lists are permutations of the adjacency lists; the face rule is
/// "after entering v from u, leave along the successor of u in v's rotation".
struct Embedding {
    Graph graph;
    // rotation[i] is the cyclic order at graph.vertices()[i], canonicalized
    // to start at the smallest neighbor.
    std::vector<std::vector<VertexId>> rotation;

    const std::vector<VertexId>& rotation_at(VertexId v) const;
};

/// A traced face. The walk lists vertices in traversal order; walk[i] ->
/// walk[i+1] (cyclically) are the directed edges of the boundary. A bridge
/// contributes two traversals to the same walk. An isolated vertex yields a
/// one-entry walk of length zero.
struct Face {
    std::vector<VertexId> walk;
    std::size_t length() const { return walk.size() >= 2 ? walk.size() : 0; }
};

struct NonPlanar {
    std::string reason;
    std::vector<Edge> witness;  // may be empty (opaque refusal)
};

using EmbedResult = std::variant<Embedding, NonPlanar>;

/// Computes a planar embedding by path addition over biconnected blocks,
/// or reports non-planarity. Deterministic for a given graph.
EmbedResult embed(const Graph& g);

bool is_planar(const Graph& g);

/// All faces of the embedding; every directed edge appears in exactly one
/// walk, so the lengths sum to 2E. Deterministic order.
std::vector<Face> trace_faces(const Embedding& e);

enum class EulerStatus { ok, inconsistent };

/// Checks V - E + F = 2 per connected component.
EulerStatus euler_check(const Embedding& e);

/// A face of length at most five. For connected cubic planar graphs one
/// always exists; throws TheoremViolation otherwise, which indicates a
/// corrupted embedding or a precondition violation.
Face short_face_exists(const Embedding& e);

/// The two sides of a cycle. inside/outside partition the non-cycle vertices;
/// no edge joins them.
struct SideClassification {
    VertexSet inside;
    VertexSet outside;
    std::vector<VertexId> cycle;
};

/// Partitions faces by dual reachability across non-cycle edges; exactly two
/// groups must result. The group holding the lexicographically smallest face
/// boundary is labeled outside. Requires c to be a chordless cycle of the
/// embedded graph.
SideClassification classify_sides(const Embedding& e, const std::vector<VertexId>& cycle);

}  // namespace dist2
