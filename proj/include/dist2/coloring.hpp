#pragma once

#include <map>
#include <optional>

#include "dist2/graph.hpp"

namespace dist2 {

/// Partial or total assignment of palette indices to vertices.
struct Coloring {
    std::map<VertexId, int> assignment;
    int palette_size = 8;

    bool has(VertexId v) const { return assignment.count(v) != 0; }
    std::optional<int> get(VertexId v) const {
        auto it = assignment.find(v);
        if (it == assignment.end()) return std::nullopt;
        return it->second;
    }
    void set(VertexId v, int color);
    void unset(VertexId v) { assignment.erase(v); }

    bool total_on(const Graph& g) const;

    /// Number of distinct colors actually used.
    int colors_used() const;
};

}  // namespace dist2
