#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dist2/coloring.hpp"
#include "dist2/graph.hpp"
#include "dist2/reducer.hpp"

namespace dist2 {

/// Semantic problem in an otherwise well-formed document.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The interchange format. Vertices are string labels; their position in the
/// list assigns the internal integer id. Edges, rotation and coloring refer
/// to vertices by index internally and by label on disk.
struct GraphDocument {
    int format_version = 1;
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;  // index pairs, lo < hi, sorted
    std::optional<std::map<int, std::vector<int>>> rotation;
    std::optional<std::map<int, int>> coloring;

    const std::string& label(int index) const { return vertices.at(index); }
    int index_of(const std::string& label) const;  // -1 when absent
};

GraphDocument document_from_graph(const Graph& g);
Graph graph_from_document(const GraphDocument& doc);

/// Canonical serialization: fixed key order, sorted edge list, two-space
/// indent, trailing newline. load(save(d)) == d byte for byte.
std::string save_document(const GraphDocument& doc);

/// Parses and validates. Throws DocumentError on structural problems and
/// nlohmann's parse_error on malformed JSON.
GraphDocument load_document(const std::string& text);

GraphDocument with_coloring(GraphDocument doc, const Coloring& c);
Coloring coloring_from_document(const GraphDocument& doc, int palette);

/// Versioned trace dump; vertex references use the document labels.
std::string trace_to_json(const ReductionTrace& trace,
                          const std::vector<std::string>& labels, int palette,
                          const std::vector<AssertionEvent>& events);

/// Debug dump of a rotation system and its traced faces, in the same
/// versioned style as the trace file.
std::string embedding_to_json(const Embedding& e,
                              const std::vector<std::string>& labels);

std::string dot_export(const GraphDocument& doc);

/// Planar drawing: the largest face is pinned to a regular polygon and the
/// rest relaxes to the neighbor barycenter. Best effort; falls back to a
/// circular layout for non-planar input.
std::string render_svg(const GraphDocument& doc);

}  // namespace dist2
