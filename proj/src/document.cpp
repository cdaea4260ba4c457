#include "dist2/document.hpp"

#include <algorithm>

#include <json.hpp>

#include "dist2/errors.hpp"

namespace dist2 {

using ordered_json = nlohmann::ordered_json;

int GraphDocument::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    return -1;
}

GraphDocument document_from_graph(const Graph& g) {
    GraphDocument doc;
    const auto& vs = g.vertices();
    std::map<VertexId, int> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        doc.vertices.push_back(std::to_string(vs[i]));
        idx[vs[i]] = static_cast<int>(i);
    }
    for (const auto& [u, v] : g.edges()) {
        int a = idx[u], b = idx[v];
        doc.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(doc.edges.begin(), doc.edges.end());
    return doc;
}

Graph graph_from_document(const GraphDocument& doc) {
    Graph g;
    for (std::size_t i = 0; i < doc.vertices.size(); ++i)
        g.add_vertex(static_cast<VertexId>(i));
    for (const auto& [a, b] : doc.edges) g.add_edge(a, b);
    return g;
}

std::string save_document(const GraphDocument& doc) {
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["vertices"] = doc.vertices;
    auto edges = doc.edges;
    std::sort(edges.begin(), edges.end());
    ordered_json je = ordered_json::array();
    for (const auto& [a, b] : edges)
        je.push_back({doc.label(a), doc.label(b)});
    j["edges"] = std::move(je);
    if (doc.rotation) {
        ordered_json jr = ordered_json::object();
        for (const auto& [v, order] : *doc.rotation) {
            ordered_json arr = ordered_json::array();
            for (int w : order) arr.push_back(doc.label(w));
            jr[doc.label(v)] = std::move(arr);
        }
        j["rotation"] = std::move(jr);
    }
    if (doc.coloring) {
        ordered_json jc = ordered_json::object();
        for (const auto& [v, c] : *doc.coloring) jc[doc.label(v)] = c;
        j["coloring"] = std::move(jc);
    }
    return j.dump(2) + "\n";
}

GraphDocument load_document(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    GraphDocument doc;
    if (!j.is_object() || !j.contains("format_version") || !j.contains("vertices") ||
        !j.contains("edges"))
        throw DocumentError("document needs format_version, vertices and edges");
    doc.format_version = j["format_version"].get<int>();
    if (doc.format_version != 1)
        throw DocumentError("unsupported format_version " +
                            std::to_string(doc.format_version));
    for (const auto& v : j["vertices"]) {
        std::string label = v.get<std::string>();
        if (doc.index_of(label) >= 0) throw DocumentError("duplicate vertex " + label);
        doc.vertices.push_back(std::move(label));
    }
    auto need_index = [&](const ordered_json& v) {
        int i = doc.index_of(v.get<std::string>());
        if (i < 0) throw DocumentError("unknown vertex " + v.get<std::string>());
        return i;
    };
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw DocumentError("edges must be pairs");
        int a = need_index(e[0]), b = need_index(e[1]);
        if (a == b) throw DocumentError("self loop at " + doc.vertices[a]);
        doc.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(doc.edges.begin(), doc.edges.end());
    if (std::adjacent_find(doc.edges.begin(), doc.edges.end()) != doc.edges.end())
        throw DocumentError("duplicate edge");
    if (j.contains("rotation")) {
        std::map<int, std::vector<int>> rot;
        for (const auto& [key, arr] : j["rotation"].items()) {
            int v = doc.index_of(key);
            if (v < 0) throw DocumentError("rotation for unknown vertex " + key);
            std::vector<int> order;
            for (const auto& w : arr) order.push_back(need_index(w));
            rot[v] = std::move(order);
        }
        // each listed rotation must permute that vertex's neighbors
        Graph g = graph_from_document(doc);
        for (const auto& [v, order] : rot) {
            auto nb = g.neighbors(v);
            auto sorted = order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != std::vector<int>(nb.begin(), nb.end()))
                throw DocumentError("rotation at " + doc.vertices[v] +
                                    " is not a permutation of its neighbors");
        }
        doc.rotation = std::move(rot);
    }
    if (j.contains("coloring")) {
        std::map<int, int> col;
        for (const auto& [key, val] : j["coloring"].items()) {
            int v = doc.index_of(key);
            if (v < 0) throw DocumentError("coloring for unknown vertex " + key);
            int c = val.get<int>();
            if (c < 0) throw DocumentError("negative color at " + key);
            col[v] = c;
        }
        doc.coloring = std::move(col);
    }
    return doc;
}

GraphDocument with_coloring(GraphDocument doc, const Coloring& c) {
    std::map<int, int> col;
    for (const auto& [v, color] : c.assignment) col[v] = color;
    doc.coloring = std::move(col);
    return doc;
}

Coloring coloring_from_document(const GraphDocument& doc, int palette) {
    if (!doc.coloring) throw DocumentError("document has no coloring");
    Coloring c;
    c.palette_size = palette;
    for (const auto& [v, color] : *doc.coloring) {
        if (color >= palette) c.palette_size = color + 1;
    }
    for (const auto& [v, color] : *doc.coloring) c.assignment[v] = color;
    return c;
}

std::string trace_to_json(const ReductionTrace& trace,
                          const std::vector<std::string>& labels, int palette,
                          const std::vector<AssertionEvent>& events) {
    auto name = [&](VertexId v) -> std::string {
        if (v >= 0 && v < static_cast<VertexId>(labels.size())) return labels[v];
        return std::to_string(v);
    };
    ordered_json j;
    j["format_version"] = 1;
    j["palette_size"] = palette;
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        ordered_json js;
        js["kind"] = to_string(s.kind);
        ordered_json removed = ordered_json::array();
        for (VertexId v : s.removed) removed.push_back(name(v));
        js["removed"] = std::move(removed);
        ordered_json added = ordered_json::array();
        for (const auto& [u, v] : s.added_edges) added.push_back({name(u), name(v)});
        js["added_edges"] = std::move(added);
        if (s.context) {
            ordered_json cyc = ordered_json::array();
            for (VertexId v : s.context->cycle) cyc.push_back(name(v));
            js["cycle"] = std::move(cyc);
            if (!s.context->exterior.empty()) {
                ordered_json ext = ordered_json::array();
                for (VertexId v : s.context->exterior) ext.push_back(name(v));
                js["exterior"] = std::move(ext);
            }
            if (s.context->empty_side != EmptySide::none)
                js["empty_side"] =
                    s.context->empty_side == EmptySide::inside ? "inside" : "outside";
        }
        if (!s.margins.empty()) {
            ordered_json jm = ordered_json::object();
            for (const auto& [k, v] : s.margins) jm[k] = v;
            js["margins"] = std::move(jm);
        }
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    if (!events.empty()) {
        ordered_json evs = ordered_json::array();
        for (const auto& e : events) {
            ordered_json je;
            je["step"] = e.step;
            je["detail"] = e.detail;
            je["subgraph_vertices"] = e.subgraph_vertices;
            evs.push_back(std::move(je));
        }
        j["assertion_events"] = std::move(evs);
    }
    return j.dump(2) + "\n";
}

std::string embedding_to_json(const Embedding& e,
                              const std::vector<std::string>& labels) {
    auto name = [&](VertexId v) -> std::string {
        if (v >= 0 && v < static_cast<VertexId>(labels.size())) return labels[v];
        return std::to_string(v);
    };
    ordered_json j;
    j["format_version"] = 1;
    ordered_json rot = ordered_json::object();
    const auto& vs = e.graph.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        ordered_json arr = ordered_json::array();
        for (VertexId w : e.rotation[i]) arr.push_back(name(w));
        rot[name(vs[i])] = std::move(arr);
    }
    j["rotation"] = std::move(rot);
    ordered_json faces = ordered_json::array();
    for (const auto& f : trace_faces(e)) {
        ordered_json walk = ordered_json::array();
        for (VertexId v : f.walk) walk.push_back(name(v));
        ordered_json jf;
        jf["length"] = f.length();
        jf["walk"] = std::move(walk);
        faces.push_back(std::move(jf));
    }
    j["faces"] = std::move(faces);
    return j.dump(2) + "\n";
}

std::string dot_export(const GraphDocument& doc) {
    std::string out = "graph g {\n";
    for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
        out += "  \"" + doc.vertices[i] + "\"";
        if (doc.coloring && doc.coloring->count(static_cast<int>(i)))
            out += " [label=\"" + doc.vertices[i] + ":" +
                   std::to_string(doc.coloring->at(static_cast<int>(i))) + "\"]";
        out += ";\n";
    }
    for (const auto& [a, b] : doc.edges)
        out += "  \"" + doc.label(a) + "\" -- \"" + doc.label(b) + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace dist2
