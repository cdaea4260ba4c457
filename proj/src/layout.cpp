#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "dist2/document.hpp"
#include "dist2/embedding.hpp"

namespace dist2 {

namespace {

struct Point {
    double x = 0, y = 0;
};

constexpr double kPi = 3.14159265358979323846;

// Tutte-style relaxation: pin the longest face on a circle, everything else
// moves to the barycenter of its neighbors.
std::map<VertexId, Point> layout_component(const Graph& g) {
    std::map<VertexId, Point> pos;
    if (g.vertex_count() == 0) return pos;
    if (g.vertex_count() == 1) {
        pos[g.vertices().front()] = {0.5, 0.5};
        return pos;
    }

    std::vector<VertexId> ring;
    auto res = embed(g);
    if (auto* e = std::get_if<Embedding>(&res)) {
        auto faces = trace_faces(*e);
        const Face* outer = nullptr;
        std::vector<VertexId> outer_canon;
        for (const auto& f : faces) {
            auto canon = canonical_cycle(f.walk);
            if (!outer || f.length() > outer->length() ||
                (f.length() == outer->length() && canon < outer_canon)) {
                outer = &f;
                outer_canon = std::move(canon);
            }
        }
        for (VertexId v : outer->walk)
            if (std::find(ring.begin(), ring.end(), v) == ring.end()) ring.push_back(v);
    } else {
        ring = g.vertices();
    }

    for (std::size_t i = 0; i < ring.size(); ++i) {
        double a = 2 * kPi * static_cast<double>(i) / static_cast<double>(ring.size());
        pos[ring[i]] = {0.5 + 0.45 * std::cos(a), 0.5 + 0.45 * std::sin(a)};
    }
    std::vector<VertexId> inner;
    for (VertexId v : g.vertices())
        if (!pos.count(v)) {
            pos[v] = {0.5, 0.5};
            inner.push_back(v);
        }
    for (int round = 0; round < 600; ++round) {
        for (VertexId v : inner) {
            double sx = 0, sy = 0;
            for (VertexId w : g.neighbors(v)) {
                sx += pos[w].x;
                sy += pos[w].y;
            }
            double d = static_cast<double>(g.degree(v));
            if (d > 0) pos[v] = {sx / d, sy / d};
        }
    }
    return pos;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* kPalette[8] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                           "#59a14f", "#edc948", "#b07aa1", "#9c755f"};

}  // namespace

std::string render_svg(const GraphDocument& doc) {
    Graph g = graph_from_document(doc);
    auto comps = components(g);
    const double cell = 640;
    const double width = cell * std::max<std::size_t>(comps.size(), 1);

    std::map<VertexId, Point> pos;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        auto local = layout_component(comps[ci]);
        for (auto& [v, p] : local)
            pos[v] = {(p.x + static_cast<double>(ci)) * cell, p.y * cell};
    }

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      fmt(width) + "\" height=\"" + fmt(cell) + "\" viewBox=\"0 0 " +
                      fmt(width) + " " + fmt(cell) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& [a, b] : doc.edges)
        svg += "<line x1=\"" + fmt(pos[a].x) + "\" y1=\"" + fmt(pos[a].y) + "\" x2=\"" +
               fmt(pos[b].x) + "\" y2=\"" + fmt(pos[b].y) +
               "\" stroke=\"#555\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
        VertexId v = static_cast<VertexId>(i);
        std::string fill = "white";
        if (doc.coloring && doc.coloring->count(v))
            fill = kPalette[doc.coloring->at(v) % 8];
        svg += "<circle cx=\"" + fmt(pos[v].x) + "\" cy=\"" + fmt(pos[v].y) +
               "\" r=\"12\" fill=\"" + fill + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(pos[v].x) + "\" y=\"" + fmt(pos[v].y + 4) +
               "\" font-size=\"10\" text-anchor=\"middle\">" + doc.vertices[i] +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace dist2
