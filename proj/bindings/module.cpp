#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dist2/corpus.hpp"
#include "dist2/document.hpp"
#include "dist2/embedding.hpp"
#include "dist2/oracle.hpp"
#include "dist2/reducer.hpp"

namespace py = pybind11;
using namespace dist2;

namespace {

Coloring coloring_from_dict(const std::map<VertexId, int>& d, int palette) {
    Coloring c;
    c.palette_size = palette;
    for (const auto& [v, col] : d) {
        if (col >= c.palette_size) c.palette_size = col + 1;
    }
    for (const auto& [v, col] : d) c.assignment[v] = col;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "distance-2 coloring of planar graphs of maximum degree three";

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_static("from_edges",
                    [](const std::vector<std::pair<int, int>>& edges) {
                        Graph g;
                        for (auto [u, v] : edges) g.add_edge(u, v);
                        return g;
                    })
        .def("add_vertex", &Graph::add_vertex)
        .def("add_edge", &Graph::add_edge)
        .def("vertices", [](const Graph& g) { return g.vertices(); })
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("degree", [](const Graph& g, int v) { return g.degree(v); })
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("__len__", &Graph::vertex_count)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    m.def("generate", [](const std::string& spec) { return build(spec); },
          "build a named fixture or seeded random graph");
    m.def("fixture_names", &fixture_names);

    m.def("is_planar", &is_planar);
    m.def("is_subcubic", [](const Graph& g) { return !validate_subcubic(g); });
    m.def("square", &square);
    m.def("distance2_neighbors", &distance2_neighbors);
    m.def("girth", [](const Graph& g) -> std::optional<int> {
        auto c = shortest_cycle(g);
        if (!c) return std::nullopt;
        return static_cast<int>(c->size());
    });

    m.def(
        "color_graph",
        [](const Graph& g, int palette) {
            RunReport r = color_graph(g, palette);
            std::vector<std::string> kinds;
            for (const auto& s : r.trace.steps) kinds.push_back(to_string(s.kind));
            return py::make_tuple(r.coloring.assignment, kinds, r.events.size());
        },
        py::arg("graph"), py::arg("palette") = 8,
        "returns (coloring dict, trace step kinds, assertion event count)");

    m.def(
        "verify_coloring",
        [](const Graph& g, const std::map<VertexId, int>& coloring, int palette) {
            auto violations = verify_coloring(g, coloring_from_dict(coloring, palette));
            std::vector<std::tuple<int, int, bool>> out;
            for (const auto& v : violations) out.emplace_back(v.u, v.v, v.second_order);
            return out;
        },
        py::arg("graph"), py::arg("coloring"), py::arg("palette") = 8,
        "returns the list of same-colored distance<=2 pairs; empty means valid");

    m.def(
        "exact_chromatic2",
        [](const Graph& g, int max_palette,
           std::optional<int> size_bound) -> std::optional<py::tuple> {
            auto r = exact_chromatic2(g, max_palette, size_bound);
            if (!r) return std::nullopt;
            return py::make_tuple(r->chi, r->witness.assignment);
        },
        py::arg("graph"), py::arg("max_palette") = 8, py::arg("size_bound") = py::none(),
        "exact distance-2 chromatic number with a witness, or None beyond max_palette");

    m.def("to_document", [](const Graph& g) { return save_document(document_from_graph(g)); });
    m.def("from_document", [](const std::string& text) {
        return graph_from_document(load_document(text));
    });
}
