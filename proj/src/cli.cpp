#include "dist2/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dist2/corpus.hpp"
#include "dist2/document.hpp"
#include "dist2/embedding.hpp"
#include "dist2/errors.hpp"
#include "dist2/oracle.hpp"
#include "dist2/reducer.hpp"

namespace dist2 {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot write " + path);
    out << content;
}

struct ColorArgs {
    std::string input, out, trace, svg, dot, embedding;
    int palette = 8;
};

int cmd_color(const ColorArgs& a, std::string& out, std::string& err) {
    GraphDocument doc;
    Graph g;
    try {
        doc = load_document(read_file(a.input));
        g = graph_from_document(doc);
    } catch (const std::exception& e) {
        err += std::string("parse error: ") + e.what() + "\n";
        return kExitParse;
    }
    if (auto bad = validate_subcubic(g)) {
        err += "degree violation at vertex " + doc.label(*bad) + "\n";
        return kExitDegree;
    }
    {
        auto embedded = embed(g);
        if (auto* np = std::get_if<NonPlanar>(&embedded)) {
            err += "input is not planar: " + np->reason + "\n";
            return kExitNonPlanar;
        }
    }

    RunReport report;
    try {
        report = color_graph(g, a.palette);
    } catch (const std::exception& e) {
        err += std::string("coloring failed: ") + e.what() + "\n";
        std::string bundle_path = (a.out.empty() ? a.input : a.out) + ".diagnostic.json";
        write_file(bundle_path, save_document(doc));
        return kExitInternalAssertion;
    }

    GraphDocument colored = with_coloring(doc, report.coloring);
    std::string doc_text = save_document(colored);
    if (a.out.empty())
        out += doc_text;
    else
        write_file(a.out, doc_text);
    if (!a.trace.empty())
        write_file(a.trace, trace_to_json(report.trace, doc.vertices, a.palette,
                                          report.events));
    if (!a.svg.empty()) write_file(a.svg, render_svg(colored));
    if (!a.dot.empty()) write_file(a.dot, dot_export(colored));
    if (!a.embedding.empty()) {
        auto embedded = embed(g);
        write_file(a.embedding,
                   embedding_to_json(std::get<Embedding>(embedded), doc.vertices));
    }

    if (!report.events.empty()) {
        std::string bundle_path = (a.out.empty() ? a.input : a.out) + ".diagnostic.json";
        write_file(bundle_path, trace_to_json(report.trace, doc.vertices, a.palette,
                                              report.events));
        err += std::to_string(report.events.size()) +
               " internal assertion event(s); diagnostic bundle at " + bundle_path + "\n";
        return kExitInternalAssertion;
    }
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               std::string& out, std::string& err) {
    Graph g;
    GraphDocument gdoc, cdoc;
    Coloring coloring;
    try {
        gdoc = load_document(read_file(graph_path));
        g = graph_from_document(gdoc);
        cdoc = load_document(read_file(coloring_path));
        if (!cdoc.coloring) throw DocumentError("coloring document has no coloring");
        coloring.palette_size = 8;
        for (const auto& [idx, col] : *cdoc.coloring) {
            int at = gdoc.index_of(cdoc.label(idx));
            if (at < 0)
                throw DocumentError("coloring names unknown vertex " + cdoc.label(idx));
            if (col >= coloring.palette_size) coloring.palette_size = col + 1;
            coloring.assignment[at] = col;
        }
        if (!coloring.total_on(g)) throw DocumentError("coloring is partial");
    } catch (const std::exception& e) {
        err += std::string("parse error: ") + e.what() + "\n";
        return kExitParse;
    }
    auto violations = verify_coloring(g, coloring);
    if (violations.empty()) {
        out += "ok\n";
        return kExitOk;
    }
    for (const auto& v : violations) {
        out += "violation: " + gdoc.label(v.u) + " and " + gdoc.label(v.v) +
               (v.second_order ? " share a color at distance two" : " are adjacent with one color");
        if (v.witness) out += " (via " + gdoc.label(*v.witness) + ")";
        out += "\n";
    }
    return kExitInvalidColoring;
}

int cmd_chromatic(const std::string& graph_path, int max_palette,
                  std::optional<int> size_bound, std::string& out, std::string& err) {
    Graph g;
    try {
        g = graph_from_document(load_document(read_file(graph_path)));
    } catch (const std::exception& e) {
        err += std::string("parse error: ") + e.what() + "\n";
        return kExitParse;
    }
    try {
        auto r = exact_chromatic2(g, max_palette, size_bound);
        if (!r)
            out += "exceeds " + std::to_string(max_palette) + "\n";
        else
            out += std::to_string(r->chi) + "\n";
        return kExitOk;
    } catch (const SizeBoundExceeded& e) {
        err += std::string(e.what()) + "\n";
        return kExitSizeBound;
    }
}

int cmd_gen(const std::string& spec, const std::string& out_path, const std::string& dot,
            std::string& out, std::string& err) {
    Graph g;
    try {
        g = build(spec);
    } catch (const std::exception& e) {
        err += std::string("bad spec: ") + e.what() + "\n";
        return kExitParse;
    }
    GraphDocument doc = document_from_graph(g);
    std::string text = save_document(doc);
    if (out_path.empty()) {
        out += text;
    } else {
        std::filesystem::path p(out_path);
        const char* root = std::getenv("DIST2COLOR_FIXTURE_DIR");
        if (root && p.is_relative()) p = std::filesystem::path(root) / p;
        write_file(p.string(), text);
    }
    if (!dot.empty()) write_file(dot, dot_export(doc));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
    CLI::App app{"distance-2 coloring of planar graphs of maximum degree three"};
    app.require_subcommand(1);

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "color a graph with at most 8 colors");
    color->add_option("input", color_args.input, "graph document")->required();
    color->add_option("-o,--out", color_args.out, "output document path (default stdout)");
    color->add_option("--trace", color_args.trace, "write the reduction trace here");
    color->add_option("--svg", color_args.svg, "write an SVG rendering here");
    color->add_option("--dot", color_args.dot, "write a DOT export here");
    color->add_option("--embedding", color_args.embedding,
                      "write the rotation system and face list here");
    color->add_option("--palette", color_args.palette, "palette size")->default_val(8);

    std::string verify_graph, verify_coloring_path;
    auto* verify = app.add_subcommand("verify", "check a coloring for distance-2 validity");
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("coloring", verify_coloring_path)->required();

    std::string chrom_graph;
    int chrom_max = 8;
    int chrom_bound = -1;
    auto* chrom = app.add_subcommand("chromatic", "exact distance-2 chromatic number");
    chrom->add_option("graph", chrom_graph)->required();
    chrom->add_option("--max", chrom_max, "largest palette to try")->default_val(8);
    chrom->add_option("--size-bound", chrom_bound, "override the vertex count cap");

    std::string gen_spec, gen_out, gen_dot;
    auto* gen = app.add_subcommand("gen", "emit a fixture or seeded random graph");
    gen->add_option("spec", gen_spec, "e.g. wegner or random-cubic-planar:n=20,seed=7")
        ->required();
    gen->add_option("--out", gen_out, "output path (DIST2COLOR_FIXTURE_DIR applies)");
    gen->add_option("--dot", gen_dot, "write a DOT export here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out += app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err += std::string(e.what()) + "\n";
        return kExitParse;
    }

    if (color->parsed()) return cmd_color(color_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_graph, verify_coloring_path, out, err);
    if (chrom->parsed())
        return cmd_chromatic(chrom_graph, chrom_max,
                             chrom_bound >= 0 ? std::optional<int>(chrom_bound)
                                              : std::nullopt,
                             out, err);
    if (gen->parsed()) return cmd_gen(gen_spec, gen_out, gen_dot, out, err);
    err += "no subcommand\n";
    return kExitParse;
}

int run_cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    std::string out, err;
    int code = run_cli(args, out, err);
    std::cout << out;
    std::cerr << err;
    return code;
}

}  // namespace dist2
