#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "torrig/analyze.hpp"
#include "torrig/counts.hpp"
#include "torrig/errors.hpp"
#include "torrig/gain_graph.hpp"
#include "torrig/orbit_io.hpp"
#include "torrig/svg.hpp"
#include "torrig/tgain.hpp"

namespace {

// Exit codes: 0 rigid / success, 1 flexible / check failed, 2 input error.
constexpr int kExitRigid = 0;
constexpr int kExitFlexible = 1;
constexpr int kExitError = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << text;
}

std::pair<long long, long long> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw std::runtime_error("window must look like lo..hi, got '" + text + "'");
    std::size_t used1 = 0, used2 = 0;
    long long lo = 0, hi = 0;
    try {
        lo = std::stoll(text.substr(0, dots), &used1);
        hi = std::stoll(text.substr(dots + 2), &used2);
    } catch (const std::exception&) {
        throw std::runtime_error("window must look like lo..hi, got '" + text + "'");
    }
    if (used1 != dots || used2 != text.size() - dots - 2)
        throw std::runtime_error("window must look like lo..hi, got '" + text + "'");
    return {lo, hi};
}

torrig::CountGates parse_gates(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("gates must look like V,E (e.g. 12,20)");
    torrig::CountGates gates;
    try {
        gates.max_vertices = std::stoi(text.substr(0, comma));
        gates.max_edges = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::runtime_error("gates must look like V,E (e.g. 12,20)");
    }
    return gates;
}

int run_analyze(const std::string& path, const torrig::AnalyzeOptions& opt,
                bool machine, const std::string& out_path) {
    torrig::OrbitGraphDocument doc = torrig::load_document(path, opt.float_mode);
    torrig::AnalysisReport rep = torrig::analyze(doc, opt);
    emit(machine ? torrig::format_machine(rep) : torrig::format_report(rep), out_path);
    return rep.rigid ? kExitRigid : kExitFlexible;
}

int run_tgain(const std::string& path, int root_id, const std::string& out_path) {
    torrig::OrbitGraphDocument doc = torrig::load_document(path);
    const torrig::GainGraph& g = doc.graph;
    if (root_id < 1 || root_id > g.n)
        throw std::runtime_error("--root must be a vertex id in [1, " +
                                 std::to_string(g.n) + "]");
    const int root = root_id - 1;
    // The first spanning tree in edge order is root-independent, so the tree
    // a user sees depends only on the document, not on the --root value.
    std::vector<int> tree = torrig::greedy_spanning_tree(g);
    torrig::TPotentials pots = torrig::t_potentials(g, tree, root);
    torrig::GainGraph regauged = torrig::t_gains(g, tree, root);

    // The re-gauged graph must describe the same periodic structure; an
    // inequivalent output would be a bug, not a report.
    torrig::EquivalenceResult eq = torrig::periodic_equivalent(g, regauged);
    if (!eq.equivalent)
        throw std::logic_error("re-gauged graph is not equivalent to its input");

    torrig::OrbitGraphDocument out_doc = doc;
    out_doc.graph = regauged;

    std::ostringstream out;
    out << torrig::write_document(out_doc);
    out << "# re-gauged over the first spanning tree in edge order, rooted at vertex "
        << root_id << "\n";
    out << "# tree edges:";
    for (int k : tree) out << ' ' << k + 1;
    out << "\n";
    out << "# potentials (net tree-path gain from the root):\n";
    for (int v = 0; v < g.n; ++v) {
        out << "# potential " << v + 1;
        for (const torrig::Int& c : pots.potential[static_cast<std::size_t>(v)])
            out << ' ' << c.get_str();
        out << "\n";
    }
    emit(out.str(), out_path);
    return kExitRigid;
}

int run_svg(const std::string& path, const std::vector<std::string>& windows,
            bool flex_overlay, bool project, bool allow_degenerate,
            const std::string& out_path) {
    torrig::OrbitGraphDocument doc = torrig::load_document(path);
    torrig::OrbitFramework f = doc.framework(allow_degenerate);
    torrig::SvgOptions opt;
    opt.flex_overlay = flex_overlay;
    opt.allow_projection = project;
    if (!windows.empty()) {
        std::vector<std::pair<long long, long long>> ranges;
        for (const std::string& wtext : windows) ranges.push_back(parse_range(wtext));
        if (ranges.size() == 1)
            ranges.assign(static_cast<std::size_t>(f.graph.d), ranges.front());
        if (static_cast<int>(ranges.size()) != f.graph.d)
            throw std::runtime_error("--window given " + std::to_string(windows.size()) +
                                     " times; need one range per axis (d = " +
                                     std::to_string(f.graph.d) + ") or a single range");
        opt.has_window = true;
        for (const auto& r : ranges) {
            opt.lo.push_back(torrig::Int(static_cast<long>(r.first)));
            opt.hi.push_back(torrig::Int(static_cast<long>(r.second)));
        }
    }
    emit(torrig::render_svg(f, opt), out_path);
    return kExitRigid;
}

int run_gen_gains(const std::string& path, int dimension, const std::string& out_path) {
    torrig::OrbitGraphDocument doc = torrig::load_document(path);
    const int d = dimension > 0 ? dimension : doc.graph.d;
    torrig::GainGraph out_graph;
    try {
        out_graph = torrig::synthesize_constructive_gains(doc.graph, d);
    } catch (const torrig::decomposition_error& e) {
        std::cerr << "gen-gains: " << e.what() << "\n";
        return kExitFlexible;
    }
    torrig::OrbitGraphDocument out_doc;
    out_doc.name = doc.name;
    out_doc.comment = doc.comment;
    out_doc.graph = out_graph;
    if (d == doc.graph.d) {
        out_doc.has_lattice = doc.has_lattice;
        out_doc.lattice = doc.lattice;
        out_doc.has_positions = doc.has_positions;
        out_doc.positions = doc.positions;
    }
    emit(torrig::write_document(out_doc), out_path);
    return kExitRigid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"infinitesimal rigidity of periodic frameworks on a fixed torus"};
    app.require_subcommand(1);

    std::string path, out_path, gates_text;
    int trials = 3;
    std::uint64_t seed = 0;
    bool float_mode = false, allow_degenerate = false, machine = false;
    bool flex_overlay = false, project = false;
    int root_id = 1;
    int dimension = 0;
    std::vector<std::string> windows;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "rank, flexes, stresses, and counting checks of a document");
    analyze->add_option("path", path, "input .orbit document")->required();
    analyze->add_option("--trials", trials, "random position samples for generic rank");
    analyze->add_option("--seed", seed, "random seed");
    analyze->add_flag("--float", float_mode,
                      "floating-point rank; also accepts decimal literals in input");
    analyze->add_flag("--allow-degenerate", allow_degenerate,
                      "accept coincident positions");
    analyze->add_option("--gates", gates_text, "brute-force gates as V,E (default 12,20)");
    analyze->add_flag("--machine", machine, "flat key/value output");
    analyze->add_option("-o,--output", out_path, "write the report to a file");

    CLI::App* tgain = app.add_subcommand(
        "tgain", "re-gauge gains over a spanning tree (zero gains on the tree)");
    tgain->add_option("path", path, "input .orbit document")->required();
    tgain->add_option("--root", root_id, "root vertex id (1-based, default 1)");
    tgain->add_option("-o,--output", out_path, "write the document to a file");

    CLI::App* svg = app.add_subcommand("svg", "draw a window of the derived framework");
    svg->add_option("path", path, "input .orbit document (positions required)")
        ->required();
    svg->add_option("--window", windows,
                    "integer range lo..hi per axis (repeatable; single use applies "
                    "to all axes; default 0..0)");
    svg->add_flag("--flex-overlay", flex_overlay, "draw the first nontrivial flex");
    svg->add_flag("--project", project, "accept first-two-coordinates projection for d > 3");
    svg->add_flag("--allow-degenerate", allow_degenerate,
                  "accept coincident positions");
    svg->add_option("-o,--output", out_path, "write the SVG to a file");

    CLI::App* gen = app.add_subcommand(
        "gen-gains", "assign constructive gains via a spanning-tree decomposition");
    gen->add_option("path", path, "input .orbit document")->required();
    gen->add_option("-d,--dimension", dimension,
                    "target dimension (default: the document's d)");
    gen->add_option("-o,--output", out_path, "write the document to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*analyze) {
            torrig::AnalyzeOptions opt;
            opt.trials = trials;
            opt.seed = seed;
            opt.float_mode = float_mode;
            opt.allow_degenerate = allow_degenerate;
            if (!gates_text.empty()) opt.gates = parse_gates(gates_text);
            return run_analyze(path, opt, machine, out_path);
        }
        if (*tgain) return run_tgain(path, root_id, out_path);
        if (*svg) return run_svg(path, windows, flex_overlay, project,
                                 allow_degenerate, out_path);
        if (*gen) return run_gen_gains(path, dimension, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
