#include "torrig/analyze.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "torrig/errors.hpp"
#include "torrig/rigidity.hpp"

namespace torrig {
namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ids[i] + 1);  // user-facing ids are 1-based
    }
    return out;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

}  // namespace

AnalysisReport analyze(const OrbitGraphDocument& doc, const AnalyzeOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport rep;
    const GainGraph& g = doc.graph;
    g.validate();

    rep.name = doc.name;
    rep.d = g.d;
    rep.n = g.n;
    rep.m = static_cast<int>(g.edges.size());
    rep.target = static_cast<long long>(g.d) * g.n - g.d;
    rep.connected = g.n <= 1 || is_connected(g);
    rep.has_positions = doc.has_positions;
    rep.rank_mode = opt.float_mode ? "float" : "exact";

    // Rank work requires a connected graph (the matrix builder refuses
    // anything else); a disconnected document keeps the -1 sentinels and can
    // never be rigid, since each component translates on its own.
    if (doc.has_positions && rep.connected) {
        OrbitFramework f = doc.framework(opt.allow_degenerate);
        RigidityMatrix R = build_rigidity_matrix(f);
        rep.rank = rank(R, opt.float_mode);
        rep.flex_dim = static_cast<long long>(flex_basis(f).vectors.size());
        rep.stress_dim = static_cast<long long>(stress_basis(f).vectors.size());
    }
    if (rep.connected && rep.n >= 1)
        rep.generic = generic_rank(g, opt.trials, opt.seed);
    if (!doc.has_positions) rep.rank = rep.generic;
    rep.rigid = rep.rank >= 0 && rep.rank == rep.target;

    auto run_count = [&](const char* cond, auto&& fn) {
        CountSummary cs;
        cs.condition = cond;
        try {
            CountReport r = fn();
            cs.status = r.pass ? "pass" : "fail";
            cs.violations = r.violations;
        } catch (const gate_error&) {
            cs.status = "skipped: gate";
        } catch (const connectivity_error&) {
            cs.status = "skipped: disconnected";
        } catch (const structure_error&) {
            cs.status = "skipped: precondition (|E| != d|V| - d)";
        }
        rep.counts.push_back(cs);
    };
    run_count("maxwell", [&] { return maxwell_check(g, opt.gates); });
    run_count("gain_tightness", [&] { return gain_tightness_check(g, opt.gates); });
    run_count("rank_graded_sparsity",
              [&] { return rank_graded_sparsity_check(g, opt.gates); });

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string format_report(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "orbit graph";
    if (!rep.name.empty()) out << " '" << rep.name << "'";
    out << ": d=" << rep.d << ", " << rep.n << " vertices, " << rep.m << " edges\n";
    if (!rep.connected) out << "warning: graph is disconnected\n";
    out << "target rank (d|V| - d): " << rep.target << "\n";
    if (rep.has_positions && rep.rank >= 0)
        out << "rank at documented positions: " << rep.rank << " (" << rep.rank_mode
            << ")\n";
    if (rep.generic >= 0) out << "generic rank: " << rep.generic << "\n";
    if (rep.flex_dim >= 0) out << "nontrivial flexes: " << rep.flex_dim << "\n";
    if (rep.stress_dim >= 0) out << "stresses: " << rep.stress_dim << "\n";
    out << "verdict: " << (rep.rigid ? "rigid" : "flexible") << "\n";
    out << "counts:\n";
    for (const CountSummary& cs : rep.counts) {
        out << "  " << cs.condition << ": " << cs.status << "\n";
        for (const Violation& v : cs.violations) {
            out << "    violation: vertices {" << join_ids(v.vertices) << "} edges {"
                << join_ids(v.edges) << "} measured " << v.measured << " > bound "
                << v.bound;
            if (v.gain_rank >= 0) out << " (gain rank " << v.gain_rank << ")";
            out << "\n";
        }
    }
    out << "elapsed: " << format_seconds(rep.elapsed_seconds) << " s\n";
    return out.str();
}

std::string format_machine(const AnalysisReport& rep) {
    std::ostringstream out;
    if (!rep.name.empty()) out << "name " << rep.name << "\n";
    out << "d " << rep.d << "\n";
    out << "vertices " << rep.n << "\n";
    out << "edges " << rep.m << "\n";
    out << "target " << rep.target << "\n";
    out << "connected " << (rep.connected ? 1 : 0) << "\n";
    out << "has_positions " << (rep.has_positions ? 1 : 0) << "\n";
    out << "rank " << rep.rank << "\n";
    out << "rank_mode " << rep.rank_mode << "\n";
    out << "rigid " << (rep.rigid ? 1 : 0) << "\n";
    if (rep.generic >= 0) out << "generic_rank " << rep.generic << "\n";
    if (rep.flex_dim >= 0) out << "flex_dim " << rep.flex_dim << "\n";
    if (rep.stress_dim >= 0) out << "stress_dim " << rep.stress_dim << "\n";
    for (const CountSummary& cs : rep.counts) {
        out << "count." << cs.condition << " " << cs.status << "\n";
        out << "count." << cs.condition << ".violations " << cs.violations.size() << "\n";
    }
    out << "elapsed_seconds " << format_seconds(rep.elapsed_seconds) << "\n";
    return out.str();
}

}  // namespace torrig
