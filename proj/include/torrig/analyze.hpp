#ifndef TORRIG_ANALYZE_HPP
#define TORRIG_ANALYZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "torrig/counts.hpp"
#include "torrig/orbit_io.hpp"

namespace torrig {

/*
 * One-stop analysis of an orbit graph document: rank and rigidity verdict,
 * flex/stress dimensions when positions are available, generic rank, and
 * the three combinatorial checks.  The verdict is driven by the documented
 * positions when the document has them (that is what the file describes)
 * and by the generic rank otherwise.
 */

struct AnalyzeOptions {
    int trials = 3;
    std::uint64_t seed = 0;
    bool float_mode = false;       // floating-point rank instead of exact
    bool allow_degenerate = false; // accept coincident positions
    CountGates gates;
};

struct CountSummary {
    std::string condition;
    std::string status;  // "pass", "fail", or "skipped: <reason>"
    std::vector<Violation> violations;
};

struct AnalysisReport {
    std::string name;
    int d = 0;
    int n = 0;
    int m = 0;
    long long target = 0;  // d|V| - d
    bool has_positions = false;
    bool connected = true;
    long long rank = -1;  // rank at the documented positions, or generic;
                          // -1 when not computable (disconnected graph)
    bool rigid = false;   // rank == target
    long long generic = -1;          // generic rank, -1 when not computed
    long long flex_dim = -1;         // nontrivial flexes, -1 when no positions
    long long stress_dim = -1;       // -1 when no positions
    std::string rank_mode;           // "exact" or "float"
    std::vector<CountSummary> counts;
    double elapsed_seconds = 0;
};

AnalysisReport analyze(const OrbitGraphDocument& doc, const AnalyzeOptions& opt = {});

// Human-readable multi-line report.
std::string format_report(const AnalysisReport& rep);

// Flat key/value block, one "key value" pair per line, stable keys.
std::string format_machine(const AnalysisReport& rep);

}  // namespace torrig

#endif  // TORRIG_ANALYZE_HPP
