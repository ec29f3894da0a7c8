#ifndef TORRIG_ERRORS_HPP
#define TORRIG_ERRORS_HPP

/*
 * Exception taxonomy for torrig.
 *
 * Every failure mode the library can diagnose maps to one of these types so
 * callers (and the CLI) can distinguish "your input is malformed" from
 * "this computation is gated" without string matching.  All carry a
 * human-readable message.
 */

#include <stdexcept>
#include <string>

namespace torrig {

// Structural validation of graphs, frameworks, or documents failed.
struct structure_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation that needs a connected graph received a disconnected one.
struct connectivity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A supplied edge set is not a spanning tree of the graph.
struct tree_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A walk is not contiguous or references edges that do not exist.
struct invalid_walk_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A lattice matrix is singular (or numerically indistinguishable from it).
struct singular_lattice_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A graph admits no partition of its edges into d spanning trees.
struct decomposition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A brute-force enumeration was requested beyond its size gate.
struct gate_error : std::runtime_error {
    int gate;  // the gate value that was exceeded
    gate_error(const std::string& what, int gate_value)
        : std::runtime_error(what), gate(gate_value) {}
};

// Text input could not be parsed; carries a 1-based line number (0 = n/a).
struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& what, int line_number = 0)
        : std::runtime_error(line_number > 0
                                 ? "line " + std::to_string(line_number) + ": " + what
                                 : what),
          line(line_number) {}
};

}  // namespace torrig

#endif  // TORRIG_ERRORS_HPP
