#ifndef TORRIG_ORBIT_IO_HPP
#define TORRIG_ORBIT_IO_HPP

#include <string>
#include <vector>

#include "torrig/gain_graph.hpp"
#include "torrig/rational.hpp"
#include "torrig/torus.hpp"

namespace torrig {

/*
 * The .orbit text format.  One record per line, '#' starts a comment,
 * vertices are 1-based in the file (0-based in memory).  Canonical layout:
 *
 *     name <single line>           (optional)
 *     comment <single line>        (optional)
 *     d 2
 *     vertices 4
 *     lattice 1 0                  (optional; exactly d rows when present)
 *     lattice 0 1
 *     edge 1 2 0 0                 (tail head gain...; d gain entries)
 *     position 1 1/4 3/4           (optional; fractional coordinates,
 *                                   one line per vertex when present)
 *
 * Numbers are exact rationals ("3" or "3/7"); decimal literals are only
 * accepted when the caller opts in, and are converted exactly.  A document
 * written by write_document parses back to an identical document, and
 * canonical text survives parse-then-write byte for byte.
 */

struct OrbitGraphDocument {
    std::string name;
    std::string comment;
    GainGraph graph;
    bool has_lattice = false;
    QMat lattice;  // d x d rows-as-generators when has_lattice
    bool has_positions = false;
    std::vector<QVec> positions;  // fractional, one per vertex when present

    // The torus this document describes: its lattice, or the unit torus.
    Torus torus() const;

    // Framework assembled from graph, torus, and positions.  Throws
    // structure_error when positions are absent.
    OrbitFramework framework(bool allow_degenerate = false) const;
};

// Parses document text.  Errors carry 1-based line numbers.
OrbitGraphDocument parse_document(const std::string& text,
                                  bool allow_decimal = false);

// Canonical text form of a document.
std::string write_document(const OrbitGraphDocument& doc);

// Convenience file wrappers.
OrbitGraphDocument load_document(const std::string& path,
                                 bool allow_decimal = false);
void save_document(const OrbitGraphDocument& doc, const std::string& path);

}  // namespace torrig

#endif  // TORRIG_ORBIT_IO_HPP
