#ifndef TORRIG_GAIN_GRAPH_HPP
#define TORRIG_GAIN_GRAPH_HPP

/*
 * Gain graphs: finite directed multigraphs whose edges carry gains in Z^d.
 *
 * An edge (i, j, m) and its reversal (j, i, -m) denote the same underlying
 * edge; every operation here is insensitive to the stored orientation.
 * Loops and parallel edges are allowed.  The net gain of a walk is the
 * signed sum of the gains along it; the gain space of a graph is spanned by
 * the net gains of a fundamental cycle system and its rank (over Q) is
 * independent of the spanning tree used to build that system.
 */

#include <optional>
#include <vector>

#include "torrig/rational.hpp"

namespace torrig {

struct Edge {
    int tail = 0;
    int head = 0;
    IVec gain;  // length d
};

struct GainGraph {
    int d = 0;  // gain dimension
    int n = 0;  // vertex count; vertex ids are 0..n-1
    std::vector<Edge> edges;

    // Validates ranges and gain lengths; throws structure_error on failure.
    void validate() const;
};

// One step of a walk: an edge index traversed forward (+1) or backward (-1).
struct WalkStep {
    int edge = 0;
    int dir = +1;
};

using Walk = std::vector<WalkStep>;

struct GainSpace {
    std::vector<IVec> generators;  // net gains of a fundamental cycle system
    int rank = 0;                  // rank of the generator matrix over Q
};

// Result of the periodic-equivalence test between two gain assignments on a
// shared base graph: either vertex offsets witnessing n_e = m_e + l(head) -
// l(tail) for every edge, or a cycle whose net gains differ.
struct EquivalenceResult {
    bool equivalent = false;
    std::vector<IVec> offsets;            // per-vertex witness when equivalent
    std::optional<Walk> counterexample;   // cycle with differing net gains
    IVec net_gain_g1, net_gain_g2;        // the two net gains of that cycle
};

// ---- walks ----

// Signed gain sum along a walk; throws invalid_walk_error if consecutive
// steps do not share a vertex or an edge index is out of range.
IVec net_gain(const GainGraph& g, const Walk& walk);

// Endpoints of a step after applying its direction.
int step_tail(const GainGraph& g, const WalkStep& s);
int step_head(const GainGraph& g, const WalkStep& s);

// ---- trees and cycles ----

// Breadth-first spanning tree rooted at `root` (edges scanned in index
// order, so the result is deterministic).  Throws connectivity_error if the
// graph is not connected.
std::vector<int> bfs_spanning_tree(const GainGraph& g, int root = 0);

// First spanning tree in edge-index order: scan edges once and keep every
// edge joining two distinct components (Kruskal with unit weights).  Unlike
// a rooted search this depends only on edge order, so callers that expose a
// tree to the user get a stable, root-independent choice.  Throws
// connectivity_error if the graph is not connected.
std::vector<int> greedy_spanning_tree(const GainGraph& g);

// True when the underlying multigraph is connected (n = 0 counts as
// connected, n = 1 always is).
bool is_connected(const GainGraph& g);

// Validates that `tree` is a spanning tree; throws tree_error otherwise.
void check_spanning_tree(const GainGraph& g, const std::vector<int>& tree);

// One fundamental cycle per non-tree edge: the edge forward, then the unique
// tree path from its head back to its tail.
std::vector<Walk> fundamental_cycles(const GainGraph& g, const std::vector<int>& tree);

// Net gains of a fundamental cycle system and their rank over Q.  Connected
// graphs use one spanning tree; disconnected graphs sum the per-component
// generator sets.
GainSpace gain_space(const GainGraph& g);

// Gain space of the subgraph spanned by an edge subset (vertices are those
// incident to the subset).  Used by the sparsity counts.
GainSpace gain_space_of_edges(const GainGraph& g, const std::vector<int>& edge_subset);

// ---- periodic equivalence ----

// Decides whether g2's gains differ from g1's by a coboundary (equivalently:
// every cycle has the same net gain in both).  Requires the same base graph
// up to per-edge orientation; throws structure_error otherwise.
EquivalenceResult periodic_equivalent(const GainGraph& g1, const GainGraph& g2);

}  // namespace torrig

#endif  // TORRIG_GAIN_GRAPH_HPP
