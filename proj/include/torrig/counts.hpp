#ifndef TORRIG_COUNTS_HPP
#define TORRIG_COUNTS_HPP

#include <string>
#include <vector>

#include "torrig/gain_graph.hpp"

namespace torrig {

/*
 * Combinatorial necessary conditions for generic minimal rigidity on the
 * fixed torus.  All three checks are necessary but not jointly sufficient
 * for d >= 3 (the doubled-banana graph passes every count yet is flexible),
 * so they are reported as evidence, never as a rigidity verdict.
 *
 * The underlying count: |E| = d|V| - d edges are needed because the d
 * translations of the torus are motions of every framework, and an edge
 * subset Y can contribute at most
 *
 *     d|V(Y)| - C(d+1,2) + sum_{i=1..r} (d-i) + C(max(d-r-k+1, 0), 2)
 *
 * independent rows, where k = |V(Y)| and r is the rank of the gain space
 * of Y.  The first three terms count the motions that survive when the
 * gains of Y span only an r-dimensional subspace: after re-gauging Y over
 * a spanning forest (a rank-preserving move), every gain of Y lies in that
 * subspace S, and each skew-symmetric map A of S-perp yields an
 * infinitesimal motion u_v = A p_v, because row e = (u_i - u_j) . (p_i -
 * p_j - m L) evaluates to A w . w - A w . (m L) = 0 whenever A w is
 * orthogonal to every gain direction.  That gives d translations plus
 * C(d-r, 2) rotations, and d + C(d-r,2) = C(d+1,2) - sum_{i=1..r}(d-i).
 * The final binomial restores the small-subset allowance: on k points the
 * skew maps vanishing on all difference vectors restrict to translations,
 * and there are C(d-r-k+1, 2) of those once k-1 generic differences are
 * pinned.  The term is zero whenever k >= d-r+1, so it only matters for
 * subsets too small to see every rotation (e.g. a single zero-gain edge
 * in d = 3, which is independent even though the uncorrected bound says
 * otherwise).
 */

// One offending subgraph found by a check.  `measured` and `bound` are the
// two sides of the violated inequality; `gain_rank` is the rank of the gain
// space of the edge subset, or -1 when the check did not need it.
struct Violation {
    std::vector<int> vertices;
    std::vector<int> edges;
    long long measured = 0;
    long long bound = 0;
    int gain_rank = -1;
};

struct CountReport {
    std::string condition;
    bool pass = false;
    std::vector<Violation> violations;
};

// Exhaustive subset enumeration is exponential, so each check refuses
// instances past these sizes instead of silently running forever.
struct CountGates {
    int max_vertices = 12;
    int max_edges = 20;
};

// A partition of the edge set into d spanning trees, by edge index.
struct TreeDecomposition {
    bool success = false;
    std::vector<std::vector<int>> trees;
    // On failure: an edge subset A with |A| > d * (|V(A)| - c(A)), the
    // obstruction witnessing that no partition exists.
    Violation certificate;
};

// Checks |E| = d|V| - d and |E(V')| <= d|V'| - d for every vertex subset.
// Within the vertex gate the subset condition is decided exactly by brute
// force and a densest offending subset is reported; beyond it the condition
// is decided via Nash-Williams: the subset counts hold if and only if the
// edges partition into d forests.
CountReport maxwell_check(const GainGraph& g, const CountGates& gates = {});

// For every tight connected subgraph Y (|Y| = d|V(Y)| - d), the gain space
// of Y must have rank at least d - 1.  Requires |E| = d|V| - d.  Vacuous
// for d = 1.
CountReport gain_tightness_check(const GainGraph& g,
                                 const CountGates& gates = {});

// The graded sparsity count described above, checked over every connected
// edge subset.  Disconnected subsets follow from their components because
// the bound is superadditive across disjoint vertex supports.
CountReport rank_graded_sparsity_check(const GainGraph& g,
                                       const CountGates& gates = {});

// Partitions the edges into d spanning trees (Nash-Williams / matroid
// union), or returns the certificate subset proving impossibility.
// Gains are ignored; only the underlying multigraph matters.
TreeDecomposition tree_decomposition(const GainGraph& g, int d);

// Assigns gains to a graph with |E| = d|V| - d so that the result is
// constructive: tree i of a spanning-tree decomposition gets the i-th
// standard basis vector as the gain on each of its edges.  Edges are
// reoriented tail = min(tail, head).  Throws decomposition_error when the
// graph does not decompose.
GainGraph synthesize_constructive_gains(const GainGraph& g, int d);

// The identity C(d,2) - sum_{i=1..k}(d-i) = C(d-k,2) relating the rotation
// count of the torus to the graded edge allowance, for 0 <= k <= d.
// Throws std::domain_error outside that range.
bool fact_identity(int d, int k);

}  // namespace torrig

#endif  // TORRIG_COUNTS_HPP
