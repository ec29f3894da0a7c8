#ifndef TORRIG_TGAIN_HPP
#define TORRIG_TGAIN_HPP

/*
 * The T-gain procedure: re-gauging the gains of a connected gain graph along
 * a spanning tree T rooted at a chosen vertex.
 *
 * The T-potential of a vertex v is the net gain of the unique tree path from
 * the root to v.  Replacing every edge gain m(e), e = (v -> w), by
 *
 *     m_T(e) = potential(v) + m(e) - potential(w)
 *
 * zeroes all tree edges while preserving the net gain of every cycle, the
 * local gain group at the root, and (up to relabeling of the fibers) the
 * derived graph.  The non-tree T-gains generate the local gain group.
 */

#include <vector>

#include "torrig/gain_graph.hpp"
#include "torrig/linalg.hpp"

namespace torrig {

struct TPotentials {
    int root = 0;
    std::vector<int> tree;           // spanning tree edge indices
    std::vector<IVec> potential;     // vertex -> net gain of root->v tree path
};

// T-potentials for an explicit spanning tree and root.  potential(root) = 0.
TPotentials t_potentials(const GainGraph& g, const std::vector<int>& tree, int root);

// The re-gauged graph: every gain replaced by its T-gain.  Tree edges come
// out zero; the result is periodic-equivalent to the input.
GainGraph t_gains(const GainGraph& g, const std::vector<int>& tree, int root);

// Convenience overloads using the default deterministic tree: the
// breadth-first tree grown from `root` (lowest-numbered vertex by default).
TPotentials t_potentials(const GainGraph& g, int root = 0);
GainGraph t_gains(const GainGraph& g, int root = 0);

// Generators of the local gain group at `root`: the T-gains of the non-tree
// edges for the default tree.  The generated subgroup of Z^d is independent
// of the tree choice.
std::vector<IVec> local_gain_generators(const GainGraph& g, int root = 0);

// Position shift used when comparing rigidity-matrix ranks before and after
// re-gauging: p'(v) = p(v) + potential(v) * L (row vector times the lattice
// row-generator matrix).  Input and output are physical coordinates.
std::vector<QVec> shifted_positions(const std::vector<QVec>& p, const TPotentials& pots,
                                    const QMat& lattice);

}  // namespace torrig

#endif  // TORRIG_TGAIN_HPP
