#ifndef TORRIG_RIGIDITY_HPP
#define TORRIG_RIGIDITY_HPP

/*
 * The fixed-torus rigidity matrix and everything decided through its rank.
 *
 * For a framework with physical positions p and lattice L, the row of edge
 * e = {i, j; m} carries
 *
 *     block i:  p_i - (p_j + m L)        block j:  (p_j + m L) - p_i
 *
 * and zeros elsewhere (d columns per vertex).  Its kernel is the space of
 * infinitesimal motions; the d coordinate translations always lie in it, so
 * the framework is infinitesimally rigid exactly when rank = d|V| - d.
 * Loops produce identically zero rows.  Stresses are left-kernel vectors.
 *
 * Generic rank is realized by sampling exact rational positions (integer
 * numerators over a fixed prime denominator) and taking the maximum exact
 * rank over a few trials; a random sample misses the generic stratum only on
 * a measure-zero variety, so the maximum stabilizes immediately in practice.
 */

#include <cstdint>
#include <vector>

#include "torrig/linalg.hpp"
#include "torrig/torus.hpp"

namespace torrig {

struct RigidityMatrix {
    QMat entries;                // |E| x d|V|
    std::vector<int> row_edges;  // row -> edge index (identity order today)
    int d = 0;
    int n = 0;
};

struct FlexBasis {
    // Each vector has length d|V| (velocity u_v in the d columns of v) and
    // is orthogonal to every translation.
    std::vector<QVec> vectors;
};

struct StressBasis {
    std::vector<QVec> vectors;  // each of length |E|, a left-kernel element
};

// Low-level builder from explicit physical positions (no unit-cell
// restriction; re-gauging comparisons need out-of-cell points).
RigidityMatrix build_rigidity_matrix(const GainGraph& g, const Torus& torus,
                                     const std::vector<QVec>& physical_positions);

// Framework builder: physical positions are coords * L.  Throws
// connectivity_error on disconnected graphs.
RigidityMatrix build_rigidity_matrix(const OrbitFramework& f);

// Exact rank (fraction-free elimination) or, in float mode, the numerical
// rank of a double-precision copy (relative tolerance 1e-9).
int rank(const RigidityMatrix& m, bool float_mode = false);

// rank = d|V| - d?
bool is_infinitesimally_rigid(const OrbitFramework& f, bool float_mode = false);

// Basis of ker R0 orthogonal to the translation subspace; empty iff rigid.
// Dimension is always d|V| - rank - d.
FlexBasis flex_basis(const OrbitFramework& f);

// Basis of the left kernel of R0; empty iff the edge rows are independent.
StressBasis stress_basis(const OrbitFramework& f);

// The d coordinate translations as d|V|-vectors (unit vector e_k repeated on
// every vertex block).
std::vector<QVec> trivial_motion_basis(int d, int n);

// Deterministic random unit-cell positions: numerators drawn uniformly from
// [0, 2^31), fixed prime denominator.  Same seed, same positions.
std::vector<QVec> random_positions(int d, int n, std::uint64_t seed);

// Maximum exact rank over `trials` random position samples; the generic
// rank with overwhelming probability.  Deterministic given seed.
int generic_rank(const GainGraph& g, int trials = 3, std::uint64_t seed = 0);

}  // namespace torrig

#endif  // TORRIG_RIGIDITY_HPP
