#ifndef TORRIG_TORUS_HPP
#define TORRIG_TORUS_HPP

/*
 * The fixed torus R^d / L Z^d and frameworks living on it.
 *
 * The lattice matrix L holds the generating translations t_1..t_d as rows;
 * it must be invertible.  Its canonical form is lower triangular with
 * positive diagonal, reached by an orthogonal left factor R with R*L~ = L0.
 *
 * An orbit framework is a gain graph together with distinct vertex
 * positions.  Positions are stored as exact rational coordinates in the unit
 * cell [0,1)^d; the physical position of v is p(v) * L (row vector times the
 * row-generator matrix), so lengths and figures live in lattice-scaled
 * coordinates while all combinatorics stay on the unit cell.
 */

#include <optional>
#include <vector>

#include "torrig/gain_graph.hpp"
#include "torrig/linalg.hpp"

namespace torrig {

struct Torus {
    int d = 0;
    QMat L;  // d x d, rows are the generating translations

    static Torus unit(int d) { return Torus{d, QMat::identity(d)}; }

    // Throws singular_lattice_error if det L = 0, structure_error on shape.
    void validate() const;

    bool is_lower_triangular_positive() const;
};

// Result of the orthogonal lower-triangularization R * Ltilde = L0.
struct LatticeNormalization {
    std::vector<std::vector<double>> R;   // orthogonal, d x d
    std::vector<std::vector<double>> L0;  // lower triangular, positive diagonal
    bool reflection = false;              // true when det R = -1 was forced
};

// Orthogonally reduce a (real) lattice matrix to lower-triangular form with
// positive diagonal.  The one floating-point operation in the library;
// off-triangle residues below 1e-12 (relative) are zeroed.  Throws
// singular_lattice_error for (numerically) singular input.
LatticeNormalization normalize_lattice(const std::vector<std::vector<double>>& Ltilde);

struct OrbitFramework {
    GainGraph graph;
    Torus torus;
    std::vector<QVec> coords;  // unit-cell coordinates in [0,1)^d, exact

    // Structural validation; distinct-position check can be waived for
    // deliberately degenerate experiments (allow_degenerate).
    void validate(bool allow_degenerate = false) const;

    // Physical position of vertex v: coords[v] * L.
    QVec physical_position(int v) const;

    // Physical displacement along edge e as drawn from its tail's home cell:
    // p_tail - (p_head + gain * L).  This is exactly the rigidity row block.
    QVec edge_vector(int e) const;
};

// Same framework on the unit torus (L = I).  Unit-cell coordinates are kept;
// rigidity rank is unchanged because the swap multiplies each column block
// of the rigidity matrix by the invertible L.
OrbitFramework to_unit_torus(const OrbitFramework& f);

// Congruence on the fixed torus: a translation t with
//   (a) q_i = (p_i + t) - floor(p_i + t)            for every vertex, and
//   (b) n_e = m_e + (floor(p_j + t) - floor(p_i + t)) for every edge (i->j).
// Both frameworks are reduced to the unit torus first; t is pinned by
// matching vertex 0 and then verified everywhere.
struct CongruenceResult {
    bool congruent = false;
    QVec translation;  // witness t (unit-torus coordinates) when congruent
};
CongruenceResult congruent(const OrbitFramework& f1, const OrbitFramework& f2);

// Length of the bar {i, j; m}: || p_i - (p_j + m L) || in physical
// coordinates.  The vertex order matters: swapping i and j while keeping m
// generally changes the bar (but negating m restores it).
double edge_length(const OrbitFramework& f, int i, int j, const IVec& m);

// Exact squared length of the same bar (used wherever equality must be
// decided, e.g. fiber-length comparisons).
Rat edge_sq_length(const OrbitFramework& f, int i, int j, const IVec& m);

}  // namespace torrig

#endif  // TORRIG_TORUS_HPP
