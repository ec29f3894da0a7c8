#ifndef TORRIG_DERIVED_HPP
#define TORRIG_DERIVED_HPP

#include <vector>

#include "torrig/rational.hpp"
#include "torrig/torus.hpp"

namespace torrig {

/*
 * Finite windows of the derived periodic framework.
 *
 * An orbit framework is the quotient of an infinite framework by the
 * lattice: the full structure has a vertex (v, z) for every orbit vertex v
 * and every z in Z^d, placed at p(v) + z L, and an edge (e, z) joining
 * (tail(e), z) to (head(e), z + gain(e)).  A window materializes the part
 * of that structure whose z labels lie in an integer box, which is what a
 * drawing or a by-hand check of a flex actually consumes.  Positions are
 * physical (lattice-scaled) so pictures come out in the original metric.
 */

struct DerivedVertex {
    int vertex;     // orbit vertex id
    IVec z;         // lattice translate
    QVec position;  // p(vertex) + z * L, physical coordinates
};

struct DerivedEdge {
    int edge;  // orbit edge id
    IVec z;    // translate of the tail endpoint
    int a;     // index into DerivedWindow::vertices of (tail, z)
    int b;     // index into DerivedWindow::vertices of (head, z + gain)
};

struct DerivedWindow {
    IVec lo, hi;
    std::vector<DerivedVertex> vertices;  // lexicographic in z, then vertex id
    std::vector<DerivedEdge> edges;       // lexicographic in z, then edge id

    // Index of (v, z) in `vertices`, or -1 when z lies outside the box.
    int index_of(int v, const IVec& z) const;
};

// All fiber vertices with z in [lo, hi]^d and all fiber edges with both
// endpoints inside.  Throws std::domain_error when the box is empty.
DerivedWindow expand_window(const OrbitFramework& f, const IVec& lo,
                            const IVec& hi);

// Squared lengths of the fiber copies of edge e over the given translates.
// Every entry equals the squared orbit edge length: the z contributions to
// the two endpoints cancel exactly.
std::vector<Rat> fiber_edge_sq_lengths(const OrbitFramework& f, int edge,
                                       const std::vector<IVec>& zs);

// Same, as Euclidean lengths.
std::vector<double> fiber_edge_lengths(const OrbitFramework& f, int edge,
                                       const std::vector<IVec>& zs);

// Lifts an orbit velocity assignment (d coordinates per orbit vertex) to
// the window: constant on each fiber, velocity(v, z) = u(v).  Returned in
// the order of w.vertices.
std::vector<QVec> lift_flex(const QVec& u, const DerivedWindow& w);

// Exact first-order length residuals (p_a - p_b) . (u_a - u_b), one per
// window edge.  A field lifted from a flex makes every residual zero.
std::vector<Rat> window_constraint_residuals(const DerivedWindow& w,
                                             const std::vector<QVec>& field);

}  // namespace torrig

#endif  // TORRIG_DERIVED_HPP
