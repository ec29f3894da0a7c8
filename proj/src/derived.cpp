#include "torrig/derived.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "torrig/errors.hpp"
#include "torrig/linalg.hpp"

namespace torrig {
namespace {

// Lexicographically first box point, advanced like an odometer with the
// last coordinate fastest; returns false once the box is exhausted.
bool next_box_point(IVec& z, const IVec& lo, const IVec& hi) {
    int i = static_cast<int>(z.size()) - 1;
    while (i >= 0 && z[i] == hi[i]) {
        z[i] = lo[i];
        --i;
    }
    if (i < 0) return false;
    z[i] += 1;
    return true;
}

bool in_box(const IVec& z, const IVec& lo, const IVec& hi) {
    for (std::size_t c = 0; c < z.size(); ++c)
        if (z[c] < lo[c] || z[c] > hi[c]) return false;
    return true;
}

QVec fiber_position(const OrbitFramework& f, int v, const IVec& z) {
    const int d = f.graph.d;
    QVec shifted(d);
    for (int c = 0; c < d; ++c) shifted[c] = f.coords[v][c] + Rat(z[c]);
    return f.torus.L.row_times(shifted);
}

void check_box(const GainGraph& g, const IVec& lo, const IVec& hi) {
    if (static_cast<int>(lo.size()) != g.d || static_cast<int>(hi.size()) != g.d)
        throw structure_error("expand_window: box dimension does not match d");
    for (int c = 0; c < g.d; ++c)
        if (lo[c] > hi[c])
            throw std::domain_error("expand_window: empty box (lo > hi in coordinate " +
                                    std::to_string(c) + ")");
}

}  // namespace

int DerivedWindow::index_of(int v, const IVec& z) const {
    auto it = std::lower_bound(
        vertices.begin(), vertices.end(), std::make_pair(&z, v),
        [](const DerivedVertex& a, const std::pair<const IVec*, int>& key) {
            if (a.z != *key.first) return a.z < *key.first;
            return a.vertex < key.second;
        });
    if (it == vertices.end() || it->vertex != v || it->z != z) return -1;
    return static_cast<int>(it - vertices.begin());
}

DerivedWindow expand_window(const OrbitFramework& f, const IVec& lo, const IVec& hi) {
    f.validate(true);
    check_box(f.graph, lo, hi);

    DerivedWindow w;
    w.lo = lo;
    w.hi = hi;

    IVec z = lo;
    do {
        for (int v = 0; v < f.graph.n; ++v)
            w.vertices.push_back({v, z, fiber_position(f, v, z)});
    } while (next_box_point(z, lo, hi));

    z = lo;
    do {
        for (int e = 0; e < static_cast<int>(f.graph.edges.size()); ++e) {
            const Edge& ed = f.graph.edges[e];
            IVec z2 = z + ed.gain;
            if (!in_box(z2, lo, hi)) continue;
            DerivedEdge de;
            de.edge = e;
            de.z = z;
            de.a = w.index_of(ed.tail, z);
            de.b = w.index_of(ed.head, z2);
            w.edges.push_back(de);
        }
    } while (next_box_point(z, lo, hi));

    return w;
}

std::vector<Rat> fiber_edge_sq_lengths(const OrbitFramework& f, int edge,
                                       const std::vector<IVec>& zs) {
    f.validate(true);
    if (edge < 0 || edge >= static_cast<int>(f.graph.edges.size()))
        throw structure_error("fiber_edge_sq_lengths: edge index out of range");
    const Edge& ed = f.graph.edges[edge];
    std::vector<Rat> out;
    out.reserve(zs.size());
    for (const IVec& z : zs) {
        if (static_cast<int>(z.size()) != f.graph.d)
            throw structure_error("fiber_edge_sq_lengths: translate dimension mismatch");
        QVec pa = fiber_position(f, ed.tail, z);
        QVec pb = fiber_position(f, ed.head, z + ed.gain);
        Rat sq = 0;
        for (int c = 0; c < f.graph.d; ++c) {
            Rat diff = pa[c] - pb[c];
            sq += diff * diff;
        }
        out.push_back(sq);
    }
    return out;
}

std::vector<double> fiber_edge_lengths(const OrbitFramework& f, int edge,
                                       const std::vector<IVec>& zs) {
    std::vector<double> out;
    for (const Rat& sq : fiber_edge_sq_lengths(f, edge, zs))
        out.push_back(std::sqrt(sq.get_d()));
    return out;
}

std::vector<QVec> lift_flex(const QVec& u, const DerivedWindow& w) {
    if (w.vertices.empty()) return {};
    // Infer d from a window vertex; u covers d coordinates per orbit vertex.
    const int d = static_cast<int>(w.vertices.front().position.size());
    int max_vertex = 0;
    for (const DerivedVertex& dv : w.vertices)
        max_vertex = std::max(max_vertex, dv.vertex);
    if (static_cast<int>(u.size()) < d * (max_vertex + 1) ||
        static_cast<int>(u.size()) % d != 0)
        throw structure_error("lift_flex: velocity vector does not cover all orbit vertices");
    std::vector<QVec> field;
    field.reserve(w.vertices.size());
    for (const DerivedVertex& dv : w.vertices) {
        QVec vel(d);
        for (int c = 0; c < d; ++c) vel[c] = u[d * dv.vertex + c];
        field.push_back(vel);
    }
    return field;
}

std::vector<Rat> window_constraint_residuals(const DerivedWindow& w,
                                             const std::vector<QVec>& field) {
    if (field.size() != w.vertices.size())
        throw structure_error("window_constraint_residuals: field size does not match window");
    std::vector<Rat> out;
    out.reserve(w.edges.size());
    for (const DerivedEdge& de : w.edges) {
        const QVec& pa = w.vertices[de.a].position;
        const QVec& pb = w.vertices[de.b].position;
        Rat r = 0;
        for (std::size_t c = 0; c < pa.size(); ++c)
            r += (pa[c] - pb[c]) * (field[de.a][c] - field[de.b][c]);
        out.push_back(r);
    }
    return out;
}

}  // namespace torrig
