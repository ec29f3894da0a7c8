#include "torrig/torus.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace torrig {

void Torus::validate() const {
    if (d < 1) throw structure_error("torus dimension must be at least 1");
    if (L.rows() != d || L.cols() != d)
        throw structure_error("lattice matrix must be " + std::to_string(d) + "x" +
                              std::to_string(d));
    if (determinant(L) == 0) throw singular_lattice_error("lattice matrix is singular");
}

bool Torus::is_lower_triangular_positive() const {
    for (int i = 0; i < d; ++i) {
        if (L(i, i) <= 0) return false;
        for (int j = i + 1; j < d; ++j)
            if (L(i, j) != 0) return false;
    }
    return true;
}

LatticeNormalization normalize_lattice(const std::vector<std::vector<double>>& Ltilde) {
    const int d = static_cast<int>(Ltilde.size());
    if (d == 0) throw structure_error("empty lattice matrix");
    Eigen::MatrixXd A(d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(Ltilde[static_cast<std::size_t>(i)].size()) != d)
            throw structure_error("lattice matrix is not square");
        for (int j = 0; j < d; ++j)
            A(i, j) = Ltilde[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    // We need orthogonal Q with A = Q * L0, L0 lower triangular (then
    // R = Q^T satisfies R A = L0).  That is a QL decomposition; obtain it
    // from ordinary QR of the exchange-reversed matrix J A J.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) J(i, d - 1 - i) = 1.0;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(J * A * J);
    Eigen::MatrixXd Qp = qr.householderQ();
    Eigen::MatrixXd Rp = qr.matrixQR().triangularView<Eigen::Upper>();
    Eigen::MatrixXd Q = J * Qp * J;
    Eigen::MatrixXd L0 = J * Rp * J;  // lower triangular

    // Absorb diagonal signs into Q so the diagonal of L0 is positive.
    const double scale = A.cwiseAbs().maxCoeff();
    for (int k = 0; k < d; ++k) {
        if (std::abs(L0(k, k)) <= 1e-12 * (scale > 0 ? scale : 1.0))
            throw singular_lattice_error("lattice matrix is singular (zero pivot)");
        if (L0(k, k) < 0) {
            L0.row(k) = -L0.row(k);
            Q.col(k) = -Q.col(k);
        }
    }
    // Clean the triangular zeros (they are exact in theory, residue here).
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (std::abs(L0(i, j)) > 1e-12 * (scale > 0 ? scale : 1.0))
                throw structure_error("triangularization failed to converge");
            L0(i, j) = 0.0;
        }

    LatticeNormalization out;
    out.reflection = Q.determinant() < 0;  // det L~ < 0 forces a reflection
    Eigen::MatrixXd R = Q.transpose();
    out.R.assign(static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d)));
    out.L0.assign(static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            out.R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = R(i, j);
            out.L0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = L0(i, j);
        }
    return out;
}

void OrbitFramework::validate(bool allow_degenerate) const {
    graph.validate();
    torus.validate();
    if (graph.d != torus.d) throw structure_error("graph and torus dimensions differ");
    if (static_cast<int>(coords.size()) != graph.n)
        throw structure_error("framework needs one position per vertex");
    for (int v = 0; v < graph.n; ++v) {
        const QVec& p = coords[static_cast<std::size_t>(v)];
        if (static_cast<int>(p.size()) != graph.d)
            throw structure_error("position of vertex " + std::to_string(v) +
                                  " has wrong dimension");
        for (const Rat& c : p)
            if (c < 0 || c >= 1)
                throw structure_error("position of vertex " + std::to_string(v) +
                                      " lies outside the unit cell [0,1)^d");
    }
    if (!allow_degenerate) {
        for (int v = 0; v < graph.n; ++v)
            for (int w = v + 1; w < graph.n; ++w)
                if (coords[static_cast<std::size_t>(v)] == coords[static_cast<std::size_t>(w)])
                    throw structure_error("vertices " + std::to_string(v) + " and " +
                                          std::to_string(w) + " share a position");
    }
}

QVec OrbitFramework::physical_position(int v) const {
    return torus.L.row_times(coords[static_cast<std::size_t>(v)]);
}

QVec OrbitFramework::edge_vector(int e) const {
    const Edge& ed = graph.edges[static_cast<std::size_t>(e)];
    QVec diff(static_cast<std::size_t>(graph.d));
    for (int i = 0; i < graph.d; ++i)
        diff[static_cast<std::size_t>(i)] =
            coords[static_cast<std::size_t>(ed.tail)][static_cast<std::size_t>(i)] -
            coords[static_cast<std::size_t>(ed.head)][static_cast<std::size_t>(i)] -
            Rat(ed.gain[static_cast<std::size_t>(i)]);
    return torus.L.row_times(diff);  // (f_i - f_j - m) L = p_i - (p_j + m L)
}

OrbitFramework to_unit_torus(const OrbitFramework& f) {
    OrbitFramework out = f;
    out.torus = Torus::unit(f.graph.d);
    return out;
}

CongruenceResult congruent(const OrbitFramework& f1, const OrbitFramework& f2) {
    f1.validate(true);
    f2.validate(true);
    const GainGraph& g1 = f1.graph;
    const GainGraph& g2 = f2.graph;
    if (g1.n != g2.n || g1.d != g2.d || g1.edges.size() != g2.edges.size())
        throw structure_error("frameworks do not share a base graph");
    // Normalize f2's edges into f1's stored orientation (reversal identity).
    std::vector<IVec> n2(g2.edges.size());
    for (std::size_t k = 0; k < g1.edges.size(); ++k) {
        const Edge& a = g1.edges[k];
        const Edge& b = g2.edges[k];
        if (a.tail == b.tail && a.head == b.head)
            n2[k] = b.gain;
        else if (a.tail == b.head && a.head == b.tail && a.tail != a.head)
            n2[k] = -b.gain;
        else
            throw structure_error("edge " + std::to_string(k) +
                                  " differs between the base graphs");
    }

    CongruenceResult res;
    if (g1.n == 0) {
        // No vertices pins no translation; empty frameworks are congruent.
        res.congruent = true;
        res.translation = QVec(static_cast<std::size_t>(g1.d), Rat(0));
        return res;
    }

    // Work on the unit torus; conditions (a)/(b) are stated there.  The
    // translation is determined mod Z^d by vertex 0, and both conditions are
    // invariant under integer shifts of t, so the representative below
    // decides congruence completely.
    const int d = g1.d;
    QVec t(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        t[static_cast<std::size_t>(i)] =
            f2.coords[0][static_cast<std::size_t>(i)] - f1.coords[0][static_cast<std::size_t>(i)];

    // (a) every vertex lands on its partner after the shift, mod Z^d ...
    std::vector<IVec> carry(static_cast<std::size_t>(g1.n), ivec_zero(d));
    for (int v = 0; v < g1.n; ++v) {
        for (int i = 0; i < d; ++i) {
            Rat shifted = f1.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] +
                          t[static_cast<std::size_t>(i)];
            carry[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = rat_floor(shifted);
            if (rat_frac(shifted) !=
                f2.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)])
                return res;  // positions differ: not congruent
        }
    }
    // ... and (b) the gains absorb exactly the floor carries.
    for (std::size_t k = 0; k < g1.edges.size(); ++k) {
        const Edge& e1 = g1.edges[k];
        IVec expect = e1.gain + carry[static_cast<std::size_t>(e1.head)] -
                      carry[static_cast<std::size_t>(e1.tail)];
        bool loop_flip_ok = e1.tail == e1.head && n2[k] == -expect;
        if (n2[k] != expect && !loop_flip_ok) return res;
    }
    res.congruent = true;
    res.translation = t;
    return res;
}

Rat edge_sq_length(const OrbitFramework& f, int i, int j, const IVec& m) {
    if (i < 0 || i >= f.graph.n || j < 0 || j >= f.graph.n)
        throw structure_error("edge_length: vertex out of range");
    QVec diff(static_cast<std::size_t>(f.graph.d));
    for (int c = 0; c < f.graph.d; ++c)
        diff[static_cast<std::size_t>(c)] =
            f.coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
            f.coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] -
            Rat(m[static_cast<std::size_t>(c)]);
    QVec phys = f.torus.L.row_times(diff);
    return dot(phys, phys);
}

double edge_length(const OrbitFramework& f, int i, int j, const IVec& m) {
    return std::sqrt(edge_sq_length(f, i, j, m).get_d());
}

}  // namespace torrig
