#include "torrig/rigidity.hpp"

#include <random>
#include <stdexcept>

namespace torrig {

namespace {

// First prime above 2^31; the fixed denominator of sampled coordinates.
const unsigned long kSampleDenominator = 2147483659UL;

// SplitMix64 step: decorrelates (seed, trial) pairs into generator seeds.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

RigidityMatrix build_rigidity_matrix(const GainGraph& g, const Torus& torus,
                                     const std::vector<QVec>& physical_positions) {
    g.validate();
    torus.validate();
    if (g.d != torus.d) throw structure_error("graph and torus dimensions differ");
    if (static_cast<int>(physical_positions.size()) != g.n)
        throw structure_error("need one position per vertex");
    if (!is_connected(g)) throw connectivity_error("graph is not connected");

    const int d = g.d;
    RigidityMatrix rm;
    rm.d = d;
    rm.n = g.n;
    rm.entries = QMat(static_cast<int>(g.edges.size()), d * g.n);
    rm.row_edges.resize(g.edges.size());
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        rm.row_edges[k] = static_cast<int>(k);
        const Edge& e = g.edges[k];
        // m * L in physical coordinates
        QVec m_q(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            m_q[static_cast<std::size_t>(i)] = Rat(e.gain[static_cast<std::size_t>(i)]);
        QVec mL = torus.L.row_times(m_q);
        const QVec& pi = physical_positions[static_cast<std::size_t>(e.tail)];
        const QVec& pj = physical_positions[static_cast<std::size_t>(e.head)];
        for (int c = 0; c < d; ++c) {
            Rat entry = pi[static_cast<std::size_t>(c)] - pj[static_cast<std::size_t>(c)] -
                        mL[static_cast<std::size_t>(c)];
            // loops cancel to a zero row because tail and head share a block
            rm.entries(static_cast<int>(k), d * e.tail + c) += entry;
            rm.entries(static_cast<int>(k), d * e.head + c) += -entry;
        }
    }
    return rm;
}

RigidityMatrix build_rigidity_matrix(const OrbitFramework& f) {
    std::vector<QVec> phys(static_cast<std::size_t>(f.graph.n));
    for (int v = 0; v < f.graph.n; ++v) phys[static_cast<std::size_t>(v)] = f.physical_position(v);
    return build_rigidity_matrix(f.graph, f.torus, phys);
}

int rank(const RigidityMatrix& m, bool float_mode) {
    return float_mode ? rank_float(m.entries) : rank_bareiss(m.entries);
}

bool is_infinitesimally_rigid(const OrbitFramework& f, bool float_mode) {
    f.validate();
    RigidityMatrix rm = build_rigidity_matrix(f);
    return rank(rm, float_mode) == f.graph.d * f.graph.n - f.graph.d;
}

std::vector<QVec> trivial_motion_basis(int d, int n) {
    std::vector<QVec> basis;
    for (int k = 0; k < d; ++k) {
        QVec t(static_cast<std::size_t>(d * n), Rat(0));
        for (int v = 0; v < n; ++v) t[static_cast<std::size_t>(d * v + k)] = 1;
        basis.push_back(std::move(t));
    }
    return basis;
}

FlexBasis flex_basis(const OrbitFramework& f) {
    f.validate(true);
    RigidityMatrix rm = build_rigidity_matrix(f);
    std::vector<QVec> kernel = right_kernel(rm.entries);
    const int d = f.graph.d, n = f.graph.n;
    std::vector<QVec> translations = trivial_motion_basis(d, n);

    // Project the kernel onto the orthogonal complement of the translations.
    // The translations are mutually orthogonal with squared norm n, so the
    // projection is a single Gram-Schmidt sweep (exact).
    for (QVec& v : kernel) {
        for (const QVec& t : translations) {
            Rat coef = dot(v, t) / Rat(n);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coef * t[i];
        }
    }
    // Eliminate to a basis: the projected set spans ker intersect translations^perp
    // but is no longer independent (d directions were collapsed).
    FlexBasis fb;
    if (kernel.empty()) return fb;
    QMat m(static_cast<int>(kernel.size()), d * n);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (int j = 0; j < d * n; ++j)
            m(static_cast<int>(i), j) = kernel[i][static_cast<std::size_t>(j)];
    rref(m);
    for (int i = 0; i < m.rows(); ++i) {
        QVec row(static_cast<std::size_t>(d * n));
        bool nonzero = false;
        for (int j = 0; j < d * n; ++j) {
            row[static_cast<std::size_t>(j)] = m(i, j);
            if (m(i, j) != 0) nonzero = true;
        }
        if (nonzero) fb.vectors.push_back(std::move(row));
    }
    return fb;
}

StressBasis stress_basis(const OrbitFramework& f) {
    f.validate(true);
    RigidityMatrix rm = build_rigidity_matrix(f);
    StressBasis sb;
    sb.vectors = left_kernel(rm.entries);
    return sb;
}

std::vector<QVec> random_positions(int d, int n, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::vector<QVec> coords(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        QVec p(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c) {
            // top 31 bits of the draw: uniform on [0, 2^31)
            unsigned long num = static_cast<unsigned long>(rng() >> 33);
            Rat q{Int(num), Int(kSampleDenominator)};
            q.canonicalize();
            p[static_cast<std::size_t>(c)] = q;
        }
        coords[static_cast<std::size_t>(v)] = p;
    }
    return coords;
}

int generic_rank(const GainGraph& g, int trials, std::uint64_t seed) {
    g.validate();
    if (!is_connected(g)) throw connectivity_error("graph is not connected");
    if (trials < 1) throw std::invalid_argument("generic_rank needs at least one trial");
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        // derive an independent stream per (seed, trial)
        std::uint64_t trial_seed = splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1)));
        OrbitFramework f{g, Torus::unit(g.d), random_positions(g.d, g.n, trial_seed)};
        RigidityMatrix rm = build_rigidity_matrix(f);
        int r = rank_bareiss(rm.entries);
        if (r > best) best = r;
    }
    return best;
}

}  // namespace torrig
