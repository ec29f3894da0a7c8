#ifndef TORRIG_TESTS_HELPERS_HPP
#define TORRIG_TESTS_HELPERS_HPP

/*
 * Shared test utilities: fixture paths, seeded random instances, and the
 * independent oracle routes the suite cross-checks against the library.
 * Every random draw goes through a caller-owned std::mt19937_64 so each
 * test case is reproducible in isolation.
 */

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "torrig/gain_graph.hpp"
#include "torrig/linalg.hpp"
#include "torrig/rigidity.hpp"
#include "torrig/torus.hpp"

namespace torrig_test {

using Rng = std::mt19937_64;

inline std::string fixture(const std::string& name) {
    return std::string(TORRIG_FIXTURE_DIR) + "/" + name;
}

inline torrig::IVec gain_of(std::initializer_list<long> v) {
    torrig::IVec m;
    for (long x : v) m.push_back(torrig::Int(x));
    return m;
}

inline torrig::IVec random_gain(Rng& rng, int d) {
    std::uniform_int_distribution<int> coef(-3, 3);
    torrig::IVec m(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)] = torrig::Int(coef(rng));
    return m;
}

// Random connected gain graph: a random tree skeleton (vertex v hangs off a
// uniform earlier vertex) plus `extra` arbitrary edges, loops and parallels
// included, then a shuffle so the tree is not simply the edge prefix.
inline torrig::GainGraph random_connected_graph(Rng& rng, int d, int n, int extra) {
    torrig::GainGraph g;
    g.d = d;
    g.n = n;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> prev(0, v - 1);
        g.edges.push_back({prev(rng), v, random_gain(rng, d)});
    }
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int k = 0; k < extra; ++k)
        g.edges.push_back({any(rng), any(rng), random_gain(rng, d)});
    std::shuffle(g.edges.begin(), g.edges.end(), rng);
    return g;
}

// Random connected gain graph with exactly d*n - d edges.
inline torrig::GainGraph random_count_graph(Rng& rng, int d, int n) {
    return random_connected_graph(rng, d, n, d * n - d - (n - 1));
}

inline torrig::OrbitFramework random_framework(Rng& rng, const torrig::GainGraph& g) {
    torrig::OrbitFramework f{g, torrig::Torus::unit(g.d),
                             torrig::random_positions(g.d, g.n, rng())};
    return f;
}

// Oracle rank route: pivot count of the reduced row echelon form.  The
// library's production rank is fraction-free elimination; the suite checks
// the two against each other instead of trusting either alone.
inline int rref_rank(torrig::QMat m) {
    return static_cast<int>(torrig::rref(m).size());
}

inline int rref_rank_of(const torrig::RigidityMatrix& m) { return rref_rank(m.entries); }

// Independent gain-space rank of an edge subset: with B the signed
// vertex-edge incidence matrix of the subset and M the gain columns, the
// cycle space is ker B and the gain space is M(ker B), so
//
//     dim M(ker B) = rank [B over M] - rank B.
//
// No spanning forest, no fundamental cycles: a genuinely different route
// from the library's gain_space_of_edges.
inline int incidence_gain_rank(const torrig::GainGraph& g,
                               const std::vector<int>& subset) {
    const int d = g.d;
    const int cols = static_cast<int>(subset.size());
    torrig::QMat B(g.n, cols), BM(g.n + d, cols);
    for (int c = 0; c < cols; ++c) {
        const torrig::Edge& e = g.edges[static_cast<std::size_t>(subset[static_cast<std::size_t>(c)])];
        B(e.head, c) += 1;
        B(e.tail, c) -= 1;
        BM(e.head, c) += 1;
        BM(e.tail, c) -= 1;
        for (int i = 0; i < d; ++i) BM(g.n + i, c) = torrig::Rat(e.gain[static_cast<std::size_t>(i)]);
    }
    return rref_rank(BM) - rref_rank(B);
}

// Test-side matrix product (the library's QMat deliberately has none).
inline torrig::QMat mat_mul(const torrig::QMat& a, const torrig::QMat& b) {
    torrig::QMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    return r;
}

// Random invertible integer matrix with entries in [-3, 3].
inline torrig::QMat random_invertible(Rng& rng, int d) {
    std::uniform_int_distribution<int> coef(-3, 3);
    for (;;) {
        torrig::QMat b(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) b(i, j) = torrig::Rat(coef(rng));
        if (torrig::determinant(b) != 0) return b;
    }
}

// Row Hermite normal form of an integer generator list: two generator lists
// span the same subgroup of Z^d exactly when their HNFs (zero rows dropped)
// are identical.  Plain Euclidean reduction; fine for the tiny inputs tests
// feed it.
inline std::vector<torrig::IVec> hnf_rows(std::vector<torrig::IVec> rows, int d) {
    using torrig::Int;
    int r = 0;
    for (int c = 0; c < d && r < static_cast<int>(rows.size()); ++c) {
        // Euclid on column c among rows r.. until at most one nonzero remains.
        for (;;) {
            int best = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i) {
                const Int& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                if (x == 0) continue;
                if (best < 0 ||
                    cmp(abs(x), abs(rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)])) < 0)
                    best = i;
            }
            if (best < 0) break;  // column is zero below r
            std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(best)]);
            bool done = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                Int& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                if (x == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(),
                           rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get_mpz_t());
                for (int j = 0; j < d; ++j)
                    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        q * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (x != 0) done = false;
            }
            if (done) break;
        }
        torrig::IVec& pivot_row = rows[static_cast<std::size_t>(r)];
        if (pivot_row[static_cast<std::size_t>(c)] == 0) continue;
        if (pivot_row[static_cast<std::size_t>(c)] < 0)
            for (int j = 0; j < d; ++j) pivot_row[static_cast<std::size_t>(j)] = -pivot_row[static_cast<std::size_t>(j)];
        // Reduce the entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].get_mpz_t(),
                       pivot_row[static_cast<std::size_t>(c)].get_mpz_t());
            if (q == 0) continue;
            for (int j = 0; j < d; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    q * pivot_row[static_cast<std::size_t>(j)];
        }
        ++r;
    }
    rows.resize(static_cast<std::size_t>(r));
    return rows;
}

// A spanning tree drawn from a shuffled edge order (union-find), used to
// check tree-independence properties against many different trees.
inline std::vector<int> random_spanning_tree(Rng& rng, const torrig::GainGraph& g) {
    std::vector<int> order(g.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> parent(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&parent](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    std::vector<int> tree;
    for (int k : order) {
        int a = find(g.edges[static_cast<std::size_t>(k)].tail);
        int b = find(g.edges[static_cast<std::size_t>(k)].head);
        if (a == b) continue;
        parent[static_cast<std::size_t>(a)] = b;
        tree.push_back(k);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

}  // namespace torrig_test

#endif  // TORRIG_TESTS_HELPERS_HPP
