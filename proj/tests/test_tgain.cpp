#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "torrig/errors.hpp"
#include "torrig/gain_graph.hpp"
#include "torrig/orbit_io.hpp"
#include "torrig/rigidity.hpp"
#include "torrig/tgain.hpp"

using namespace torrig;
using torrig_test::gain_of;
using torrig_test::hnf_rows;
using torrig_test::random_connected_graph;
using torrig_test::random_spanning_tree;
using torrig_test::Rng;

namespace {

// The worked re-gauging example: three vertices, four edges, tree {e1, e4},
// root vertex 3 (index 2).
GainGraph fig_example() {
    GainGraph g;
    g.d = 2;
    g.n = 3;
    g.edges = {{0, 1, gain_of({1, 2})}, {1, 2, gain_of({0, 1})},
               {2, 0, gain_of({3, 1})}, {2, 0, gain_of({1, -1})}};
    return g;
}

bool edges_equal(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].tail != b[k].tail || a[k].head != b[k].head || a[k].gain != b[k].gain)
            return false;
    return true;
}

}  // namespace

TEST_CASE("t_potentials of the worked example") {
    GainGraph g = fig_example();
    TPotentials pots = t_potentials(g, {0, 3}, 2);
    CHECK(pots.root == 2);
    CHECK(pots.tree == std::vector<int>{0, 3});
    REQUIRE(pots.potential.size() == 3);
    CHECK(pots.potential[0] == gain_of({1, -1}));
    CHECK(pots.potential[1] == gain_of({2, 1}));
    CHECK(pots.potential[2] == gain_of({0, 0}));
}

TEST_CASE("t_gains of the worked example zero the tree and equalize the rest") {
    GainGraph g = fig_example();
    GainGraph re = t_gains(g, {0, 3}, 2);
    CHECK(re.edges[0].gain == gain_of({0, 0}));
    CHECK(re.edges[3].gain == gain_of({0, 0}));
    // Both non-tree edges re-gauge to (2, 2): for e2, (2,1) + (0,1) - (0,0);
    // for e3, (0,0) + (3,1) - (1,-1).
    CHECK(re.edges[1].gain == gain_of({2, 2}));
    CHECK(re.edges[2].gain == gain_of({2, 2}));
    // Endpoints and orientations are untouched.
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        CHECK(re.edges[k].tail == g.edges[k].tail);
        CHECK(re.edges[k].head == g.edges[k].head);
    }
    // The local gain group collapses to the rank-1 subgroup <(2, 2)>.
    std::vector<IVec> hn = hnf_rows({re.edges[1].gain, re.edges[2].gain}, 2);
    REQUIRE(hn.size() == 1);
    CHECK(hn[0] == gain_of({2, 2}));
}

TEST_CASE("t_potentials: zero-gain tree and single edge") {
    GainGraph path;
    path.d = 2;
    path.n = 3;
    path.edges = {{0, 1, gain_of({0, 0})}, {1, 2, gain_of({0, 0})}};
    TPotentials pots = t_potentials(path, {0, 1}, 0);
    for (const IVec& p : pots.potential) CHECK(is_zero(p));

    GainGraph single;
    single.d = 2;
    single.n = 2;
    single.edges = {{0, 1, gain_of({3, -2})}};
    CHECK(t_potentials(single, {0}, 0).potential[1] == gain_of({3, -2}));
    // Rooting at the head negates the path gain.
    CHECK(t_potentials(single, {0}, 1).potential[0] == gain_of({-3, 2}));
}

TEST_CASE("t_potentials validates tree and root") {
    GainGraph g = fig_example();
    CHECK_THROWS_AS(t_potentials(g, {0, 1, 2}, 0), tree_error);
    CHECK_THROWS_AS(t_potentials(g, {0}, 0), tree_error);
    CHECK_THROWS_AS(t_potentials(g, {0, 3}, 5), structure_error);
}

TEST_CASE("default-tree overloads agree with the explicit form") {
    GainGraph g = fig_example();
    std::vector<int> tree = bfs_spanning_tree(g, 0);
    CHECK(edges_equal(t_gains(g, 0).edges, t_gains(g, tree, 0).edges));
    CHECK(t_potentials(g, 0).potential == t_potentials(g, tree, 0).potential);
}

TEST_CASE("re-gauging preserves cycle gains and periodic equivalence") {
    Rng rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        int n = 2 + static_cast<int>(rng() % 5);
        GainGraph g = random_connected_graph(rng, d, n, static_cast<int>(rng() % 4));
        std::vector<int> tree = random_spanning_tree(rng, g);
        int root = static_cast<int>(rng() % static_cast<unsigned>(n));
        GainGraph re = t_gains(g, tree, root);

        // Tree edges come out zero.
        for (int t : tree) CHECK(is_zero(re.edges[static_cast<std::size_t>(t)].gain));

        // Every fundamental cycle keeps its net gain.
        for (const Walk& c : fundamental_cycles(g, tree))
            CHECK(net_gain(g, c) == net_gain(re, c));

        // The re-gauged graph is periodic-equivalent to the input, with the
        // potentials as the coboundary witness.
        EquivalenceResult eq = periodic_equivalent(g, re);
        CHECK(eq.equivalent);

        // Re-gauging is idempotent over the same tree.
        CHECK(edges_equal(t_gains(re, tree, root).edges, re.edges));
    }
}

TEST_CASE("local gain group is independent of tree and root") {
    Rng rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        int n = 2 + static_cast<int>(rng() % 4);
        GainGraph g = random_connected_graph(rng, d, n, 1 + static_cast<int>(rng() % 3));
        std::vector<IVec> base = hnf_rows(local_gain_generators(g, 0), d);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> tree = random_spanning_tree(rng, g);
            int root = static_cast<int>(rng() % static_cast<unsigned>(n));
            GainGraph re = t_gains(g, tree, root);
            std::vector<IVec> gens;
            std::vector<bool> in_tree(g.edges.size(), false);
            for (int k : tree) in_tree[static_cast<std::size_t>(k)] = true;
            for (std::size_t k = 0; k < re.edges.size(); ++k)
                if (!in_tree[k]) gens.push_back(re.edges[k].gain);
            CHECK(hnf_rows(gens, d) == base);
        }
    }
}

TEST_CASE("local_gain_generators of the zigzag") {
    GainGraph g;
    g.d = 2;
    g.n = 2;
    g.edges = {{0, 1, gain_of({0, 0})}, {0, 1, gain_of({1, 0})}};
    std::vector<IVec> gens = local_gain_generators(g);
    REQUIRE(gens.size() == 1);
    bool plus = gens[0] == gain_of({1, 0});
    bool minus = gens[0] == gain_of({-1, 0});
    CHECK((plus || minus));
}

TEST_CASE("shifted_positions applies potential times lattice") {
    GainGraph single;
    single.d = 2;
    single.n = 2;
    single.edges = {{0, 1, gain_of({1, -1})}};
    TPotentials pots = t_potentials(single, {0}, 0);

    QMat L(2, 2);
    L(0, 0) = 2; L(0, 1) = 0;
    L(1, 0) = 1; L(1, 1) = 3;
    std::vector<QVec> p = {{Rat(1, 4), Rat(1, 3)}, {Rat(1, 2), Rat(2, 3)}};
    std::vector<QVec> q = shifted_positions(p, pots, L);
    // Vertex 0 is the root: unshifted.
    CHECK(q[0] == p[0]);
    // Vertex 1 moves by (1, -1) * L = (2 - 1, 0 - 3) = (1, -3).
    CHECK(q[1][0] == Rat(1, 2) + 1);
    CHECK(q[1][1] == Rat(2, 3) - 3);
}

TEST_CASE("re-gauging with shifted positions preserves the rigidity rank") {
    OrbitFramework f = load_document(torrig_test::fixture("e1.orbit")).framework();
    RigidityMatrix before = build_rigidity_matrix(f);
    CHECK(rank(before) == 6);

    std::vector<int> tree = greedy_spanning_tree(f.graph);
    TPotentials pots = t_potentials(f.graph, tree, 0);
    GainGraph re = t_gains(f.graph, tree, 0);

    std::vector<QVec> phys;
    for (int v = 0; v < f.graph.n; ++v) phys.push_back(f.physical_position(v));
    std::vector<QVec> shifted = shifted_positions(phys, pots, f.torus.L);
    RigidityMatrix after = build_rigidity_matrix(re, f.torus, shifted);
    CHECK(rank(after) == 6);
}
