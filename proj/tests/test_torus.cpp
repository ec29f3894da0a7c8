#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "torrig/errors.hpp"
#include "torrig/rigidity.hpp"
#include "torrig/torus.hpp"

using namespace torrig;
using torrig_test::gain_of;
using torrig_test::random_connected_graph;
using torrig_test::random_framework;
using torrig_test::Rng;

namespace {

// Euclidean distance between a computed double matrix and a target.
double matrix_gap(const std::vector<std::vector<double>>& a,
                  const std::vector<std::vector<double>>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            double diff = a[i][j] - b[i][j];
            s += diff * diff;
        }
    return std::sqrt(s);
}

// Shift every coordinate of f by t, wrapping into [0, 1) and absorbing the
// wraps into the gains; the result is congruent to f by construction.
OrbitFramework translated(const OrbitFramework& f, const QVec& t) {
    OrbitFramework out = f;
    const int d = f.graph.d;
    std::vector<IVec> carry(static_cast<std::size_t>(f.graph.n), ivec_zero(d));
    for (int v = 0; v < f.graph.n; ++v)
        for (int i = 0; i < d; ++i) {
            Rat shifted = f.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] +
                          t[static_cast<std::size_t>(i)];
            carry[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = rat_floor(shifted);
            out.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = rat_frac(shifted);
        }
    for (Edge& e : out.graph.edges)
        e.gain = e.gain + carry[static_cast<std::size_t>(e.head)] -
                 carry[static_cast<std::size_t>(e.tail)];
    return out;
}

}  // namespace

TEST_CASE("Torus validation") {
    CHECK_NOTHROW(Torus::unit(3).validate());

    Torus bad{2, QMat(2, 3)};
    CHECK_THROWS_AS(bad.validate(), structure_error);

    Torus singular{2, QMat(2, 2)};
    singular.L(0, 0) = 1; singular.L(0, 1) = 2;
    singular.L(1, 0) = 2; singular.L(1, 1) = 4;
    CHECK_THROWS_AS(singular.validate(), singular_lattice_error);

    Torus lower{2, QMat(2, 2)};
    lower.L(0, 0) = 2; lower.L(1, 0) = 1; lower.L(1, 1) = 3;
    CHECK(lower.is_lower_triangular_positive());
    lower.L(0, 1) = 1;
    CHECK(!lower.is_lower_triangular_positive());
}

TEST_CASE("normalize_lattice: already lower triangular") {
    std::vector<std::vector<double>> L = {{2, 0}, {1, 3}};
    LatticeNormalization norm = normalize_lattice(L);
    CHECK(matrix_gap(norm.L0, L) < 1e-12);
    CHECK(matrix_gap(norm.R, {{1, 0}, {0, 1}}) < 1e-12);
    CHECK(!norm.reflection);
}

TEST_CASE("normalize_lattice: rotated and reflected unit lattices") {
    // A quarter-turn of the unit lattice normalizes back to the identity;
    // the orthogonal factor is the inverse rotation.
    LatticeNormalization rot = normalize_lattice({{0, 1}, {-1, 0}});
    CHECK(matrix_gap(rot.L0, {{1, 0}, {0, 1}}) < 1e-9);
    CHECK(matrix_gap(rot.R, {{0, -1}, {1, 0}}) < 1e-9);
    CHECK(!rot.reflection);

    // Swapping the generators is a reflection: det = -1 forces the flag.
    LatticeNormalization swap = normalize_lattice({{0, 1}, {1, 0}});
    CHECK(matrix_gap(swap.L0, {{1, 0}, {0, 1}}) < 1e-9);
    CHECK(swap.reflection);
}

TEST_CASE("normalize_lattice: general case invariants") {
    std::vector<std::vector<double>> L = {{3, 4}, {1, 2}};
    LatticeNormalization norm = normalize_lattice(L);

    CHECK(norm.L0[0][1] == 0.0);
    CHECK(norm.L0[0][0] > 0);
    CHECK(norm.L0[1][1] > 0);

    // R is orthogonal: R R^T = I.
    double rtr[2][2] = {{0, 0}, {0, 0}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) rtr[i][j] += norm.R[i][k] * norm.R[j][k];
    CHECK(std::abs(rtr[0][0] - 1) < 1e-12);
    CHECK(std::abs(rtr[1][1] - 1) < 1e-12);
    CHECK(std::abs(rtr[0][1]) < 1e-12);

    // R * Ltilde = L0.
    std::vector<std::vector<double>> prod = {{0, 0}, {0, 0}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) prod[i][j] += norm.R[i][k] * L[k][j];
    CHECK(matrix_gap(prod, norm.L0) < 1e-12);

    // |det| is preserved: |3*2 - 4*1| = 2.
    CHECK(std::abs(norm.L0[0][0] * norm.L0[1][1] - 2.0) < 1e-9);

    CHECK_THROWS_AS(normalize_lattice({{1, 2}, {2, 4}}), singular_lattice_error);
    CHECK_THROWS_AS(normalize_lattice({}), structure_error);
    CHECK_THROWS_AS(normalize_lattice({{1, 2}}), structure_error);
}

TEST_CASE("framework validation") {
    OrbitFramework f;
    f.graph.d = 2;
    f.graph.n = 2;
    f.graph.edges = {{0, 1, gain_of({0, 0})}};
    f.torus = Torus::unit(2);
    f.coords = {{Rat(1, 4), Rat(1, 3)}};
    CHECK_THROWS_AS(f.validate(), structure_error);  // one position missing

    f.coords.push_back({Rat(3, 2), Rat(0)});
    CHECK_THROWS_AS(f.validate(), structure_error);  // out of [0, 1)

    f.coords[1] = {Rat(1, 4), Rat(1, 3)};
    CHECK_THROWS_AS(f.validate(), structure_error);  // coincident vertices
    CHECK_NOTHROW(f.validate(true));                 // ... unless waived

    f.coords[1] = {Rat(3, 4), Rat(1, 3)};
    CHECK_NOTHROW(f.validate());
}

TEST_CASE("physical positions and edge vectors scale by the lattice") {
    OrbitFramework f;
    f.graph.d = 2;
    f.graph.n = 2;
    f.graph.edges = {{0, 1, gain_of({1, 0})}};
    f.torus.d = 2;
    f.torus.L = QMat(2, 2);
    f.torus.L(0, 0) = 2; f.torus.L(1, 0) = 1; f.torus.L(1, 1) = 3;
    f.coords = {{Rat(1, 2), Rat(1, 4)}, {Rat(0), Rat(1, 2)}};

    // p(0) = (1/2, 1/4) * L = (1/2*2 + 1/4*1, 1/4*3) = (5/4, 3/4).
    QVec p0 = f.physical_position(0);
    CHECK(p0[0] == Rat(5, 4));
    CHECK(p0[1] == Rat(3, 4));

    // Edge vector: (c_0 - c_1 - m) L = (1/2 - 0 - 1, 1/4 - 1/2) L
    //            = (-1/2, -1/4) L = (-5/4, -3/4).
    QVec ev = f.edge_vector(0);
    CHECK(ev[0] == Rat(-5, 4));
    CHECK(ev[1] == Rat(-3, 4));
}

TEST_CASE("to_unit_torus keeps coordinates and rank") {
    Rng rng(31337);
    GainGraph g = random_connected_graph(rng, 2, 4, 3);
    OrbitFramework f = random_framework(rng, g);
    f.torus.L = QMat(2, 2);
    f.torus.L(0, 0) = 2; f.torus.L(1, 0) = -1; f.torus.L(1, 1) = 5;

    OrbitFramework u = to_unit_torus(f);
    CHECK(u.coords == f.coords);
    CHECK(u.torus.L == QMat::identity(2));
    // Swapping the lattice multiplies each column block by an invertible
    // matrix, so the rank cannot move.
    CHECK(rank(build_rigidity_matrix(f)) == rank(build_rigidity_matrix(u)));

    // Explicit coordinates: on L = 2I the point (1/2, 1/4) sits at (1, 1/2).
    OrbitFramework two;
    two.graph.d = 2;
    two.graph.n = 1;
    two.torus.d = 2;
    two.torus.L = QMat(2, 2);
    two.torus.L(0, 0) = 2; two.torus.L(1, 1) = 2;
    two.coords = {{Rat(1, 2), Rat(1, 4)}};
    QVec phys = two.physical_position(0);
    CHECK(phys[0] == Rat(1));
    CHECK(phys[1] == Rat(1, 2));
    QVec unit_phys = to_unit_torus(two).physical_position(0);
    CHECK(unit_phys[0] == Rat(1, 2));
    CHECK(unit_phys[1] == Rat(1, 4));
}

TEST_CASE("congruent: identity and plain shift") {
    Rng rng(2718);
    GainGraph g = random_connected_graph(rng, 2, 3, 2);
    OrbitFramework f = random_framework(rng, g);

    CongruenceResult self = congruent(f, f);
    CHECK(self.congruent);
    for (const Rat& c : self.translation) CHECK(c == 0);

    // Shifting every vertex (wraps absorbed into the gains) is a congruence;
    // the witness equals the shift up to integers.
    QVec t = {Rat(3, 10), Rat(2, 5)};
    OrbitFramework shifted = translated(f, t);
    CongruenceResult res = congruent(f, shifted);
    CHECK(res.congruent);
    for (int i = 0; i < 2; ++i)
        CHECK(rat_frac(res.translation[static_cast<std::size_t>(i)]) ==
              rat_frac(t[static_cast<std::size_t>(i)]));
}

TEST_CASE("congruent: a wrap must be absorbed by the gain") {
    OrbitFramework f;
    f.graph.d = 2;
    f.graph.n = 2;
    f.graph.edges = {{0, 1, gain_of({0, 0})}};
    f.torus = Torus::unit(2);
    f.coords = {{Rat(4, 5), Rat(1, 2)}, {Rat(3, 10), Rat(1, 5)}};

    // Shifting by (3/10, 0) pushes vertex 0 across the cell wall: its copy
    // re-enters at (1/10, 1/2) and the edge gain must pick up the carry,
    // becoming (-1, 0).
    OrbitFramework wrapped;
    wrapped.graph = f.graph;
    wrapped.graph.edges[0].gain = gain_of({-1, 0});
    wrapped.torus = f.torus;
    wrapped.coords = {{Rat(1, 10), Rat(1, 2)}, {Rat(3, 5), Rat(1, 5)}};
    CHECK(congruent(f, wrapped).congruent);

    // The same positions with the gain left at (0, 0) are a different
    // framework: not congruent.
    OrbitFramework stale = wrapped;
    stale.graph.edges[0].gain = gain_of({0, 0});
    CHECK(!congruent(f, stale).congruent);
}

TEST_CASE("congruent: reversal identity on stored orientations") {
    OrbitFramework f;
    f.graph.d = 2;
    f.graph.n = 2;
    f.graph.edges = {{0, 1, gain_of({1, 0})}};
    f.torus = Torus::unit(2);
    f.coords = {{Rat(1, 4), Rat(1, 3)}, {Rat(3, 4), Rat(2, 3)}};

    OrbitFramework flipped = f;
    flipped.graph.edges[0] = {1, 0, gain_of({-1, 0})};
    CHECK(congruent(f, flipped).congruent);

    OrbitFramework other = f;
    other.graph.edges[0] = {1, 0, gain_of({1, 0})};
    CHECK(!congruent(f, other).congruent);
}

TEST_CASE("congruent rejects different base graphs") {
    Rng rng(99);
    GainGraph g = random_connected_graph(rng, 2, 3, 1);
    OrbitFramework f = random_framework(rng, g);
    OrbitFramework h = f;
    h.graph.edges.push_back({0, 1, gain_of({0, 0})});
    CHECK_THROWS_AS(congruent(f, h), structure_error);
}

TEST_CASE("congruence is an equivalence relation and preserves the matrix") {
    Rng rng(1618);
    for (int trial = 0; trial < 15; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        GainGraph g = random_connected_graph(rng, d, 2 + static_cast<int>(rng() % 4),
                                             static_cast<int>(rng() % 4));
        OrbitFramework f = random_framework(rng, g);

        QVec t1, t2;
        for (int i = 0; i < d; ++i) {
            t1.push_back(Rat(static_cast<long>(rng() % 13), 7));
            t2.push_back(Rat(-static_cast<long>(rng() % 9), 5));
        }
        OrbitFramework a = translated(f, t1);
        OrbitFramework b = translated(a, t2);

        CHECK(congruent(f, f).congruent);   // reflexive
        CHECK(congruent(f, a).congruent);
        CHECK(congruent(a, f).congruent);   // symmetric
        CHECK(congruent(a, b).congruent);
        CHECK(congruent(f, b).congruent);   // transitive

        // Congruent frameworks have literally the same rigidity rows.
        CHECK(build_rigidity_matrix(f).entries == build_rigidity_matrix(a).entries);
    }
}

TEST_CASE("edge lengths: loops, wraps, and the reversal identity") {
    OrbitFramework f;
    f.graph.d = 2;
    f.graph.n = 2;
    f.graph.edges = {{0, 1, gain_of({0, 0})}};
    f.torus = Torus::unit(2);
    f.coords = {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}};

    CHECK(edge_sq_length(f, 0, 0, gain_of({0, 0})) == 0);
    CHECK(edge_sq_length(f, 0, 1, gain_of({0, 0})) == Rat(1, 4));
    // Reaching the copy one cell over stretches the bar to 3/2.
    CHECK(edge_sq_length(f, 0, 1, gain_of({1, 0})) == Rat(9, 4));
    CHECK(edge_length(f, 0, 1, gain_of({1, 0})) == doctest::Approx(1.5));
    // Swapping endpoints with the same gain gives the other representative...
    CHECK(edge_sq_length(f, 1, 0, gain_of({0, 0})) == Rat(1, 4));
    // ... and negating the gain restores the original bar exactly.
    CHECK(edge_sq_length(f, 1, 0, gain_of({-1, 0})) == Rat(9, 4));

    CHECK_THROWS_AS(edge_sq_length(f, 0, 7, gain_of({0, 0})), structure_error);
}

TEST_CASE("edge length reversal identity on random frameworks") {
    Rng rng(86);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        GainGraph g = random_connected_graph(rng, d, 3, 2);
        OrbitFramework f = random_framework(rng, g);
        for (const Edge& e : f.graph.edges)
            CHECK(edge_sq_length(f, e.tail, e.head, e.gain) ==
                  edge_sq_length(f, e.head, e.tail, -e.gain));
    }
}
