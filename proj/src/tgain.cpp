#include "torrig/tgain.hpp"

#include <queue>
#include <set>
#include <stdexcept>

namespace torrig {

TPotentials t_potentials(const GainGraph& g, const std::vector<int>& tree, int root) {
    g.validate();
    if (root < 0 || root >= g.n) throw structure_error("root vertex out of range");
    if (!is_connected(g)) throw connectivity_error("graph is not connected");
    check_spanning_tree(g, tree);

    TPotentials pots;
    pots.root = root;
    pots.tree = tree;
    pots.potential.assign(static_cast<std::size_t>(g.n), ivec_zero(g.d));

    // Propagate potentials outward from the root over tree edges:
    // traversing v -> w along an edge stored (v, w, m) adds m, against the
    // stored orientation subtracts it.
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.n));
    for (int k : tree) {
        const Edge& e = g.edges[static_cast<std::size_t>(k)];
        inc[static_cast<std::size_t>(e.tail)].push_back(k);
        inc[static_cast<std::size_t>(e.head)].push_back(k);
    }
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::queue<int> q;
    q.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int k : inc[static_cast<std::size_t>(v)]) {
            const Edge& e = g.edges[static_cast<std::size_t>(k)];
            int w = e.tail == v ? e.head : e.tail;
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            pots.potential[static_cast<std::size_t>(w)] =
                e.tail == v ? pots.potential[static_cast<std::size_t>(v)] + e.gain
                            : pots.potential[static_cast<std::size_t>(v)] - e.gain;
            q.push(w);
        }
    }
    return pots;
}

GainGraph t_gains(const GainGraph& g, const std::vector<int>& tree, int root) {
    TPotentials pots = t_potentials(g, tree, root);
    GainGraph out = g;
    for (Edge& e : out.edges)
        e.gain = pots.potential[static_cast<std::size_t>(e.tail)] + e.gain -
                 pots.potential[static_cast<std::size_t>(e.head)];
    return out;
}

TPotentials t_potentials(const GainGraph& g, int root) {
    return t_potentials(g, bfs_spanning_tree(g, root), root);
}

GainGraph t_gains(const GainGraph& g, int root) {
    return t_gains(g, bfs_spanning_tree(g, root), root);
}

std::vector<IVec> local_gain_generators(const GainGraph& g, int root) {
    std::vector<int> tree = bfs_spanning_tree(g, root);
    GainGraph relabeled = t_gains(g, tree, root);
    std::set<int> in_tree(tree.begin(), tree.end());
    std::vector<IVec> gens;
    for (std::size_t k = 0; k < relabeled.edges.size(); ++k)
        if (!in_tree.count(static_cast<int>(k))) gens.push_back(relabeled.edges[k].gain);
    return gens;
}

std::vector<QVec> shifted_positions(const std::vector<QVec>& p, const TPotentials& pots,
                                    const QMat& lattice) {
    if (p.size() != pots.potential.size())
        throw std::invalid_argument("shifted_positions: position/potential count mismatch");
    int d = lattice.rows();
    std::vector<QVec> out = p;
    for (std::size_t v = 0; v < p.size(); ++v) {
        QVec pot_q(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            pot_q[static_cast<std::size_t>(i)] = Rat(pots.potential[v][static_cast<std::size_t>(i)]);
        QVec shift = lattice.row_times(pot_q);  // potential(v) * L, row convention
        for (int i = 0; i < d; ++i)
            out[v][static_cast<std::size_t>(i)] += shift[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace torrig
