#include "torrig/gain_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "torrig/linalg.hpp"

namespace torrig {

void GainGraph::validate() const {
    if (d < 1) throw structure_error("gain dimension must be at least 1");
    if (n < 0) throw structure_error("vertex count must be nonnegative");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw structure_error("edge " + std::to_string(k) + " has endpoint outside [0, " +
                                  std::to_string(n) + ")");
        if (static_cast<int>(e.gain.size()) != d)
            throw structure_error("edge " + std::to_string(k) + " has gain of length " +
                                  std::to_string(e.gain.size()) + ", expected " +
                                  std::to_string(d));
    }
}

int step_tail(const GainGraph& g, const WalkStep& s) {
    const Edge& e = g.edges[static_cast<std::size_t>(s.edge)];
    return s.dir > 0 ? e.tail : e.head;
}

int step_head(const GainGraph& g, const WalkStep& s) {
    const Edge& e = g.edges[static_cast<std::size_t>(s.edge)];
    return s.dir > 0 ? e.head : e.tail;
}

IVec net_gain(const GainGraph& g, const Walk& walk) {
    IVec total = ivec_zero(g.d);
    for (std::size_t k = 0; k < walk.size(); ++k) {
        const WalkStep& s = walk[k];
        if (s.edge < 0 || s.edge >= static_cast<int>(g.edges.size()))
            throw invalid_walk_error("walk step " + std::to_string(k) + ": edge index " +
                                     std::to_string(s.edge) + " out of range");
        if (s.dir != 1 && s.dir != -1)
            throw invalid_walk_error("walk step " + std::to_string(k) +
                                     ": direction must be +1 or -1");
        if (k > 0 && step_head(g, walk[k - 1]) != step_tail(g, s))
            throw invalid_walk_error("walk is not contiguous at step " + std::to_string(k));
        const IVec& m = g.edges[static_cast<std::size_t>(s.edge)].gain;
        for (int i = 0; i < g.d; ++i)
            total[static_cast<std::size_t>(i)] +=
                s.dir > 0 ? m[static_cast<std::size_t>(i)] : -m[static_cast<std::size_t>(i)];
    }
    return total;
}

namespace {

// vertex -> incident edge indices, in increasing edge order (determinism).
std::vector<std::vector<int>> incidence(const GainGraph& g) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.n));
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const Edge& e = g.edges[k];
        inc[static_cast<std::size_t>(e.tail)].push_back(static_cast<int>(k));
        if (e.head != e.tail) inc[static_cast<std::size_t>(e.head)].push_back(static_cast<int>(k));
    }
    return inc;
}

int other_end(const Edge& e, int v) { return e.tail == v ? e.head : e.tail; }

struct Forest {
    std::vector<int> tree_edges;     // BFS forest edges, sorted
    std::vector<int> component;      // vertex -> component id
    std::vector<int> roots;          // lowest vertex of each component
    int components = 0;
};

// BFS forest over all components; within a component the root is its lowest
// vertex and edges are scanned in index order.
Forest bfs_forest(const GainGraph& g) {
    Forest f;
    f.component.assign(static_cast<std::size_t>(g.n), -1);
    auto inc = incidence(g);
    for (int start = 0; start < g.n; ++start) {
        if (f.component[static_cast<std::size_t>(start)] >= 0) continue;
        int comp = f.components++;
        f.roots.push_back(start);
        std::queue<int> q;
        q.push(start);
        f.component[static_cast<std::size_t>(start)] = comp;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int k : inc[static_cast<std::size_t>(v)]) {
                int w = other_end(g.edges[static_cast<std::size_t>(k)], v);
                if (w == v || f.component[static_cast<std::size_t>(w)] >= 0) continue;
                f.component[static_cast<std::size_t>(w)] = comp;
                f.tree_edges.push_back(k);
                q.push(w);
            }
        }
    }
    std::sort(f.tree_edges.begin(), f.tree_edges.end());
    return f;
}

// Unique path tail -> ... -> target inside the forest given as adjacency over
// tree edges; returned as walk steps.  Assumes both ends share a component.
Walk tree_path(const GainGraph& g, const std::vector<int>& tree, int from, int to) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.n));
    for (int k : tree) {
        const Edge& e = g.edges[static_cast<std::size_t>(k)];
        inc[static_cast<std::size_t>(e.tail)].push_back(k);
        if (e.head != e.tail) inc[static_cast<std::size_t>(e.head)].push_back(k);
    }
    std::vector<int> parent_edge(static_cast<std::size_t>(g.n), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::queue<int> q;
    q.push(from);
    seen[static_cast<std::size_t>(from)] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) break;
        for (int k : inc[static_cast<std::size_t>(v)]) {
            int w = other_end(g.edges[static_cast<std::size_t>(k)], v);
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            parent[static_cast<std::size_t>(w)] = v;
            parent_edge[static_cast<std::size_t>(w)] = k;
            q.push(w);
        }
    }
    Walk path;
    for (int v = to; v != from; v = parent[static_cast<std::size_t>(v)]) {
        int k = parent_edge[static_cast<std::size_t>(v)];
        const Edge& e = g.edges[static_cast<std::size_t>(k)];
        // step enters v, so direction is + when the edge points at v
        path.push_back({k, e.head == v ? +1 : -1});
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

bool is_connected(const GainGraph& g) {
    if (g.n <= 1) return true;
    return bfs_forest(g).components == 1;
}

std::vector<int> bfs_spanning_tree(const GainGraph& g, int root) {
    g.validate();
    if (root < 0 || root >= g.n) throw structure_error("root vertex out of range");
    if (!is_connected(g)) throw connectivity_error("graph is not connected");
    // BFS from the requested root; edge scan order fixes the tree.
    auto inc = incidence(g);
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::vector<int> tree;
    std::queue<int> q;
    q.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int k : inc[static_cast<std::size_t>(v)]) {
            int w = other_end(g.edges[static_cast<std::size_t>(k)], v);
            if (w == v || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            tree.push_back(k);
            q.push(w);
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::vector<int> greedy_spanning_tree(const GainGraph& g) {
    g.validate();
    if (!is_connected(g)) throw connectivity_error("graph is not connected");
    // Union-find over the single edge scan; path halving keeps finds cheap.
    std::vector<int> parent(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&parent](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    std::vector<int> tree;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        int a = find(g.edges[k].tail);
        int b = find(g.edges[k].head);
        if (a == b) continue;
        parent[static_cast<std::size_t>(a)] = b;
        tree.push_back(static_cast<int>(k));
        if (static_cast<int>(tree.size()) == g.n - 1) break;
    }
    return tree;
}

void check_spanning_tree(const GainGraph& g, const std::vector<int>& tree) {
    std::set<int> uniq(tree.begin(), tree.end());
    if (uniq.size() != tree.size()) throw tree_error("tree edge set contains duplicates");
    for (int k : tree)
        if (k < 0 || k >= static_cast<int>(g.edges.size()))
            throw tree_error("tree edge index " + std::to_string(k) + " out of range");
    if (static_cast<int>(tree.size()) != g.n - 1)
        throw tree_error("a spanning tree of " + std::to_string(g.n) + " vertices needs " +
                         std::to_string(g.n - 1) + " edges, got " + std::to_string(tree.size()));
    // n-1 edges reaching all n vertices forces acyclicity, so connectivity
    // of the tree subgraph is the only remaining check.
    GainGraph sub{g.d, g.n, {}};
    for (int k : tree) sub.edges.push_back(g.edges[static_cast<std::size_t>(k)]);
    if (!is_connected(sub)) throw tree_error("tree edge set does not span the graph");
}

std::vector<Walk> fundamental_cycles(const GainGraph& g, const std::vector<int>& tree) {
    g.validate();
    if (!is_connected(g)) throw connectivity_error("graph is not connected");
    check_spanning_tree(g, tree);
    std::set<int> in_tree(tree.begin(), tree.end());
    std::vector<Walk> cycles;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        if (in_tree.count(static_cast<int>(k))) continue;
        const Edge& e = g.edges[k];
        Walk cycle;
        cycle.push_back({static_cast<int>(k), +1});
        // close the cycle with the unique tree path head -> tail
        Walk back = tree_path(g, tree, e.head, e.tail);
        cycle.insert(cycle.end(), back.begin(), back.end());
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

GainSpace gain_space(const GainGraph& g) {
    g.validate();
    Forest f = bfs_forest(g);
    std::set<int> in_forest(f.tree_edges.begin(), f.tree_edges.end());
    GainSpace gs;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        if (in_forest.count(static_cast<int>(k))) continue;
        const Edge& e = g.edges[k];
        Walk cycle;
        cycle.push_back({static_cast<int>(k), +1});
        Walk back = tree_path(g, f.tree_edges, e.head, e.tail);
        cycle.insert(cycle.end(), back.begin(), back.end());
        gs.generators.push_back(net_gain(g, cycle));
    }
    if (gs.generators.empty()) {
        gs.rank = 0;
        return gs;
    }
    QMat m(static_cast<int>(gs.generators.size()), g.d);
    for (std::size_t i = 0; i < gs.generators.size(); ++i)
        for (int j = 0; j < g.d; ++j)
            m(static_cast<int>(i), j) = Rat(gs.generators[i][static_cast<std::size_t>(j)]);
    gs.rank = rank_bareiss(m);
    return gs;
}

GainSpace gain_space_of_edges(const GainGraph& g, const std::vector<int>& edge_subset) {
    // Relabel the incident vertices 0..v-1 and recurse into gain_space.
    std::vector<int> relabel(static_cast<std::size_t>(g.n), -1);
    GainGraph sub{g.d, 0, {}};
    for (int k : edge_subset) {
        if (k < 0 || k >= static_cast<int>(g.edges.size()))
            throw structure_error("edge subset index out of range");
        const Edge& e = g.edges[static_cast<std::size_t>(k)];
        for (int v : {e.tail, e.head})
            if (relabel[static_cast<std::size_t>(v)] < 0)
                relabel[static_cast<std::size_t>(v)] = sub.n++;
        sub.edges.push_back({relabel[static_cast<std::size_t>(e.tail)],
                             relabel[static_cast<std::size_t>(e.head)], e.gain});
    }
    return gain_space(sub);
}

EquivalenceResult periodic_equivalent(const GainGraph& g1, const GainGraph& g2) {
    g1.validate();
    g2.validate();
    if (g1.n != g2.n || g1.d != g2.d || g1.edges.size() != g2.edges.size())
        throw structure_error("gain graphs do not share a base graph");

    // Normalize g2's gains into g1's stored orientation edge by edge.
    std::vector<IVec> m2(g2.edges.size());
    for (std::size_t k = 0; k < g1.edges.size(); ++k) {
        const Edge& a = g1.edges[k];
        const Edge& b = g2.edges[k];
        if (a.tail == b.tail && a.head == b.head)
            m2[k] = b.gain;
        else if (a.tail == b.head && a.head == b.tail && a.tail != a.head)
            m2[k] = -b.gain;
        else if (a.tail == a.head && b.tail == b.head && a.tail == b.tail)
            // loops: the reversal identity makes gain -m the same edge as m,
            // so pick whichever sign matches g1's record
            m2[k] = (b.gain == -a.gain) ? -b.gain : b.gain;
        else
            throw structure_error("edge " + std::to_string(k) +
                                  " differs between the base graphs");
    }

    EquivalenceResult res;
    res.offsets.assign(static_cast<std::size_t>(g1.n), ivec_zero(g1.d));

    // Offsets are forced along a spanning forest: root offset 0, then
    // l(head) = l(tail) + n_e - m_e for each tree edge.
    Forest f = bfs_forest(g1);
    std::set<int> in_forest(f.tree_edges.begin(), f.tree_edges.end());
    std::vector<bool> assigned(static_cast<std::size_t>(g1.n), false);
    for (int r : f.roots) assigned[static_cast<std::size_t>(r)] = true;
    // propagate in BFS-forest order; iterate until fixpoint over tree edges
    bool progress = true;
    while (progress) {
        progress = false;
        for (int k : f.tree_edges) {
            const Edge& e = g1.edges[static_cast<std::size_t>(k)];
            IVec delta = m2[static_cast<std::size_t>(k)] - e.gain;
            auto t = static_cast<std::size_t>(e.tail), h = static_cast<std::size_t>(e.head);
            if (assigned[t] && !assigned[h]) {
                res.offsets[h] = res.offsets[t] + delta;
                assigned[h] = true;
                progress = true;
            } else if (assigned[h] && !assigned[t]) {
                res.offsets[t] = res.offsets[h] - delta;
                assigned[t] = true;
                progress = true;
            }
        }
    }

    // Verify every edge against the forced offsets; a mismatch yields the
    // fundamental cycle of the offending edge as a counterexample.
    for (std::size_t k = 0; k < g1.edges.size(); ++k) {
        const Edge& e = g1.edges[k];
        IVec expect = e.gain + res.offsets[static_cast<std::size_t>(e.head)] -
                      res.offsets[static_cast<std::size_t>(e.tail)];
        if (expect == m2[k]) continue;
        Walk cycle;
        cycle.push_back({static_cast<int>(k), +1});
        Walk back = tree_path(g1, f.tree_edges, e.head, e.tail);
        cycle.insert(cycle.end(), back.begin(), back.end());
        res.equivalent = false;
        res.net_gain_g1 = net_gain(g1, cycle);
        // evaluate the same cycle in g2's (normalized) gains
        IVec g2_total = ivec_zero(g1.d);
        for (const WalkStep& s : cycle) {
            const IVec& m = m2[static_cast<std::size_t>(s.edge)];
            for (int i = 0; i < g1.d; ++i)
                g2_total[static_cast<std::size_t>(i)] +=
                    s.dir > 0 ? m[static_cast<std::size_t>(i)] : -m[static_cast<std::size_t>(i)];
        }
        res.net_gain_g2 = g2_total;
        res.counterexample = std::move(cycle);
        res.offsets.clear();
        return res;
    }
    res.equivalent = true;
    return res;
}

}  // namespace torrig
