#include "torrig/counts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "torrig/errors.hpp"

namespace torrig {
namespace {

long long binom2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

// sum_{i=1..r} (d-i), the graded edge allowance for gain-space rank r.
long long graded_sum(int d, int r) {
    long long s = 0;
    for (int i = 1; i <= r; ++i) s += d - i;
    return s;
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

void sort_violations(std::vector<Violation>& vs) {
    std::sort(vs.begin(), vs.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
    });
}

/*
 * Matroid-union engine: greedily colours edges into d graphic forests,
 * augmenting along shortest exchange chains.  When edge e cannot be
 * coloured even after exchanges, the set of edges visited by the breadth-
 * first search is a certificate A with |A| > d * (|V(A)| - c(A)): every
 * visited edge has its endpoints joined inside every forest by visited
 * edges alone, so each forest contributes at most rank(A) edges to A, and
 * A consists of those contributions plus the uncolourable edge.
 */

// Path between u and v inside forest f (edges with colour f), as edge
// indices; returns false when u and v are in different components.
bool forest_path(const GainGraph& g, const std::vector<int>& colour, int f,
                 int u, int v, std::vector<int>* path_out) {
    const int n = g.n;
    std::vector<int> via_edge(n, -1), prev(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[u] = 1;
    q.push(u);
    while (!q.empty() && !seen[v]) {
        int w = q.front();
        q.pop();
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            if (colour[e] != f) continue;
            const Edge& ed = g.edges[e];
            int other = -1;
            if (ed.tail == w) other = ed.head;
            else if (ed.head == w) other = ed.tail;
            else continue;
            if (seen[other]) continue;
            seen[other] = 1;
            via_edge[other] = e;
            prev[other] = w;
            q.push(other);
        }
    }
    if (!seen[v]) return false;
    path_out->clear();
    for (int w = v; w != u; w = prev[w]) path_out->push_back(via_edge[w]);
    std::sort(path_out->begin(), path_out->end());
    return true;
}

// Tries to colour edge e0; on failure fills *failed with the visited set.
bool augment(const GainGraph& g, int d, std::vector<int>& colour, int e0,
             std::vector<int>* failed) {
    const int m = static_cast<int>(g.edges.size());
    std::vector<char> visited(m, 0);
    // parent[x] = (p, f): x lies on the cycle edge p closes in forest f,
    // so x leaving forest f makes room for p there.
    std::vector<std::pair<int, int>> parent(m, {-1, -1});
    std::queue<int> q;
    visited[e0] = 1;
    q.push(e0);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        const Edge& ex = g.edges[x];
        if (ex.tail == ex.head) continue;  // a loop closes a cycle by itself
        for (int f = 0; f < d; ++f) {
            if (f == colour[x]) continue;
            std::vector<int> path;
            if (!forest_path(g, colour, f, ex.tail, ex.head, &path)) {
                // x fits into forest f; unwind the exchange chain.
                int cur = x, target = f;
                while (true) {
                    int vacated = colour[cur];
                    colour[cur] = target;
                    if (parent[cur].first < 0) break;
                    cur = parent[cur].first;
                    target = vacated;
                }
                return true;
            }
            for (int y : path) {
                if (visited[y]) continue;
                visited[y] = 1;
                parent[y] = {x, f};
                q.push(y);
            }
        }
    }
    failed->clear();
    for (int e = 0; e < m; ++e)
        if (visited[e]) failed->push_back(e);
    return false;
}

struct UnionResult {
    bool success = false;
    std::vector<int> colour;        // forest index per edge when successful
    std::vector<int> failed_edges;  // certificate set otherwise
};

UnionResult forest_union(const GainGraph& g, int d) {
    UnionResult res;
    res.colour.assign(g.edges.size(), -1);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (!augment(g, d, res.colour, e, &res.failed_edges)) {
            res.success = false;
            return res;
        }
    }
    res.success = true;
    return res;
}

// Vertex supports and component count of an edge subset, via union-find.
struct SubsetShape {
    std::vector<int> vertices;
    int components = 0;
};

SubsetShape subset_shape(const GainGraph& g, const std::vector<int>& edges) {
    std::vector<int> root(g.n, -1);
    std::function<int(int)> find = [&](int v) {
        return root[v] == v ? v : root[v] = find(root[v]);
    };
    SubsetShape shape;
    for (int e : edges) {
        for (int v : {g.edges[e].tail, g.edges[e].head}) {
            if (root[v] < 0) {
                root[v] = v;
                shape.vertices.push_back(v);
                ++shape.components;
            }
        }
        int a = find(g.edges[e].tail), b = find(g.edges[e].head);
        if (a != b) {
            root[a] = b;
            --shape.components;
        }
    }
    std::sort(shape.vertices.begin(), shape.vertices.end());
    return shape;
}

std::vector<int> induced_edges(const GainGraph& g, std::uint64_t vmask) {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const Edge& ed = g.edges[e];
        if ((vmask >> ed.tail & 1) && (vmask >> ed.head & 1)) out.push_back(e);
    }
    return out;
}

bool induced_subgraph_connected(const GainGraph& g, std::uint64_t vmask,
                                const std::vector<int>& induced) {
    std::vector<int> verts = mask_to_indices(vmask);
    if (verts.empty()) return false;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    seen[verts[0]] = 1;
    q.push(verts[0]);
    int reached = 1;
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int e : induced) {
            const Edge& ed = g.edges[e];
            int other = ed.tail == w ? ed.head : (ed.head == w ? ed.tail : -1);
            if (other < 0 || seen[other]) continue;
            seen[other] = 1;
            ++reached;
            q.push(other);
        }
    }
    return reached == static_cast<int>(verts.size());
}

void require_connected(const GainGraph& g, const char* who) {
    if (!is_connected(g))
        throw connectivity_error(std::string(who) + " requires a connected graph");
}

}  // namespace

CountReport maxwell_check(const GainGraph& g, const CountGates& gates) {
    g.validate();
    require_connected(g, "maxwell_check");
    CountReport rep;
    rep.condition = "maxwell";
    const int d = g.d, n = g.n;
    const int m = static_cast<int>(g.edges.size());
    const long long need = static_cast<long long>(d) * n - d;

    if (m != need) {
        Violation v;
        for (int i = 0; i < n; ++i) v.vertices.push_back(i);
        for (int e = 0; e < m; ++e) v.edges.push_back(e);
        v.measured = m;
        v.bound = need;
        rep.violations.push_back(v);
    }

    if (n <= gates.max_vertices) {
        // Exact subset check; keep the densest offender (largest excess,
        // then fewest vertices, then lowest subset).
        long long best_excess = 0;
        std::uint64_t best_mask = 0;
        int best_k = 0;
        for (std::uint64_t vs = 1; vs < (1ull << n); ++vs) {
            int k = std::popcount(vs);
            long long cnt = 0;
            for (const Edge& ed : g.edges)
                if ((vs >> ed.tail & 1) && (vs >> ed.head & 1)) ++cnt;
            long long excess = cnt - (static_cast<long long>(d) * k - d);
            if (excess > best_excess ||
                (excess == best_excess && excess > 0 && k < best_k)) {
                best_excess = excess;
                best_mask = vs;
                best_k = k;
            }
        }
        if (best_excess > 0) {
            Violation v;
            v.vertices = mask_to_indices(best_mask);
            v.edges = induced_edges(g, best_mask);
            v.measured = static_cast<long long>(v.edges.size());
            v.bound = static_cast<long long>(d) * best_k - d;
            rep.violations.push_back(v);
        }
    } else {
        // Nash-Williams: the subset counts hold iff the edges partition
        // into d forests.  On failure some component of the certificate
        // must itself be over-counted; report that component.
        UnionResult u = forest_union(g, d);
        if (!u.success) {
            SubsetShape whole = subset_shape(g, u.failed_edges);
            // Split the certificate into components and pick a violator.
            std::vector<int> comp_of(g.n, -1);
            int ncomp = 0;
            for (int v : whole.vertices)
                if (comp_of[v] < 0) {
                    // BFS over certificate edges
                    std::queue<int> q;
                    comp_of[v] = ncomp;
                    q.push(v);
                    while (!q.empty()) {
                        int w = q.front();
                        q.pop();
                        for (int e : u.failed_edges) {
                            const Edge& ed = g.edges[e];
                            int other = ed.tail == w ? ed.head
                                        : (ed.head == w ? ed.tail : -1);
                            if (other < 0 || comp_of[other] >= 0) continue;
                            comp_of[other] = ncomp;
                            q.push(other);
                        }
                    }
                    ++ncomp;
                }
            for (int c = 0; c < ncomp; ++c) {
                std::uint64_t vmask = 0;
                for (int v : whole.vertices)
                    if (comp_of[v] == c) vmask |= 1ull << v;
                std::vector<int> ind = induced_edges(g, vmask);
                long long k = std::popcount(vmask);
                long long bound = static_cast<long long>(d) * k - d;
                if (static_cast<long long>(ind.size()) > bound) {
                    Violation v;
                    v.vertices = mask_to_indices(vmask);
                    v.edges = std::move(ind);
                    v.measured = static_cast<long long>(v.edges.size());
                    v.bound = bound;
                    rep.violations.push_back(v);
                    break;
                }
            }
            if (rep.violations.empty())
                throw std::logic_error(
                    "maxwell_check: forest union failed without a violating component");
        }
    }

    sort_violations(rep.violations);
    rep.pass = rep.violations.empty();
    return rep;
}

CountReport gain_tightness_check(const GainGraph& g, const CountGates& gates) {
    g.validate();
    require_connected(g, "gain_tightness_check");
    const int d = g.d, n = g.n;
    const int m = static_cast<int>(g.edges.size());
    const long long need = static_cast<long long>(d) * n - d;
    if (m != need)
        throw structure_error("gain_tightness_check requires |E| = d|V| - d; got |E| = " +
                              std::to_string(m) + ", d|V| - d = " + std::to_string(need));

    CountReport rep;
    rep.condition = "gain_tightness";
    if (d == 1) {  // every gain space has rank >= 0
        rep.pass = true;
        return rep;
    }
    if (n > gates.max_vertices)
        throw gate_error("gain_tightness_check: |V| = " + std::to_string(n) +
                             " exceeds the brute-force gate of " +
                             std::to_string(gates.max_vertices) + " vertices",
                         gates.max_vertices);

    // Tight subgraphs with disconnected vertex support force an over-counted
    // component, which the tight subsets of that component already witness,
    // so connected supports suffice.
    for (std::uint64_t vs = 1; vs < (1ull << n); ++vs) {
        const int k = std::popcount(vs);
        if (k < 2) continue;  // a tight subgraph on one vertex is empty
        const long long tight = static_cast<long long>(d) * k - d;
        std::vector<int> ind = induced_edges(g, vs);
        if (static_cast<long long>(ind.size()) < tight) continue;
        if (!induced_subgraph_connected(g, vs, ind)) continue;
        // Every vertex of the support must be coverable at all.
        {
            std::uint64_t touched = 0;
            for (int e : ind)
                touched |= (1ull << g.edges[e].tail) | (1ull << g.edges[e].head);
            if (touched != vs) continue;
        }
        // Enumerate tight edge subsets of the induced edges (lexicographic
        // k-combinations) and keep those whose support is exactly vs.
        const int t = static_cast<int>(tight);
        const int cnt = static_cast<int>(ind.size());
        std::vector<int> sel(t);
        for (int i = 0; i < t; ++i) sel[i] = i;
        while (true) {
            std::uint64_t support = 0;
            for (int i : sel) {
                const Edge& ed = g.edges[ind[i]];
                support |= (1ull << ed.tail) | (1ull << ed.head);
            }
            if (support == vs) {
                std::vector<int> subset;
                for (int i : sel) subset.push_back(ind[i]);
                GainSpace gs = gain_space_of_edges(g, subset);
                if (gs.rank < d - 1) {
                    Violation v;
                    v.vertices = mask_to_indices(vs);
                    v.edges = std::move(subset);
                    v.measured = gs.rank;
                    v.bound = d - 1;
                    v.gain_rank = gs.rank;
                    rep.violations.push_back(v);
                }
            }
            // next combination
            int i = t - 1;
            while (i >= 0 && sel[i] == cnt - t + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < t; ++j) sel[j] = sel[j - 1] + 1;
        }
    }

    sort_violations(rep.violations);
    rep.pass = rep.violations.empty();
    return rep;
}

CountReport rank_graded_sparsity_check(const GainGraph& g, const CountGates& gates) {
    g.validate();
    require_connected(g, "rank_graded_sparsity_check");
    const int d = g.d;
    const int m = static_cast<int>(g.edges.size());
    if (m > gates.max_edges)
        throw gate_error("rank_graded_sparsity_check: |E| = " + std::to_string(m) +
                             " exceeds the brute-force gate of " +
                             std::to_string(gates.max_edges) + " edges",
                         gates.max_edges);

    CountReport rep;
    rep.condition = "rank_graded_sparsity";

    std::vector<std::uint64_t> evmask(m), adj(m, 0);
    for (int e = 0; e < m; ++e)
        evmask[e] = (1ull << g.edges[e].tail) | (1ull << g.edges[e].head);
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f)
            if (f != e && (evmask[e] & evmask[f])) adj[e] |= 1ull << f;

    // |Y| <= d k - C(d+1,2) + sum_{i<=r}(d-i) + C(max(d-r-k+1,0), 2) with
    // k = |V(Y)|, r = rank gs(Y).  The bound never decreases as r grows,
    // so subsets inside the rank-0 bound pass without a rank computation.
    auto bound_for = [&](int k, int r) {
        return static_cast<long long>(d) * k - binom2(d + 1) + graded_sum(d, r) +
               binom2(std::max(d - r - k + 1, 0));
    };

    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t)> visit =
        [&](std::uint64_t subset, std::uint64_t nbr, std::uint64_t forb,
            std::uint64_t vmask) {
            const int size = std::popcount(subset);
            const int k = std::popcount(vmask);
            if (static_cast<long long>(size) > bound_for(k, 0)) {
                GainSpace gs = gain_space_of_edges(g, mask_to_indices(subset));
                if (static_cast<long long>(size) > bound_for(k, gs.rank)) {
                    Violation v;
                    v.vertices = mask_to_indices(vmask);
                    v.edges = mask_to_indices(subset);
                    v.measured = size;
                    v.bound = bound_for(k, gs.rank);
                    v.gain_rank = gs.rank;
                    rep.violations.push_back(v);
                }
            }
            std::uint64_t cand = nbr & ~subset & ~forb;
            while (cand) {
                int c = std::countr_zero(cand);
                std::uint64_t cbit = 1ull << c;
                cand &= cand - 1;
                visit(subset | cbit, nbr | adj[c], forb, vmask | evmask[c]);
                forb |= cbit;
            }
        };

    std::uint64_t forb = 0;
    for (int e = 0; e < m; ++e) {
        visit(1ull << e, adj[e], forb, evmask[e]);
        forb |= 1ull << e;
    }

    sort_violations(rep.violations);
    rep.pass = rep.violations.empty();
    return rep;
}

TreeDecomposition tree_decomposition(const GainGraph& g, int d) {
    g.validate();
    if (d < 1) throw std::invalid_argument("tree_decomposition: d must be positive");
    require_connected(g, "tree_decomposition");
    TreeDecomposition out;
    const int n = g.n;
    const int m = static_cast<int>(g.edges.size());
    const long long need = static_cast<long long>(d) * n - d;

    if (m != need) {
        // No partition into d spanning trees can exist at the wrong edge
        // count; the whole edge set is the (possibly deficient) witness.
        out.success = false;
        for (int i = 0; i < n; ++i) out.certificate.vertices.push_back(i);
        for (int e = 0; e < m; ++e) out.certificate.edges.push_back(e);
        out.certificate.measured = m;
        out.certificate.bound = need;
        return out;
    }

    UnionResult u = forest_union(g, d);
    if (!u.success) {
        SubsetShape shape = subset_shape(g, u.failed_edges);
        out.success = false;
        out.certificate.vertices = shape.vertices;
        out.certificate.edges = u.failed_edges;
        out.certificate.measured = static_cast<long long>(u.failed_edges.size());
        out.certificate.bound =
            static_cast<long long>(d) *
            (static_cast<long long>(shape.vertices.size()) - shape.components);
        if (out.certificate.measured <= out.certificate.bound)
            throw std::logic_error("tree_decomposition: invalid failure certificate");
        return out;
    }

    // d forests covering d|V| - d edges must each have |V| - 1: spanning trees.
    out.trees.assign(d, {});
    for (int e = 0; e < m; ++e) out.trees[u.colour[e]].push_back(e);
    for (const std::vector<int>& tree : out.trees)
        if (static_cast<int>(tree.size()) != n - 1)
            throw std::logic_error("tree_decomposition: forest is not spanning");
    out.success = true;
    return out;
}

GainGraph synthesize_constructive_gains(const GainGraph& g, int d) {
    TreeDecomposition td = tree_decomposition(g, d);
    if (!td.success)
        throw decomposition_error(
            "synthesize_constructive_gains: graph does not decompose into " +
            std::to_string(d) + " edge-disjoint spanning trees");
    GainGraph out;
    out.d = d;
    out.n = g.n;
    out.edges.resize(g.edges.size());
    for (int i = 0; i < d; ++i) {
        for (int e : td.trees[i]) {
            Edge ed;
            ed.tail = std::min(g.edges[e].tail, g.edges[e].head);
            ed.head = std::max(g.edges[e].tail, g.edges[e].head);
            ed.gain = ivec_zero(d);
            ed.gain[i] = 1;
            out.edges[e] = ed;
        }
    }
    out.validate();
    return out;
}

bool fact_identity(int d, int k) {
    if (d < 0 || k < 0 || k > d)
        throw std::domain_error("fact_identity: need 0 <= k <= d");
    return binom2(d) - graded_sum(d, k) == binom2(d - k);
}

}  // namespace torrig
