// Independent brute-force oracles and random instance generators.
// Everything here deliberately avoids the library's search paths: the naive
// enumerator walks every vertex sequence, the pi oracle tries every colouring.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nonrep/decomposition.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/random.hpp"
#include "nonrep/transform.hpp"
#include "nonrep/verifier.hpp"

namespace oracle {

// Enumerates every simple path as a raw vertex sequence and collects the
// least repetitive one (by half-length, then sequence, canonical orientation
// first < last). No shared code with nonrep::find_repetition.
inline std::optional<std::vector<int>> naive_find_repetition(const nonrep::Graph& g,
                                                             const std::vector<int>& colours) {
    int n = g.num_vertices();
    std::optional<std::vector<int>> best;
    std::vector<int> seq;
    std::vector<bool> used(n, false);

    auto consider = [&](const std::vector<int>& p) {
        if (p.size() % 2 != 0 || p.front() >= p.back()) return;
        int t = static_cast<int>(p.size()) / 2;
        for (int i = 0; i < t; ++i)
            if (colours[p[i]] != colours[p[t + i]]) return;
        if (!best) { best = p; return; }
        int bt = static_cast<int>(best->size()) / 2;
        if (t < bt || (t == bt && p < *best)) best = p;
    };

    auto walk = [&](auto&& self, int v) -> void {
        seq.push_back(v);
        used[v] = true;
        consider(seq);
        for (int w = 0; w < n; ++w)
            if (!used[w] && g.has_edge(v, w)) self(self, w);
        used[v] = false;
        seq.pop_back();
    };
    for (int s = 0; s < n; ++s) walk(walk, s);
    return best;
}

inline bool naive_is_nonrepetitive(const nonrep::Graph& g, const std::vector<int>& colours) {
    // orientation canonicalization drops nothing: a repetition's reversal is
    // a repetition, so checking front < last sequences is exhaustive
    return !naive_find_repetition(g, colours).has_value();
}

// Smallest k admitting a nonrepetitive k-colouring, by trying all k^n maps.
inline int brute_force_pi(const nonrep::Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colours(n, 0);
        while (true) {
            if (naive_is_nonrepetitive(g, colours)) return k;
            int i = 0;
            while (i < n && ++colours[i] == k) colours[i++] = 0;
            if (i == n) break;
        }
    }
    return n;  // unreachable: n distinct colours always work
}

// --- random instances -------------------------------------------------

inline nonrep::Graph random_graph(int n, int percent, nonrep::Rng& rng) {
    nonrep::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < percent) g.add_edge(u, v);
    return g;
}

inline nonrep::Graph random_tree_graph(int n, nonrep::Rng& rng) {
    nonrep::Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v);
    return g;
}

inline nonrep::Tree random_tree(int nodes, nonrep::Rng& rng) {
    nonrep::Tree t;
    t.num_nodes = nodes;
    for (int x = 1; x < nodes; ++x) t.edges.emplace_back(rng.below(x), x);
    return t;
}

// random T-partition of V(G) over a random tree (some bags may be empty)
inline nonrep::TPartition random_tpartition(const nonrep::Graph& g, int nodes,
                                            nonrep::Rng& rng) {
    nonrep::TPartition tp;
    tp.tree = random_tree(nodes, rng);
    tp.bags.assign(nodes, {});
    for (int v = 0; v < g.num_vertices(); ++v) tp.bags[rng.below(nodes)].push_back(v);
    for (auto& bag : tp.bags) std::sort(bag.begin(), bag.end());
    return tp;
}

// random 3-regular graph by edge-swapping a perfect matching union; simple
// rejection construction, retried until simple and cubic
inline nonrep::Graph random_cubic_graph(int n, nonrep::Rng& rng) {
    while (true) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.below(i + 1)]);
        nonrep::Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) ok = false;
            else g.add_edge(u, v);
        }
        if (ok) return g;
    }
}

// (G, T-partition) meeting the Theorem-7-style hypothesis: cross-edge counts
// <= t^2 on every tree edge and max degree <= t^2, which keeps every
// T-partition torso (t, t^2)-bounded.
struct HypothesisInstance {
    nonrep::Graph graph;
    nonrep::TPartition partition;
};

inline HypothesisInstance make_hypothesis_instance(int n, int nodes, int t, int attempts,
                                                   nonrep::Rng& rng) {
    int cap = t * t;
    nonrep::TPartition tp;
    tp.tree = random_tree(nodes, rng);
    tp.bags.assign(nodes, {});
    std::vector<int> owner(n);
    for (int v = 0; v < n; ++v) {
        owner[v] = rng.below(nodes);
        tp.bags[owner[v]].push_back(v);
    }
    for (auto& bag : tp.bags) std::sort(bag.begin(), bag.end());

    // per tree edge cut counters, indexed by edge position
    auto adj = tp.tree.adjacency();
    nonrep::Graph g(n);
    std::vector<int> cut(tp.tree.edges.size(), 0);

    // tree path between two nodes as edge indices
    auto edge_index = [&](int a, int b) {
        for (std::size_t i = 0; i < tp.tree.edges.size(); ++i) {
            auto [x, y] = tp.tree.edges[i];
            if ((x == a && y == b) || (x == b && y == a)) return static_cast<int>(i);
        }
        return -1;
    };
    auto tree_path_edges = [&](int from, int to) {
        // BFS parents
        std::vector<int> par(tp.tree.num_nodes, -1);
        std::vector<int> order{from};
        std::vector<bool> seen(tp.tree.num_nodes, false);
        seen[from] = true;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int y : adj[order[i]])
                if (!seen[y]) { seen[y] = true; par[y] = order[i]; order.push_back(y); }
        std::vector<int> out;
        for (int a = to; a != from; a = par[a]) out.push_back(edge_index(a, par[a]));
        return out;
    };

    for (int it = 0; it < attempts; ++it) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v || g.has_edge(u, v)) continue;
        if (g.degree(u) >= cap || g.degree(v) >= cap) continue;
        if (owner[u] != owner[v]) {
            auto path = tree_path_edges(owner[u], owner[v]);
            bool fits = true;
            for (int e : path)
                if (cut[e] + 1 > cap) { fits = false; break; }
            if (!fits) continue;
            for (int e : path) ++cut[e];
        }
        g.add_edge(u, v);
    }
    return {std::move(g), std::move(tp)};
}

// per-vertex directed-path bag-shape check for a transform output
inline bool bags_form_rooted_paths(const nonrep::Graph& g, const nonrep::TreeDecomposition& td,
                                   int root) {
    auto oriented = nonrep::OrientedTree::orient(td.tree, root);
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> holders;
        for (int x = 0; x < td.tree.num_nodes; ++x)
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) holders.push_back(x);
        if (holders.empty()) return false;
        int deepest = holders.front();
        for (int x : holders)
            if (oriented.depth[x] > oriented.depth[deepest]) deepest = x;
        // walking up from the deepest holder must visit exactly the holders
        std::vector<int> walk;
        int a = deepest;
        walk.push_back(a);
        while (static_cast<int>(walk.size()) < static_cast<int>(holders.size())) {
            a = oriented.parent[a];
            if (a == -1) return false;
            walk.push_back(a);
        }
        std::sort(walk.begin(), walk.end());
        std::sort(holders.begin(), holders.end());
        if (walk != holders) return false;
    }
    return true;
}

}  // namespace oracle
