#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "nonrep/graph.hpp"

namespace nonrep {

/// Index tree for decompositions. Node ids are dense 0..k-1.
struct Tree {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<int> root;

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(num_nodes);
        for (auto [x, y] : edges) {
            adj.at(x).push_back(y);
            adj.at(y).push_back(x);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    bool is_tree() const {
        if (num_nodes == 0) return false;
        if (static_cast<int>(edges.size()) != num_nodes - 1) return false;
        auto adj = adjacency();
        std::vector<char> seen(num_nodes, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (!seen[y]) { seen[y] = 1; ++reached; q.push(y); }
        }
        return reached == num_nodes;
    }
};

/// Tree-indexed bag family; validity rules differ between the two kinds.
struct BagFamily {
    Tree tree;
    std::vector<std::vector<int>> bags;  // bags[x] sorted, one per tree node
};

using TreeDecomposition = BagFamily;
using TPartition = BagFamily;

struct Violation {
    std::string clause;  // "coverage" | "connectivity" | "edge-coverage" | "duplicate" | "missing"
    std::string detail;
};

namespace detail {

inline void check_bag_shape(const Graph& g, const BagFamily& f) {
    if (!f.tree.is_tree()) throw std::invalid_argument("index structure is not a tree");
    if (static_cast<int>(f.bags.size()) != f.tree.num_nodes)
        throw std::invalid_argument("bag count does not match tree node count");
    for (const auto& bag : f.bags)
        for (int v : bag)
            if (!g.has_vertex(v)) throw std::out_of_range("bag vertex not in graph");
}

}  // namespace detail

/// Checks the three tree-decomposition clauses; reports every violation.
inline std::vector<Violation> validate_tree_decomposition(const Graph& g,
                                                          const TreeDecomposition& td) {
    detail::check_bag_shape(g, td);
    std::vector<Violation> out;
    auto adj = td.tree.adjacency();
    int n = g.num_vertices();

    // coverage + connectivity of each vertex's bag set
    for (int v = 0; v < n; ++v) {
        std::vector<int> holders;
        for (int x = 0; x < td.tree.num_nodes; ++x)
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v))
                holders.push_back(x);
        if (holders.empty()) {
            out.push_back({"coverage", "vertex " + std::to_string(v) + " in no bag"});
            continue;
        }
        std::set<int> holder_set(holders.begin(), holders.end());
        std::queue<int> q;
        std::set<int> seen;
        q.push(holders.front());
        seen.insert(holders.front());
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (holder_set.count(y) && !seen.count(y)) { seen.insert(y); q.push(y); }
        }
        if (seen.size() != holder_set.size())
            out.push_back({"connectivity",
                           "vertex " + std::to_string(v) + "'s bag set is disconnected"});
    }

    for (auto [u, v] : g.edge_list()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) { covered = true; break; }
        if (!covered)
            out.push_back({"edge-coverage", "edge " + std::to_string(u) + "-" +
                                                std::to_string(v) + " in no bag"});
    }
    return out;
}

inline int width(const TreeDecomposition& td) {
    int w = -1;
    for (const auto& bag : td.bags) w = std::max<int>(w, static_cast<int>(bag.size()) - 1);
    return w;
}

/// Max bag intersection over tree edges; 0 when the tree has no edge.
inline int adhesion_td(const TreeDecomposition& td) {
    int best = 0;
    std::vector<int> tmp;
    for (auto [x, y] : td.tree.edges) {
        tmp.clear();
        std::set_intersection(td.bags[x].begin(), td.bags[x].end(), td.bags[y].begin(),
                              td.bags[y].end(), std::back_inserter(tmp));
        best = std::max<int>(best, static_cast<int>(tmp.size()));
    }
    return best;
}

/// A torso with its vertex labels: graph.vertex i corresponds to vertices[i]
/// in the host graph (torso_tp adds identified vertices labelled -1-y for the
/// tree neighbour y they stand for).
struct Torso {
    Graph graph;
    std::vector<int> vertices;
};

/// Tree-decomposition torso: G[T_x] plus a clique on each neighbour intersection.
inline Torso torso_td(const Graph& g, const TreeDecomposition& td, int x) {
    detail::check_bag_shape(g, td);
    if (x < 0 || x >= td.tree.num_nodes) throw std::out_of_range("unknown tree node");
    const auto& bag = td.bags[x];
    std::map<int, int> local;
    for (int i = 0; i < static_cast<int>(bag.size()); ++i) local[bag[i]] = i;

    Torso t;
    t.vertices = bag;
    t.graph = Graph(static_cast<int>(bag.size()));
    for (int u : bag)
        for (int v : g.neighbours(u))
            if (u < v && local.count(v)) t.graph.add_edge(local[u], local[v]);
    auto adj = td.tree.adjacency();
    std::vector<int> inter;
    for (int y : adj[x]) {
        inter.clear();
        std::set_intersection(bag.begin(), bag.end(), td.bags[y].begin(), td.bags[y].end(),
                              std::back_inserter(inter));
        for (std::size_t i = 0; i < inter.size(); ++i)
            for (std::size_t j = i + 1; j < inter.size(); ++j) {
                int a = local[inter[i]], b = local[inter[j]];
                if (!t.graph.has_edge(a, b)) t.graph.add_edge(a, b);
            }
    }
    return t;
}

/// Checks the partition clauses; empty bags are legal.
inline std::vector<Violation> validate_tpartition(const Graph& g, const TPartition& tp) {
    detail::check_bag_shape(g, tp);
    std::vector<Violation> out;
    std::vector<int> count(g.num_vertices(), 0);
    for (const auto& bag : tp.bags)
        for (int v : bag) ++count[v];
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (count[v] == 0)
            out.push_back({"missing", "vertex " + std::to_string(v) + " in no bag"});
        else if (count[v] > 1)
            out.push_back({"duplicate", "vertex " + std::to_string(v) + " in " +
                                            std::to_string(count[v]) + " bags"});
    }
    return out;
}

/// The two vertex sides and cross edges of G induced by a tree edge xy.
struct SplitView {
    std::vector<int> side_x;  // G(T,xy): vertices in bags on x's side
    std::vector<int> side_y;  // G(T,yx)
    std::vector<std::pair<int, int>> cross_edges;  // E(T,xy), endpoints (x-side, y-side)
};

namespace detail {

// Marks tree nodes on x's side of the edge xy.
inline std::vector<char> tree_side(const Tree& tree, int x, int y) {
    auto adj = tree.adjacency();
    std::vector<char> side(tree.num_nodes, 0);
    std::queue<int> q;
    q.push(x);
    side[x] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : adj[a]) {
            if ((a == x && b == y) || (a == y && b == x)) continue;
            if (!side[b]) { side[b] = 1; q.push(b); }
        }
    }
    return side;
}

}  // namespace detail

inline SplitView split_view(const Graph& g, const TPartition& tp, int x, int y) {
    detail::check_bag_shape(g, tp);
    bool found = false;
    for (auto [a, b] : tp.tree.edges)
        if ((a == x && b == y) || (a == y && b == x)) { found = true; break; }
    if (!found) throw std::invalid_argument("unknown tree edge");

    auto side = detail::tree_side(tp.tree, x, y);
    std::vector<char> on_x(g.num_vertices(), 0);
    SplitView sv;
    for (int node = 0; node < tp.tree.num_nodes; ++node)
        for (int v : tp.bags[node]) {
            if (side[node]) { on_x[v] = 1; sv.side_x.push_back(v); }
            else sv.side_y.push_back(v);
        }
    std::sort(sv.side_x.begin(), sv.side_x.end());
    std::sort(sv.side_y.begin(), sv.side_y.end());
    for (auto [u, v] : g.edge_list()) {
        if (on_x[u] && !on_x[v]) sv.cross_edges.emplace_back(u, v);
        else if (!on_x[u] && on_x[v]) sv.cross_edges.emplace_back(v, u);
    }
    return sv;
}

/// Max cross-edge count over tree edges; 0 for a single-node tree.
inline int adhesion_tp(const Graph& g, const TPartition& tp) {
    int best = 0;
    for (auto [x, y] : tp.tree.edges)
        best = std::max<int>(best,
                             static_cast<int>(split_view(g, tp, x, y).cross_edges.size()));
    return best;
}

/// T-partition torso of node x: each far side G(T,yx) collapses to one
/// vertex; empty far sides contribute nothing; result is simple.
inline Torso torso_tp(const Graph& g, const TPartition& tp, int x) {
    detail::check_bag_shape(g, tp);
    if (x < 0 || x >= tp.tree.num_nodes) throw std::out_of_range("unknown tree node");

    // group[v]: 0 for bag vertices of x, 1+y for vertices on neighbour y's far side
    auto adj = tp.tree.adjacency();
    std::vector<int> owner(g.num_vertices(), -1);
    for (int node = 0; node < tp.tree.num_nodes; ++node)
        for (int v : tp.bags[node]) owner[v] = node;

    std::vector<int> group(g.num_vertices(), -1);
    for (int v : tp.bags[x]) group[v] = -2;  // stays itself
    for (int y : adj[x]) {
        auto far = detail::tree_side(tp.tree, y, x);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (group[v] == -1 && far[owner[v]]) group[v] = y;
    }

    Torso t;
    std::map<int, int> local;  // torso-local index per kept vertex / per group
    for (int v : tp.bags[x]) {
        local[v] = static_cast<int>(t.vertices.size());
        t.vertices.push_back(v);
    }
    std::map<int, int> group_vertex;
    for (int y : adj[x]) {
        bool nonempty = false;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (group[v] == y) { nonempty = true; break; }
        if (nonempty) {
            group_vertex[y] = static_cast<int>(t.vertices.size());
            t.vertices.push_back(-1 - y);  // identified vertex for neighbour y
        }
    }
    t.graph = Graph(static_cast<int>(t.vertices.size()));
    auto map_end = [&](int v) {
        return group[v] == -2 ? local[v] : group_vertex.at(group[v]);
    };
    for (auto [u, v] : g.edge_list()) {
        int a = map_end(u), b = map_end(v);
        if (a == b) continue;
        if (!t.graph.has_edge(a, b)) t.graph.add_edge(a, b);
    }
    return t;
}

}  // namespace nonrep
