#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "nonrep/decomposition.hpp"
#include "nonrep/graph.hpp"

namespace nonrep {

/// Tree with every edge oriented towards a root.
struct OrientedTree {
    Tree tree;
    int root = 0;
    std::vector<int> parent;  // parent[root] = -1
    std::vector<int> depth;

    static OrientedTree orient(const Tree& t, int root) {
        if (root < 0 || root >= t.num_nodes) throw std::out_of_range("root not a tree node");
        OrientedTree o;
        o.tree = t;
        o.root = root;
        o.parent.assign(t.num_nodes, -1);
        o.depth.assign(t.num_nodes, 0);
        auto adj = t.adjacency();
        std::vector<char> seen(t.num_nodes, 0);
        std::queue<int> q;
        q.push(root);
        seen[root] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    o.parent[y] = x;
                    o.depth[y] = o.depth[x] + 1;
                    q.push(y);
                }
        }
        return o;
    }

    // ancestor-list walk; trees are small here
    int lca(int a, int b) const {
        while (depth[a] > depth[b]) a = parent[a];
        while (depth[b] > depth[a]) b = parent[b];
        while (a != b) { a = parent[a]; b = parent[b]; }
        return a;
    }
};

/// The Theorem 6 construction: orient the index tree, then for each cross
/// edge vw of G lift v and w along the directed paths from their home nodes
/// to the LCA. The result is a tree decomposition of G.
inline TreeDecomposition build_tree_decomposition(const Graph& g, const TPartition& tp,
                                                  std::optional<int> root = std::nullopt) {
    if (!validate_tpartition(g, tp).empty())
        throw std::invalid_argument("invalid T-partition");
    int r = root.value_or(0);
    auto oriented = OrientedTree::orient(tp.tree, r);

    std::vector<int> home(g.num_vertices(), -1);
    for (int x = 0; x < tp.tree.num_nodes; ++x)
        for (int v : tp.bags[x]) home[v] = x;

    std::vector<std::set<int>> bags(tp.tree.num_nodes);
    for (int x = 0; x < tp.tree.num_nodes; ++x)
        bags[x].insert(tp.bags[x].begin(), tp.bags[x].end());

    for (auto [v, w] : g.edge_list()) {
        int x = home[v], y = home[w];
        if (x == y) continue;  // same-bag edges are already covered
        int z = oriented.lca(x, y);
        for (int a = x; a != z; a = oriented.parent[a]) bags[a].insert(v);
        bags[z].insert(v);
        for (int a = y; a != z; a = oriented.parent[a]) bags[a].insert(w);
        bags[z].insert(w);
    }

    TreeDecomposition td;
    td.tree = tp.tree;
    td.tree.root = r;
    td.bags.resize(tp.tree.num_nodes);
    for (int x = 0; x < tp.tree.num_nodes; ++x)
        td.bags[x].assign(bags[x].begin(), bags[x].end());
    return td;
}

struct TransformReport {
    int input_adhesion = 0;
    int output_adhesion = 0;
    bool hypothesis_met = false;  // adhesion_tp <= t^2 and torsos (t,t^2)-bounded
    bool per_edge_ok = false;     // |T*_x cap T*_y| <= |E(T,xy)| on every tree edge
    bool torso_bound_ok = false;  // every output torso is (t, t^4+2t^2)-bounded
    bool star_ok = false;         // degree accounting property per vertex and node
    std::optional<int> t;
    std::vector<DegreeProfile> torso_profiles;  // per output-torso, threshold t^4+2t^2
};

/// Re-measures every guarantee of the construction from scratch; the report
/// doubles as a certificate, so nothing is taken on trust from the builder.
inline TransformReport check_transform_guarantees(const Graph& g, const TPartition& tp,
                                                  const TreeDecomposition& td,
                                                  std::optional<int> t = std::nullopt) {
    TransformReport rep;
    rep.t = t;
    rep.input_adhesion = adhesion_tp(g, tp);
    rep.output_adhesion = adhesion_td(td);

    // sanity: td keeps every home vertex in its home bag
    for (int x = 0; x < tp.tree.num_nodes; ++x)
        for (int v : tp.bags[x])
            if (!std::binary_search(td.bags[x].begin(), td.bags[x].end(), v))
                throw std::invalid_argument("decomposition was not derived from this partition");

    rep.per_edge_ok = true;
    for (auto [x, y] : td.tree.edges) {
        std::vector<int> inter;
        std::set_intersection(td.bags[x].begin(), td.bags[x].end(), td.bags[y].begin(),
                              td.bags[y].end(), std::back_inserter(inter));
        auto sv = split_view(g, tp, x, y);
        if (inter.size() > sv.cross_edges.size()) rep.per_edge_ok = false;
    }

    // (*): torso degree <= degree inside the bag subgraph + 2 * adhesion
    rep.star_ok = true;
    int d_bound = t ? (*t) * (*t) * (*t) * (*t) + 2 * (*t) * (*t) : 0;
    rep.torso_bound_ok = true;
    for (int x = 0; x < td.tree.num_nodes; ++x) {
        Torso torso = torso_td(g, td, x);
        rep.torso_profiles.push_back(degree_profile(torso.graph, d_bound));
        std::map<int, int> local;
        for (int i = 0; i < static_cast<int>(torso.vertices.size()); ++i)
            local[torso.vertices[i]] = i;
        for (int i = 0; i < static_cast<int>(torso.vertices.size()); ++i) {
            int v = torso.vertices[i];
            int bag_deg = 0;
            for (int w : g.neighbours(v))
                if (local.count(w)) ++bag_deg;
            if (torso.graph.degree(i) > bag_deg + 2 * rep.output_adhesion) rep.star_ok = false;
        }
        if (t && rep.torso_profiles.back().c > *t) rep.torso_bound_ok = false;
    }

    if (t) {
        rep.hypothesis_met = rep.input_adhesion <= (*t) * (*t);
        for (int x = 0; x < tp.tree.num_nodes && rep.hypothesis_met; ++x) {
            auto prof = degree_profile(torso_tp(g, tp, x).graph, (*t) * (*t));
            if (prof.c > *t) rep.hypothesis_met = false;
        }
    }
    return rep;
}

}  // namespace nonrep
