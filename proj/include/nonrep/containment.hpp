#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "nonrep/graph.hpp"
#include "nonrep/search.hpp"

namespace nonrep {

enum class ContainmentMode { immersion, strong_immersion, topological_minor };

inline std::string to_string(ContainmentMode m) {
    switch (m) {
        case ContainmentMode::immersion: return "immersion";
        case ContainmentMode::strong_immersion: return "strong-immersion";
        default: return "topological-minor";
    }
}

struct ContainmentWitness {
    ContainmentMode mode = ContainmentMode::immersion;
    std::vector<int> branch_map;  // H vertex -> G vertex, injective
    std::map<std::pair<int, int>, std::vector<int>> paths;  // H edge (u<v) -> G path
};

struct ContainmentResult {
    SearchStatus status = SearchStatus::exhausted;  // found / exhausted(=none) / budget
    std::optional<ContainmentWitness> witness;
    std::int64_t nodes = 0;
};

/// Independent re-validation of a claimed witness against the mode's
/// disjointness rules.
inline bool containment_witness_is_valid(const Graph& g, const Graph& h,
                                         const ContainmentWitness& w) {
    int hn = h.num_vertices();
    if (static_cast<int>(w.branch_map.size()) != hn) return false;
    std::set<int> images;
    for (int v : w.branch_map) {
        if (!g.has_vertex(v)) return false;
        if (!images.insert(v).second) return false;
    }
    if (static_cast<int>(w.paths.size()) != h.num_edges()) return false;

    std::set<std::pair<int, int>> used_edges;
    std::set<int> used_internal;
    for (auto [hu, hv] : h.edge_list()) {
        auto it = w.paths.find({hu, hv});
        if (it == w.paths.end()) return false;
        const auto& p = it->second;
        if (p.size() < 2) return false;
        if (p.front() != w.branch_map[hu] || p.back() != w.branch_map[hv]) return false;
        std::set<int> on_path(p.begin(), p.end());
        if (on_path.size() != p.size()) return false;  // must be a path
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return false;
            auto e = std::minmax(p[i], p[i + 1]);
            if (!used_edges.insert({e.first, e.second}).second &&
                w.mode != ContainmentMode::topological_minor)
                return false;
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            int v = p[i];
            if (w.mode != ContainmentMode::immersion && images.count(v)) return false;
            if (w.mode == ContainmentMode::topological_minor &&
                !used_internal.insert(v).second)
                return false;
        }
    }
    return true;
}

namespace detail {

struct RoutingState {
    const Graph& g;
    ContainmentMode mode;
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool budget_hit = false;

    std::vector<char> edge_used;      // indexed by edge id
    std::vector<char> vertex_used;    // internal-vertex occupancy (topo minor)
    std::vector<char> is_branch;
    std::map<std::pair<int, int>, int> edge_id;

    RoutingState(const Graph& g, ContainmentMode mode, std::int64_t budget)
        : g(g), mode(mode), budget(budget), vertex_used(g.num_vertices(), 0),
          is_branch(g.num_vertices(), 0) {
        int id = 0;
        for (auto e : g.edge_list()) edge_id[e] = id++;
        edge_used.assign(id, 0);
    }

    bool edge_free(int u, int v) const {
        auto e = std::minmax(u, v);
        return !edge_used[edge_id.at({e.first, e.second})];
    }

    void set_edge(int u, int v, char val) {
        auto e = std::minmax(u, v);
        edge_used[edge_id.at({e.first, e.second})] = val;
    }

    bool vertex_passable(int v, int target) const {
        if (v == target) return true;
        if (mode != ContainmentMode::immersion && is_branch[v]) return false;
        if (mode == ContainmentMode::topological_minor && vertex_used[v]) return false;
        return true;
    }

    // shortest available distance, or -1 when disconnected under constraints
    int distance(int from, int to) const {
        if (from == to) return 0;
        std::vector<int> dist(g.num_vertices(), -1);
        std::queue<int> q;
        q.push(from);
        dist[from] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbours(u)) {
                if (dist[v] != -1) continue;
                if (mode == ContainmentMode::topological_minor) {
                    if (v != to && (vertex_used[v] || is_branch[v])) continue;
                } else {
                    if (!edge_free(u, v)) continue;
                    if (v != to && mode == ContainmentMode::strong_immersion && is_branch[v])
                        continue;
                }
                dist[v] = dist[u] + 1;
                if (v == to) return dist[v];
                q.push(v);
            }
        }
        return -1;
    }
};

// Routes the remaining H-edges, selecting at each step the unrouted edge
// whose endpoints are currently closest (fail-first), with full backtracking
// over path choices.
inline bool route_edges(RoutingState& st, const std::vector<int>& branch_map,
                        std::vector<std::pair<int, int>>& pending,
                        std::map<std::pair<int, int>, std::vector<int>>& out) {
    if (pending.empty()) return true;
    if (st.nodes >= st.budget) { st.budget_hit = true; return false; }

    std::size_t pick = 0;
    int best = -2;
    for (std::size_t i = 0; i < pending.size(); ++i) {
        int d = st.distance(branch_map[pending[i].first], branch_map[pending[i].second]);
        if (d == -1) return false;  // some edge is unroutable: fail now
        if (best == -2 || d < best) { best = d; pick = i; }
    }
    auto he = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));

    int from = branch_map[he.first], to = branch_map[he.second];
    std::vector<int> path{from};
    std::vector<char> on_path(st.g.num_vertices(), 0);
    on_path[from] = 1;

    auto dfs = [&](auto&& self, int u) -> bool {
        if (u == to) {
            out[he] = path;
            if (st.mode == ContainmentMode::topological_minor)
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    st.vertex_used[path[i]] = 1;
            if (route_edges(st, branch_map, pending, out)) return true;
            if (st.mode == ContainmentMode::topological_minor)
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    st.vertex_used[path[i]] = 0;
            out.erase(he);
            return false;
        }
        for (int v : st.g.neighbours(u)) {
            if (on_path[v]) continue;
            if (!st.edge_free(u, v)) continue;
            if (!st.vertex_passable(v, to)) continue;
            ++st.nodes;
            if (st.nodes >= st.budget) { st.budget_hit = true; return false; }
            st.set_edge(u, v, 1);
            on_path[v] = 1;
            path.push_back(v);
            if (self(self, v)) return true;
            path.pop_back();
            on_path[v] = 0;
            st.set_edge(u, v, 0);
            if (st.budget_hit) return false;
        }
        return false;
    };
    if (dfs(dfs, from)) return true;
    pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(pick), he);
    return false;
}

inline ContainmentResult find_containment(const Graph& g, const Graph& h, ContainmentMode mode,
                                          std::int64_t budget) {
    ContainmentResult res;
    int hn = h.num_vertices();
    if (hn > g.num_vertices()) return res;  // no injective branch map

    // H vertices by descending degree, ties by id: prune early
    std::vector<int> horder(hn);
    std::iota(horder.begin(), horder.end(), 0);
    std::stable_sort(horder.begin(), horder.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });

    std::vector<int> branch_map(hn, -1);
    std::vector<char> taken(g.num_vertices(), 0);
    RoutingState st(g, mode, budget);

    auto try_map = [&](auto&& self, int idx) -> bool {
        if (idx == hn) {
            for (int hv = 0; hv < hn; ++hv) st.is_branch[branch_map[hv]] = 1;
            std::vector<std::pair<int, int>> pending = h.edge_list();
            std::map<std::pair<int, int>, std::vector<int>> paths;
            bool ok = route_edges(st, branch_map, pending, paths);
            if (ok) {
                ContainmentWitness w;
                w.mode = mode;
                w.branch_map = branch_map;
                w.paths = std::move(paths);
                res.witness = std::move(w);
                return true;
            }
            for (int hv = 0; hv < hn; ++hv) st.is_branch[branch_map[hv]] = 0;
            return false;
        }
        int hv = horder[idx];
        for (int gv = 0; gv < g.num_vertices(); ++gv) {
            if (taken[gv]) continue;
            if (g.degree(gv) < h.degree(hv)) continue;  // degree feasibility
            taken[gv] = 1;
            branch_map[hv] = gv;
            if (self(self, idx + 1)) return true;
            branch_map[hv] = -1;
            taken[gv] = 0;
            if (st.budget_hit) return false;
        }
        return false;
    };

    bool found = try_map(try_map, 0);
    res.nodes = st.nodes;
    if (found) res.status = SearchStatus::found;
    else res.status = st.budget_hit ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
    return res;
}

}  // namespace detail

/// Immersion (edge-disjoint path routing) or strong immersion (paths also
/// avoid branch vertices internally). A completed search returning none
/// certifies non-containment.
inline ContainmentResult find_immersion(const Graph& g, const Graph& h, bool strong = false,
                                        std::int64_t budget = kDefaultBudget) {
    return detail::find_containment(
        g, h, strong ? ContainmentMode::strong_immersion : ContainmentMode::immersion, budget);
}

/// Topological minor: internally vertex-disjoint routing avoiding branch
/// vertices.
inline ContainmentResult find_topological_minor(const Graph& g, const Graph& h,
                                                std::int64_t budget = kDefaultBudget) {
    return detail::find_containment(g, h, ContainmentMode::topological_minor, budget);
}

}  // namespace nonrep
