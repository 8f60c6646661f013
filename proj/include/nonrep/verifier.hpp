#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nonrep/graph.hpp"
#include "nonrep/thue.hpp"

namespace nonrep {

/// Total assignment vertex -> colour in 0..palette_size-1.
struct Colouring {
    std::vector<int> colours;
    int palette_size = 0;

    int operator()(int v) const { return colours.at(v); }

    bool covers(const Graph& g) const {
        if (static_cast<int>(colours.size()) != g.num_vertices()) return false;
        for (int c : colours)
            if (c < 0 || c >= palette_size) return false;
        return true;
    }
};

/// A path (v1,...,v_2t) whose two colour halves coincide.
struct RepetitionWitness {
    std::vector<int> path;

    int half_length() const { return static_cast<int>(path.size()) / 2; }
};

/// Independent validity check for a claimed witness.
inline bool witness_is_valid(const Graph& g, const Colouring& col, const RepetitionWitness& w) {
    int order = static_cast<int>(w.path.size());
    if (order < 2 || order % 2 != 0) return false;
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v : w.path) {
        if (!g.has_vertex(v) || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i + 1 < order; ++i)
        if (!g.has_edge(w.path[i], w.path[i + 1])) return false;
    int t = order / 2;
    for (int i = 0; i < t; ++i)
        if (col(w.path[i]) != col(w.path[t + i])) return false;
    return true;
}

namespace detail {

// DFS over paths of exact order 2t in lexicographic order of the vertex
// sequence, keeping only the canonical orientation (first id < last id).
// Positions past t are constrained to match the colour t steps back, which
// prunes almost everything on large palettes.
struct RepetitionSearch {
    const Graph& g;
    const Colouring& col;
    int t;
    std::vector<int> path;
    std::vector<char> used;

    RepetitionSearch(const Graph& g, const Colouring& col, int t)
        : g(g), col(col), t(t), used(g.num_vertices(), 0) {}

    bool extend() {
        int len = static_cast<int>(path.size());
        if (len == 2 * t) return path.front() < path.back();
        int prev = path.back();
        for (int w : g.neighbours(prev)) {
            if (used[w]) continue;
            if (len >= t && col(w) != col(path[len - t])) continue;
            used[w] = 1;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        for (int s = 0; s < g.num_vertices(); ++s) {
            used[s] = 1;
            path.assign(1, s);
            if (extend()) return path;
            used[s] = 0;
        }
        return std::nullopt;
    }
};

}  // namespace detail

/// Searches for a repetitively coloured path with half-length <= t_max
/// (all half-lengths up to n/2 when t_max is absent: exact mode).
/// The returned witness is the lexicographically least one, ordered by
/// half-length then vertex sequence, among canonical orientations.
inline std::optional<RepetitionWitness> find_repetition(const Graph& g, const Colouring& col,
                                                        std::optional<int> max_half_length = std::nullopt) {
    if (!col.covers(g))
        throw std::invalid_argument("colouring is not total over V(G)");
    int t_cap = max_half_length.value_or(g.num_vertices() / 2);
    t_cap = std::min(t_cap, g.num_vertices() / 2);
    for (int t = 1; t <= t_cap; ++t) {
        detail::RepetitionSearch search(g, col, t);
        if (auto p = search.run()) return RepetitionWitness{*p};
    }
    return std::nullopt;
}

inline bool is_nonrepetitive(const Graph& g, const Colouring& col) {
    return !find_repetition(g, col).has_value();
}

/// Nonrepetitive <=3-colouring of the path on n vertices (Thue prefix).
inline Colouring colour_path(int n) {
    if (n < 0) throw std::invalid_argument("negative path order");
    Colouring col;
    col.colours = thue_sequence(n);
    col.palette_size = std::min(n, 3);
    return col;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace nonrep
