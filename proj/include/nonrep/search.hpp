#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "nonrep/verifier.hpp"

namespace nonrep {

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

enum class SearchStatus { found, exhausted, budget_exhausted };

struct PaletteSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Colouring> colouring;
    std::int64_t nodes = 0;  // search-tree nodes spent
};

namespace detail {

// Repetition test restricted to a vertex mask; existence only.
inline bool has_repetition_masked(const Graph& g, const std::vector<int>& colours,
                                  const std::vector<char>& mask) {
    int n = g.num_vertices();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    // iterative-deepening over half-length keeps witnesses short-first but is
    // unnecessary here; a single DFS checking every even prefix suffices for
    // a boolean answer.
    auto dfs = [&](auto&& self, int v) -> bool {
        path.push_back(v);
        used[v] = 1;
        int len = static_cast<int>(path.size());
        if (len % 2 == 0) {
            int t = len / 2;
            bool rep = true;
            for (int i = 0; i < t; ++i)
                if (colours[path[i]] != colours[path[t + i]]) { rep = false; break; }
            if (rep) { used[v] = 0; path.pop_back(); return true; }
        }
        for (int w : g.neighbours(v)) {
            if (!mask[w] || used[w]) continue;
            if (self(self, w)) { used[v] = 0; path.pop_back(); return true; }
        }
        used[v] = 0;
        path.pop_back();
        return false;
    };
    for (int s = 0; s < n; ++s) {
        if (!mask[s]) continue;
        if (dfs(dfs, s)) return true;
    }
    return false;
}

}  // namespace detail

/// Vertex order used by the exhaustive colourer: descending degree, ties by id.
inline std::vector<int> search_vertex_order(const Graph& g) {
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

/// Backtracking search for a nonrepetitive colouring with at most k colours.
/// Prunes on any repetition among the coloured prefix; colour classes are
/// interchangeable, so each vertex tries at most one previously-unused colour.
/// An exhausted search certifies pi(G) > k.
inline PaletteSearchResult colour_with_palette(const Graph& g, int k,
                                               std::int64_t budget = kDefaultBudget) {
    if (k < 1) throw std::invalid_argument("palette size must be positive");
    int n = g.num_vertices();
    PaletteSearchResult res;
    if (n == 0) {
        res.status = SearchStatus::found;
        res.colouring = Colouring{{}, 0};
        return res;
    }
    std::vector<int> order = search_vertex_order(g);
    std::vector<int> colours(n, -1);
    std::vector<char> mask(n, 0);
    bool budget_hit = false;

    auto assign = [&](auto&& self, int idx, int used_colours) -> bool {
        if (idx == n) return true;
        if (res.nodes >= budget) { budget_hit = true; return false; }
        int v = order[idx];
        int limit = std::min(k, used_colours + 1);
        for (int c = 0; c < limit; ++c) {
            ++res.nodes;
            colours[v] = c;
            mask[v] = 1;
            if (!detail::has_repetition_masked(g, colours, mask)) {
                if (self(self, idx + 1, std::max(used_colours, c + 1))) return true;
                if (budget_hit) { colours[v] = -1; mask[v] = 0; return false; }
            }
            mask[v] = 0;
            colours[v] = -1;
        }
        return false;
    };

    if (assign(assign, 0, 0)) {
        res.status = SearchStatus::found;
        res.colouring = Colouring{colours, k};
    } else {
        res.status = budget_hit ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
    }
    return res;
}

struct ExactPiResult {
    bool determined = false;
    int pi = 0;
    Colouring colouring;
    std::int64_t nodes = 0;
};

/// Smallest k admitting a nonrepetitive k-colouring, with a witness.
/// Budget exhaustion yields determined=false rather than a wrong number.
inline ExactPiResult exact_pi(const Graph& g, std::optional<int> upper_bound = std::nullopt,
                              std::int64_t budget = kDefaultBudget) {
    ExactPiResult out;
    if (g.num_vertices() == 0) {
        out.determined = true;
        return out;
    }
    int cap = std::min(upper_bound.value_or(g.num_vertices()), g.num_vertices());
    for (int k = 1; k <= cap; ++k) {
        auto r = colour_with_palette(g, k, budget);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::budget_exhausted) return out;
        if (r.status == SearchStatus::found) {
            out.determined = true;
            out.pi = k;
            out.colouring = *r.colouring;
            return out;
        }
    }
    return out;  // no k <= cap works: indeterminate under the given cap
}

}  // namespace nonrep
