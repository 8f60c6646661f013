#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonrep/decomposition.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/random.hpp"
#include "nonrep/search.hpp"
#include "nonrep/thue.hpp"
#include "nonrep/transform.hpp"
#include "nonrep/verifier.hpp"

namespace nonrep {

struct StrategyOptions {
    std::uint64_t seed = 0;
    std::int64_t resample_cap = 1'000'000;
    int palette_factor = 4;  // multiplier on the degree-square term
    std::optional<int> t_max;  // bounded verification; exact when absent
    std::int64_t budget = kDefaultBudget;  // fallback exhaustive search
};

enum class StrategyStatus { found, failed, budget_exhausted };

struct StrategyResult {
    StrategyStatus status = StrategyStatus::failed;
    Colouring colouring;
    std::int64_t rounds = 0;      // resampling rounds spent
    bool used_fallback = false;   // exhaustive search produced the output
};

/// Random colouring + resample-the-witness loop. All vertices start uniform
/// over k colours; while a repetitively coloured path exists, every vertex on
/// the (canonical least) witness is re-randomized. Deterministic given seed.
inline StrategyResult resample_colouring(const Graph& g, int k, const StrategyOptions& opts) {
    if (k < 1) throw std::invalid_argument("palette size must be positive");
    if (opts.resample_cap < 1) throw std::invalid_argument("resample_cap must be >= 1");
    Rng rng(opts.seed);
    StrategyResult res;
    res.colouring.palette_size = k;
    res.colouring.colours.resize(g.num_vertices());
    for (int& c : res.colouring.colours) c = rng.below(k);

    for (res.rounds = 0; res.rounds < opts.resample_cap; ++res.rounds) {
        auto w = find_repetition(g, res.colouring, opts.t_max);
        if (!w) {
            res.status = StrategyStatus::found;
            return res;
        }
        for (int v : w->path) res.colouring.colours[v] = rng.below(k);
    }
    res.status = StrategyStatus::failed;  // certifies nothing
    return res;
}

struct BoundedDegreeResult {
    StrategyStatus status = StrategyStatus::failed;
    Colouring colouring;
    std::vector<int> high_degree_vertices;  // S, each holding a private colour
    int sub_palette = 0;                    // colours spent on G - S
    bool used_fallback = false;
};

/// Lemma-style bounded-degree scheme: vertices of degree > d each get a
/// private colour; the rest is coloured by resampling with palette
/// palette_factor * max_degree(G-S)^2 (>= 1 when G-S is nonempty), with an
/// exhaustive fallback. Total palette <= |S| + palette_factor * d^2.
inline BoundedDegreeResult colour_bounded_degree(const Graph& g, int d,
                                                 const StrategyOptions& opts) {
    if (d < 0) throw std::invalid_argument("negative degree threshold");
    BoundedDegreeResult res;
    int n = g.num_vertices();
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > d) res.high_degree_vertices.push_back(v);
        else rest.push_back(v);
    }
    auto sub = induced_subgraph(g, rest);
    int sub_delta = sub.graph.max_degree();
    int p = rest.empty() ? 0 : std::max(1, opts.palette_factor * sub_delta * sub_delta);
    res.sub_palette = p;

    Colouring sub_col{std::vector<int>{}, 0};
    if (!rest.empty()) {
        auto r = resample_colouring(sub.graph, p, opts);
        if (r.status == StrategyStatus::found) {
            sub_col = r.colouring;
        } else {
            auto fb = colour_with_palette(sub.graph, p, opts.budget);
            if (fb.status != SearchStatus::found) {
                res.status = fb.status == SearchStatus::budget_exhausted
                                 ? StrategyStatus::budget_exhausted
                                 : StrategyStatus::failed;
                return res;
            }
            sub_col = *fb.colouring;
            res.used_fallback = true;
        }
    }

    res.colouring.palette_size = p + static_cast<int>(res.high_degree_vertices.size());
    res.colouring.colours.assign(n, -1);
    for (int i = 0; i < static_cast<int>(rest.size()); ++i)
        res.colouring.colours[rest[i]] = sub_col.colours[i];
    for (int i = 0; i < static_cast<int>(res.high_degree_vertices.size()); ++i)
        res.colouring.colours[res.high_degree_vertices[i]] = p + i;

    if (n > 0 && !is_nonrepetitive(g, res.colouring)) {
        res.status = StrategyStatus::failed;  // should not happen; never lie
        return res;
    }
    res.status = StrategyStatus::found;
    return res;
}

/// Per-node nonrepetitive torso colourings plus the decomposition they live
/// on. Torso colourings are indexed by the sorted-bag order of torso_td.
struct CompositionInput {
    TreeDecomposition td;
    std::map<int, Colouring> torso_colourings;
    int k = 0;  // adhesion_td(td)
    int c = 0;  // max torso palette

    static CompositionInput make(const Graph& g, TreeDecomposition td,
                                 std::map<int, Colouring> torso_colourings) {
        CompositionInput in;
        in.td = std::move(td);
        in.torso_colourings = std::move(torso_colourings);
        in.k = adhesion_td(in.td);
        in.c = 0;
        for (int x = 0; x < in.td.tree.num_nodes; ++x) {
            auto it = in.torso_colourings.find(x);
            if (it == in.torso_colourings.end())
                throw std::invalid_argument("missing torso colouring for node " +
                                            std::to_string(x));
            Torso torso = torso_td(g, in.td, x);
            if (!it->second.covers(torso.graph) || !is_nonrepetitive(torso.graph, it->second))
                throw std::invalid_argument("torso colouring for node " + std::to_string(x) +
                                            " is not nonrepetitive on its torso");
            in.c = std::max(in.c, it->second.palette_size);
        }
        return in;
    }
};

/// Colours G from verified torso colourings, with palette <= c * 4^k.
/// Heuristic product colouring first (home-bag torso colour crossed with a
/// square-free pattern over tree depth), exhaustive search second.
inline StrategyResult compose_colourings(const Graph& g, const CompositionInput& input,
                                         const StrategyOptions& opts) {
    StrategyResult res;
    int n = g.num_vertices();
    if (n == 0) {
        res.status = StrategyStatus::found;
        return res;
    }
    if (!validate_tree_decomposition(g, input.td).empty())
        throw std::invalid_argument("invalid tree decomposition");

    std::int64_t bound = input.c;
    for (int i = 0; i < input.k && bound <= n; ++i) bound *= 4;
    // palette > n never helps, so the search palette is capped at n
    int search_palette = static_cast<int>(std::min<std::int64_t>(bound, n));

    int root = input.td.tree.root.value_or(0);
    auto oriented = OrientedTree::orient(input.td.tree, root);

    // home bag: the unique shallowest bag containing v
    std::vector<int> home(n, -1);
    for (int v = 0; v < n; ++v)
        for (int x = 0; x < input.td.tree.num_nodes; ++x)
            if (std::binary_search(input.td.bags[x].begin(), input.td.bags[x].end(), v))
                if (home[v] == -1 || oriented.depth[x] < oriented.depth[home[v]]) home[v] = x;

    int max_depth = 0;
    for (int x = 0; x < input.td.tree.num_nodes; ++x)
        max_depth = std::max(max_depth, oriented.depth[x]);
    auto depth_pattern = thue_sequence(max_depth + 1);

    Colouring heuristic;
    heuristic.colours.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int x = home[v];
        const auto& bag = input.td.bags[x];
        int local = static_cast<int>(
            std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
        int torso_colour = input.torso_colourings.at(x).colours.at(local);
        heuristic.colours[v] = input.k == 0
                                   ? torso_colour
                                   : torso_colour * 4 + depth_pattern[oriented.depth[x]];
    }
    heuristic.palette_size = input.k == 0 ? input.c : input.c * 4;
    if (heuristic.palette_size > 0 && is_nonrepetitive(g, heuristic)) {
        res.status = StrategyStatus::found;
        res.colouring = heuristic;
        return res;
    }

    auto fb = colour_with_palette(g, search_palette, opts.budget);
    if (fb.status == SearchStatus::found) {
        res.status = StrategyStatus::found;
        res.colouring = *fb.colouring;
        res.used_fallback = true;
    } else {
        res.status = fb.status == SearchStatus::budget_exhausted
                         ? StrategyStatus::budget_exhausted
                         : StrategyStatus::failed;
    }
    return res;
}

struct PipelineResult {
    StrategyStatus status = StrategyStatus::failed;
    Colouring colouring;
    TransformReport report;
    TreeDecomposition td;
    std::map<int, BoundedDegreeResult> torso_results;
    int c = 0;                       // max torso palette
    int k = 0;                       // output adhesion
    int d = 0;                       // degree threshold t^4 + 2t^2
    std::int64_t palette_bound = 0;  // (t + pf*d^2) * 4^{t^2}; claimed iff hypothesis_met
    bool used_fallback = false;
};

/// End-to-end chain: T-partition -> tree decomposition -> bounded-degree
/// torso colourings -> composition. Hypothesis violations are reported, the
/// pipeline still runs, and the palette-bound claim is withdrawn.
inline PipelineResult immersion_pipeline(const Graph& g, const TPartition& tp, int t,
                                         const StrategyOptions& opts) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    PipelineResult res;
    res.td = build_tree_decomposition(g, tp);
    res.report = check_transform_guarantees(g, tp, res.td, t);
    res.d = t * t * t * t + 2 * t * t;

    std::map<int, Colouring> torso_cols;
    for (int x = 0; x < res.td.tree.num_nodes; ++x) {
        Torso torso = torso_td(g, res.td, x);
        StrategyOptions sub_opts = opts;
        sub_opts.seed = 0;
        Rng sub = Rng::derive(opts.seed, static_cast<std::uint64_t>(x));
        sub_opts.seed = sub.next();
        auto r = colour_bounded_degree(torso.graph, res.d, sub_opts);
        if (r.status != StrategyStatus::found) {
            res.status = r.status;
            return res;
        }
        res.c = std::max(res.c, r.colouring.palette_size);
        torso_cols[x] = r.colouring;
        res.torso_results[x] = std::move(r);
    }
    res.k = res.report.output_adhesion;

    std::int64_t per_torso = t + static_cast<std::int64_t>(opts.palette_factor) * res.d * res.d;
    res.palette_bound = per_torso;
    for (int i = 0; i < t * t; ++i) {
        res.palette_bound *= 4;
        if (res.palette_bound > (std::int64_t{1} << 60)) break;  // saturate
    }

    auto input = CompositionInput::make(g, res.td, std::move(torso_cols));
    auto composed = compose_colourings(g, input, opts);
    res.status = composed.status;
    res.used_fallback = composed.used_fallback;
    if (composed.status == StrategyStatus::found) res.colouring = composed.colouring;
    return res;
}

}  // namespace nonrep
