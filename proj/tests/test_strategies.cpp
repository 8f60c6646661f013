#include <catch_amalgamated.hpp>

#include <map>

#include "nonrep/random.hpp"
#include "nonrep/strategies.hpp"
#include "oracles.hpp"

using namespace nonrep;

namespace {

Tree path_tree(int k) {
    Tree t;
    t.num_nodes = k;
    for (int i = 0; i + 1 < k; ++i) t.edges.emplace_back(i, i + 1);
    return t;
}

}  // namespace

TEST_CASE("resample_colouring basics") {
    StrategyOptions opts;

    // edgeless graph succeeds immediately
    auto e = resample_colouring(Graph(5), 1, opts);
    CHECK(e.status == StrategyStatus::found);
    CHECK(e.rounds == 0);

    // K3 with 2 colours: no nonrepetitive colouring exists, cap is hit
    opts.resample_cap = 200;
    auto k3 = resample_colouring(complete_graph(3), 2, opts);
    CHECK(k3.status == StrategyStatus::failed);
    CHECK(k3.rounds == 200);

    // P10 with 3 colours: Thue guarantees existence
    opts.resample_cap = 100'000;
    opts.seed = 1;
    auto p10 = resample_colouring(path_graph(10), 3, opts);
    REQUIRE(p10.status == StrategyStatus::found);
    CHECK(is_nonrepetitive(path_graph(10), p10.colouring));
}

TEST_CASE("resample_colouring is deterministic in the seed") {
    StrategyOptions opts;
    opts.seed = 42;
    auto a = resample_colouring(path_graph(12), 4, opts);
    auto b = resample_colouring(path_graph(12), 4, opts);
    CHECK(a.colouring.colours == b.colouring.colours);
    CHECK(a.rounds == b.rounds);
}

TEST_CASE("success rate does not degrade with more colours") {
    // statistical sanity at desk scale, not a proof of monotonicity
    Graph g = cycle_graph(9);
    int succ3 = 0, succ6 = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
        StrategyOptions opts;
        opts.seed = s;
        opts.resample_cap = 2000;
        if (resample_colouring(g, 4, opts).status == StrategyStatus::found) ++succ3;
        if (resample_colouring(g, 8, opts).status == StrategyStatus::found) ++succ6;
    }
    CHECK(succ6 >= succ3);
}

TEST_CASE("colour_bounded_degree on the star") {
    Graph star(6);
    for (int leaf = 1; leaf <= 5; ++leaf) star.add_edge(0, leaf);
    StrategyOptions opts;
    auto r = colour_bounded_degree(star, 2, opts);
    REQUIRE(r.status == StrategyStatus::found);
    CHECK(r.high_degree_vertices == std::vector<int>{0});
    CHECK(r.colouring.palette_size == 2);  // one sub colour + one private
    CHECK(is_nonrepetitive(star, r.colouring));
}

TEST_CASE("colour_bounded_degree with no high-degree vertices") {
    StrategyOptions opts;
    auto r = colour_bounded_degree(path_graph(4), 3, opts);
    REQUIRE(r.status == StrategyStatus::found);
    CHECK(r.high_degree_vertices.empty());
    CHECK(r.colouring.palette_size <= 4 * 9);
    CHECK(is_nonrepetitive(path_graph(4), r.colouring));

    auto empty = colour_bounded_degree(Graph(0), 0, opts);
    CHECK(empty.status == StrategyStatus::found);
    CHECK(empty.colouring.palette_size == 0);
}

TEST_CASE("private colours are used exactly once") {
    Rng rng(808);
    for (int round = 0; round < 30; ++round) {
        int n = 4 + rng.below(12);
        Graph g = oracle::random_graph(n, 30, rng);
        StrategyOptions opts;
        opts.seed = rng.next();
        int d = 2 + rng.below(2);
        auto r = colour_bounded_degree(g, d, opts);
        REQUIRE(r.status == StrategyStatus::found);
        CHECK(r.colouring.palette_size <=
              static_cast<int>(r.high_degree_vertices.size()) + 4 * d * d);
        for (int v : r.high_degree_vertices) {
            int count = 0;
            for (int c : r.colouring.colours)
                if (c == r.colouring.colours[v]) ++count;
            CHECK(count == 1);
        }
        CHECK(is_nonrepetitive(g, r.colouring));
    }
}

TEST_CASE("compose: single bag returns the torso colouring unchanged") {
    Graph p4 = path_graph(4);
    TreeDecomposition td{path_tree(1), {{0, 1, 2, 3}}};
    Colouring torso_col{{0, 1, 2, 0}, 3};
    auto input = CompositionInput::make(p4, td, {{0, torso_col}});
    CHECK(input.k == 0);
    auto r = compose_colourings(p4, input, StrategyOptions{});
    REQUIRE(r.status == StrategyStatus::found);
    CHECK(r.colouring.colours == torso_col.colours);
    CHECK(r.colouring.palette_size <= input.c);
}

TEST_CASE("compose: empty separator unions the components") {
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    TreeDecomposition td{path_tree(2), {{0, 1}, {2, 3}}};
    auto input = CompositionInput::make(
        two, td, {{0, Colouring{{0, 1}, 2}}, {1, Colouring{{1, 0}, 2}}});
    CHECK(input.k == 0);
    auto r = compose_colourings(two, input, StrategyOptions{});
    REQUIRE(r.status == StrategyStatus::found);
    CHECK(r.colouring.palette_size <= 2);
    CHECK(is_nonrepetitive(two, r.colouring));
}

TEST_CASE("compose: P3 with overlapping bags stays within c*4^k") {
    Graph p3 = path_graph(3);
    TreeDecomposition td{path_tree(2), {{0, 1}, {1, 2}}};
    // torsos are single edges; 2 colours each
    auto input = CompositionInput::make(
        p3, td, {{0, Colouring{{0, 1}, 2}}, {1, Colouring{{0, 1}, 2}}});
    CHECK(input.k == 1);
    CHECK(input.c == 2);
    auto r = compose_colourings(p3, input, StrategyOptions{});
    REQUIRE(r.status == StrategyStatus::found);
    CHECK(r.colouring.palette_size <= 2 * 4);
    CHECK(is_nonrepetitive(p3, r.colouring));
}

TEST_CASE("compose rejects bad torso colourings") {
    Graph p3 = path_graph(3);
    TreeDecomposition td{path_tree(2), {{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(CompositionInput::make(
                        p3, td, {{0, Colouring{{0, 0}, 2}}, {1, Colouring{{0, 1}, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(CompositionInput::make(p3, td, {{0, Colouring{{0, 1}, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("pipeline on the worked examples") {
    StrategyOptions opts;

    // edgeless graph, one bag, t=1: a single colour
    Graph e3(3);
    auto r1 = immersion_pipeline(e3, {path_tree(1), {{0, 1, 2}}}, 1, opts);
    REQUIRE(r1.status == StrategyStatus::found);
    CHECK(r1.colouring.palette_size == 1);

    // C4 with the two-bag partition, t=2
    Graph c4 = cycle_graph(4);
    auto r2 = immersion_pipeline(c4, {path_tree(2), {{0, 1}, {2, 3}}}, 2, opts);
    REQUIRE(r2.status == StrategyStatus::found);
    CHECK(r2.report.hypothesis_met);
    CHECK(r2.report.input_adhesion == 2);
    CHECK(is_nonrepetitive(c4, r2.colouring));
    CHECK(r2.colouring.palette_size <= r2.palette_bound);
    // sanity against the exact number
    CHECK(r2.colouring.palette_size >= exact_pi(c4).pi);

    // P4, one bag per vertex, t=2
    Graph p4 = path_graph(4);
    auto r3 = immersion_pipeline(p4, {path_tree(4), {{0}, {1}, {2}, {3}}}, 2, opts);
    REQUIRE(r3.status == StrategyStatus::found);
    CHECK(r3.report.input_adhesion == 1);
    CHECK(is_nonrepetitive(p4, r3.colouring));
}

TEST_CASE("pipeline is deterministic in the seed") {
    Graph c4 = cycle_graph(4);
    StrategyOptions opts;
    opts.seed = 5;
    auto a = immersion_pipeline(c4, {path_tree(2), {{0, 1}, {2, 3}}}, 2, opts);
    auto b = immersion_pipeline(c4, {path_tree(2), {{0, 1}, {2, 3}}}, 2, opts);
    CHECK(a.colouring.colours == b.colouring.colours);
}

TEST_CASE("pipeline runs under a violated hypothesis without claiming bounds") {
    Graph k5 = complete_graph(5);
    auto r = immersion_pipeline(k5, {path_tree(2), {{0, 1}, {2, 3, 4}}}, 1, StrategyOptions{});
    CHECK_FALSE(r.report.hypothesis_met);
    REQUIRE(r.status == StrategyStatus::found);
    CHECK(is_nonrepetitive(k5, r.colouring));
}
