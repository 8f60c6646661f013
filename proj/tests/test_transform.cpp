#include <catch_amalgamated.hpp>

#include "nonrep/random.hpp"
#include "nonrep/transform.hpp"
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

TEST_CASE("construction on the C4 instance") {
    Graph c4 = cycle_graph(4);
    TPartition tp{path_tree(2), {{0, 1}, {2, 3}}};
    auto td = build_tree_decomposition(c4, tp, 1);  // root y
    CHECK(td.bags[0] == std::vector<int>{0, 1});
    CHECK(td.bags[1] == std::vector<int>{0, 1, 2, 3});
    CHECK(validate_tree_decomposition(c4, td).empty());
}

TEST_CASE("no cross edges: bags unchanged") {
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    TPartition tp{path_tree(2), {{0, 1}, {2, 3}}};
    auto td = build_tree_decomposition(two, tp);
    CHECK(td.bags == tp.bags);
}

TEST_CASE("single cross edge lifts one endpoint") {
    Graph p2 = path_graph(2);
    TPartition tp{path_tree(2), {{0}, {1}}};
    auto td = build_tree_decomposition(p2, tp, 1);
    CHECK(td.bags[0] == std::vector<int>{0});
    CHECK(td.bags[1] == std::vector<int>{0, 1});
}

TEST_CASE("invalid inputs are rejected") {
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(build_tree_decomposition(c4, {path_tree(2), {{0, 1}, {1, 2, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_tree_decomposition(c4, {path_tree(2), {{0, 1}, {2, 3}}}, 7),
                    std::out_of_range);
}

TEST_CASE("guarantees on the C4 instance with t=2") {
    Graph c4 = cycle_graph(4);
    TPartition tp{path_tree(2), {{0, 1}, {2, 3}}};
    auto td = build_tree_decomposition(c4, tp);
    auto rep = check_transform_guarantees(c4, tp, td, 2);
    CHECK(rep.input_adhesion == 2);
    CHECK(rep.output_adhesion <= rep.input_adhesion);
    CHECK(rep.hypothesis_met);  // adhesion 2 <= 4, torsos small
    CHECK(rep.per_edge_ok);
    CHECK(rep.torso_bound_ok);
    CHECK(rep.star_ok);
    for (const auto& p : rep.torso_profiles) CHECK(p.max_degree <= 24);  // t^4 + 2t^2
}

TEST_CASE("edgeless graph: all quantities zero") {
    Graph e3(3);
    TPartition tp{path_tree(2), {{0, 1}, {2}}};
    auto td = build_tree_decomposition(e3, tp);
    auto rep = check_transform_guarantees(e3, tp, td, 1);
    CHECK(rep.input_adhesion == 0);
    CHECK(rep.output_adhesion == 0);
    CHECK(rep.hypothesis_met);
}

TEST_CASE("hypothesis violation is flagged, no claim made") {
    // K5 split across the tree edge has 6 cross edges > t^2 = 1
    Graph k5 = complete_graph(5);
    TPartition tp{path_tree(2), {{0, 1}, {2, 3, 4}}};
    auto td = build_tree_decomposition(k5, tp);
    auto rep = check_transform_guarantees(k5, tp, td, 1);
    CHECK_FALSE(rep.hypothesis_met);
    CHECK(rep.per_edge_ok);  // the unconditional inequality still holds
}

TEST_CASE("foreign decomposition is detected") {
    Graph c4 = cycle_graph(4);
    TPartition tp{path_tree(2), {{0, 1}, {2, 3}}};
    TreeDecomposition bogus{path_tree(2), {{0}, {1, 2, 3}}};
    CHECK_THROWS_AS(check_transform_guarantees(c4, tp, bogus, 2), std::invalid_argument);
}

TEST_CASE("random instances satisfy every unconditional guarantee") {
    Rng rng(404);
    for (int round = 0; round < 120; ++round) {
        int n = 2 + rng.below(13);
        Graph g = oracle::random_graph(n, 35, rng);
        auto tp = oracle::random_tpartition(g, 2 + rng.below(5), rng);
        int root = rng.below(tp.tree.num_nodes);
        auto td = build_tree_decomposition(g, tp, root);

        CHECK(validate_tree_decomposition(g, td).empty());
        CHECK(oracle::bags_form_rooted_paths(g, td, root));
        auto rep = check_transform_guarantees(g, tp, td, 2);
        CHECK(rep.per_edge_ok);
        CHECK(rep.star_ok);
        CHECK(rep.output_adhesion <= rep.input_adhesion);
    }
}

TEST_CASE("result is independent of edge processing order") {
    // same instance, default root vs explicit smallest-id root must agree
    Rng rng(77);
    Graph g = oracle::random_graph(9, 40, rng);
    auto tp = oracle::random_tpartition(g, 4, rng);
    auto a = build_tree_decomposition(g, tp);
    auto b = build_tree_decomposition(g, tp, 0);
    CHECK(a.bags == b.bags);
}

TEST_CASE("hypothesis-satisfying instances get bounded torsos") {
    Rng rng(555);
    for (int t : {2, 3}) {
        for (int round = 0; round < 20; ++round) {
            auto inst = oracle::make_hypothesis_instance(12 + rng.below(6), 3 + rng.below(3),
                                                         t, 80, rng);
            auto td = build_tree_decomposition(inst.graph, inst.partition);
            auto rep = check_transform_guarantees(inst.graph, inst.partition, td, t);
            REQUIRE(rep.hypothesis_met);
            CHECK(rep.torso_bound_ok);
            CHECK(rep.output_adhesion <= t * t);
        }
    }
}
