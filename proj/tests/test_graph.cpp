#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvxtw/error.h"
#include "cvxtw/graph.h"
#include "support.h"

using namespace cvxtw;
using testing::make_graph;

TEST_CASE("graph construction normalizes and rejects non-simple input") {
    Graph g = make_graph(4, {{3, 2}, {1, 0}, {2, 0}});
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.degrees() == std::vector<int>{2, 1, 2, 1});
    CHECK(g.max_degree() == 2);
    CHECK(find_edge(g, Edge(2, 0)) == 1);
    CHECK(find_edge(g, Edge(1, 2)) == -1);

    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), InvalidInput);
}

TEST_CASE("connectivity helpers") {
    CHECK(is_connected(testing::cycle(5)));
    CHECK_FALSE(is_connected(make_graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1, {})));

    auto adj = testing::cycle(6).adjacency();
    CHECK(induces_connected(adj, {0, 1, 2}));
    CHECK_FALSE(induces_connected(adj, {0, 2}));
    CHECK_FALSE(induces_connected(adj, {}));
}

TEST_CASE("contract merges classes and drops loops") {
    Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph q = contract(path, {0, 0, 1, 1}, 2);
    CHECK(q.n == 2);
    CHECK(q.edges == std::vector<Edge>{{0, 1}});

    Graph c = contract(testing::cycle(6), {0, 1, 2, 0, 1, 2}, 3);
    CHECK(c == testing::complete(3));
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 9;
        auto d = testing::random_drawing(n, 0.4, 500 + trial);
        const Graph& g = d.graph();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        for (const Edge& e : g.edges) relabeled.emplace_back(perm[e.u], perm[e.v]);
        CHECK(canonical_form(g) == canonical_form(Graph(n, relabeled)));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    // Same degree sequence, different structure.
    Graph c6 = testing::cycle(6);
    Graph two_triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(canonical_form(c6) != canonical_form(two_triangles));

    // 3-regular on 6 vertices: prism versus K_{3,3}.
    Graph prism = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    Graph k33 = make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(canonical_form(prism) != canonical_form(k33));

    // Petersen graph under two labelings, against the 5-prism.
    Graph petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                     {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    std::vector<int> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
    std::vector<Edge> relabeled;
    for (const Edge& e : petersen.edges) relabeled.emplace_back(perm[e.u], perm[e.v]);
    Graph prism5 = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                                   {9, 5}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK(canonical_form(petersen) == canonical_form(Graph(10, relabeled)));
    CHECK(canonical_form(petersen) != canonical_form(prism5));
}
