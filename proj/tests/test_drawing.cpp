#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cvxtw/drawing.h"
#include "cvxtw/error.h"
#include "cvxtw/families.h"
#include "support.h"

using namespace cvxtw;
using testing::complete;
using testing::cycle;

TEST_CASE("crossings of small drawings") {
    SUBCASE("C4 has none") {
        auto r = compute_crossings(ConvexDrawing(cycle(4)));
        CHECK(r.pairs.empty());
        CHECK(r.k_value == 0);
    }
    SUBCASE("K4 has the single diagonal pair") {
        ConvexDrawing d(complete(4));
        auto r = compute_crossings(d);
        REQUIRE(r.pairs.size() == 1);
        CHECK(d.edges()[r.pairs[0].first] == Edge(0, 2));
        CHECK(d.edges()[r.pairs[0].second] == Edge(1, 3));
        CHECK(r.k_value == 1);
        CHECK(is_outer_k_planar(d, 1));
        CHECK_FALSE(is_outer_k_planar(d, 0));
    }
    SUBCASE("K5 matches the geometric count") {
        ConvexDrawing d(complete(5));
        auto r = compute_crossings(d);
        CHECK(r.pairs.size() == 5);
        CHECK(r.per_edge == testing::geometric_crossings(d));
        CHECK(r.k_value == 2);
        CHECK(r.min_k_value == 2);
    }
    SUBCASE("crossing-free drawings are min-0-planar") {
        CHECK(is_outer_min_k_planar(ConvexDrawing(cycle(7)), 0));
    }
}

TEST_CASE("min-k witness on the stacked prism") {
    ConvexDrawing y = gen_stacked_prism(6, 3);
    auto r = compute_crossings(y);
    CHECK(r.min_k_value == 4);
    CHECK(is_outer_min_k_planar(y, 4));
    CHECK_FALSE(is_outer_min_k_planar(y, 3));
    auto [a, b] = min_k_witness(r, 3);
    REQUIRE(a >= 0);
    CHECK(crosses(y, y.edges()[a], y.edges()[b]));
    CHECK(r.per_edge[a] > 3);
    CHECK(r.per_edge[b] > 3);
    CHECK(min_k_witness(r, 4) == std::pair{-1, -1});
}

TEST_CASE("crossing report agrees with geometry on random drawings") {
    for (int trial = 0; trial < 80; ++trial) {
        auto d = testing::random_drawing(4 + trial % 14, 0.35, 100 + trial);
        auto r = compute_crossings(d);
        CHECK(r.per_edge == testing::geometric_crossings(d));

        // Pair list is symmetric with the per-edge counts and the predicate.
        std::vector<int> recount(d.num_edges(), 0);
        std::set<std::pair<int, int>> listed(r.pairs.begin(), r.pairs.end());
        for (int i = 0; i < d.num_edges(); ++i) {
            for (int j = i + 1; j < d.num_edges(); ++j) {
                bool c = crosses(d, d.edges()[i], d.edges()[j]);
                CHECK(c == crosses(d, d.edges()[j], d.edges()[i]));
                CHECK(c == listed.count({i, j}) > 0);
                recount[i] += c;
                recount[j] += c;
            }
        }
        CHECK(recount == r.per_edge);
        for (int e = 0; e < d.num_edges(); ++e)
            if (d.is_hull_edge(d.edges()[e])) CHECK(r.per_edge[e] == 0);

        // Monotonicity in k and k-planar implies min-k-planar.
        for (int k = 0; k <= r.k_value + 1; ++k) {
            CHECK(is_outer_min_k_planar(d, k) == (k >= r.min_k_value));
            if (is_outer_min_k_planar(d, k)) CHECK(is_outer_min_k_planar(d, k + 1));
            if (is_outer_k_planar(d, k)) CHECK(is_outer_min_k_planar(d, k));
        }
    }
}

TEST_CASE("hull completion") {
    SUBCASE("path becomes a triangle") {
        auto d = hull_complete(ConvexDrawing(testing::make_graph(3, {{0, 1}, {1, 2}})));
        CHECK(d.graph() == complete(3));
    }
    SUBCASE("K4 is unchanged") {
        ConvexDrawing k4(complete(4));
        CHECK(hull_complete(k4) == k4);
    }
    SUBCASE("edgeless drawing becomes a cycle in drawing order") {
        ConvexDrawing d(Graph(5, {}), {2, 0, 4, 1, 3});
        auto h = hull_complete(d);
        CHECK(h.num_edges() == 5);
        for (int p = 0; p < 5; ++p) CHECK(h.graph().has_edge(d.at(p), d.at(p + 1)));
        CHECK(h.is_hull_complete());
    }
    SUBCASE("needs three vertices") {
        CHECK_THROWS_AS(hull_complete(ConvexDrawing(Graph(2, {}))), PreconditionError);
    }
    SUBCASE("existing crossing counts are unchanged") {
        for (int trial = 0; trial < 30; ++trial) {
            auto d = testing::random_drawing(5 + trial % 10, 0.3, 900 + trial);
            auto h = hull_complete(d);
            auto before = compute_crossings(d), after = compute_crossings(h);
            for (int e = 0; e < d.num_edges(); ++e)
                CHECK(after.per_edge[find_edge(h.graph(), d.edges()[e])] == before.per_edge[e]);
        }
    }
}

// Expansion invariants checked against the original drawing.
static void check_expansion(const ConvexDrawing& d) {
    auto x = expand(d);
    const auto& e = x.expanded;
    auto deg = d.graph().degrees();
    CHECK(e.graph().max_degree() <= 3);
    CHECK(e.is_hull_complete());
    int total = 0;
    for (Vertex v = 0; v < d.n(); ++v) {
        const auto& im = x.images[v];
        REQUIRE(im.size() == static_cast<std::size_t>(std::max(deg[v] - 2, 1)));
        total += static_cast<int>(im.size());
        for (std::size_t i = 0; i < im.size(); ++i) {
            CHECK(x.origin[im[i]] == v);
            // One arc, listed in cyclic order.
            if (i > 0) {
                CHECK(e.position(im[i]) == (e.position(im[i - 1]) + 1) % e.n());
                CHECK(e.graph().has_edge(im[i - 1], im[i]));
            }
        }
    }
    CHECK(total == e.n());
    auto before = compute_crossings(d), after = compute_crossings(e);
    CHECK(before.k_value == after.k_value);
    CHECK(before.min_k_value == after.min_k_value);
    for (int i = 0; i < d.num_edges(); ++i) {
        const Edge& img = e.edges()[x.edge_image[i]];
        CHECK(Edge(x.origin[img.u], x.origin[img.v]) == d.edges()[i]);
        CHECK(after.per_edge[x.edge_image[i]] == before.per_edge[i]);
    }
    // Contracting the image paths gives back the original graph.
    CHECK(contract(e.graph(), x.origin, d.n()) == d.graph());
}

TEST_CASE("expansion") {
    SUBCASE("degree at most 3 is the identity") {
        for (auto g : {cycle(5), complete(4)}) {
            ConvexDrawing d(g);
            auto x = expand(d);
            CHECK(x.expanded == d);
            for (Vertex v = 0; v < d.n(); ++v) CHECK(x.images[v] == std::vector<Vertex>{v});
        }
    }
    SUBCASE("K5 becomes cubic on 10 vertices") {
        ConvexDrawing d(complete(5));
        CHECK(expand(d).expanded.n() == 10);
        check_expansion(d);
    }
    SUBCASE("random hull-complete drawings") {
        for (int trial = 0; trial < 40; ++trial)
            check_expansion(hull_complete(testing::random_drawing(3 + trial % 12, 0.45, 300 + trial)));
    }
}
