#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvxtw/families.h"
#include "cvxtw/planarize.h"
#include "cvxtw/separate.h"
#include "support.h"

using namespace cvxtw;

namespace {

ConvexDrawing rotated(const ConvexDrawing& d, int shift, bool reflect) {
    std::vector<Vertex> order(d.n());
    for (int p = 0; p < d.n(); ++p) order[p] = d.at(reflect ? shift - p : p + shift);
    return ConvexDrawing(d.graph(), order);
}

}  // namespace

TEST_CASE("crossing counts ignore where the circle starts and its direction") {
    for (int trial = 0; trial < 40; ++trial) {
        auto d = testing::random_drawing(5 + trial % 20, 0.3, 4000 + trial);
        auto base = compute_crossings(d);
        for (bool reflect : {false, true}) {
            auto r = compute_crossings(rotated(d, trial, reflect));
            CHECK(r.per_edge == base.per_edge);
            CHECK(r.pairs == base.pairs);
        }
    }
}

TEST_CASE("pipeline is deterministic and sound under rotations of the order") {
    for (int trial = 0; trial < 24; ++trial) {
        const int k = trial % 7;
        auto d = random_outer_min_k_planar(20 + 3 * trial, k, 900 + trial);
        auto first = run_pipeline(d, k);
        auto second = run_pipeline(d, k);
        CHECK(first.td == second.td);
        for (bool reflect : {false, true}) {
            auto e = rotated(d, 5 * trial + 1, reflect);
            auto td = decompose(e, k);
            CHECK(validate_td(td, e.graph()).empty());
            CHECK(td.width() <= width_bound(k));
            auto s = separate(e, k);
            CHECK(verify_separation(s, e.graph()).empty());
            CHECK(s.balanced());
            CHECK(s.order() <= separation_bound(k));
        }
    }
}

TEST_CASE("planarization soundness on larger random drawings") {
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + trial % 8;
        auto d = random_outer_min_k_planar(40 + 4 * trial, k, 1700 + trial);
        auto r = run_pipeline(d, k);
        const auto& ex = r.expansion.expanded;
        const auto& gc = r.planarization.crossing_graph;
        auto counts = compute_crossings(ex).per_edge;
        CHECK(euler_characteristic(gc, r.gc_faces) == 2);
        CHECK(euler_characteristic(r.subdivided.graph, r.gs_faces) == 2);
        for (int e = 0; e < ex.num_edges(); ++e)
            CHECK(gc.chains[e].size() == static_cast<std::size_t>(2 + counts[e]));
        CHECK(r.tree_pair.max_depth() <= depth_bound(k));
    }
}

TEST_CASE("generated families decompose within their bounds") {
    for (int k = 1; k <= 3; ++k) {
        auto d = gen_Fk(k).drawing;
        const int kk = 2 * k - 1;
        CHECK(decompose(d, kk).width() <= width_bound(kk));
        CHECK(separate(d, kk).order() <= separation_bound(kk));
    }
    for (auto [m, n] : {std::pair{6, 2}, {8, 3}, {5, 4}}) {
        auto y = gen_stacked_prism(m, n);
        const int kk = 2 * n - 2;
        CHECK(decompose(y, kk).width() <= width_bound(kk));
        CHECK(separate(y, kk).order() <= separation_bound(kk));
    }
}
