#pragma once

// Helpers and independent oracles shared by the unit tests. The oracles
// deliberately avoid the library's own algorithms: crossings come from
// floating-point geometry, treewidth from elimination over all
// permutations, separations from enumerating 3-colourings.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cvxtw/drawing.h"
#include "cvxtw/graph.h"

namespace testing {

using cvxtw::ConvexDrawing;
using cvxtw::Edge;
using cvxtw::Graph;
using cvxtw::Vertex;

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> es) {
    std::vector<Edge> edges;
    for (auto [a, b] : es) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph complete(int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

// Random simple graph with a random cyclic order; no planarity promise.
inline ConvexDrawing random_drawing(int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (keep(rng)) edges.emplace_back(a, b);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return ConvexDrawing(Graph(n, std::move(edges)), std::move(order));
}

// Per-edge crossing counts from actual chords of a regular polygon.
inline std::vector<int> geometric_crossings(const ConvexDrawing& d) {
    const int n = d.n();
    auto pt = [&](Vertex v) {
        double t = 2 * M_PI * d.position(v) / n;
        return std::pair{std::cos(t), std::sin(t)};
    };
    auto orient = [](std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> c) {
        double v = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
        return v > 1e-12 ? 1 : v < -1e-12 ? -1 : 0;
    };
    const auto& es = d.edges();
    std::vector<int> count(es.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge& e = es[i];
            const Edge& f = es[j];
            if (e.has(f.u) || e.has(f.v)) continue;
            auto a = pt(e.u), b = pt(e.v), c = pt(f.u), dd = pt(f.v);
            if (orient(a, b, c) * orient(a, b, dd) < 0 && orient(c, dd, a) * orient(c, dd, b) < 0) {
                ++count[i];
                ++count[j];
            }
        }
    }
    return count;
}

// Treewidth as the best elimination ordering over all permutations.
inline int permutation_treewidth(const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = g.n == 0 ? -1 : g.n - 1;
    do {
        std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
        for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
        std::vector<char> gone(g.n, 0);
        int width = 0;
        for (int v : perm) {
            std::vector<int> nb;
            for (int u = 0; u < g.n; ++u)
                if (!gone[u] && adj[v][u]) nb.push_back(u);
            width = std::max(width, static_cast<int>(nb.size()));
            for (int a : nb)
                for (int b : nb)
                    if (a != b) adj[a][b] = 1;
            gone[v] = 1;
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Minimum balanced separation order by enumerating every assignment of
// vertices to A-only, separator, B-only.
inline int colouring_min_separation(const Graph& g) {
    const int n = g.n;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    int best = n;
    std::vector<int> side(n);
    for (long code = 0; code < total; ++code) {
        long c = code;
        int a = 0, b = 0, s = 0;
        for (int v = 0; v < n; ++v) {
            side[v] = static_cast<int>(c % 3);
            c /= 3;
            a += side[v] == 0;
            s += side[v] == 1;
            b += side[v] == 2;
        }
        if (3 * a > 2 * n || 3 * b > 2 * n || s >= best) continue;
        bool ok = true;
        for (const Edge& e : g.edges)
            if ((side[e.u] == 0 && side[e.v] == 2) || (side[e.u] == 2 && side[e.v] == 0)) ok = false;
        if (ok) best = s;
    }
    return best;
}

// Drawing of g with identity order restricted to a subset of edges.
inline ConvexDrawing with_edges(const ConvexDrawing& d, const std::vector<Edge>& edges) {
    return ConvexDrawing(Graph(d.n(), edges), d.order());
}

}  // namespace testing
