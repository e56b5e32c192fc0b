#include "cvxtw/drawing.h"

#include <algorithm>
#include <numeric>

#include "cvxtw/error.h"

namespace cvxtw {

ConvexDrawing::ConvexDrawing(Graph g) : graph_(std::move(g)) {
    order_.resize(graph_.n);
    std::iota(order_.begin(), order_.end(), 0);
    position_ = order_;
}

ConvexDrawing::ConvexDrawing(Graph g, std::vector<Vertex> order)
    : graph_(std::move(g)), order_(std::move(order)) {
    if (static_cast<int>(order_.size()) != graph_.n)
        throw InvalidInput("cyclic order has " + std::to_string(order_.size()) +
                           " entries, expected " + std::to_string(graph_.n));
    position_.assign(graph_.n, -1);
    for (int p = 0; p < graph_.n; ++p) {
        Vertex v = order_[p];
        if (v < 0 || v >= graph_.n || position_[v] != -1)
            throw InvalidInput("cyclic order is not a permutation");
        position_[v] = p;
    }
}

bool ConvexDrawing::is_hull_edge(const Edge& e) const {
    int diff = std::abs(position_[e.u] - position_[e.v]);
    return diff == 1 || (n() >= 3 && diff == n() - 1);
}

bool ConvexDrawing::is_hull_complete() const {
    if (n() < 3) return false;
    for (int p = 0; p < n(); ++p)
        if (!graph_.has_edge(at(p), at(p + 1))) return false;
    return true;
}

bool crosses(const ConvexDrawing& d, const Edge& a, const Edge& b) {
    int i = d.position(a.u), j = d.position(a.v);
    if (i > j) std::swap(i, j);
    int i2 = d.position(b.u), j2 = d.position(b.v);
    if (i2 > j2) std::swap(i2, j2);
    return (i < i2 && i2 < j && j < j2) || (i2 < i && i < j2 && j2 < j);
}

std::vector<std::vector<int>> CrossingReport::crossing_lists(int num_edges) const {
    std::vector<std::vector<int>> out(num_edges);
    for (auto [a, b] : pairs) {
        out[a].push_back(b);
        out[b].push_back(a);
    }
    return out;
}

CrossingReport compute_crossings(const ConvexDrawing& d) {
    const auto& edges = d.edges();
    const int m = d.num_edges();
    CrossingReport r;
    r.per_edge.assign(m, 0);
    // Intervals [lo, hi] of positions; two chords cross iff exactly one
    // endpoint of one lies strictly inside the other's interval.
    std::vector<std::pair<int, int>> iv(m);
    for (int i = 0; i < m; ++i) {
        int a = d.position(edges[i].u), b = d.position(edges[i].v);
        iv[i] = {std::min(a, b), std::max(a, b)};
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto [lo, hi] = iv[i];
            auto [lo2, hi2] = iv[j];
            if ((lo < lo2 && lo2 < hi && hi < hi2) || (lo2 < lo && lo < hi2 && hi2 < hi)) {
                r.pairs.emplace_back(i, j);
                ++r.per_edge[i];
                ++r.per_edge[j];
            }
        }
    }
    for (int c : r.per_edge) r.k_value = std::max(r.k_value, c);
    for (auto [a, b] : r.pairs)
        r.min_k_value = std::max(r.min_k_value, std::min(r.per_edge[a], r.per_edge[b]));
    return r;
}

bool is_outer_k_planar(const ConvexDrawing& d, int k) {
    return compute_crossings(d).k_value <= k;
}

bool is_outer_min_k_planar(const ConvexDrawing& d, int k) {
    return compute_crossings(d).min_k_value <= k;
}

std::pair<int, int> min_k_witness(const CrossingReport& report, int k) {
    for (auto [a, b] : report.pairs)
        if (std::min(report.per_edge[a], report.per_edge[b]) > k) return {a, b};
    return {-1, -1};
}

ConvexDrawing hull_complete(const ConvexDrawing& d) {
    if (d.n() < 3)
        throw PreconditionError("hull completion needs at least 3 vertices, got " +
                                std::to_string(d.n()));
    std::vector<Edge> edges = d.edges();
    for (int p = 0; p < d.n(); ++p) {
        Edge e(d.at(p), d.at(p + 1));
        if (!d.graph().has_edge(e.u, e.v)) edges.push_back(e);
    }
    return ConvexDrawing(Graph(d.n(), std::move(edges)), d.order());
}

ExpansionResult expand(const ConvexDrawing& d) {
    if (d.n() < 3 || !d.is_hull_complete())
        throw PreconditionError("expansion requires a hull-complete drawing with n >= 3");
    const int n = d.n();
    const auto adj = d.graph().adjacency();

    // Neighbours in clockwise rotation: w_0 is the hull successor, the last
    // one the hull predecessor.
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex v = 0; v < n; ++v) {
        rot[v] = adj[v];
        int pv = d.position(v);
        std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) {
            return (d.position(a) - pv + n) % n < (d.position(b) - pv + n) % n;
        });
    }

    ExpansionResult res;
    res.images.resize(n);
    // Fresh ids: input-vertex order, then arc order. Arc order is
    // v_s, ..., v_1 (images placed counter-clockwise).
    int next_id = 0;
    for (Vertex v = 0; v < n; ++v) {
        int s = std::max(static_cast<int>(rot[v].size()) - 2, 1);
        for (int i = 0; i < s; ++i) {
            res.images[v].push_back(next_id++);
            res.origin.push_back(v);
        }
    }

    // image_for(v, w): the image of v that carries the edge towards w.
    auto image_for = [&](Vertex v, Vertex w) -> Vertex {
        const auto& imgs = res.images[v];
        if (imgs.size() == 1) return imgs[0];
        const int s = static_cast<int>(imgs.size());
        int idx = static_cast<int>(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin());
        // Clockwise index idx of w maps to path index i (1-based): w_0 -> v_1,
        // w_i -> v_i, w_{s+1} -> v_s. images[] is in arc order v_s..v_1.
        int i = std::clamp(idx, 1, s);
        return imgs[s - i];
    };

    std::vector<Vertex> order;
    order.reserve(next_id);
    for (int p = 0; p < n; ++p)
        for (Vertex x : res.images[d.at(p)]) order.push_back(x);

    std::vector<Edge> edges;
    std::vector<Edge> corresponding;
    for (const Edge& e : d.edges()) corresponding.emplace_back(image_for(e.u, e.v), image_for(e.v, e.u));
    edges = corresponding;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t i = 0; i + 1 < res.images[v].size(); ++i)
            edges.emplace_back(res.images[v][i], res.images[v][i + 1]);

    res.expanded = ConvexDrawing(Graph(next_id, std::move(edges)), std::move(order));
    for (const Edge& e : corresponding) res.edge_image.push_back(find_edge(res.expanded.graph(), e));
    return res;
}

}  // namespace cvxtw
