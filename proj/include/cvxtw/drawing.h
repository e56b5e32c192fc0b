#pragma once

#include <utility>
#include <vector>

#include "cvxtw/graph.h"

namespace cvxtw {

// A simple graph whose vertices sit on a circle in a fixed cyclic order.
// order[p] is the vertex at cyclic position p; increasing position is the
// clockwise direction throughout the library.
class ConvexDrawing {
public:
    ConvexDrawing() = default;
    // Identity order.
    explicit ConvexDrawing(Graph g);
    ConvexDrawing(Graph g, std::vector<Vertex> order);

    const Graph& graph() const { return graph_; }
    int n() const { return graph_.n; }
    int num_edges() const { return graph_.num_edges(); }
    const std::vector<Edge>& edges() const { return graph_.edges; }
    const std::vector<Vertex>& order() const { return order_; }

    int position(Vertex v) const { return position_[v]; }
    Vertex at(int p) const { return order_[((p % n()) + n()) % n()]; }

    // True when the endpoints are cyclically consecutive.
    bool is_hull_edge(const Edge& e) const;
    bool is_hull_complete() const;

    friend bool operator==(const ConvexDrawing& a, const ConvexDrawing& b) {
        return a.graph_ == b.graph_ && a.order_ == b.order_;
    }

private:
    Graph graph_;
    std::vector<Vertex> order_;
    std::vector<int> position_;
};

// Do the two chords interleave on the circle?
bool crosses(const ConvexDrawing& d, const Edge& a, const Edge& b);

struct CrossingReport {
    // Pairs of edge indices (first < second) whose chords cross.
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> per_edge;
    int k_value = 0;
    int min_k_value = 0;

    // Indices of edges crossing edge i.
    std::vector<std::vector<int>> crossing_lists(int num_edges) const;
};

CrossingReport compute_crossings(const ConvexDrawing& d);

bool is_outer_k_planar(const ConvexDrawing& d, int k);
bool is_outer_min_k_planar(const ConvexDrawing& d, int k);

// First crossing pair (in report order) violating the min-k rule, if any.
std::pair<int, int> min_k_witness(const CrossingReport& report, int k);

// Adds every edge between cyclically consecutive vertices. Requires n >= 3.
ConvexDrawing hull_complete(const ConvexDrawing& d);

struct ExpansionResult {
    ConvexDrawing expanded;
    std::vector<Vertex> origin;               // expanded vertex -> original vertex
    std::vector<std::vector<Vertex>> images;  // original vertex -> images in arc order
    // Original edge index -> expanded edge index of the corresponding edge.
    std::vector<int> edge_image;
};

// Replaces every vertex of degree >= 4 by a path of deg-2 images on its arc
// so that the result has maximum degree 3 and the same crossing pattern.
// Requires a hull-complete drawing with n >= 3.
ExpansionResult expand(const ConvexDrawing& d);

}  // namespace cvxtw
