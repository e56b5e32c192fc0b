#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cvxtw {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool has(Vertex x) const { return x == u || x == v; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges are kept sorted and
// duplicate-free once `normalize()` has run (all factories do this).
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int num_edges() const { return static_cast<int>(edges.size()); }
    std::vector<std::vector<Vertex>> adjacency() const;
    std::vector<int> degrees() const;
    bool has_edge(Vertex a, Vertex b) const;
    int max_degree() const;

    // Sorts edges; throws InvalidInput on self-loops, duplicates or
    // out-of-range endpoints.
    void normalize();

    friend bool operator==(const Graph&, const Graph&) = default;
};

// Edge index lookup for an already normalized graph.
int find_edge(const Graph& g, Edge e);

bool is_connected(const Graph& g);

// Connectivity of the subgraph induced by `vertices`.
bool induces_connected(const std::vector<std::vector<Vertex>>& adj,
                       const std::vector<Vertex>& vertices);

// Quotient graph: vertex v goes to class[v] (0..num_classes-1). Loops are
// dropped and parallel edges merged.
Graph contract(const Graph& g, const std::vector<int>& cls, int num_classes);

// Canonical certificate of g up to isomorphism (colour refinement plus
// individualisation search). Two graphs are isomorphic iff their
// certificates are equal. `node_budget` bounds the search tree; exceeding
// it throws BudgetExceeded.
std::vector<std::uint64_t> canonical_form(const Graph& g, long node_budget = 200000);

}  // namespace cvxtw
