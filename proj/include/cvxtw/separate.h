#pragma once

#include <string>
#include <vector>

#include "cvxtw/decomp.h"
#include "cvxtw/graph.h"

namespace cvxtw {

struct Separation {
    std::vector<Vertex> a;  // sorted
    std::vector<Vertex> b;  // sorted
    int n = 0;              // |V(G)|

    std::vector<Vertex> separator() const;  // A ∩ B
    std::vector<Vertex> a_only() const;     // A \ B
    std::vector<Vertex> b_only() const;     // B \ A
    int order() const { return static_cast<int>(separator().size()); }
    // 3|A\B| <= 2n and 3|B\A| <= 2n.
    bool balanced() const;
};

// Independent check: A ∪ B = V, no edge between A\B and B\A. Empty result
// means valid. Balance is reported separately by Separation::balanced.
std::vector<std::string> verify_separation(const Separation& sep, const Graph& g);

struct ExtractedSeparation {
    Separation separation;
    int tree_edge = -1;  // index into td.tree_edges
};

// Scans the tree edges of a decomposition with max degree 3 in which every
// vertex occurs in at least two bags, and returns the balanced separation
// of minimum order (ties: smallest edge index). Throws PreconditionError
// if the degree or two-bag condition fails.
ExtractedSeparation extract_balanced_separation(const TreeDecomposition& td, const Graph& g);

// decompose's pipeline followed by extraction. n <= 2 yields A = B = V.
Separation separate(const ConvexDrawing& d, int k);

// Minimum order of a balanced separation by exhaustive search.
int brute_force_min_balanced_separation(const Graph& g, int max_vertices = 16);

}  // namespace cvxtw
