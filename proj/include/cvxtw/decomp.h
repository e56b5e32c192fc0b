#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cvxtw/drawing.h"
#include "cvxtw/planarize.h"

namespace cvxtw {

// Primal spanning tree T_S of G_S together with the dual spanning tree
// T_S* on the faces, rooted at the outer face.
struct SpanningTreePair {
    std::vector<char> in_primal;    // plane edge -> member of T_S
    std::vector<int> primal_edges;  // ascending plane edge ids
    int root_face = 0;
    std::vector<int> parent_face;   // -1 at the root
    std::vector<int> parent_edge;   // plane edge whose dual joins face and parent
    std::vector<int> depth;
    std::vector<int> bfs_order;     // faces in non-decreasing depth

    int max_depth() const;
};

// BFS of the crossing graph's dual (auxiliary duals excluded) from the
// outer face, neighbours in ascending face id. Throws NotMinKPlanar if some
// crossing has both edges crossed more than k times, DepthBoundViolated if
// a face ends up deeper than k/2 + 1.
SpanningTreePair build_tree_pair(const SubdividedGraph& gs, const FaceStructure& faces, int k);

struct EdgeOrientation {
    std::vector<std::pair<Vertex, Vertex>> dir;  // drawing edge index -> (tail, head)
};

// Hull edges run from position p to p + 1; other edges from the lower to
// the higher position. Requires a hull-complete drawing with degree <= 3.
EdgeOrientation orient_edges(const ConvexDrawing& d);

struct TreeDecomposition {
    int num_vertices = 0;  // vertices of the decomposed graph
    std::vector<std::vector<Vertex>> bags;  // sorted, duplicate free
    std::vector<std::pair<int, int>> tree_edges;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    int max_bag_size() const;
    int width() const { return max_bag_size() - 1; }
    std::vector<std::vector<int>> tree_adjacency() const;

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

int width_bound(int k);        // 3 * floor(k/2) + 4
int separation_bound(int k);   // 2 * floor(k/2) + 4
int depth_bound(int k);        // floor(k/2) + 1

// Nodes are the vertices of G_S, the tree is T_S. Bag caps from the
// counting argument are enforced (BagBoundViolated).
TreeDecomposition build_bags(const SubdividedGraph& gs, const FaceStructure& faces,
                             const SpanningTreePair& pair, const EdgeOrientation& orient, int k);

// Maps every bag through `origin`, keeping the tree.
TreeDecomposition contract_bags(const TreeDecomposition& td, const std::vector<Vertex>& origin,
                                int original_n);

// Empty result means valid.
std::vector<std::string> validate_td(const TreeDecomposition& td, const Graph& g);

struct PipelineResult {
    int k = 0;
    bool degenerate = false;  // n <= 2: single bag, no intermediate data
    CrossingReport crossings;
    ConvexDrawing completed;
    ExpansionResult expansion;
    Planarization planarization;
    FaceStructure gc_faces;
    SubdividedGraph subdivided;
    FaceStructure gs_faces;
    SpanningTreePair tree_pair;
    EdgeOrientation orientation;
    TreeDecomposition expanded_td;
    TreeDecomposition td;
};

// hull_complete -> expand -> planarize -> subdivide -> faces -> tree pair
// -> bags -> contract. Throws NotMinKPlanar when the drawing fails the
// min-k check.
PipelineResult run_pipeline(const ConvexDrawing& d, int k);

TreeDecomposition decompose(const ConvexDrawing& d, int k);

}  // namespace cvxtw
