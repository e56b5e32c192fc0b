#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cvxtw/drawing.h"
#include "cvxtw/placement.h"

namespace cvxtw {

enum class VertexKind { Outer, Inner };

// Embedded plane graph produced by planarizing a convex drawing. Vertices
// 0..num_outer-1 are the drawing's vertices; the rest are crossing points
// (or, after subdivision, their halves). Plane edges are segments of
// drawing edges, except auxiliary edges created by subdivision.
struct PlaneGraph {
    int num_outer = 0;
    std::vector<VertexKind> kind;
    // Drawing edges through each vertex; {-1, -1} for outer vertices.
    std::vector<std::array<int, 2>> lies_on;
    std::vector<std::pair<int, int>> ends;
    // Drawing edge each plane edge lies on; -1 for auxiliary edges.
    std::vector<int> seg_lies_on;
    // Incident plane edges per vertex in clockwise order. For outer
    // vertices the list starts with the edge to the hull successor.
    std::vector<std::vector<int>> rotation;
    // Drawing edge -> plane vertices along it, from edge.u to edge.v.
    std::vector<std::vector<int>> chains;

    int num_vertices() const { return static_cast<int>(kind.size()); }
    int num_edges() const { return static_cast<int>(ends.size()); }
    int other(int edge, int v) const { return ends[edge].first == v ? ends[edge].second : ends[edge].first; }
    bool is_auxiliary(int edge) const { return seg_lies_on[edge] < 0; }
};

using CrossingGraph = PlaneGraph;

struct SubdividedGraph {
    PlaneGraph graph;
    // Crossing-graph inner vertex (indexed from num_outer) -> its two halves.
    std::vector<std::pair<int, int>> split;
};

// Builds G_C for a hull-complete drawing under a fixed placement. Throws
// ThreeConcurrentEdges if the placement makes three chords concurrent.
CrossingGraph build_crossing_graph(const ConvexDrawing& d, const CirclePlacement& placement);

struct Planarization {
    CirclePlacement placement;
    CrossingGraph crossing_graph;
    int attempts = 0;  // placements tried, including the successful one
};

// build_crossing_graph with the deterministic re-placement schedule.
Planarization planarize(const ConvexDrawing& d, int max_retries = 5);

SubdividedGraph subdivide(const CrossingGraph& gc);

struct FaceStructure {
    // Half-edge h = 2*e + dir; dir 0 runs ends[e].first -> ends[e].second.
    std::vector<std::vector<int>> faces;
    std::vector<int> face_of;  // half-edge -> face
    int outer_face = 0;
    std::vector<std::array<int, 2>> dual_of;  // plane edge -> faces of its two half-edges
    // Face -> (neighbour face, plane edge), sorted by neighbour then edge.
    std::vector<std::vector<std::pair<int, int>>> dual_adj;

    int num_faces() const { return static_cast<int>(faces.size()); }
};

// Face traversal over the rotation system. Face 0 is discovered from the
// half-edge leaving vertex 0 towards its hull successor, which is the
// outer face. Throws PreconditionError if g is disconnected.
FaceStructure compute_faces(const PlaneGraph& g);

inline int half_edge_origin(const PlaneGraph& g, int h) {
    return (h & 1) ? g.ends[h >> 1].second : g.ends[h >> 1].first;
}
inline int half_edge_target(const PlaneGraph& g, int h) {
    return (h & 1) ? g.ends[h >> 1].first : g.ends[h >> 1].second;
}

// Faces of gc -> faces of its subdivision; throws if not a bijection.
std::vector<int> face_correspondence(const CrossingGraph& gc, const FaceStructure& gc_faces,
                                     const FaceStructure& gs_faces);

// V - E + F for a connected plane graph; equals 2 when the embedding is planar.
int euler_characteristic(const PlaneGraph& g, const FaceStructure& faces);

// Annotated edge-list dump ("pl" section) for debugging.
void write_plane_graph(std::ostream& out, const std::string& name, const PlaneGraph& g,
                       const FaceStructure& faces, const ConvexDrawing& d);

}  // namespace cvxtw
