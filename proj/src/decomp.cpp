#include "cvxtw/decomp.h"

#include <algorithm>
#include <numeric>
#include <queue>

#include "cvxtw/error.h"

namespace cvxtw {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string edge_name(const ConvexDrawing& d, int e) {
    const Edge& x = d.edges()[e];
    return std::to_string(x.u + 1) + "-" + std::to_string(x.v + 1);
}

}  // namespace

int width_bound(int k) { return 3 * (k / 2) + 4; }
int separation_bound(int k) { return 2 * (k / 2) + 4; }
int depth_bound(int k) { return k / 2 + 1; }

int SpanningTreePair::max_depth() const {
    return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

SpanningTreePair build_tree_pair(const SubdividedGraph& gs, const FaceStructure& faces, int k) {
    const PlaneGraph& g = gs.graph;

    // Crossing counts per drawing edge: every crossing contributes two halves.
    std::vector<int> halves(g.chains.size(), 0);
    for (int v = g.num_outer; v < g.num_vertices(); ++v) {
        ++halves[g.lies_on[v][0]];
        ++halves[g.lies_on[v][1]];
    }
    for (int v = g.num_outer; v < g.num_vertices(); v += 2) {
        auto [a, b] = g.lies_on[v];
        if (std::min(halves[a], halves[b]) / 2 > k)
            throw NotMinKPlanar("crossing drawing edges " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are both crossed more than " + std::to_string(k) + " times",
                                a, b);
    }

    const int F = faces.num_faces();
    SpanningTreePair pair;
    pair.root_face = faces.outer_face;
    pair.parent_face.assign(F, -1);
    pair.parent_edge.assign(F, -1);
    pair.depth.assign(F, -1);
    std::queue<int> q;
    q.push(pair.root_face);
    pair.depth[pair.root_face] = 0;
    std::vector<char> in_dual(g.num_edges(), 0);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        pair.bfs_order.push_back(f);
        for (auto [nb, pe] : faces.dual_adj[f]) {
            if (g.is_auxiliary(pe) || pair.depth[nb] >= 0) continue;
            pair.depth[nb] = pair.depth[f] + 1;
            pair.parent_face[nb] = f;
            pair.parent_edge[nb] = pe;
            in_dual[pe] = 1;
            q.push(nb);
        }
    }
    if (static_cast<int>(pair.bfs_order.size()) != F)
        throw InternalBoundViolation("dual graph is disconnected");

    pair.in_primal.assign(g.num_edges(), 0);
    for (int pe = 0; pe < g.num_edges(); ++pe) {
        if (!in_dual[pe]) {
            pair.in_primal[pe] = 1;
            pair.primal_edges.push_back(pe);
        }
    }
    // Complement of a dual spanning tree is a primal spanning tree.
    DisjointSets ds(g.num_vertices());
    for (int pe : pair.primal_edges)
        if (!ds.unite(g.ends[pe].first, g.ends[pe].second))
            throw InternalBoundViolation("primal tree contains a cycle");
    if (static_cast<int>(pair.primal_edges.size()) != g.num_vertices() - 1)
        throw InternalBoundViolation("primal tree does not span G_S");

    if (pair.max_depth() > depth_bound(k))
        throw DepthBoundViolated("dual depth " + std::to_string(pair.max_depth()) + " exceeds " +
                                 std::to_string(depth_bound(k)) + " for k = " + std::to_string(k));
    return pair;
}

EdgeOrientation orient_edges(const ConvexDrawing& d) {
    const int n = d.n();
    if (!d.is_hull_complete()) throw PreconditionError("orientation needs a hull-complete drawing");
    if (d.graph().max_degree() > 3) throw PreconditionError("orientation needs maximum degree 3");
    EdgeOrientation o;
    std::vector<int> in(n, 0), out(n, 0);
    for (const Edge& e : d.edges()) {
        int pu = d.position(e.u), pv = d.position(e.v);
        Vertex tail, head;
        if ((pu + 1) % n == pv) {
            tail = e.u, head = e.v;
        } else if ((pv + 1) % n == pu) {
            tail = e.v, head = e.u;
        } else if (pu < pv) {
            tail = e.u, head = e.v;
        } else {
            tail = e.v, head = e.u;
        }
        o.dir.emplace_back(tail, head);
        ++out[tail];
        ++in[head];
    }
    for (Vertex v = 0; v < n; ++v)
        if (in[v] > 2 || out[v] < 1)
            throw InternalBoundViolation("orientation gives vertex " + std::to_string(v + 1) + " in-degree " +
                                         std::to_string(in[v]));
    return o;
}

int TreeDecomposition::max_bag_size() const {
    std::size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return static_cast<int>(best);
}

std::vector<std::vector<int>> TreeDecomposition::tree_adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

TreeDecomposition build_bags(const SubdividedGraph& gs, const FaceStructure& faces,
                             const SpanningTreePair& pair, const EdgeOrientation& orient, int k) {
    const PlaneGraph& g = gs.graph;
    const int V = g.num_vertices();
    TreeDecomposition td;
    td.num_vertices = g.num_outer;
    td.bags.assign(V, {});
    for (int pe : pair.primal_edges) td.tree_edges.push_back(g.ends[pe]);

    // Rule 4, memoized per face: tails of the drawing edges whose segments
    // are crossed on the dual path from the face to the root.
    std::vector<std::vector<Vertex>> path_tails(faces.num_faces());
    for (int f : pair.bfs_order) {
        if (f == pair.root_face) continue;
        int pe = pair.parent_edge[f];
        path_tails[f] = path_tails[pair.parent_face[f]];
        path_tails[f].push_back(orient.dir[g.seg_lies_on[pe]].first);
    }

    for (int v = 0; v < V; ++v) {
        auto& bag = td.bags[v];
        if (g.kind[v] == VertexKind::Outer) {
            bag.push_back(v);  // rule 1
        } else {
            for (int e : g.lies_on[v]) bag.push_back(orient.dir[e].first);  // rule 3
        }
        for (int pe : g.rotation[v]) {
            int h = 2 * pe + (g.ends[pe].first == v ? 0 : 1);
            int f = faces.face_of[h];
            if (f == faces.outer_face) continue;
            bag.insert(bag.end(), path_tails[f].begin(), path_tails[f].end());  // rule 4
        }
    }
    for (const auto& [tail, head] : orient.dir) td.bags[head].push_back(tail);  // rule 2

    const int h = depth_bound(k);
    for (int v = 0; v < V; ++v) {
        sort_unique(td.bags[v]);
        const int cap = g.kind[v] == VertexKind::Outer ? 3 + 2 * h : 2 + 3 * h;
        if (static_cast<int>(td.bags[v].size()) > cap)
            throw BagBoundViolated("bag of node " + std::to_string(v + 1) + " has " +
                                   std::to_string(td.bags[v].size()) + " vertices, cap " + std::to_string(cap));
    }
    return td;
}

TreeDecomposition contract_bags(const TreeDecomposition& td, const std::vector<Vertex>& origin,
                                int original_n) {
    TreeDecomposition out;
    out.num_vertices = original_n;
    out.tree_edges = td.tree_edges;
    out.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) {
        std::vector<Vertex> mapped;
        mapped.reserve(bag.size());
        for (Vertex v : bag) mapped.push_back(origin[v]);
        sort_unique(mapped);
        out.bags.push_back(std::move(mapped));
    }
    return out;
}

std::vector<std::string> validate_td(const TreeDecomposition& td, const Graph& g) {
    std::vector<std::string> problems;
    const int N = td.num_nodes();
    if (td.num_vertices != g.n)
        problems.push_back("decomposition is for " + std::to_string(td.num_vertices) + " vertices, graph has " +
                           std::to_string(g.n));
    if (N == 0) {
        if (g.n > 0) problems.push_back("decomposition has no bags");
        return problems;
    }

    bool tree_ok = true;
    if (static_cast<int>(td.tree_edges.size()) != N - 1) {
        problems.push_back("tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                           std::to_string(N) + " nodes");
        tree_ok = false;
    }
    DisjointSets ds(N);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= N || b >= N || a == b) {
            problems.push_back("invalid tree edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
            tree_ok = false;
            continue;
        }
        if (!ds.unite(a, b)) {
            problems.push_back("tree edge " + std::to_string(a + 1) + " " + std::to_string(b + 1) +
                               " closes a cycle");
            tree_ok = false;
        }
    }
    if (tree_ok) {
        for (int x = 1; x < N; ++x) {
            if (ds.find(x) != ds.find(0)) {
                problems.push_back("tree is disconnected");
                tree_ok = false;
                break;
            }
        }
    }

    std::vector<std::vector<int>> nodes_of(g.n);
    for (int x = 0; x < N; ++x) {
        for (Vertex v : td.bags[x]) {
            if (v < 0 || v >= g.n) {
                problems.push_back("bag " + std::to_string(x + 1) + " contains unknown vertex " +
                                   std::to_string(v + 1));
                continue;
            }
            nodes_of[v].push_back(x);
        }
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (nodes_of[v].empty()) problems.push_back("vertex " + std::to_string(v + 1) + " is in no bag");

    for (const Edge& e : g.edges) {
        const auto& small = nodes_of[e.u].size() <= nodes_of[e.v].size() ? nodes_of[e.u] : nodes_of[e.v];
        Vertex other = nodes_of[e.u].size() <= nodes_of[e.v].size() ? e.v : e.u;
        bool covered = std::any_of(small.begin(), small.end(), [&](int x) {
            return std::binary_search(td.bags[x].begin(), td.bags[x].end(), other);
        });
        if (!covered)
            problems.push_back("edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
                               " is not covered");
    }

    if (tree_ok) {
        // In a forest the induced subgraph is connected iff it has
        // (#nodes - 1) edges.
        std::vector<int> shared(g.n, 0);
        for (auto [a, b] : td.tree_edges) {
            std::vector<Vertex> common;
            std::set_intersection(td.bags[a].begin(), td.bags[a].end(), td.bags[b].begin(), td.bags[b].end(),
                                  std::back_inserter(common));
            for (Vertex v : common)
                if (v >= 0 && v < g.n) ++shared[v];
        }
        for (Vertex v = 0; v < g.n; ++v)
            if (!nodes_of[v].empty() && shared[v] != static_cast<int>(nodes_of[v].size()) - 1)
                problems.push_back("bags containing vertex " + std::to_string(v + 1) +
                                   " do not form a subtree");
    }
    return problems;
}

PipelineResult run_pipeline(const ConvexDrawing& d, int k) {
    if (k < 0) throw PreconditionError("k must be non-negative");
    PipelineResult r;
    r.k = k;
    r.crossings = compute_crossings(d);
    if (auto [a, b] = min_k_witness(r.crossings, k); a >= 0)
        throw NotMinKPlanar("crossing edges " + edge_name(d, a) + " (" + std::to_string(r.crossings.per_edge[a]) +
                                " crossings) and " + edge_name(d, b) + " (" +
                                std::to_string(r.crossings.per_edge[b]) + " crossings) both exceed k = " +
                                std::to_string(k),
                            a, b);

    if (d.n() <= 2) {
        r.degenerate = true;
        r.td.num_vertices = d.n();
        r.td.bags.emplace_back();
        for (Vertex v = 0; v < d.n(); ++v) r.td.bags[0].push_back(v);
        r.expanded_td = r.td;
        return r;
    }

    r.completed = hull_complete(d);
    r.expansion = expand(r.completed);
    const ConvexDrawing& ex = r.expansion.expanded;
    r.planarization = planarize(ex);
    r.gc_faces = compute_faces(r.planarization.crossing_graph);
    r.subdivided = subdivide(r.planarization.crossing_graph);
    r.gs_faces = compute_faces(r.subdivided.graph);
    r.tree_pair = build_tree_pair(r.subdivided, r.gs_faces, k);
    r.orientation = orient_edges(ex);
    r.expanded_td = build_bags(r.subdivided, r.gs_faces, r.tree_pair, r.orientation, k);
    if (auto problems = validate_td(r.expanded_td, ex.graph()); !problems.empty())
        throw InternalBoundViolation("decomposition of the expanded graph is invalid: " + problems.front());
    r.td = contract_bags(r.expanded_td, r.expansion.origin, d.n());
    if (auto problems = validate_td(r.td, d.graph()); !problems.empty())
        throw InternalBoundViolation("contracted decomposition is invalid: " + problems.front());
    if (r.td.width() > width_bound(k))
        throw InternalBoundViolation("width " + std::to_string(r.td.width()) + " exceeds " +
                                     std::to_string(width_bound(k)));
    return r;
}

TreeDecomposition decompose(const ConvexDrawing& d, int k) { return run_pipeline(d, k).td; }

}  // namespace cvxtw
