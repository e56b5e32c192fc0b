#include "cvxtw/planarize.h"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>

#include "cvxtw/error.h"

namespace cvxtw {

namespace {

std::string edge_name(const ConvexDrawing& d, int e) {
    const Edge& x = d.edges()[e];
    return std::to_string(x.u + 1) + "-" + std::to_string(x.v + 1);
}

}  // namespace

CrossingGraph build_crossing_graph(const ConvexDrawing& d, const CirclePlacement& placement) {
    if (!d.is_hull_complete()) throw PreconditionError("crossing graph needs a hull-complete drawing");
    if (static_cast<int>(placement.points.size()) != d.n())
        throw PreconditionError("placement size does not match the drawing");
    const int n = d.n();
    const int m = d.num_edges();
    const auto& edges = d.edges();
    const CrossingReport report = compute_crossings(d);

    CrossingGraph g;
    g.num_outer = n;
    const int num_inner = static_cast<int>(report.pairs.size());
    g.kind.assign(n, VertexKind::Outer);
    g.kind.resize(n + num_inner, VertexKind::Inner);
    g.lies_on.assign(n + num_inner, {-1, -1});

    // partners[e] = (other edge, crossing vertex id)
    std::vector<std::vector<std::pair<int, int>>> partners(m);
    for (int c = 0; c < num_inner; ++c) {
        auto [a, b] = report.pairs[c];
        g.lies_on[n + c] = {a, b};
        partners[a].emplace_back(b, n + c);
        partners[b].emplace_back(a, n + c);
    }

    auto point = [&](Vertex v) -> const CirclePoint& { return placement.points[d.position(v)]; };

    g.chains.resize(m);
    for (int e = 0; e < m; ++e) {
        const Edge& x = edges[e];
        std::vector<std::pair<Fraction, std::pair<int, int>>> along;
        along.reserve(partners[e].size());
        for (auto [f, vertex] : partners[e]) {
            const Edge& y = edges[f];
            along.push_back({intersection_parameter(point(x.u), point(x.v), point(y.u), point(y.v)),
                             {f, vertex}});
        }
        std::sort(along.begin(), along.end(), [](const auto& l, const auto& r) {
            return compare(l.first, r.first) < 0;
        });
        for (std::size_t i = 0; i + 1 < along.size(); ++i) {
            if (compare(along[i].first, along[i + 1].first) == 0) {
                int f = along[i].second.first, h = along[i + 1].second.first;
                throw ThreeConcurrentEdges("edges " + edge_name(d, e) + ", " + edge_name(d, f) + ", " +
                                               edge_name(d, h) + " are concurrent under placement " +
                                               std::to_string(placement.attempt),
                                           e, f, h);
            }
        }
        auto& chain = g.chains[e];
        chain.push_back(x.u);
        for (const auto& entry : along) chain.push_back(entry.second.second);
        chain.push_back(x.v);
    }

    // Plane edges in drawing-edge order, then chain order. heads[edge] holds
    // the drawing vertex each direction points to (first->second, second->first).
    std::vector<std::pair<Vertex, Vertex>> heads;
    for (int e = 0; e < m; ++e) {
        const auto& chain = g.chains[e];
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            g.ends.emplace_back(chain[i], chain[i + 1]);
            g.seg_lies_on.push_back(e);
            heads.emplace_back(edges[e].v, edges[e].u);
        }
    }

    // Seen from any point inside the disk, directions to points on the
    // circle appear in their cyclic order, so rotations are combinatorial.
    g.rotation.assign(g.num_vertices(), {});
    for (int pe = 0; pe < g.num_edges(); ++pe) {
        g.rotation[g.ends[pe].first].push_back(pe);
        g.rotation[g.ends[pe].second].push_back(pe);
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int base = v < n ? d.position(v) : 0;
        auto key = [&](int pe) {
            Vertex toward = g.ends[pe].first == v ? heads[pe].first : heads[pe].second;
            return (d.position(toward) - base + n) % n;
        };
        std::sort(g.rotation[v].begin(), g.rotation[v].end(),
                  [&](int a, int b) { return key(a) < key(b); });
    }
    return g;
}

Planarization planarize(const ConvexDrawing& d, int max_retries) {
    for (int attempt = 0;; ++attempt) {
        Planarization out;
        out.placement = place_on_circle(d.n(), attempt);
        try {
            out.crossing_graph = build_crossing_graph(d, out.placement);
            out.attempts = attempt + 1;
            return out;
        } catch (const ThreeConcurrentEdges& err) {
            if (attempt >= max_retries)
                throw ThreeConcurrentEdges(std::string(err.what()) + " (retry budget exhausted)", err.e,
                                           err.f, err.g);
        }
    }
}

SubdividedGraph subdivide(const CrossingGraph& gc) {
    const int n = gc.num_outer;
    const int num_inner = gc.num_vertices() - n;
    const int base_edges = gc.num_edges();

    SubdividedGraph out;
    PlaneGraph& g = out.graph;
    g.num_outer = n;
    g.kind.assign(n, VertexKind::Outer);
    g.kind.resize(n + 2 * num_inner, VertexKind::Inner);
    g.lies_on.assign(n, {-1, -1});
    g.ends = gc.ends;
    g.seg_lies_on = gc.seg_lies_on;
    g.rotation.assign(n + 2 * num_inner, {});
    for (int v = 0; v < n; ++v) g.rotation[v] = gc.rotation[v];

    // Which half each (crossing vertex, incident edge) goes to.
    std::vector<int> half_of(2 * base_edges, -1);  // slot 2*edge + (0 first end / 1 second end)
    for (int i = 0; i < num_inner; ++i) {
        const int x = n + i;
        const int v1 = n + 2 * i, v2 = v1 + 1;
        out.split.emplace_back(v1, v2);
        g.lies_on.push_back(gc.lies_on[x]);
        g.lies_on.push_back(gc.lies_on[x]);

        const auto& rot = gc.rotation[x];
        if (rot.size() != 4) throw InternalBoundViolation("crossing vertex without degree 4");
        // w1: towards the smaller endpoint of the smaller drawing edge, i.e.
        // the chain predecessor on lies_on[0].
        const int first_edge = std::min(gc.lies_on[x][0], gc.lies_on[x][1]);
        int start = -1;
        for (int r = 0; r < 4; ++r)
            if (gc.seg_lies_on[rot[r]] == first_edge && gc.ends[rot[r]].second == x) start = r;
        if (start < 0) throw InternalBoundViolation("crossing vertex rotation is inconsistent");

        const int aux = base_edges + i;
        for (int r = 0; r < 4; ++r) {
            int pe = rot[(start + r) % 4];
            int half = r < 2 ? v1 : v2;
            g.rotation[half].push_back(pe);
            half_of[2 * pe + (gc.ends[pe].first == x ? 0 : 1)] = half;
        }
        g.rotation[v1].push_back(aux);
        g.rotation[v2].push_back(aux);
        g.ends.emplace_back(v1, v2);
        g.seg_lies_on.push_back(-1);
    }
    for (int pe = 0; pe < base_edges; ++pe) {
        if (half_of[2 * pe] >= 0) g.ends[pe].first = half_of[2 * pe];
        if (half_of[2 * pe + 1] >= 0) g.ends[pe].second = half_of[2 * pe + 1];
    }

    // Chains pass through both halves, entering at the half that owns the
    // incoming segment.
    std::vector<int> first_seg(gc.chains.size(), -1);
    for (int pe = base_edges - 1; pe >= 0; --pe) first_seg[gc.seg_lies_on[pe]] = pe;
    g.chains.resize(gc.chains.size());
    for (std::size_t e = 0; e < gc.chains.size(); ++e) {
        const auto& chain = gc.chains[e];
        auto& out_chain = g.chains[e];
        out_chain.push_back(chain.front());
        for (std::size_t j = 1; j < chain.size(); ++j) {
            const int x = chain[j];
            if (x < n) {
                out_chain.push_back(x);
                continue;
            }
            const auto [v1, v2] = out.split[x - n];
            // segments of a chain are consecutive plane edges
            const int in_half = g.ends[first_seg[e] + static_cast<int>(j) - 1].second;
            out_chain.push_back(in_half);
            out_chain.push_back(in_half == v1 ? v2 : v1);
        }
    }
    return out;
}

FaceStructure compute_faces(const PlaneGraph& g) {
    const int V = g.num_vertices();
    const int E = g.num_edges();
    {
        std::vector<std::vector<int>> adj(V);
        for (auto [a, b] : g.ends) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> all(V);
        std::iota(all.begin(), all.end(), 0);
        if (V == 0 || !induces_connected(adj, all))
            throw PreconditionError("face traversal needs a connected plane graph");
    }

    // Index of each outgoing half-edge in its origin's rotation.
    std::vector<int> rot_index(2 * E, -1);
    auto out_half = [&](int v, int pe) { return 2 * pe + (g.ends[pe].first == v ? 0 : 1); };
    for (int v = 0; v < V; ++v)
        for (std::size_t i = 0; i < g.rotation[v].size(); ++i) rot_index[out_half(v, g.rotation[v][i])] = static_cast<int>(i);

    auto next = [&](int h) {
        int b = half_edge_target(g, h);
        int i = rot_index[h ^ 1];
        const auto& rot = g.rotation[b];
        return out_half(b, rot[(i + 1) % rot.size()]);
    };

    FaceStructure fs;
    fs.face_of.assign(2 * E, -1);
    auto trace = [&](int start) {
        int id = fs.num_faces();
        fs.faces.emplace_back();
        int h = start;
        do {
            fs.face_of[h] = id;
            fs.faces.back().push_back(h);
            h = next(h);
        } while (h != start);
    };
    trace(out_half(0, g.rotation[0].front()));
    fs.outer_face = 0;
    for (int h = 0; h < 2 * E; ++h)
        if (fs.face_of[h] < 0) trace(h);

    fs.dual_of.resize(E);
    fs.dual_adj.assign(fs.num_faces(), {});
    for (int pe = 0; pe < E; ++pe) {
        int f1 = fs.face_of[2 * pe], f2 = fs.face_of[2 * pe + 1];
        fs.dual_of[pe] = {f1, f2};
        fs.dual_adj[f1].emplace_back(f2, pe);
        if (f1 != f2) fs.dual_adj[f2].emplace_back(f1, pe);
    }
    for (auto& row : fs.dual_adj) std::sort(row.begin(), row.end());
    return fs;
}

std::vector<int> face_correspondence(const CrossingGraph& gc, const FaceStructure& gc_faces,
                                     const FaceStructure& gs_faces) {
    if (gc_faces.num_faces() != gs_faces.num_faces())
        throw InternalBoundViolation("subdivision changed the number of faces");
    std::vector<int> map(gc_faces.num_faces(), -1);
    std::vector<char> hit(gs_faces.num_faces(), 0);
    for (int h = 0; h < 2 * gc.num_edges(); ++h) {
        int f = gc_faces.face_of[h], f2 = gs_faces.face_of[h];
        if (map[f] < 0) {
            if (hit[f2]) throw InternalBoundViolation("face correspondence is not injective");
            map[f] = f2;
            hit[f2] = 1;
        } else if (map[f] != f2) {
            throw InternalBoundViolation("face correspondence is not well defined");
        }
    }
    return map;
}

int euler_characteristic(const PlaneGraph& g, const FaceStructure& faces) {
    return g.num_vertices() - g.num_edges() + faces.num_faces();
}

void write_plane_graph(std::ostream& out, const std::string& name, const PlaneGraph& g,
                       const FaceStructure& faces, const ConvexDrawing& d) {
    out << "pl " << name << ' ' << g.num_vertices() << ' ' << g.num_edges() << ' '
        << faces.num_faces() << '\n';
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "v " << v + 1;
        if (g.kind[v] == VertexKind::Outer) {
            out << " outer " << v + 1 << '\n';
        } else {
            const Edge& a = d.edges()[g.lies_on[v][0]];
            const Edge& b = d.edges()[g.lies_on[v][1]];
            out << " inner " << a.u + 1 << ' ' << a.v + 1 << ' ' << b.u + 1 << ' ' << b.v + 1 << '\n';
        }
    }
    for (int pe = 0; pe < g.num_edges(); ++pe) {
        out << "s " << pe + 1 << ' ' << g.ends[pe].first + 1 << ' ' << g.ends[pe].second + 1;
        if (g.is_auxiliary(pe)) {
            out << " aux\n";
        } else {
            const Edge& e = d.edges()[g.seg_lies_on[pe]];
            out << ' ' << e.u + 1 << ' ' << e.v + 1 << '\n';
        }
    }
}

}  // namespace cvxtw
