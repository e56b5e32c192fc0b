#include "cvxtw/separate.h"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <iterator>

#include "cvxtw/error.h"

namespace cvxtw {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Vertex> to_list(const Bits& bits) {
    std::vector<Vertex> out;
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(static_cast<Vertex>(i));
    return out;
}

}  // namespace

std::vector<Vertex> Separation::separator() const {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> Separation::a_only() const {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> Separation::b_only() const {
    std::vector<Vertex> out;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out));
    return out;
}

bool Separation::balanced() const {
    return 3 * static_cast<long>(a_only().size()) <= 2L * n && 3 * static_cast<long>(b_only().size()) <= 2L * n;
}

std::vector<std::string> verify_separation(const Separation& sep, const Graph& g) {
    std::vector<std::string> problems;
    if (sep.n != g.n) problems.push_back("separation is for " + std::to_string(sep.n) + " vertices, graph has " + std::to_string(g.n));
    std::vector<int> side(g.n, 0);  // bit 0: in A, bit 1: in B
    for (Vertex v : sep.a) {
        if (v < 0 || v >= g.n) {
            problems.push_back("A contains unknown vertex " + std::to_string(v + 1));
            continue;
        }
        side[v] |= 1;
    }
    for (Vertex v : sep.b) {
        if (v < 0 || v >= g.n) {
            problems.push_back("B contains unknown vertex " + std::to_string(v + 1));
            continue;
        }
        side[v] |= 2;
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (side[v] == 0) problems.push_back("vertex " + std::to_string(v + 1) + " is in neither side");
    for (const Edge& e : g.edges)
        if ((side[e.u] | side[e.v]) == 3 && side[e.u] != 3 && side[e.v] != 3)
            problems.push_back("edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
                               " joins A\\B and B\\A");
    return problems;
}

ExtractedSeparation extract_balanced_separation(const TreeDecomposition& td, const Graph& g) {
    const int N = td.num_nodes();
    const int n = g.n;
    const auto adj = td.tree_adjacency();
    for (int x = 0; x < N; ++x)
        if (adj[x].size() > 3)
            throw PreconditionError("tree node " + std::to_string(x + 1) + " has degree " +
                                    std::to_string(adj[x].size()) + " > 3");
    std::vector<int> occurrences(n, 0);
    for (const auto& bag : td.bags)
        for (Vertex v : bag) ++occurrences[v];
    for (Vertex v = 0; v < n; ++v)
        if (occurrences[v] < 2)
            throw PreconditionError("vertex " + std::to_string(v + 1) + " occurs in fewer than two bags");

    std::vector<Bits> bag_bits(N, Bits(n));
    for (int x = 0; x < N; ++x)
        for (Vertex v : td.bags[x]) bag_bits[x].set(v);

    // Root at node 0. down[x]: union over the subtree of x; up[x]: union
    // over everything outside it.
    std::vector<int> parent(N, -1), order;
    order.reserve(N);
    std::vector<char> seen(N, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int y : adj[order[i]])
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = order[i];
                order.push_back(y);
            }
    if (static_cast<int>(order.size()) != N) throw PreconditionError("decomposition tree is disconnected");

    std::vector<Bits> down(bag_bits), up(N, Bits(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) down[parent[*it]] |= down[*it];
    for (int x : order) {
        for (int c : adj[x]) {
            if (c == parent[x]) continue;
            Bits acc = up[x] | bag_bits[x];
            for (int s : adj[x])
                if (s != parent[x] && s != c) acc |= down[s];
            up[c] = std::move(acc);
        }
    }

    ExtractedSeparation best;
    int best_order = -1;
    std::vector<int> heavy_towards(N, 0);  // for the failure certificate
    for (int i = 0; i < static_cast<int>(td.tree_edges.size()); ++i) {
        auto [x, y] = td.tree_edges[i];
        int child = parent[y] == x ? y : x;
        int par = child == y ? x : y;
        const Bits& child_side = down[child];
        const Bits& parent_side = up[child];
        const long child_only = static_cast<long>((child_side - parent_side).count());
        const long parent_only = static_cast<long>((parent_side - child_side).count());
        const bool balanced = 3 * child_only <= 2L * n && 3 * parent_only <= 2L * n;
        if (!balanced) {
            ++heavy_towards[3 * child_only > 2L * n ? child : par];
            continue;
        }
        const int ord = static_cast<int>((child_side & parent_side).count());
        if (best_order < 0 || ord < best_order) {
            best_order = ord;
            best.tree_edge = i;
            best.separation.n = n;
            // Keep (S_{x,y}, S_{y,x}) in the edge's stated orientation.
            const Bits& side_x = child == x ? child_side : parent_side;
            const Bits& side_y = child == x ? parent_side : child_side;
            best.separation.a = to_list(side_x);
            best.separation.b = to_list(side_y);
        }
    }
    if (best_order < 0) {
        int sink = static_cast<int>(std::max_element(heavy_towards.begin(), heavy_towards.end()) - heavy_towards.begin());
        throw InternalBoundViolation("no balanced tree edge; node " + std::to_string(sink + 1) + " has " +
                                     std::to_string(heavy_towards[sink]) + " of " + std::to_string(adj[sink].size()) +
                                     " incident edges oriented towards it");
    }
    return best;
}

Separation separate(const ConvexDrawing& d, int k) {
    PipelineResult r = run_pipeline(d, k);
    if (r.degenerate) {
        Separation s;
        s.n = d.n();
        for (Vertex v = 0; v < d.n(); ++v) s.a.push_back(v);
        s.b = s.a;
        return s;
    }
    return extract_balanced_separation(r.td, d.graph()).separation;
}

int brute_force_min_balanced_separation(const Graph& g, int max_vertices) {
    const int n = g.n;
    if (n > max_vertices || n > 30)
        throw TooLarge("separation oracle is limited to " + std::to_string(max_vertices) + " vertices");
    if (n == 0) return 0;
    std::vector<std::uint32_t> nb(n, 0);
    for (const Edge& e : g.edges) {
        nb[e.u] |= 1u << e.v;
        nb[e.v] |= 1u << e.u;
    }
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    const long cap = (2L * n) / 3;  // |side| <= 2n/3  <=>  |side| <= floor(2n/3)
    int best = n;
    for (std::uint32_t s = 0; s <= all; ++s) {
        const int size = __builtin_popcount(s);
        if (size >= best) {
            if (s == all) break;
            continue;
        }
        // Component sizes of G - S, then subset-sum feasibility.
        std::vector<int> comps;
        std::uint32_t rest = all & ~s;
        while (rest) {
            std::uint32_t comp = rest & (~rest + 1), frontier = comp;
            while (frontier) {
                std::uint32_t grow = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1) grow |= nb[__builtin_ctz(f)];
                grow &= rest & ~comp;
                comp |= grow;
                frontier = grow;
            }
            comps.push_back(__builtin_popcount(comp));
            rest &= ~comp;
        }
        const int total = n - size;
        std::vector<char> reach(total + 1, 0);
        reach[0] = 1;
        for (int c : comps)
            for (int t = total; t >= c; --t)
                if (reach[t - c]) reach[t] = 1;
        for (int t = 0; t <= total; ++t) {
            if (reach[t] && t <= cap && total - t <= cap) {
                best = size;
                break;
            }
        }
        if (s == all) break;
    }
    return best;
}

}  // namespace cvxtw
