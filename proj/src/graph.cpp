#include "cvxtw/graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "cvxtw/error.h"

namespace cvxtw {

Graph::Graph(int n, std::vector<Edge> edges) : n(n), edges(std::move(edges)) {
    normalize();
}

void Graph::normalize() {
    if (n < 0) throw InvalidInput("negative vertex count");
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw InvalidInput("self-loop at vertex " + std::to_string(e.u + 1));
        if (e.u < 0 || e.v >= n)
            throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u + 1) +
                               " " + std::to_string(e.v + 1));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InvalidInput("duplicate edge " + std::to_string(dup->u + 1) + " " +
                           std::to_string(dup->v + 1));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    return a != b && std::binary_search(edges.begin(), edges.end(), Edge(a, b));
}

int Graph::max_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int find_edge(const Graph& g, Edge e) {
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), e);
    if (it == g.edges.end() || *it != e) return -1;
    return static_cast<int>(it - g.edges.begin());
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<Vertex> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return induces_connected(g.adjacency(), all);
}

bool induces_connected(const std::vector<std::vector<Vertex>>& adj,
                       const std::vector<Vertex>& vertices) {
    if (vertices.empty()) return false;
    std::vector<char> in(adj.size(), 0), seen(adj.size(), 0);
    for (Vertex v : vertices) in[v] = 1;
    std::queue<Vertex> q;
    q.push(vertices.front());
    seen[vertices.front()] = 1;
    std::size_t reached = 0;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        ++reached;
        for (Vertex w : adj[v]) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    std::size_t distinct = 0;
    for (char c : in) distinct += c;
    return reached == distinct;
}

Graph contract(const Graph& g, const std::vector<int>& cls, int num_classes) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges) {
        int a = cls[e.u], b = cls[e.v];
        if (a != b) out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Graph(num_classes, std::move(out));
}

namespace {

// Stable colour refinement. Colours are ranks 0..c-1 and the ranking only
// depends on colours, never on vertex ids.
std::vector<int> refine(const std::vector<std::vector<Vertex>>& adj, std::vector<int> colors) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> distinct(colors);
    std::sort(distinct.begin(), distinct.end());
    int count = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v].first;
            s.reserve(adj[v].size() + 1);
            s.push_back(colors[v]);
            std::vector<int> nb;
            for (Vertex w : adj[v]) nb.push_back(colors[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v].second = v;
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(n);
        int rank = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sig[i].first != sig[i - 1].first) ++rank;
            next[sig[i].second] = rank;
        }
        int next_count = rank + 1;
        colors = std::move(next);
        if (next_count == count) return colors;
        count = next_count;
    }
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::vector<Vertex>> adj;
    long budget;
    long nodes = 0;
    std::vector<std::uint64_t> best;

    void leaf(const std::vector<int>& colors) {
        std::vector<std::uint64_t> cert;
        cert.reserve(g.edges.size() + 2);
        for (const Edge& e : g.edges) {
            std::uint64_t a = colors[e.u], b = colors[e.v];
            if (a > b) std::swap(a, b);
            cert.push_back(a * static_cast<std::uint64_t>(g.n) + b);
        }
        std::sort(cert.begin(), cert.end());
        cert.insert(cert.begin(), {static_cast<std::uint64_t>(g.n), g.edges.size()});
        if (best.empty() || cert < best) best = std::move(cert);
    }

    void run(const std::vector<int>& colors) {
        if (++nodes > budget) throw BudgetExceeded("canonical form search budget exceeded");
        const int n = g.n;
        std::vector<int> size(n, 0);
        for (int c : colors) ++size[c];
        int target = -1;
        for (int c = 0; c < n; ++c) {
            if (size[c] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            leaf(colors);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> split(n);
            for (int u = 0; u < n; ++u)
                split[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
            run(refine(adj, split));
        }
    }
};

}  // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g, long node_budget) {
    CanonSearch search{g, g.adjacency(), node_budget, 0, {}};
    if (g.n == 0) return {0, 0};
    search.run(refine(search.adj, std::vector<int>(g.n, 0)));
    return search.best;
}

}  // namespace cvxtw
