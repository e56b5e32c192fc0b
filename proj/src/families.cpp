#include "cvxtw/families.h"

#include <algorithm>
#include <random>

#include "cvxtw/error.h"

namespace cvxtw {

Graph gen_grid(int m, int n) {
    if (m < 1 || n < 1) throw InvalidInput("grid dimensions must be positive");
    std::vector<Edge> edges;
    auto id = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j < n) edges.emplace_back(id(i, j), id(i, j + 1));
            if (i < m) edges.emplace_back(id(i, j), id(i + 1, j));
        }
    }
    return Graph(m * n, std::move(edges));
}

Graph gen_Gk(int k) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    const FkLayout L(k);
    std::vector<Edge> edges;
    const int rows = 2 * k * (k + 1);
    for (int i = 1; i <= 2 * k; ++i)
        for (int j = 1; j <= 2 * k; ++j) {
            if (j < 2 * k) edges.emplace_back(L.v(i, j), L.v(i, j + 1));
            if (i < 2 * k) edges.emplace_back(L.v(i, j), L.v(i + 1, j));
        }
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= k; ++j) {
            if (j < k) edges.emplace_back(L.u(i, j), L.u(i, j + 1));
            if (i < rows) edges.emplace_back(L.u(i, j), L.u(i + 1, j));
        }
    for (int i = 1; i <= 2 * k; ++i)
        for (int j = 1; j <= k + 1; ++j) edges.emplace_back(L.v(i, 2 * k), L.u((i - 1) * (k + 1) + j, 1));
    return Graph(4 * k * k + rows * k, std::move(edges));
}

FkLayout::FkLayout(int k) : k_(k) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    int next = 4 * k * k + 2 * k * k * (k + 1);
    for (int i = 1; i <= 2 * k; ++i) {
        z_offset_.push_back(next);
        next += ell(i) + 1;
    }
    w_base_ = next;
}

int FkLayout::ell(int i) const { return i <= k_ ? (k_ - i) * (k_ + 1) : (i - k_ - 1) * (k_ + 1); }

long FkLayout::expected_count(int k) {
    long K = k;
    return 4 * K * K + 2 * K * K * (K + 1) + K * (K + 1) * (K - 1) + 2 * K + 2 * K * (K + 1);
}

namespace {

enum class Part { Q, R, Z, W };

struct Coord {
    Part part;
    int i, j;
};

Coord decode(const FkLayout& L, Vertex x) {
    const int k = L.k();
    if (x < 4 * k * k) return {Part::Q, x / (2 * k) + 1, x % (2 * k) + 1};
    if (x < L.z(1, 0)) {
        int y = x - 4 * k * k;
        return {Part::R, y / k + 1, y % k + 1};
    }
    if (x < L.w(1, 1)) {
        int i = 2 * k;
        while (L.z(i, 0) > x) --i;
        return {Part::Z, i, x - L.z(i, 0)};
    }
    int y = x - L.w(1, 1);
    return {Part::W, y / (k + 1) + 1, y % (k + 1) + 1};
}

}  // namespace

int FkLayout::edge_type(const Edge& e) const {
    Coord a = decode(*this, e.u), b = decode(*this, e.v);
    if (a.part > b.part) std::swap(a, b);
    switch (a.part) {
        case Part::Q:
            if (b.part == Part::Z) return 4;
            if (a.j == b.j) return std::min(a.i, b.i) == k_ ? 2 : 1;
            return 3;
        case Part::R:
            if (b.part == Part::W) return 9;
            return a.i == b.i ? 10 : 11;
        case Part::Z:
            if (b.part == Part::W) return 5;
            return std::min(a.j, b.j) == 0 ? 6 : 7;
        case Part::W:
            return 8;
    }
    return 0;
}

int FkLayout::type_cap(int type) const {
    const int k = k_;
    switch (type) {
        case 1:
        case 10:
            return 0;
        case 2:
        case 4:
        case 5:
        case 8:
        case 9:
            return 2 * (k - 1);
        case 3:
        case 11:
            return 2 * (k - 1) + 1;
        case 6:
        case 7:
            return 2 * (k - 2) + 3;
    }
    throw InvalidInput("unknown F_k edge type " + std::to_string(type));
}

std::vector<int> FkLayout::minor_classes() const {
    std::vector<int> cls(num_vertices());
    for (int x = 0; x < num_vertices(); ++x) {
        Coord c = decode(*this, x);
        if (c.part == Part::Q || c.part == Part::R)
            cls[x] = x;
        else
            cls[x] = v(c.i, 2 * k_);
    }
    return cls;
}

FkDrawing gen_Fk(int k) {
    FkLayout L(k);
    std::vector<Edge> edges;
    const int rows = 2 * k * (k + 1);
    for (const Edge& e : gen_Gk(k).edges) {
        // Drop v_{i,2k} -- R_k edges; F_k reroutes them through Z_i and W_i.
        bool q_to_r = e.u < 4 * k * k && e.v >= 4 * k * k;
        if (!q_to_r) edges.push_back(e);
    }
    for (int i = 1; i <= 2 * k; ++i) {
        edges.emplace_back(L.v(i, 2 * k), L.z(i, 0));
        for (int j = 0; j < L.ell(i); ++j) edges.emplace_back(L.z(i, j), L.z(i, j + 1));
        for (int j = 1; j <= k; ++j) edges.emplace_back(L.w(i, j), L.w(i, j + 1));
        edges.emplace_back(L.z(i, L.ell(i)), i <= k ? L.w(i, k + 1) : L.w(i, 1));
        for (int j = 1; j <= k + 1; ++j) edges.emplace_back(L.w(i, j), L.u((i - 1) * (k + 1) + j, 1));
    }

    // Upper half: Q columns bottom-up, the z_{.,0} block, then groups k..1.
    std::vector<Vertex> upper;
    for (int j = 1; j <= 2 * k; ++j)
        for (int i = k; i >= 1; --i) upper.push_back(L.v(i, j));
    for (int i = k; i >= 1; --i) upper.push_back(L.z(i, 0));
    for (int g = k; g >= 1; --g) {
        for (int r = 0; r <= k; ++r) {
            upper.push_back(L.w(g, k + 1 - r));
            for (int a = g - 1; a >= 1; --a) upper.push_back(L.z(a, (k - g) * (k + 1) + 1 + r));
        }
    }

    // Mirror image of a vertex of the upper half.
    auto mirror = [&](Vertex x) -> Vertex {
        Coord c = decode(L, x);
        switch (c.part) {
            case Part::Q:
                return L.v(2 * k - c.i + 1, c.j);
            case Part::Z:
                return L.z(2 * k - c.i + 1, c.j);
            case Part::W:
                return L.w(2 * k - c.i + 1, k - c.j + 2);
            case Part::R:
                break;
        }
        throw InternalBoundViolation("R_k has no mirror image");
    };

    std::vector<Vertex> order = upper;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= k; ++j) order.push_back(L.u(i, j));
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) order.push_back(mirror(*it));

    return {L, ConvexDrawing(Graph(L.num_vertices(), std::move(edges)), std::move(order))};
}

ConvexDrawing gen_stacked_prism(int m, int n) {
    if (m < 3 || n < 1) throw InvalidInput("stacked prism needs m >= 3 and n >= 1");
    Graph g = gen_grid(m, n);
    for (int j = 0; j < n; ++j) g.edges.emplace_back(j, (m - 1) * n + j);
    g.normalize();
    return ConvexDrawing(std::move(g));
}

bool is_prism_column_edge(int n, const Edge& e) {
    return e.u % n == e.v % n;
}

Bramble gen_Gk_bramble(int k) {
    const FkLayout L(k);
    const int rows = 2 * k * (k + 1);
    Bramble b;
    for (int r = 1; r <= rows; ++r) {
        const int q_row = (r + k) / (k + 1);  // ceil(r / (k+1))
        for (int c = 1; c <= 2 * k; ++c) {
            std::vector<Vertex> s;
            for (int j = 1; j <= k; ++j) s.push_back(L.u(r, j));
            for (int j = 1; j <= 2 * k; ++j) s.push_back(L.v(q_row, j));
            for (int i = 1; i <= 2 * k; ++i) s.push_back(L.v(i, c));
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            b.sets.push_back(std::move(s));
        }
    }
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= k; ++c) {
            std::vector<Vertex> s;
            for (int j = 1; j <= k; ++j) s.push_back(L.u(r, j));
            for (int i = 1; i <= rows; ++i) s.push_back(L.u(i, c));
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            b.sets.push_back(std::move(s));
        }
    }
    return b;
}

BrambleCheck verify_bramble(const Graph& g, const Bramble& b) {
    const auto adj = g.adjacency();
    auto fmt = [](std::size_t i) { return "set " + std::to_string(i + 1); };
    for (std::size_t i = 0; i < b.sets.size(); ++i) {
        if (b.sets[i].empty()) return {false, fmt(i) + " is empty"};
        for (Vertex v : b.sets[i])
            if (v < 0 || v >= g.n) return {false, fmt(i) + " contains unknown vertex " + std::to_string(v + 1)};
        if (!induces_connected(adj, b.sets[i])) return {false, fmt(i) + " is not connected"};
    }
    std::vector<char> in(g.n, 0), near(g.n, 0);
    for (std::size_t i = 0; i < b.sets.size(); ++i) {
        std::fill(in.begin(), in.end(), 0);
        std::fill(near.begin(), near.end(), 0);
        for (Vertex v : b.sets[i]) {
            in[v] = 1;
            near[v] = 1;
            for (Vertex w : adj[v]) near[w] = 1;
        }
        for (std::size_t j = i + 1; j < b.sets.size(); ++j) {
            bool touch = std::any_of(b.sets[j].begin(), b.sets[j].end(), [&](Vertex v) { return near[v] != 0; });
            if (!touch) return {false, fmt(i) + " and " + fmt(j) + " do not touch"};
        }
    }
    return {};
}

namespace {

struct HittingSetSearch {
    int universe;
    long max_nodes;
    long nodes = 0;
    int best;

    int packing_bound(const std::vector<std::uint64_t>& sets) const {
        std::vector<std::uint64_t> sorted(sets);
        std::sort(sorted.begin(), sorted.end(),
                  [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
        std::uint64_t used = 0;
        int count = 0;
        for (std::uint64_t s : sorted) {
            if ((s & used) == 0) {
                used |= s;
                ++count;
            }
        }
        return count;
    }

    void run(const std::vector<std::uint64_t>& unhit, int chosen) {
        if (++nodes > max_nodes) throw BudgetExceeded("hitting set search exceeded its node budget");
        if (unhit.empty()) {
            best = std::min(best, chosen);
            return;
        }
        if (chosen + packing_bound(unhit) >= best) return;
        auto pick = std::min_element(unhit.begin(), unhit.end(), [](std::uint64_t a, std::uint64_t b) {
            return __builtin_popcountll(a) < __builtin_popcountll(b);
        });
        for (std::uint64_t bits = *pick; bits; bits &= bits - 1) {
            const std::uint64_t x = bits & (~bits + 1);
            std::vector<std::uint64_t> rest;
            rest.reserve(unhit.size());
            for (std::uint64_t s : unhit)
                if (!(s & x)) rest.push_back(s);
            run(rest, chosen + 1);
        }
    }
};

}  // namespace

int bramble_order(const Graph& g, const Bramble& b, int max_universe, int max_sets, long max_nodes) {
    if (g.n > std::min(max_universe, 64)) throw BudgetExceeded("bramble universe exceeds " + std::to_string(max_universe));
    if (static_cast<int>(b.sets.size()) > max_sets)
        throw BudgetExceeded("bramble has more than " + std::to_string(max_sets) + " sets");
    std::vector<std::uint64_t> sets;
    for (const auto& s : b.sets) {
        std::uint64_t mask = 0;
        for (Vertex v : s) mask |= std::uint64_t{1} << v;
        if (mask == 0) throw InvalidInput("bramble contains an empty set");
        sets.push_back(mask);
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    // Greedy upper bound.
    int greedy = 0;
    for (std::vector<std::uint64_t> rest = sets; !rest.empty(); ++greedy) {
        int best_v = 0, best_hits = -1;
        for (int v = 0; v < g.n; ++v) {
            int hits = 0;
            for (std::uint64_t s : rest) hits += (s >> v) & 1;
            if (hits > best_hits) best_hits = hits, best_v = v;
        }
        std::erase_if(rest, [&](std::uint64_t s) { return (s >> best_v) & 1; });
    }
    HittingSetSearch search{g.n, max_nodes, 0, greedy};
    search.run(sets, 0);
    return search.best;
}

int exact_treewidth(const Graph& g, int max_vertices) {
    const int n = g.n;
    if (n > max_vertices || n > 30)
        throw TooLarge("exact treewidth is limited to " + std::to_string(max_vertices) + " vertices");
    if (n == 0) return -1;
    std::vector<std::uint32_t> nb(n, 0);
    for (const Edge& e : g.edges) {
        nb[e.u] |= 1u << e.v;
        nb[e.v] |= 1u << e.u;
    }
    // tw[S] = min over v in S of max(tw[S - v], |N(C_v) - S|) where C_v is
    // the component of v in G[S]: the best width for eliminating S first.
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint8_t> tw(std::size_t{1} << n, 0);
    std::uint32_t comp_of[32];
    std::uint8_t q_of[32];
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t rest = s;
        int ncomp = 0;
        while (rest) {
            std::uint32_t comp = rest & (~rest + 1), frontier = comp;
            while (frontier) {
                std::uint32_t grow = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1) grow |= nb[__builtin_ctz(f)];
                grow &= s & ~comp;
                comp |= grow;
                frontier = grow;
            }
            std::uint32_t border = 0;
            for (std::uint32_t f = comp; f; f &= f - 1) border |= nb[__builtin_ctz(f)];
            comp_of[ncomp] = comp;
            q_of[ncomp] = static_cast<std::uint8_t>(__builtin_popcount(border & ~s));
            ++ncomp;
            rest &= ~comp;
        }
        std::uint8_t best = 255;
        for (int c = 0; c < ncomp; ++c) {
            for (std::uint32_t f = comp_of[c]; f; f &= f - 1) {
                std::uint32_t v = f & (~f + 1);
                best = std::min(best, std::max(tw[s ^ v], q_of[c]));
            }
        }
        tw[s] = best;
        if (s == full) break;
    }
    return tw[full];
}

ConvexDrawing random_outer_min_k_planar(int n, int k, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("random drawings need n >= 3");
    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };

    std::vector<Vertex> order(n);
    for (int p = 0; p < n; ++p) order[p] = p;
    for (int p = n - 1; p > 0; --p) std::swap(order[p], order[below(p + 1)]);

    // Work in positions; chords are (lo, hi) with lo < hi.
    std::vector<std::pair<int, int>> chords;
    std::vector<int> count;
    std::vector<std::vector<int>> crossing;
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    auto add = [&](int a, int b) {
        chords.emplace_back(std::min(a, b), std::max(a, b));
        count.push_back(0);
        crossing.emplace_back();
        present[a][b] = present[b][a] = 1;
    };
    for (int p = 0; p < n; ++p) add(p, (p + 1) % n);

    const int attempts = 4 * n;
    for (int t = 0; t < attempts; ++t) {
        int a = below(n), b = below(n);
        if (a == b || present[a][b]) continue;
        if (a > b) std::swap(a, b);
        std::vector<int> hit;
        for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
            auto [lo, hi] = chords[i];
            if ((a < lo && lo < b && b < hi) || (lo < a && a < hi && hi < b)) hit.push_back(i);
        }
        const int self = static_cast<int>(hit.size());
        bool ok = true;
        for (int i : hit) {
            // The new chord raises count[i] by one and crosses it.
            if (std::min(count[i] + 1, self) > k) ok = false;
        }
        if (ok) {
            std::vector<char> is_hit(chords.size(), 0);
            for (int i : hit) is_hit[i] = 1;
            for (int i : hit) {
                for (int j : crossing[i]) {
                    int cj = count[j] + (is_hit[j] ? 1 : 0);
                    if (std::min(count[i] + 1, cj) > k) ok = false;
                }
            }
        }
        if (!ok) continue;
        add(a, b);
        const int id = static_cast<int>(chords.size()) - 1;
        count[id] = self;
        for (int i : hit) {
            ++count[i];
            crossing[i].push_back(id);
            crossing[id].push_back(i);
        }
    }

    std::vector<Edge> edges;
    for (auto [lo, hi] : chords) edges.emplace_back(order[lo], order[hi]);
    return ConvexDrawing(Graph(n, std::move(edges)), std::move(order));
}

}  // namespace cvxtw
