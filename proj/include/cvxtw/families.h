#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvxtw/drawing.h"
#include "cvxtw/graph.h"

namespace cvxtw {

// m x n grid; vertex (i, j) (1-based) has id (i-1)*n + (j-1).
Graph gen_grid(int m, int n);

// G_k: a 2k x 2k grid Q_k, a 2k(k+1) x k grid R_k, and the edges
// v_{i,2k} u_{(i-1)(k+1)+j,1}. Ids: Q block then R block, row-major.
Graph gen_Gk(int k);

// Vertex inventory of F_k. Ids: Q block, R block (both as in gen_Gk),
// then Z_1..Z_2k, then W_1..W_2k. All indices 1-based except z's second
// index which starts at 0.
class FkLayout {
public:
    explicit FkLayout(int k);

    int k() const { return k_; }
    int ell(int i) const;
    Vertex v(int i, int j) const { return (i - 1) * 2 * k_ + (j - 1); }
    Vertex u(int i, int j) const { return 4 * k_ * k_ + (i - 1) * k_ + (j - 1); }
    Vertex z(int i, int j) const { return z_offset_[i - 1] + j; }
    Vertex w(int i, int j) const { return w_base_ + (i - 1) * (k_ + 1) + (j - 1); }
    int num_vertices() const { return w_base_ + 2 * k_ * (k_ + 1); }

    // 4k^2 + 2k^2(k+1) + k(k+1)(k-1) + 2k + 2k(k+1)
    static long expected_count(int k);

    // Edge type 1..11 following the crossing inventory of the drawing.
    int edge_type(const Edge& e) const;
    // Upper bound on the crossings of an edge of the given type.
    int type_cap(int type) const;

    // Contraction classes mapping F_k onto G_k: Z_i, W_i merge into v_{i,2k}.
    std::vector<int> minor_classes() const;

private:
    int k_;
    std::vector<int> z_offset_;
    int w_base_;
};

struct FkDrawing {
    FkLayout layout;
    ConvexDrawing drawing;
};

// F_k with its outer (2k-1)-planar cyclic order, starting at v_{k,1}.
FkDrawing gen_Fk(int k);

// Stacked prism Y_{m,n}: the m x n grid plus first-row/last-row edges in
// every column, rows placed consecutively. Requires m >= 3, n >= 1.
ConvexDrawing gen_stacked_prism(int m, int n);
bool is_prism_column_edge(int n, const Edge& e);

struct Bramble {
    std::vector<std::vector<Vertex>> sets;  // each sorted
};

// B_1 (extended row of G_k + column of Q_k) followed by B_2 (row of R_k +
// column of R_k).
Bramble gen_Gk_bramble(int k);

struct BrambleCheck {
    bool ok = true;
    std::string violation;
};
BrambleCheck verify_bramble(const Graph& g, const Bramble& b);

// Minimum hitting set size by branch and bound. Throws BudgetExceeded
// beyond the universe / set / node caps.
int bramble_order(const Graph& g, const Bramble& b, int max_universe = 64, int max_sets = 512,
                  long max_nodes = 50'000'000);

// Exact treewidth by dynamic programming over vertex subsets.
int exact_treewidth(const Graph& g, int max_vertices = 22);

// Hull cycle on a seeded random cyclic order plus random chords kept only
// while the drawing stays outer min-k-planar.
ConvexDrawing random_outer_min_k_planar(int n, int k, std::uint64_t seed);

}  // namespace cvxtw
