#pragma once

#include <iosfwd>
#include <string>

#include "cvxtw/decomp.h"
#include "cvxtw/drawing.h"
#include "cvxtw/graph.h"
#include "cvxtw/separate.h"

namespace cvxtw {

// .cvx: "p cvx <n> <m>", optional "o p1 .. pn" (vertex at each position),
// m lines "e u v"; ids 1-based, "c" lines are comments.
ConvexDrawing read_cvx(std::istream& in);
void write_cvx(std::ostream& out, const ConvexDrawing& d);

// .gr: "p tw <n> <m>" then edge lines "e u v" (bare "u v" also accepted).
Graph read_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);

// Either format, chosen by the header line.
ConvexDrawing read_drawing_or_graph(std::istream& in, bool* has_order = nullptr);

// .td: "s td <bags> <max-bag-size> <n>", "b <id> <v..>", tree edges "<i> <j>".
TreeDecomposition read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td);

// .sep: "s sep <order> <n>", "S <v..>", "A <v..>", "B <v..>" with A and B
// the strict sides.
Separation read_sep(std::istream& in);
void write_sep(std::ostream& out, const Separation& sep);

// File helpers; writes go through a temporary file and a rename.
ConvexDrawing load_drawing(const std::string& path, bool* has_order = nullptr);
void save_atomically(const std::string& path, const std::string& contents);

}  // namespace cvxtw
