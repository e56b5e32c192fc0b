#include "cvxtw/io.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cvxtw/error.h"

namespace cvxtw {

namespace {

// Reads non-comment, non-empty lines with their 1-based line numbers.
struct LineReader {
    explicit LineReader(std::istream& is) : in(is) {}

    std::istream& in;
    int number = 0;
    std::string text;

    bool next() {
        while (std::getline(in, text)) {
            ++number;
            auto first = text.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (text[first] == 'c' && (first + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[first + 1]))))
                continue;
            return true;
        }
        return false;
    }
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

long to_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line);
    }
}

Vertex to_vertex(const std::string& s, int n, int line) {
    long v = to_int(s, line);
    if (v < 1 || v > n) throw ParseError("vertex id " + s + " out of range 1.." + std::to_string(n), line);
    return static_cast<Vertex>(v - 1);
}

void add_edge(std::vector<Edge>& edges, std::set<Edge>& seen, Vertex a, Vertex b, int line) {
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a + 1), line);
    Edge e(a, b);
    if (!seen.insert(e).second)
        throw ParseError("duplicate edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1), line);
    edges.push_back(e);
}

void write_list(std::ostream& out, const char* tag, const std::vector<Vertex>& vs) {
    out << tag;
    for (Vertex v : vs) out << ' ' << v + 1;
    out << '\n';
}

ConvexDrawing parse_cvx_body(LineReader& r, const std::vector<std::string>& head) {
    if (head.size() != 4) throw ParseError("header must be 'p cvx <n> <m>'", r.number);
    const long n = to_int(head[2], r.number), m = to_int(head[3], r.number);
    if (n < 0 || m < 0) throw ParseError("negative counts in header", r.number);
    std::vector<Vertex> order;
    bool have_order = false;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (r.next()) {
        auto t = tokens(r.text);
        if (t[0] == "o") {
            if (have_order) throw ParseError("second order line", r.number);
            if (!edges.empty()) throw ParseError("order line must precede edges", r.number);
            if (static_cast<long>(t.size()) != n + 1)
                throw ParseError("order line needs " + std::to_string(n) + " entries", r.number);
            std::vector<char> used(n, 0);
            for (std::size_t i = 1; i < t.size(); ++i) {
                Vertex v = to_vertex(t[i], static_cast<int>(n), r.number);
                if (used[v]) throw ParseError("order repeats vertex " + t[i], r.number);
                used[v] = 1;
                order.push_back(v);
            }
            have_order = true;
        } else if (t[0] == "e") {
            if (t.size() != 3) throw ParseError("edge line must be 'e u v'", r.number);
            add_edge(edges, seen, to_vertex(t[1], static_cast<int>(n), r.number),
                     to_vertex(t[2], static_cast<int>(n), r.number), r.number);
        } else {
            throw ParseError("unexpected line '" + r.text + "'", r.number);
        }
    }
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), 0);
    Graph g(static_cast<int>(n), std::move(edges));
    if (!have_order) return ConvexDrawing(std::move(g));
    return ConvexDrawing(std::move(g), std::move(order));
}

Graph parse_gr_body(LineReader& r, const std::vector<std::string>& head) {
    if (head.size() != 4) throw ParseError("header must be 'p tw <n> <m>'", r.number);
    const long n = to_int(head[2], r.number), m = to_int(head[3], r.number);
    if (n < 0 || m < 0) throw ParseError("negative counts in header", r.number);
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (r.next()) {
        auto t = tokens(r.text);
        std::size_t off = t[0] == "e" ? 1 : 0;
        if (t.size() != off + 2) throw ParseError("edge line must be 'e u v' or 'u v'", r.number);
        add_edge(edges, seen, to_vertex(t[off], static_cast<int>(n), r.number),
                 to_vertex(t[off + 1], static_cast<int>(n), r.number), r.number);
    }
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), 0);
    return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<std::string> header(LineReader& r, const char* what) {
    if (!r.next()) throw ParseError(std::string("empty input, expected ") + what, 0);
    return tokens(r.text);
}

}  // namespace

ConvexDrawing read_cvx(std::istream& in) {
    LineReader r(in);
    auto head = header(r, "'p cvx' header");
    if (head[0] != "p" || head.size() < 2 || head[1] != "cvx") throw ParseError("expected 'p cvx' header", r.number);
    return parse_cvx_body(r, head);
}

void write_cvx(std::ostream& out, const ConvexDrawing& d) {
    out << "p cvx " << d.n() << ' ' << d.num_edges() << '\n';
    bool identity = true;
    for (int p = 0; p < d.n(); ++p) identity = identity && d.order()[p] == p;
    if (!identity) write_list(out, "o", d.order());
    for (const Edge& e : d.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph read_gr(std::istream& in) {
    LineReader r(in);
    auto head = header(r, "'p tw' header");
    if (head[0] != "p" || head.size() < 2 || head[1] != "tw") throw ParseError("expected 'p tw' header", r.number);
    return parse_gr_body(r, head);
}

void write_gr(std::ostream& out, const Graph& g) {
    out << "p tw " << g.n << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

ConvexDrawing read_drawing_or_graph(std::istream& in, bool* has_order) {
    LineReader r(in);
    auto head = header(r, "a 'p cvx' or 'p tw' header");
    if (head[0] == "p" && head.size() >= 2 && head[1] == "cvx") {
        if (has_order) *has_order = true;
        return parse_cvx_body(r, head);
    }
    if (head[0] == "p" && head.size() >= 2 && head[1] == "tw") {
        if (has_order) *has_order = false;
        return ConvexDrawing(parse_gr_body(r, head));
    }
    throw ParseError("expected 'p cvx' or 'p tw' header", r.number);
}

TreeDecomposition read_td(std::istream& in) {
    LineReader r(in);
    auto head = header(r, "'s td' header");
    if (head.size() != 5 || head[0] != "s" || head[1] != "td")
        throw ParseError("header must be 's td <bags> <max-bag-size> <n>'", r.number);
    const long nb = to_int(head[2], r.number), declared = to_int(head[3], r.number), n = to_int(head[4], r.number);
    if (nb < 0 || declared < 0 || n < 0) throw ParseError("negative counts in header", r.number);
    TreeDecomposition td;
    td.num_vertices = static_cast<int>(n);
    td.bags.resize(nb);
    std::vector<char> seen(nb, 0);
    while (r.next()) {
        auto t = tokens(r.text);
        if (t[0] == "b") {
            if (t.size() < 2) throw ParseError("bag line must be 'b <id> <vertices>'", r.number);
            long id = to_int(t[1], r.number);
            if (id < 1 || id > nb) throw ParseError("bag id " + t[1] + " out of range", r.number);
            if (seen[id - 1]) throw ParseError("bag " + t[1] + " defined twice", r.number);
            seen[id - 1] = 1;
            auto& bag = td.bags[id - 1];
            for (std::size_t i = 2; i < t.size(); ++i) bag.push_back(to_vertex(t[i], static_cast<int>(n), r.number));
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        } else {
            if (t.size() != 2) throw ParseError("tree edge line must be '<i> <j>'", r.number);
            long a = to_int(t[0], r.number), b = to_int(t[1], r.number);
            if (a < 1 || a > nb || b < 1 || b > nb) throw ParseError("tree edge endpoint out of range", r.number);
            td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
    }
    for (long i = 0; i < nb; ++i)
        if (!seen[i]) throw ParseError("bag " + std::to_string(i + 1) + " is missing", 0);
    if (td.max_bag_size() != declared)
        throw ParseError("header declares max bag size " + std::to_string(declared) + ", actual " +
                             std::to_string(td.max_bag_size()),
                         0);
    return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
    out << "s td " << td.num_nodes() << ' ' << td.max_bag_size() << ' ' << td.num_vertices << '\n';
    for (int x = 0; x < td.num_nodes(); ++x) {
        out << "b " << x + 1;
        for (Vertex v : td.bags[x]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

Separation read_sep(std::istream& in) {
    LineReader r(in);
    auto head = header(r, "'s sep' header");
    if (head.size() != 4 || head[0] != "s" || head[1] != "sep")
        throw ParseError("header must be 's sep <order> <n>'", r.number);
    const long order = to_int(head[2], r.number), n = to_int(head[3], r.number);
    if (n < 0) throw ParseError("negative vertex count", r.number);
    std::vector<Vertex> s, a, b;
    std::set<std::string> tags;
    while (r.next()) {
        auto t = tokens(r.text);
        std::vector<Vertex>* target = t[0] == "S" ? &s : t[0] == "A" ? &a : t[0] == "B" ? &b : nullptr;
        if (!target) throw ParseError("unexpected line '" + r.text + "'", r.number);
        if (!tags.insert(t[0]).second) throw ParseError("repeated '" + t[0] + "' line", r.number);
        for (std::size_t i = 1; i < t.size(); ++i) target->push_back(to_vertex(t[i], static_cast<int>(n), r.number));
    }
    if (static_cast<long>(s.size()) != order) throw ParseError("separator size does not match the declared order", 0);
    Separation sep;
    sep.n = static_cast<int>(n);
    sep.a = s;
    sep.a.insert(sep.a.end(), a.begin(), a.end());
    sep.b = s;
    sep.b.insert(sep.b.end(), b.begin(), b.end());
    for (auto* side : {&sep.a, &sep.b}) {
        std::sort(side->begin(), side->end());
        if (std::adjacent_find(side->begin(), side->end()) != side->end())
            throw ParseError("a vertex is listed twice on one side", 0);
    }
    return sep;
}

void write_sep(std::ostream& out, const Separation& sep) {
    out << "s sep " << sep.order() << ' ' << sep.n << '\n';
    write_list(out, "S", sep.separator());
    write_list(out, "A", sep.a_only());
    write_list(out, "B", sep.b_only());
}

ConvexDrawing load_drawing(const std::string& path, bool* has_order) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_drawing_or_graph(in, has_order);
}

void save_atomically(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InvalidInput("cannot write " + tmp);
        out << contents;
        if (!out.flush()) throw InvalidInput("failed writing " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace cvxtw
