#include "cvxtw/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "cvxtw/decomp.h"
#include "cvxtw/drawing.h"
#include "cvxtw/error.h"
#include "cvxtw/families.h"
#include "cvxtw/io.h"
#include "cvxtw/planarize.h"
#include "cvxtw/separate.h"

namespace cvxtw {

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["k"] = k;
    j["k_value"] = k_value;
    j["min_k_value"] = min_k_value;
    j["measured"] = measured;
    j["bound"] = bound;
    if (oracle >= 0) j["oracle"] = oracle;
    j["elapsed_ms"] = elapsed_ms;
    j["verdict"] = verdict;
    if (!message.empty()) j["message"] = message;
    j["exit_code"] = exit_code;
    return j.dump();
}

namespace {

namespace fs = std::filesystem;

struct Options {
    std::vector<std::string> inputs;
    int k = -1;
    bool auto_k = false;
    std::string mode = "k";
    std::string output;
    std::string expanded_output;
    bool json = false;
    int jobs = 1;
    bool expand_first = false;
    // gen / oracle
    std::string family;
    int m = -1, n = -1;
    std::uint64_t seed = 1;
};

// Result of one command on one input: the report plus human-readable
// detail lines printed before it in text mode.
struct Outcome {
    RunReport report;
    std::string detail;
};

std::string edge_str(const Edge& e) { return "(" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")"; }

void finish(RunReport& r, bool pass) {
    r.verdict = pass ? "pass" : "fail";
    r.exit_code = pass ? 0 : 1;
}

// Output path for one of several inputs: `-o` names a directory then.
std::string output_path(const Options& opt, const std::string& requested, const std::string& input,
                        const std::string& suffix) {
    if (requested.empty()) return {};
    if (opt.inputs.size() <= 1) return requested;
    fs::create_directories(requested);
    return (fs::path(requested) / (fs::path(input).stem().string() + suffix)).string();
}

int resolve_k(const Options& opt, const CrossingReport& cr) {
    if (opt.auto_k) return cr.min_k_value;
    if (opt.k < 0) throw InvalidInput("--k is required (or pass --auto-k)");
    return opt.k;
}

template <class Writer>
std::string render(Writer&& w) {
    std::ostringstream ss;
    w(ss);
    return ss.str();
}

Outcome run_check(const Options& opt, const std::string& path) {
    Outcome o;
    RunReport& r = o.report;
    if (opt.k < 0) throw InvalidInput("--k is required");
    if (opt.mode != "k" && opt.mode != "min-k") throw InvalidInput("--mode must be 'k' or 'min-k'");
    ConvexDrawing d = load_drawing(path);
    CrossingReport cr = compute_crossings(d);
    r.k = opt.k;
    r.k_value = cr.k_value;
    r.min_k_value = cr.min_k_value;
    r.measured = opt.mode == "k" ? cr.k_value : cr.min_k_value;
    r.bound = opt.k;
    std::ostringstream ss;
    for (int e = 0; e < d.num_edges(); ++e) ss << "edge " << d.edges()[e].u + 1 << ' ' << d.edges()[e].v + 1 << ' ' << cr.per_edge[e] << '\n';
    finish(r, r.measured <= r.bound);
    if (opt.mode == "min-k") {
        auto [a, b] = min_k_witness(cr, opt.k);
        if (a >= 0)
            r.message = "edges " + edge_str(d.edges()[a]) + " and " + edge_str(d.edges()[b]) + " cross and both exceed k";
    } else if (r.measured > r.bound) {
        for (int e = 0; e < d.num_edges(); ++e) {
            if (cr.per_edge[e] > opt.k) {
                r.message = "edge " + edge_str(d.edges()[e]) + " has " + std::to_string(cr.per_edge[e]) + " crossings";
                break;
            }
        }
    }
    o.detail = ss.str();
    return o;
}

Outcome run_decompose(const Options& opt, const std::string& path) {
    Outcome o;
    RunReport& r = o.report;
    ConvexDrawing d = load_drawing(path);
    CrossingReport cr = compute_crossings(d);
    r.k_value = cr.k_value;
    r.min_k_value = cr.min_k_value;
    r.k = resolve_k(opt, cr);
    r.bound = width_bound(r.k);
    PipelineResult p = run_pipeline(d, r.k);
    auto problems = validate_td(p.td, d.graph());
    r.measured = p.td.width();
    if (!problems.empty()) r.message = problems.front();
    finish(r, problems.empty() && r.measured <= r.bound);
    if (auto out = output_path(opt, opt.output, path, ".td"); !out.empty())
        save_atomically(out, render([&](std::ostream& s) { write_td(s, p.td); }));
    if (auto out = output_path(opt, opt.expanded_output, path, ".expanded.td"); !out.empty()) {
        const auto& td = p.degenerate ? p.td : p.expanded_td;
        save_atomically(out, render([&](std::ostream& s) { write_td(s, td); }));
    }
    o.detail = "nodes " + std::to_string(p.td.num_nodes()) + "\n";
    return o;
}

Outcome run_separate(const Options& opt, const std::string& path) {
    Outcome o;
    RunReport& r = o.report;
    ConvexDrawing d = load_drawing(path);
    CrossingReport cr = compute_crossings(d);
    r.k_value = cr.k_value;
    r.min_k_value = cr.min_k_value;
    r.k = resolve_k(opt, cr);
    r.bound = separation_bound(r.k);
    Separation sep = separate(d, r.k);
    auto problems = verify_separation(sep, d.graph());
    if (!sep.balanced()) problems.push_back("separation is not balanced");
    r.measured = sep.order();
    if (d.n() <= 16) r.oracle = brute_force_min_balanced_separation(d.graph());
    if (!problems.empty()) r.message = problems.front();
    finish(r, problems.empty() && r.measured <= r.bound);
    if (auto out = output_path(opt, opt.output, path, ".sep"); !out.empty())
        save_atomically(out, render([&](std::ostream& s) { write_sep(s, sep); }));
    std::ostringstream ss;
    ss << "sides " << sep.a_only().size() << ' ' << sep.b_only().size() << '\n';
    if (r.oracle >= 0) ss << "oracle_min " << r.oracle << " (balanced separations of the given graph)\n";
    o.detail = ss.str();
    return o;
}

Outcome run_validate(const Options& opt) {
    Outcome o;
    RunReport& r = o.report;
    if (opt.inputs.size() != 2) throw InvalidInput("validate expects <td> <graph>");
    std::ifstream in(opt.inputs[0]);
    if (!in) throw InvalidInput("cannot open " + opt.inputs[0]);
    TreeDecomposition td = read_td(in);
    Graph g = load_drawing(opt.inputs[1]).graph();
    auto problems = validate_td(td, g);
    r.k = opt.k;
    r.measured = td.width();
    if (opt.k >= 0) r.bound = width_bound(opt.k);
    std::ostringstream ss;
    for (const auto& p : problems) ss << "violation " << p << '\n';
    ss << "width " << td.width() << '\n';
    if (!problems.empty()) r.message = std::to_string(problems.size()) + " violation(s)";
    finish(r, problems.empty() && (r.bound < 0 || r.measured <= r.bound));
    o.detail = ss.str();
    return o;
}

std::string generate(const Options& opt) {
    auto need = [](int v, const char* flag) {
        if (v < 0) throw InvalidInput(std::string("gen needs ") + flag);
        return v;
    };
    std::ostringstream ss;
    if (opt.family == "grid") {
        write_gr(ss, gen_grid(need(opt.m, "--m"), need(opt.n, "--n")));
    } else if (opt.family == "gk") {
        write_gr(ss, gen_Gk(need(opt.k, "--k")));
    } else if (opt.family == "fk") {
        write_cvx(ss, gen_Fk(need(opt.k, "--k")).drawing);
    } else if (opt.family == "prism") {
        write_cvx(ss, gen_stacked_prism(need(opt.m, "--m"), need(opt.n, "--n")));
    } else if (opt.family == "random") {
        write_cvx(ss, random_outer_min_k_planar(need(opt.n, "--n"), need(opt.k, "--k"), opt.seed));
    } else {
        throw InvalidInput("unknown family '" + opt.family + "'");
    }
    return ss.str();
}

Outcome run_oracle(const Options& opt) {
    Outcome o;
    RunReport& r = o.report;
    std::ostringstream ss;
    if (opt.family == "bramble") {
        if (opt.k < 1) throw InvalidInput("oracle bramble needs --k >= 1");
        Graph g = gen_Gk(opt.k);
        Bramble b = gen_Gk_bramble(opt.k);
        BrambleCheck check = verify_bramble(g, b);
        r.k = opt.k;
        if (!check.ok) {
            r.message = check.violation;
            finish(r, false);
        } else {
            r.measured = bramble_order(g, b);
            r.bound = 3 * opt.k;
            ss << "sets " << b.sets.size() << '\n' << "order " << r.measured << '\n';
            finish(r, r.measured >= r.bound);
        }
    } else {
        if (opt.inputs.size() != 1) throw InvalidInput("oracle " + opt.family + " expects one graph file");
        Graph g = load_drawing(opt.inputs[0]).graph();
        if (opt.family == "tw") {
            r.oracle = r.measured = exact_treewidth(g);
            ss << "treewidth " << r.measured << '\n';
        } else if (opt.family == "sep") {
            r.oracle = r.measured = brute_force_min_balanced_separation(g);
            ss << "min_balanced_separation " << r.measured << '\n';
        } else {
            throw InvalidInput("unknown oracle '" + opt.family + "'");
        }
        finish(r, true);
    }
    o.detail = ss.str();
    return o;
}

std::string run_planarize(const Options& opt, const std::string& path) {
    ConvexDrawing d = hull_complete(load_drawing(path));
    if (opt.expand_first) d = expand(d).expanded;
    Planarization p = planarize(d);
    FaceStructure gc_faces = compute_faces(p.crossing_graph);
    SubdividedGraph gs = subdivide(p.crossing_graph);
    FaceStructure gs_faces = compute_faces(gs.graph);
    std::ostringstream ss;
    ss << "c placement attempts " << p.attempts << '\n';
    write_plane_graph(ss, "gc", p.crossing_graph, gc_faces, d);
    write_plane_graph(ss, "gs", gs.graph, gs_faces, d);
    return ss.str();
}

// Runs `body` and turns library errors into a report with the right code.
Outcome guarded(const std::string& command, const std::vector<std::string>& inputs,
                const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const Error& e) {
        o.report.verdict = e.exit_code() == 1 ? "fail" : "error";
        o.report.exit_code = e.exit_code();
        o.report.message = e.what();
    } catch (const std::exception& e) {
        o.report.verdict = "error";
        o.report.exit_code = 3;
        o.report.message = e.what();
    }
    o.report.command = command;
    o.report.inputs = inputs;
    o.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return o;
}

void print(const Outcome& o, const Options& opt, std::ostream& out, std::ostream& err) {
    const RunReport& r = o.report;
    if (opt.json) {
        out << r.to_json() << '\n';
        return;
    }
    out << o.detail;
    for (const auto& in : r.inputs) out << "input " << in << '\n';
    if (r.k >= 0) out << "k " << r.k << '\n';
    if (r.k_value >= 0) out << "kValue " << r.k_value << '\n';
    if (r.min_k_value >= 0) out << "minKValue " << r.min_k_value << '\n';
    if (r.measured >= 0) out << "measured " << r.measured << '\n';
    if (r.bound >= 0) out << "bound " << r.bound << '\n';
    out << "verdict " << r.verdict << '\n';
    if (!r.message.empty()) (r.exit_code >= 2 ? err : out) << (r.exit_code >= 2 ? "error: " : "note: ") << r.message << '\n';
}

// Processes every input, possibly in parallel, then prints in input order.
int run_batch(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err,
              const std::function<Outcome(const std::string&)>& body) {
    std::vector<Outcome> results(opt.inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < opt.inputs.size();)
            results[i] = guarded(command, {opt.inputs[i]}, [&] { return body(opt.inputs[i]); });
    };
    const int threads = std::clamp<int>(opt.jobs, 1, static_cast<int>(std::max<std::size_t>(opt.inputs.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    int code = 0;
    for (const auto& o : results) {
        print(o, opt, out, err);
        code = std::max(code, o.report.exit_code);
    }
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tree decompositions and separations of outer min-k-planar convex drawings", "cvxtw"};
    app.require_subcommand(1);
    Options opt;

    auto add_batch = [&](CLI::App* sub) {
        sub->add_option("inputs", opt.inputs, "input .cvx or .gr files")->required();
        sub->add_flag("--json", opt.json, "print one JSON record per input");
        sub->add_option("--jobs", opt.jobs, "inputs processed concurrently")->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "crossing counts and outer (min-)k-planarity");
    add_batch(check);
    check->add_option("--k", opt.k, "crossing bound")->required();
    check->add_option("--mode", opt.mode, "k or min-k");

    auto* dec = app.add_subcommand("decompose", "tree decomposition of width <= 3*floor(k/2)+4");
    add_batch(dec);
    dec->add_option("--k", opt.k, "min-k-planarity parameter");
    dec->add_flag("--auto-k", opt.auto_k, "use the drawing's minKValue as k");
    dec->add_option("-o,--output", opt.output, ".td output (a directory for several inputs)");
    dec->add_option("--expanded-td", opt.expanded_output, "decomposition of the expanded graph");

    auto* sep = app.add_subcommand("separate", "balanced separation of order <= 2*floor(k/2)+4");
    add_batch(sep);
    sep->add_option("--k", opt.k, "min-k-planarity parameter");
    sep->add_flag("--auto-k", opt.auto_k, "use the drawing's minKValue as k");
    sep->add_option("-o,--output", opt.output, ".sep output (a directory for several inputs)");

    auto* gen = app.add_subcommand("gen", "generate grid, gk, fk, prism or random instances");
    gen->add_option("family", opt.family, "grid | gk | fk | prism | random")->required();
    gen->add_option("--k", opt.k, "family parameter k");
    gen->add_option("--m", opt.m, "rows");
    gen->add_option("--n", opt.n, "columns or vertex count");
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_option("-o,--output", opt.output, "output file (default stdout)");

    auto* val = app.add_subcommand("validate", "check a .td against a graph");
    val->add_option("files", opt.inputs, "<td> <graph>")->required()->expected(2);
    val->add_option("--k", opt.k, "also require width <= 3*floor(k/2)+4");
    val->add_flag("--json", opt.json, "print a JSON record");

    auto* ora = app.add_subcommand("oracle", "exact treewidth, separation number or bramble order");
    ora->add_option("kind", opt.family, "tw | sep | bramble")->required();
    ora->add_option("graph", opt.inputs, "graph file (tw, sep)");
    ora->add_option("--k", opt.k, "G_k parameter (bramble)");
    ora->add_flag("--json", opt.json, "print a JSON record");

    auto* pl = app.add_subcommand("planarize", "dump the crossing graph and its subdivision");
    pl->add_option("input", opt.inputs, "input drawing")->required()->expected(1);
    pl->add_flag("--expand", opt.expand_first, "expand high-degree vertices first");
    pl->add_option("-o,--output", opt.output, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (check->parsed())
        return run_batch("check", opt, out, err, [&](const std::string& p) { return run_check(opt, p); });
    if (dec->parsed())
        return run_batch("decompose", opt, out, err, [&](const std::string& p) { return run_decompose(opt, p); });
    if (sep->parsed())
        return run_batch("separate", opt, out, err, [&](const std::string& p) { return run_separate(opt, p); });

    if (val->parsed() || ora->parsed()) {
        const bool v = val->parsed();
        Outcome o = guarded(v ? "validate" : "oracle", opt.inputs, [&] { return v ? run_validate(opt) : run_oracle(opt); });
        print(o, opt, out, err);
        return o.report.exit_code;
    }

    // gen and planarize emit artifacts rather than reports.
    try {
        std::string text = gen->parsed() ? generate(opt) : run_planarize(opt, opt.inputs.front());
        if (opt.output.empty())
            out << text;
        else
            save_atomically(opt.output, text);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace cvxtw
