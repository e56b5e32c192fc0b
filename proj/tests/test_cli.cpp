#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cvxtw/cli.h"
#include "cvxtw/families.h"
#include "cvxtw/io.h"
#include "support.h"

using namespace cvxtw;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("cvxtw_cli_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write(const TempDir& t, const std::string& name, const std::string& text) {
    std::ofstream(t.file(name)) << text;
    return t.file(name);
}

std::string write_drawing(const TempDir& t, const std::string& name, const ConvexDrawing& d) {
    std::ostringstream s;
    write_cvx(s, d);
    return write(t, name, s.str());
}

nlohmann::json json_of(const Run& r) {
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("check") {
    TempDir t;
    auto k4 = write_drawing(t, "k4.cvx", ConvexDrawing(testing::complete(4)));
    auto r = cli({"check", k4, "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("edge 1 3 1\n") != std::string::npos);
    CHECK(r.out.find("verdict pass") != std::string::npos);
    CHECK(cli({"check", k4, "--k", "0"}).code == 1);

    auto y = write_drawing(t, "y63.cvx", gen_stacked_prism(6, 3));
    auto fail = cli({"check", y, "--k", "3", "--mode", "min-k", "--json"});
    CHECK(fail.code == 1);
    auto j = json_of(fail);
    CHECK(j["verdict"] == "fail");
    CHECK(j["min_k_value"] == 4);
    CHECK(cli({"check", y, "--k", "4", "--mode", "min-k"}).code == 0);

    auto bad = write(t, "bad.cvx", "p cvx 3 1\ne 1 1\n");
    auto err = cli({"check", bad, "--k", "1"});
    CHECK(err.code == 2);
    CHECK(err.err.find("line 2") != std::string::npos);
    CHECK(cli({"check", k4, "--k", "1", "--mode", "sideways"}).code == 2);
    CHECK(cli({"check", t.file("missing.cvx"), "--k", "1"}).code == 2);
}

TEST_CASE("decompose and validate") {
    TempDir t;
    auto f2 = write_drawing(t, "f2.cvx", gen_Fk(2).drawing);
    auto r = cli({"decompose", f2, "--k", "3", "-o", t.file("f2.td"), "--expanded-td", t.file("f2x.td"), "--json"});
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["measured"].get<int>() <= 7);
    CHECK(j["bound"] == 7);
    CHECK(j["verdict"] == "pass");
    CHECK(fs::exists(t.file("f2x.td")));

    auto v = cli({"validate", t.file("f2.td"), f2});
    CHECK(v.code == 0);
    CHECK(v.out.find("verdict pass") != std::string::npos);
    CHECK(cli({"validate", t.file("f2.td"), f2, "--k", "3"}).code == 0);

    auto c5 = write_drawing(t, "c5.cvx", ConvexDrawing(testing::cycle(5)));
    CHECK(json_of(cli({"decompose", c5, "--k", "0", "--json"}))["measured"].get<int>() <= 4);

    auto y = write_drawing(t, "y63.cvx", gen_stacked_prism(6, 3));
    auto fail = cli({"decompose", y, "--k", "3"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("1-4") != std::string::npos);
    auto autok = json_of(cli({"decompose", y, "--auto-k", "--json"}));
    CHECK(autok["k"] == 4);
    CHECK(autok["verdict"] == "pass");
    CHECK(cli({"decompose", y}).code == 2);

    // A wrong decomposition is caught.
    auto k4 = write_drawing(t, "k4.cvx", ConvexDrawing(testing::complete(4)));
    auto broken = write(t, "broken.td", "s td 2 3 4\nb 1 1 2 3\nb 2 2 3 4\n1 2\n");
    auto bad = cli({"validate", broken, k4});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("violation edge 1 4") != std::string::npos);
    auto hand = write(t, "k4.td", "s td 1 4 4\nb 1 1 2 3 4\n");
    CHECK(cli({"validate", hand, k4}).code == 0);
}

TEST_CASE("separate") {
    TempDir t;
    auto f2 = write_drawing(t, "f2.cvx", gen_Fk(2).drawing);
    auto r = cli({"separate", f2, "--k", "3", "-o", t.file("f2.sep")});
    CHECK(r.code == 0);
    std::ifstream in(t.file("f2.sep"));
    Separation s = read_sep(in);
    CHECK(s.order() <= 6);
    CHECK(s.balanced());
    CHECK(verify_separation(s, gen_Fk(2).drawing.graph()).empty());

    auto y = write_drawing(t, "y83.cvx", gen_stacked_prism(8, 3));
    CHECK(json_of(cli({"separate", y, "--k", "4", "--json"}))["measured"].get<int>() <= 8);

    auto c6 = write_drawing(t, "c6.cvx", ConvexDrawing(testing::cycle(6)));
    auto j = json_of(cli({"separate", c6, "--k", "0", "--json"}));
    CHECK(j["measured"].get<int>() <= 4);
    CHECK(j["oracle"] == 2);
}

TEST_CASE("gen") {
    TempDir t;
    CHECK(cli({"gen", "fk", "--k", "2", "-o", t.file("fk2.cvx")}).code == 0);
    CHECK(load_drawing(t.file("fk2.cvx")) == gen_Fk(2).drawing);

    auto gk = cli({"gen", "gk", "--k", "1"});
    CHECK(gk.code == 0);
    CHECK(gk.out.rfind("p tw 8 11\n", 0) == 0);
    CHECK(cli({"gen", "grid", "--m", "2", "--n", "3"}).out.rfind("p tw 6 7\n", 0) == 0);
    CHECK(cli({"gen", "prism", "--m", "6", "--n", "3"}).out.rfind("p cvx 18 30\n", 0) == 0);

    auto a = cli({"gen", "random", "--n", "30", "--k", "3", "--seed", "9"});
    auto b = cli({"gen", "random", "--n", "30", "--k", "3", "--seed", "9"});
    auto c = cli({"gen", "random", "--n", "30", "--k", "3", "--seed", "10"});
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);

    CHECK(cli({"gen", "fk"}).code == 2);
    CHECK(cli({"gen", "blob", "--k", "1"}).code == 2);
}

TEST_CASE("oracle") {
    TempDir t;
    CHECK(cli({"gen", "gk", "--k", "1", "-o", t.file("gk1.gr")}).code == 0);
    auto tw = cli({"oracle", "tw", t.file("gk1.gr")});
    CHECK(tw.code == 0);
    CHECK(tw.out.find("treewidth 2\n") != std::string::npos);
    auto sep = json_of(cli({"oracle", "sep", t.file("gk1.gr"), "--json"}));
    CHECK(sep["oracle"].get<int>() >= 1);
    auto br = json_of(cli({"oracle", "bramble", "--k", "1", "--json"}));
    CHECK(br["measured"] == 3);
    CHECK(br["verdict"] == "pass");
    CHECK(cli({"gen", "gk", "--k", "3", "-o", t.file("gk3.gr")}).code == 0);
    CHECK(cli({"oracle", "tw", t.file("gk3.gr")}).code == 2);
}

TEST_CASE("planarize") {
    TempDir t;
    auto k5 = write_drawing(t, "k5.cvx", ConvexDrawing(testing::complete(5)));
    auto r = cli({"planarize", k5});
    CHECK(r.code == 0);
    CHECK(r.out.find("pl gc 10 20 12\n") != std::string::npos);
    CHECK(r.out.find("pl gs 15 25 12\n") != std::string::npos);
    auto x = cli({"planarize", k5, "--expand"});
    CHECK(x.out.find("pl gc 15 25 12\n") != std::string::npos);
}

TEST_CASE("batch mode is deterministic and writes per-input files") {
    TempDir t;
    std::vector<std::string> inputs;
    for (int s = 0; s < 8; ++s)
        inputs.push_back(write_drawing(t, "r" + std::to_string(s) + ".cvx", random_outer_min_k_planar(20 + s, 3, s)));
    auto args = [&](const std::string& jobs, const std::string& dir) {
        std::vector<std::string> a{"decompose"};
        a.insert(a.end(), inputs.begin(), inputs.end());
        for (const std::string& x : std::vector<std::string>{"--k", "3", "--jobs", jobs, "-o", dir}) a.push_back(x);
        return a;
    };
    auto serial = cli(args("1", t.file("serial")));
    auto parallel = cli(args("4", t.file("parallel")));
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
    for (int s = 0; s < 8; ++s) {
        const std::string name = "r" + std::to_string(s) + ".td";
        std::ifstream a(t.file("serial/" + name)), b(t.file("parallel/" + name));
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK_FALSE(sa.str().empty());
        CHECK(sa.str() == sb.str());
    }

    // One bad input does not stop the others; the worst code wins.
    inputs.push_back(write(t, "bad.cvx", "p cvx 2 1\n"));
    auto mixed = cli(args("3", t.file("mixed")));
    CHECK(mixed.code == 2);
    CHECK(fs::exists(t.file("mixed/r0.td")));
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"check"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
