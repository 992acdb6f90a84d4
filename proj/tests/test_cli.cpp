#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "ptdfa/automaton.hpp"
#include "ptdfa/minimizer.hpp"
#include "ptdfa/workload.hpp"

namespace fs = std::filesystem;
using namespace ptdfa;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "ptdfa");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("ptdfa_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("minimize header-only automaton") {
    const Outcome r = run({"minimize"}, "dfa 1 1 0 0 0\n");
    CHECK(r.code == cli::ok);
    CHECK(r.out == "dfa 1 1 0 0 0\n");
}

TEST_CASE("minimize reports malformed input with the line") {
    const Outcome r = run({"minimize", "--in", "-"}, "# comment\ndfa 1 one 0 0 0\n");
    CHECK(r.code == cli::data_error);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"minimize", "--in", "/nonexistent/x.dfa"}).code == cli::data_error);
    CHECK(run({"minimize"}, "dfa 2 1 2 0 0\n0 0 1\n0 0 0\n").code == cli::data_error);
}

TEST_CASE("minimize usage errors") {
    CHECK(run({"minimize", "--algo", "moore"}).code == cli::usage_error);
    CHECK(run({"minimize", "--bogus"}).code == cli::usage_error);
    CHECK(run({}).code == cli::usage_error);
    CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("all algorithms print identical output") {
    const std::string input = serialize(generate({300, 4, 0.4, 150, 12}));
    const Outcome v = run({"minimize", "--algo", "valmari"}, input);
    const Outcome h = run({"minimize", "--algo", "hopcroft"}, input);
    const Outcome o = run({"minimize", "--algo", "oracle"}, input);
    CHECK(v.code == cli::ok);
    CHECK(v.out == h.out);
    CHECK(v.out == o.out);
    CHECK(v.out == serialize(minimize(parse(input)).dfa));
}

TEST_CASE("stats go to the error stream") {
    const Outcome r = run({"minimize", "--stats"}, "dfa 2 1 2 1 0\n0 0 1\n1 0 0\n1\n");
    CHECK(r.code == cli::ok);
    CHECK(r.err.find("states_in=2\n") != std::string::npos);
    CHECK(r.err.find("scan_touches=") != std::string::npos);
    CHECK(r.err.find("smaller_half_touches=") != std::string::npos);
}

TEST_CASE("generate") {
    const Outcome a = run({"generate", "--states", "1000", "--alphabet", "100", "--density", "0.1", "--seed", "4"});
    const Outcome b = run({"generate", "--states", "1000", "--alphabet", "100", "--density", "0.1", "--seed", "4"});
    CHECK(a.code == cli::ok);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("dfa 1000 100 10000 500 0\n", 0) == 0);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1 + 10000 + 500);

    CHECK(run({"generate", "--states", "5", "--alphabet", "2", "--density", "0"}).code == cli::usage_error);
    CHECK(run({"generate", "--states", "5", "--alphabet", "2", "--density", "1.5"}).code == cli::usage_error);
    CHECK(run({"generate", "--states", "5", "--alphabet", "2", "--density", "0.5", "--finals", "6"}).code ==
          cli::usage_error);
    CHECK(run({"generate", "--alphabet", "2", "--density", "0.5"}).code == cli::usage_error);
}

TEST_CASE("check") {
    TempDir dir;
    const std::string d = serialize(generate({40, 2, 0.6, 20, 1}));
    const std::string a = dir.write("a.dfa", d);
    const std::string m = dir.write("m.dfa", serialize(minimize(parse(d)).dfa));
    const std::string empty = dir.write("e.dfa", "dfa 1 2 0 0 0\n");
    const std::string eps = dir.write("f.dfa", "dfa 1 2 0 1 0\n0\n");
    const std::string other = dir.write("o.dfa", "dfa 1 3 0 1 0\n0\n");
    const std::string bad = dir.write("bad.dfa", "dfa 1 2\n");

    CHECK(run({"check", "--isomorphic", m, m}).code == cli::ok);
    CHECK(run({"check", "--equiv", a, m}).code == cli::ok);
    CHECK(run({"check", "--equiv", empty, eps}).code == cli::relation_false);
    CHECK(run({"check", "--isomorphic", empty, eps}).code == cli::relation_false);
    CHECK(run({"check", "--equiv", eps, other}).code == cli::data_error);
    CHECK(run({"check", "--equiv", a, bad}).code == cli::data_error);
    CHECK(run({"check", "--equiv", a}).code == cli::usage_error);
    CHECK(run({"check"}).code == cli::usage_error);
}

TEST_CASE("minimize to and from files") {
    TempDir dir;
    const std::string in = dir.write("in.dfa", "dfa 3 1 2 2 0\n0 0 1\n1 0 2\n1\n2\n");
    const std::string out = dir.file("out.dfa");
    CHECK(run({"minimize", "--in", in, "--out", out}).code == cli::ok);
    CHECK(slurp(out) == serialize(minimize(parse(slurp(in))).dfa));
}

TEST_CASE("bench") {
    const Outcome one = run({"bench", "--cell", "200,10,0.5", "--algo", "valmari"});
    CHECK(one.code == cli::ok);
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 2);
    CHECK(one.out.rfind(std::string(bench_csv_header) + "\n", 0) == 0);

    const Outcome two = run({"bench", "--cell", "100,5,0.5", "--seeds", "2", "--algo", "valmari,hopcroft"});
    CHECK(std::count(two.out.begin(), two.out.end(), '\n') == 5);

    CHECK(run({"bench", "--cell", "100,5"}).code == cli::usage_error);
    CHECK(run({"bench", "--cell", "100,5,0"}).code == cli::usage_error);
    CHECK(run({"bench"}).code == cli::usage_error);
    CHECK(run({"bench", "--grid", "/nonexistent.grid"}).code == cli::data_error);
}

TEST_CASE("shipped benchmark grid has 4 configurations by 6 densities") {
    std::ifstream grid(std::string(PTDFA_SOURCE_DIR) + "/configs/table1.grid");
    REQUIRE(grid);
    const auto cells = parse_grid(grid);
    CHECK(cells.size() == 24);
    std::set<std::pair<std::uint32_t, std::uint32_t>> configs;
    std::set<double> densities;
    for (const auto& c : cells) {
        configs.insert({c.states, c.alphabet});
        densities.insert(c.density);
    }
    CHECK(configs.size() == 4);
    CHECK(densities.size() == 6);
}
