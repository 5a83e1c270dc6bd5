#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "commands.hpp"
#include "oracles.hpp"
#include "q2col/io.hpp"

using namespace q2col;
namespace fs = std::filesystem;

namespace {

struct scratch_dir {
    fs::path root;
    scratch_dir() {
        root = fs::temp_directory_path() / ("q2col_cli_" + std::to_string(::getpid()));
        fs::create_directories(root);
    }
    ~scratch_dir() { fs::remove_all(root); }
    std::string file(const std::string &name, const std::string &content) const {
        auto p = (root / name).string();
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }
    std::string path(const std::string &name) const { return (root / name).string(); }
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct outcome {
    int code;
    std::string out;
    std::string err;
};

outcome call(cli::run_config cfg) {
    std::ostringstream out, err;
    int code = cli::run(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("color, exact and verify on K4") {
    scratch_dir dir;
    auto k4 = dir.file("k4.graph", io::to_string(oracle::complete(4)));

    cli::run_config cfg;
    cfg.subcommand = "color";
    cfg.input = k4;
    cfg.output = dir.path("k4.coloring");
    auto r = call(cfg);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["alg_colors"] == 3);
    CHECK(j["matching_size"] == 2);

    cli::run_config ex;
    ex.subcommand = "exact";
    ex.input = k4;
    auto e = call(ex);
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["opt"] == 3);

    cli::run_config ver;
    ver.subcommand = "verify";
    ver.input = k4;
    ver.coloring = cfg.output;
    auto v = call(ver);
    CHECK(v.code == 0);
    CHECK(nlohmann::json::parse(v.out)["coloring_valid"] == true);

    auto bad = dir.file("bad.coloring", "0 1 1\n0 2 2\n0 3 3\n1 2 1\n1 3 1\n2 3 1\n");
    ver.coloring = bad;
    CHECK(call(ver).code == 1);
}

TEST_CASE("matching file drives the coloring") {
    scratch_dir dir;
    auto c4 = dir.file("c4.graph", io::to_string(oracle::cycle(4)));
    cli::run_config cfg;
    cfg.subcommand = "color";
    cfg.input = c4;
    cfg.matching = dir.file("c4.matching", "0 1\n2 3\n");
    auto r = call(cfg);
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["alg_colors"] == 4);

    cfg.matching = dir.file("c4.partial", "0 1\n");
    auto p = call(cfg);
    CHECK(p.code == 2);
}

TEST_CASE("parse errors carry line numbers and exit code 2") {
    scratch_dir dir;
    cli::run_config cfg;
    cfg.subcommand = "color";
    cfg.input = dir.file("loop.graph", "3 2\n0 1\n1 1\n");
    auto r = call(cfg);
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    cfg.input = dir.file("disconnected.graph", "4 2\n0 1\n2 3\n");
    CHECK(call(cfg).code == 2);
}

TEST_CASE("ratio, char and diag") {
    scratch_dir dir;
    auto pet = dir.file("petersen.graph", io::to_string(oracle::petersen()));
    cli::run_config cfg;
    cfg.subcommand = "ratio";
    cfg.input = pet;
    auto r = call(cfg);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "pass");

    cfg.format = "text";
    CHECK(call(cfg).out.find("status=pass") == 0);

    cfg.subcommand = "char";
    cfg.saturate = true;
    auto c = call(cfg);
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["edges"].size() == j["opt"].get<std::size_t>());

    cfg.subcommand = "diag";
    auto d = call(cfg);
    CHECK(d.code == 0);
    auto dj = nlohmann::json::parse(d.out);
    CHECK(dj["general"]["kappa"]["str"] == "2/1");
}

TEST_CASE("ratio with a tiny budget is skipped, not failed") {
    scratch_dir dir;
    cli::run_config cfg;
    cfg.subcommand = "ratio";
    cfg.input = dir.file("k20.graph", io::to_string(oracle::complete(20)));
    cfg.budget = 10;
    auto r = call(cfg);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["status"] == "skipped");
}

TEST_CASE("gen writes files that parse back byte-exactly") {
    scratch_dir dir;
    cli::run_config cfg;
    cfg.subcommand = "gen";
    cfg.family = "blowup";
    cfg.d = 3;
    cfg.half = 3;
    cfg.output = dir.path("bu");
    REQUIRE(call(cfg).code == 0);

    auto text = slurp(dir.path("bu.graph"));
    std::istringstream in(text);
    auto g = io::read_graph(in);
    CHECK(io::to_string(g) == text);
    CHECK(g.vertex_count() == 18);
    for (const char *name : {"bu.matching", "bu.m1.matching"}) {
        auto mt = slurp(dir.path(name));
        std::istringstream min(mt);
        CHECK(io::to_string(io::read_matching(min, g)) == mt);
    }
    auto ct = slurp(dir.path("bu.coloring"));
    std::istringstream cin(ct);
    CHECK(io::to_string(g, io::read_coloring(cin, g)) == ct);

    cli::run_config col;
    col.subcommand = "color";
    col.input = dir.path("bu.graph");
    col.matching = dir.path("bu.m1.matching");
    auto r = call(col);
    CHECK(nlohmann::json::parse(r.out)["alg_colors"] == 10);

    cfg.family = "tight1";
    cfg.kappa = 4;
    cfg.delta = 8;
    cfg.t = 20;
    CHECK(call(cfg).code == 2);
}

TEST_CASE("sweeps") {
    cli::run_config cfg;
    cfg.subcommand = "sweep";
    cfg.count = 20;
    cfg.seed = 9;
    cfg.n_min = 5;
    cfg.n_max = 8;
    auto a = call(cfg);
    auto b = call(cfg);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 21);
    cfg.seed = 10;
    CHECK(call(cfg).out != a.out);

    cli::run_config t1;
    t1.subcommand = "sweep";
    t1.family = "tight1";
    t1.kappa = 4;
    t1.delta = 8;
    t1.t = 21;
    auto t = call(t1);
    CHECK(t.code == 0);
    CHECK(t.out.find("tight1,4,8,21,8,42,84,8,21,28,1,27/1,1,") != std::string::npos);

    t1.t = 20;
    auto inf = call(t1);
    CHECK(inf.code == 0);
    CHECK(inf.out.find("not an integer") != std::string::npos);

    cli::run_config bu;
    bu.subcommand = "sweep";
    bu.family = "blowup";
    bu.d = 4;
    bu.half = 5;
    auto r = call(bu);
    CHECK(r.code == 0);
    CHECK(r.out.find("blowup,4,5,40,30,10,21,1,30/1,") != std::string::npos);
}

TEST_CASE("budget resolution") {
    cli::run_config cfg;
    cfg.budget = 77;
    CHECK(cli::effective_budget(cfg) == 77);
    cfg.budget.reset();
    ::setenv("Q2_BUDGET", "1234", 1);
    CHECK(cli::effective_budget(cfg) == 1234);
    ::unsetenv("Q2_BUDGET");
    CHECK(cli::effective_budget(cfg) == 10'000'000);
}
