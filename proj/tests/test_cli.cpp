#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gg/io.hpp"
#include "gg/lowerbounds.hpp"

using namespace gg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stderr is folded into out only when asked, so JSON on stdout stays clean.
Run run(const std::string& args, bool with_stderr = false) {
    std::string cmd = std::string(GG_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

struct TempDir {
    fs::path path = fs::temp_directory_path() / ("gg_cli_" + std::to_string(getpid()));
    TempDir() { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

const char* kFan10 = R"({"n":10,"diagonals":[[0,2],[0,3],[0,4],[0,5],[0,6],[0,7],[0,8]]})";

}  // namespace

TEST_CASE("genlb") {
    auto r = run("genlb gamma7");
    CHECK(r.code == 0);
    CHECK(graph_from_json(r.out) == gamma7());
    CHECK(polygon_from_json(run("genlb spikes --k 4").out).n() == 12);
    CHECK(polygon_from_json(run("genlb monotone --variant 2 --m 4").out).n() == 12);
    CHECK(graph_from_json(run("genlb diag --m 3 --variant 2").out).n() == 10);
    CHECK(run("genlb random --n 20 --seed 5").out == run("genlb random --n 20 --seed 5").out);
    CHECK(run("genlb spikes --k 2").code == 2);
    CHECK(run("genlb nosuch").code == 1);
}

TEST_CASE("dominate") {
    TempDir d;
    auto fan = d.write("fan10.json", kFan10);
    auto r = run("dominate --algo diag-linear " + fan);
    CHECK(r.code == 0);
    CHECK(dominating_set_from_json(r.out).size() <= 3);
    r = run("dominate --algo edge-quadratic " + d.write("quad.json", R"({"n":4,"diagonals":[[1,3]]})"));
    CHECK(r.code == 0);
    CHECK(dominating_set_from_json(r.out).size() == 2);
    r = run("dominate " + d.write("bad.json", "{\"n\": 4,\n \"diagonals\": [[0,2],]}"), true);
    CHECK(r.code == 1);
    CHECK(r.out.find("line 2, column 22") != std::string::npos);
    CHECK(run("dominate " + d.write("cross.json", R"({"n":5,"diagonals":[[0,2],[1,3]]})")).code == 2);
    CHECK(run("dominate --algo nosuch " + fan).code == 1);
    auto out = (d.path / "o.json").string();
    CHECK(run("dominate --algo edge-linear --out " + out + " " + fan).code == 0);
    CHECK(dominating_set_from_json(read_file(out)).mode == DomMode::EdgeOnly);
}

TEST_CASE("guard") {
    TempDir d;
    auto sp = d.write("sp5.json", polygon_to_json(gen_spike_polygon(5)));
    auto r = run("guard --strategy mobile --density 50 " + sp);
    CHECK(r.code == 0);
    auto g = guard_set_from_json(r.out);
    CHECK(g.size() <= 5);
    CHECK(guard_set_to_json(g) + "\n" == r.out);
    auto m1 = d.write("m1.json", polygon_to_json(gen_monotone_lb(1, 4)));
    r = run("guard --strategy monotone " + m1);
    CHECK(r.code == 0);
    CHECK(guard_set_from_json(r.out).size() <= 4);
    r = run("guard --strategy monotone " + sp, true);
    CHECK(r.code == 3);
    CHECK(r.out.find("monotone") != std::string::npos);
    r = run("monotone " + m1);
    CHECK(r.code == 0);
    CHECK(r.out.find("guards (4)") != std::string::npos);
    auto j = nlohmann::json::parse(run("monotone --json " + m1).out);
    CHECK(j["sigma"].size() == 15);
    CHECK(run("monotone " + sp).code == 3);
    CHECK(run("guard " + d.write("tri.json", R"({"vertices":[["0","0"],["0","1"],["1","0"]],
        "arcs":[{"type":"segment"},{"type":"segment"},{"type":"segment"}]})")).code == 2);
}

TEST_CASE("verify") {
    auto r = run("verify --exhaustive 9 --mode edge");
    CHECK(r.code == 0);
    CHECK(count(r.out, "0 violations / 429 triangulations") == 2);
    auto j = nlohmann::json::parse(run("verify --exhaustive 7 --mode diag --algo diag-contract --json").out);
    CHECK(j["results"].size() == 1);
    CHECK(j["results"][0]["instances"] == 42);
    CHECK(run("verify --exhaustive 13").code == 2);

    TempDir d;
    auto sp = d.write("sp5.json", polygon_to_json(gen_spike_polygon(5)));
    auto g = d.write("g.json", run("guard " + sp).out);
    r = run("verify " + sp + " " + g + " --density 50");
    CHECK(r.code == 0);
    CHECK(r.out.find("covered=true") != std::string::npos);
    r = run("verify " + sp + " " + d.write("g1.json", R"({"mode":"mobile","guards":[{"arc":1}]})"));
    CHECK(r.code == 4);
    CHECK(r.out.find("witness") != std::string::npos);
    auto fan = d.write("fan10.json", kFan10);
    r = run("verify " + fan + " " + d.write("d1.json", R"({"mode":"diagonal","members":[[0,5]]})"));
    CHECK(r.code == 4);
    CHECK(run("verify " + fan + " " + d.write("d3.json", run("dominate " + fan).out)).code == 0);
}

TEST_CASE("render") {
    TempDir d;
    auto tri = d.write("tri.json", R"({"n":3,"diagonals":[]})");
    auto one = d.write("one.json", R"({"mode":"edge","members":[[0,1]]})");
    auto r = run("render " + tri + " " + one);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(count(r.out, "stroke=\"#c0392b\"") == 1);

    auto fan = d.write("fan10.json", kFan10);
    auto ds = d.write("ds.json", R"({"mode":"diagonal","members":[[0,3],[0,6]]})");
    r = run("render " + fan + " " + ds);
    CHECK(count(r.out, "stroke=\"#c0392b\"") == 2);
    CHECK(count(r.out, "stroke-dasharray") == 7);
    CHECK(run("render " + fan + " " + ds).out == r.out);

    auto sp = d.write("sp.json", polygon_to_json(gen_spike_polygon(4)));
    auto svg = (d.path / "sp.svg").string();
    CHECK(run("render " + sp + " --out " + svg).code == 0);
    auto first = read_file(svg);
    CHECK(run("render " + sp + " --out " + svg).code == 0);
    CHECK(read_file(svg) == first);
    CHECK(count(first, " A ") >= 4);
}
