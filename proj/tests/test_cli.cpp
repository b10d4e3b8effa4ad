#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "charpoly/charpoly.hpp"

using namespace charpoly;

namespace {

std::pair<int, std::string> run_capture(RunConfig cfg) {
    std::ostringstream out;
    cfg.out_stream = &out;
    int status = run(cfg);
    return {status, out.str()};
}

}  // namespace

TEST_CASE("cli vertices command") {
    RunConfig cfg;
    cfg.command = "vertices";
    cfg.graph = "dumbbell";
    cfg.tree_spec = "2";
    auto [status, text] = run_capture(cfg);
    REQUIRE(status == 0);
    json j = json::parse(text);
    CHECK(j["dim"] == 3);
    REQUIRE(j["vertices"].size() == 5);
    std::set<EdgeVector> got;
    for (const auto& v : j["vertices"]) got.insert(edge_vector_from_json(v));
    CHECK(got == reference::dumbbell_q_vertices());
}

TEST_CASE("cli reflexive command") {
    RunConfig cfg;
    cfg.command = "reflexive";
    cfg.graph = "k4";
    cfg.tree_spec = "3,4,5";
    auto [status, text] = run_capture(cfg);
    REQUIRE(status == 0);
    json j = json::parse(text);
    CHECK(j["reflexive"] == true);

    cfg.tree_spec = "1,3,5";
    auto [status2, text2] = run_capture(cfg);
    REQUIRE(status2 == 0);
    json j2 = json::parse(text2);
    CHECK(j2["reflexive"] == false);
    CHECK(j2["non_lattice_vertices"].size() == 1);
}

TEST_CASE("cli handles all builtin names") {
    const std::vector<std::tuple<std::string, int, int>> expected{
        {"dumbbell", 2, 3}, {"theta", 2, 3},    {"k4", 4, 6},  {"rattle", 4, 6},
        {"star3", 4, 6},    {"petersen", 10, 15}, {"k33", 6, 9}};
    for (const auto& [name, nv, ne] : expected) {
        auto g = builtin_graph(name);
        REQUIRE(g.has_value());
        CHECK(is_trivalent(*g));
        CHECK(g->vertex_count() == nv);
        CHECK(g->edge_count() == ne);
    }
    CHECK_FALSE(builtin_graph("nope").has_value());
}

TEST_CASE("cli usage errors exit with 2") {
    RunConfig cfg;
    cfg.command = "vertices";
    cfg.graph = "not-a-graph";
    CHECK(run_capture(cfg).first == 2);

    cfg.graph = "dumbbell";
    cfg.tree_spec = "0";  // a loop cannot be a tree
    CHECK(run_capture(cfg).first == 2);

    cfg.tree_spec = "";
    cfg.format = "yaml";
    CHECK(run_capture(cfg).first == 2);

    RunConfig bad;
    bad.command = "frobnicate";
    CHECK(run_capture(bad).first == 2);

    RunConfig zero_cap;
    zero_cap.command = "vertices";
    zero_cap.graph = "dumbbell";
    zero_cap.point_cap = 0;
    CHECK(run_capture(zero_cap).first == 2);
}

TEST_CASE("CHARPOLY_WORKERS overrides the default worker count") {
    setenv("CHARPOLY_WORKERS", "3", 1);
    RunConfig cfg;
    cfg.command = "classify";
    cfg.genus = 2;
    auto [status, text] = run_capture(cfg);
    unsetenv("CHARPOLY_WORKERS");
    REQUIRE(status == 0);
    CHECK(json::parse(text)["records"].size() == 2);
}

TEST_CASE("cli classify artifacts are byte-identical across worker counts") {
    RunConfig cfg;
    cfg.command = "classify";
    cfg.genus = 3;
    cfg.workers = 1;
    auto [s1, one] = run_capture(cfg);
    cfg.workers = 4;
    auto [s4, four] = run_capture(cfg);
    REQUIRE(s1 == 0);
    REQUIRE(s4 == 0);
    CHECK(one == four);
    json j = json::parse(one);
    CHECK(j["records"].size() == 8);
}

TEST_CASE("cli reads graph files with tree lines") {
    std::string path = "cli_test_graph.txt";
    {
        std::ofstream f(path);
        f << "# a dumbbell with its only tree\nvertices 2\nedge 0 0\nedge 1 1\nedge 0 1\ntree 2\n";
    }
    RunConfig cfg;
    cfg.command = "reflexive";
    cfg.graph = path;
    auto [status, text] = run_capture(cfg);
    std::remove(path.c_str());
    REQUIRE(status == 0);
    CHECK(json::parse(text)["reflexive"] == true);
}

TEST_CASE("cli delta polytope with and without the leaf floor") {
    std::string path = "cli_test_tree.txt";
    {
        std::ofstream f(path);
        f << "vertices 2\nedge 0 1\n";
    }
    RunConfig cfg;
    cfg.command = "lattice-points";
    cfg.graph = path;
    cfg.polytope = "delta";
    auto [status, text] = run_capture(cfg);
    REQUIRE(status == 0);
    CHECK(json::parse(text)["count"] == 2);

    cfg.leaf_nonneg = false;
    CHECK(run_capture(cfg).first == 2);  // unbounded without the floor
    std::remove(path.c_str());
}

TEST_CASE("cli tree spec 'all' sweeps tree classes") {
    RunConfig cfg;
    cfg.command = "reflexive";
    cfg.graph = "k4";
    cfg.tree_spec = "all";
    auto [status, text] = run_capture(cfg);
    REQUIRE(status == 0);
    json j = json::parse(text);
    REQUIRE(j["results"].size() == 2);
    int reflexive = 0;
    for (const auto& r : j["results"]) reflexive += r["reflexive"] == true;
    CHECK(reflexive == 1);
}
