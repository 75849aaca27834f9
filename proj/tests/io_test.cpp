#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "borough/io.hpp"
#include "test_support.hpp"

namespace borough {
namespace {

using namespace borough::testing;
namespace fs = std::filesystem;

TEST(ParseEdgeList, CommentsAndBlankLines) {
    Graph g = parse_edge_list("a b\nb c\n# note\n\n");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseEdgeList, WrongTokenCount) {
    try {
        parse_edge_list("a\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
    }
    try {
        parse_edge_list("a b\n# c\nx y z\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseEdgeList, SelfLoopReportsLine) {
    try {
        parse_edge_list("a b\n\nq q\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseEdgeList, ZacharyFile) {
    Graph g = karate_graph();
    EXPECT_EQ(g.node_count(), 34u);
    EXPECT_EQ(g.edge_count(), 78u);
}

TEST(ProjectBipartite, Thresholds) {
    std::vector<std::pair<std::string, std::string>> pairs{{"a", "p1"}, {"b", "p1"}, {"a", "p2"}, {"b", "p2"}};
    Graph two = project_bipartite(pairs, 2);
    EXPECT_EQ(two.node_count(), 2u);
    EXPECT_EQ(two.edge_count(), 1u);
    EXPECT_TRUE(project_bipartite(pairs, 3).node_count() == 0);
    EXPECT_THROW(project_bipartite(pairs, 0), std::invalid_argument);
}

TEST(ProjectBipartite, UnqualifiedActorsOmitted) {
    // a-b share p1, p2; b-c share p3 only.
    std::vector<std::pair<std::string, std::string>> pairs{
        {"a", "p1"}, {"b", "p1"}, {"a", "p2"}, {"b", "p2"}, {"b", "p3"}, {"c", "p3"}};
    Graph g = project_bipartite(pairs, 2);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(g.edge_count(), 1u);
    Graph loose = project_bipartite(pairs, 1);
    EXPECT_EQ(loose.node_count(), 3u);
    EXPECT_EQ(loose.edge_count(), 2u);
}

TEST(ProjectBipartite, DeterministicFixtureThroughBoroughs) {
    auto pairs_raw = parse_pairs(read_file(data_path("coauthors.pairs")));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto& p : pairs_raw) pairs.emplace_back(p.a, p.b);
    Config config;
    auto first = run_pipeline(project_bipartite(pairs, 2), config);
    std::reverse(pairs.begin(), pairs.end());
    auto second = run_pipeline(project_bipartite(pairs, 2), config);
    EXPECT_EQ(first, second);
    EXPECT_EQ(export_json(first), export_json(second));
    EXPECT_FALSE(first.boroughs.empty());
}

TEST(ScopeSelection, Parse) {
    EXPECT_EQ(ScopeSelection::parse("all").kind, ScopeSelection::Kind::AllBoroughs);
    EXPECT_EQ(ScopeSelection::parse("global").kind, ScopeSelection::Kind::Global);
    auto s = ScopeSelection::parse("borough=2,0");
    EXPECT_EQ(s.kind, ScopeSelection::Kind::Boroughs);
    EXPECT_EQ(s.borough_ids, (std::vector<std::size_t>{2, 0}));
    EXPECT_THROW(ScopeSelection::parse("borough="), std::invalid_argument);
    EXPECT_THROW(ScopeSelection::parse("borough=x"), std::invalid_argument);
    EXPECT_THROW(ScopeSelection::parse("some"), std::invalid_argument);
}

TEST(Pipeline, Zachary) {
    auto bundle = run_pipeline(karate_graph(), Config{});
    EXPECT_EQ(bundle.node_count, 34u);
    EXPECT_EQ(bundle.edge_count, 78u);
    ASSERT_EQ(bundle.components.size(), 1u);
    EXPECT_EQ(bundle.components[0].diameter, std::optional<std::uint32_t>{5});
    EXPECT_EQ(bundle.boroughs.size(), 2u);
    EXPECT_EQ(bundle.clubs.size(), 14u);
    EXPECT_EQ(bundle.reports.size(), 2u);
    EXPECT_EQ(bundle.outback.bridges, (std::vector<std::pair<std::string, std::string>>{{"1", "12"}}));
    for (const auto& b : bundle.boroughs) EXPECT_EQ(b.touch_points, std::vector<std::string>{"1"});
}

TEST(Pipeline, Hexagon) {
    auto bundle = run_pipeline(cycle_graph(6), Config{});
    EXPECT_TRUE(bundle.boroughs.empty());
    EXPECT_EQ(bundle.outback.long_cycle_edges.size(), 6u);
    EXPECT_TRUE(bundle.clubs.empty());
}

TEST(Pipeline, Petersen) {
    auto bundle = run_pipeline(petersen_graph(), Config{});
    ASSERT_EQ(bundle.boroughs.size(), 1u);
    ASSERT_EQ(bundle.clubs.size(), 1u);
    EXPECT_EQ(bundle.clubs[0].type, "hamlet");
    EXPECT_EQ(bundle.clubs[0].nodes.size(), 10u);
}

TEST(Pipeline, GlobalAndSelectedScopes) {
    Config global;
    global.scope = ScopeSelection::parse("global");
    auto g = run_pipeline(karate_graph(), global);
    ASSERT_EQ(g.reports.size(), 1u);
    EXPECT_EQ(g.reports[0].scope, "global");
    for (const auto& c : g.clubs) EXPECT_EQ(c.scope, "global");

    Config one;
    one.scope = ScopeSelection::parse("borough=1");
    auto b = run_pipeline(karate_graph(), one);
    ASSERT_EQ(b.clubs.size(), 1u);
    EXPECT_EQ(b.clubs[0].scope, "borough:1");

    Config missing;
    missing.scope = ScopeSelection::parse("borough=7");
    EXPECT_THROW(run_pipeline(karate_graph(), missing), std::invalid_argument);
}

TEST(Pipeline, BudgetErrorNamesScope) {
    Config tight;
    tight.branch_budget = 3;
    try {
        run_pipeline(karate_graph(), tight);
        FAIL() << "expected IncompleteEnumeration";
    } catch (const IncompleteEnumeration& e) {
        EXPECT_NE(std::string(e.what()).find("borough 0"), std::string::npos) << e.what();
    }
    Config capped;
    capped.cycle_cap = 10;
    EXPECT_THROW(run_pipeline(karate_graph(), capped), CycleCapExceeded);
}

TEST(Export, JsonRoundTrip) {
    for (const Graph& g : {karate_graph(), petersen_graph(), cycle_graph(6), seven_node_hamlet()}) {
        auto bundle = run_pipeline(g, Config{});
        auto text = export_json(bundle);
        EXPECT_EQ(parse_bundle_json(text), bundle);
        EXPECT_EQ(export_json(parse_bundle_json(text)), text);
    }
}

TEST(Export, EmptyGraphIsValidJson) {
    auto bundle = run_pipeline(parse_edge_list("# nothing\n"), Config{});
    auto text = export_json(bundle);
    auto back = parse_bundle_json(text);
    EXPECT_EQ(back.node_count, 0u);
    EXPECT_TRUE(back.boroughs.empty());
    EXPECT_TRUE(back.clubs.empty());
}

TEST(Export, ZacharyCsvRows) {
    auto csv = export_csv(run_pipeline(karate_graph(), Config{}));
    auto lines = std::count(csv.begin(), csv.end(), '\n');
    EXPECT_EQ(lines, 15);  // header + 13 + 1
    EXPECT_EQ(csv.rfind("scope,type,size,separable,members\n", 0), 0u);
    EXPECT_NE(csv.find("borough:0,hamlet,8,false,1;3;25;28;29;32;33;34\n"), std::string::npos);
}

TEST(Export, TriangleDot) {
    auto dot = export_dot(run_pipeline(complete_graph(3), Config{}));
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n') - 3, 4);  // header lines, comment, 3 edges, close
    std::size_t solid = 0;
    for (auto pos = dot.find("style=solid"); pos != std::string::npos; pos = dot.find("style=solid", pos + 1))
        ++solid;
    EXPECT_EQ(solid, 3u);
    EXPECT_EQ(dot.find("dashed"), std::string::npos);

    auto hex = export_dot(run_pipeline(cycle_graph(6), Config{}));
    std::size_t dashed = 0;
    for (auto pos = hex.find("dashed"); pos != std::string::npos; pos = hex.find("dashed", pos + 1)) ++dashed;
    EXPECT_EQ(dashed, 6u);
}

TEST(Files, AtomicWrite) {
    auto dir = fs::temp_directory_path() / "borough_io_test";
    fs::create_directories(dir);
    auto path = dir / "out.edges";
    write_file_atomic(path, "a b\n");
    write_file_atomic(path, "c d\n");
    EXPECT_EQ(read_file(path), "c d\n");
    EXPECT_FALSE(fs::exists(dir / "out.edges.tmp"));
    fs::remove_all(dir);
    EXPECT_THROW(read_file(dir / "missing"), std::runtime_error);
}

// The CLI binary, exercised for its exit codes and output surface.
class Cli : public ::testing::Test {
protected:
    static int run(const std::string& args, const std::string& out_file = "") {
        std::string cmd = std::string(BOROUGH_CLI_PATH) + " " + args;
        cmd += out_file.empty() ? " > /dev/null 2>&1" : " > " + out_file + " 2>/dev/null";
        int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    }

    void SetUp() override {
        dir = fs::temp_directory_path() / ("borough_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string file(const std::string& name, const std::string& content) {
        auto p = dir / name;
        write_file_atomic(p, content);
        return p.string();
    }

    fs::path dir;
};

TEST_F(Cli, ExitCodes) {
    std::string karate = data_path("karate.edges");
    EXPECT_EQ(run("boroughs " + karate), 0);
    EXPECT_EQ(run("boroughs " + karate + " --format json"), 0);
    EXPECT_EQ(run("clubs " + karate + " --scope global"), 0);
    EXPECT_EQ(run("stats " + karate), 0);
    EXPECT_EQ(run("query " + karate + " --node 9 --node 1 --node 34"), 0);
    EXPECT_EQ(run("boroughs " + file("bad.edges", "a b\nc\n")), 1);
    EXPECT_EQ(run("boroughs " + file("loop.edges", "a a\n")), 1);
    EXPECT_EQ(run("clubs " + karate + " --branch-budget 3"), 2);
    EXPECT_EQ(run("boroughs " + karate + " --cycle-cap 5"), 2);
    EXPECT_EQ(run("query " + karate + " --node nobody"), 1);
}

TEST_F(Cli, ProjectWritesEdgeList) {
    auto pairs = file("pairs.txt", "a p1\nb p1\na p2\nb p2\nb p3\nc p3\n");
    auto out = (dir / "projected.edges").string();
    ASSERT_EQ(run("project " + pairs + " --threshold 2 --out " + out), 0);
    EXPECT_EQ(read_file(out), "a b\n");
}

TEST_F(Cli, JsonOutputParses) {
    auto out = (dir / "bundle.json").string();
    ASSERT_EQ(run("clubs " + data_path("karate.edges") + " --format json", out), 0);
    auto bundle = parse_bundle_json(read_file(out));
    EXPECT_EQ(bundle.clubs.size(), 14u);
}

}  // namespace
}  // namespace borough
