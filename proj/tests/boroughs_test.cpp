#include <gtest/gtest.h>

#include "borough/boroughs.hpp"
#include "test_support.hpp"

namespace borough {
namespace {

using namespace borough::testing;

TEST(DetectBoroughs, Zachary) {
    Graph g = karate_graph();
    auto boroughs = detect_boroughs(g);
    ASSERT_EQ(boroughs.size(), 2u);
    EXPECT_EQ(boroughs[1].nodes, ids_of(g, {1, 5, 6, 7, 11, 17}));
    EXPECT_EQ(boroughs[1].diameter, 2u);
    EXPECT_EQ(boroughs[0].diameter, 4u);
    // 28 nodes: exactly the union of the 13 clubs found inside it.
    EXPECT_EQ(boroughs[0].nodes.size(), 28u);
    EXPECT_EQ(boroughs[0].id, 0u);
    EXPECT_EQ(boroughs[1].id, 1u);
}

TEST(DetectBoroughs, PetersenIsOneBorough) {
    Graph g = petersen_graph();
    auto boroughs = detect_boroughs(g);
    ASSERT_EQ(boroughs.size(), 1u);
    EXPECT_EQ(boroughs[0].nodes.size(), 10u);
    EXPECT_EQ(boroughs[0].edges.size(), 15u);
    // Oracle: chaining the brute-force induced short cycles gives one edge set.
    auto oracle = chained_edge_sets(brute_force_short_cycles(g, true));
    ASSERT_EQ(oracle.size(), 1u);
    EXPECT_EQ(*oracle.begin(), boroughs[0].edges);
}

TEST(DetectBoroughs, EmptyForForestsAndLongCycles) {
    EXPECT_TRUE(detect_boroughs(path_graph(6)).empty());
    EXPECT_TRUE(detect_boroughs(cycle_graph(6)).empty());
    EXPECT_TRUE(detect_boroughs(star_graph(5)).empty());
}

TEST(DetectBoroughs, NonseparableTwoClubIsSingleBorough) {
    for (const Graph& g : {complete_graph(5), cycle_graph(4), cycle_graph(5), petersen_graph(), seven_node_hamlet()}) {
        auto boroughs = detect_boroughs(g);
        ASSERT_EQ(boroughs.size(), 1u);
        EXPECT_EQ(boroughs[0].edges, g.edges());
        EXPECT_LE(boroughs[0].diameter, 2u);
    }
}

TEST(DetectBoroughs, MatchesChainingOracleOnRandomGraphs) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(5 + trial % 7, std::array{0.2, 0.35, 0.5}[trial % 3], rng);
        auto boroughs = detect_boroughs(g);
        std::set<std::vector<Edge>> got;
        for (const auto& b : boroughs) got.insert(b.edges);
        EXPECT_EQ(got, chained_edge_sets(brute_force_short_cycles(g, true))) << "trial " << trial;

        for (std::size_t i = 1; i < boroughs.size(); ++i)
            EXPECT_GE(boroughs[i - 1].nodes.size(), boroughs[i].nodes.size());
    }
}

TEST(Outback, Hexagon) {
    Graph g = cycle_graph(6);
    auto report = outback(g, detect_boroughs(g));
    EXPECT_EQ(report.non_basic_edges.size(), 6u);
    EXPECT_EQ(report.long_cycle_edges.size(), 6u);
    EXPECT_TRUE(report.bridges.empty());
}

TEST(Outback, PendantIsBridge) {
    Graph g = graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
    auto report = outback(g, detect_boroughs(g));
    ASSERT_EQ(report.bridges.size(), 1u);
    EXPECT_EQ(report.bridges[0], Edge(*g.find("c"), *g.find("d")));
    EXPECT_TRUE(report.long_cycle_edges.empty());
}

TEST(Outback, LongCycleEdgesHaveNoShortCycle) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(12, 0.18, rng);
        auto boroughs = detect_boroughs(g);
        auto report = outback(g, boroughs);
        std::size_t borough_edges = 0;
        for (const auto& b : boroughs) borough_edges += b.edges.size();
        EXPECT_EQ(report.non_basic_edges.size() + borough_edges, g.edge_count());
        // A non-bridge outback edge: removing it leaves its endpoints at distance >= 5.
        for (const Edge& e : report.long_cycle_edges) {
            std::vector<Edge> rest;
            for (const Edge& f : g.edges())
                if (f != e) rest.push_back(f);
            auto d = floyd_distances(rest);
            EXPECT_GE(d[e.u][e.v], 5u);
            EXPECT_LT(d[e.u][e.v], 1U << 30);
        }
    }
}

TEST(TouchPoints, Examples) {
    Graph g = karate_graph();
    auto boroughs = detect_boroughs(g);
    auto tp = touch_points(boroughs);
    ASSERT_EQ(tp.between_boroughs.size(), 1u);
    EXPECT_EQ(g.label(tp.between_boroughs.begin()->first), "1");
    EXPECT_EQ(tp.between_boroughs.begin()->second, (std::vector<std::size_t>{0, 1}));

    Graph disjoint = graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}});
    EXPECT_TRUE(touch_points(detect_boroughs(disjoint)).between_boroughs.empty());

    Graph bowtie = graph_of({{"a", "b"}, {"b", "x"}, {"x", "a"}, {"x", "c"}, {"c", "d"}, {"d", "x"}});
    auto bt = detect_boroughs(bowtie);
    ASSERT_EQ(bt.size(), 2u);
    auto tpb = touch_points(bt);
    ASSERT_EQ(tpb.between_boroughs.size(), 1u);
    EXPECT_EQ(tpb.between_boroughs.at(*bowtie.find("x")), (std::vector<std::size_t>{0, 1}));
}

TEST(TouchPoints, OutbackContact) {
    Graph g = karate_graph();
    auto boroughs = detect_boroughs(g);
    auto report = outback(g, boroughs);
    auto tp = touch_points(boroughs, report.non_basic_edges);
    ASSERT_EQ(tp.with_outback.size(), 1u);
    EXPECT_EQ(g.label(tp.with_outback.begin()->first), "1");
}

TEST(EdgeRemoval, Examples) {
    Graph c5 = cycle_graph(5);
    auto b5 = detect_boroughs(c5);
    auto d5 = edge_removal_diameter_delta(c5, b5[0], Edge(0, 1));
    EXPECT_EQ(d5.before, 2u);
    EXPECT_EQ(d5.after, 4u);

    Graph k4 = complete_graph(4);
    auto bk = detect_boroughs(k4);
    auto dk = edge_removal_diameter_delta(k4, bk[0], Edge(1, 3));
    EXPECT_EQ(dk.before, 1u);
    EXPECT_EQ(dk.after, 2u);
}

TEST(EdgeRemoval, DiameterJumpsByThree) {
    Graph g = diameter_jump_graph();
    auto boroughs = detect_boroughs(g);
    ASSERT_EQ(boroughs.size(), 1u);
    ASSERT_EQ(boroughs[0].edges.size(), 13u);
    auto d = edge_removal_diameter_delta(g, boroughs[0], Edge(*g.find("b"), *g.find("c")));
    // Frozen from a Floyd-Warshall run over the reconstructed edge list.
    EXPECT_EQ(d.before, 3u);
    EXPECT_EQ(d.after, 6u);
    EXPECT_EQ(d.before, floyd_diameter(boroughs[0].edges));
}

TEST(EdgeRemoval, RejectsForeignEdge) {
    Graph g = graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
    auto boroughs = detect_boroughs(g);
    EXPECT_THROW(edge_removal_diameter_delta(g, boroughs[0], Edge(*g.find("c"), *g.find("d"))),
                 std::invalid_argument);
}

}  // namespace
}  // namespace borough
