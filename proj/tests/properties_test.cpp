#include <gtest/gtest.h>

#include "borough/two_clubs.hpp"
#include "test_support.hpp"

namespace borough {
namespace {

using namespace borough::testing;

bool in(const std::vector<NodeId>& sorted, NodeId x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

// Every member of a club sees the whole club within two hops inside the club.
bool membership_wise_diameter_two(const Graph& g, const std::vector<NodeId>& club) {
    for (NodeId u : club) {
        std::set<NodeId> reach{u};
        for (NodeId v : g.neighbors(u)) {
            if (!in(club, v)) continue;
            reach.insert(v);
            for (NodeId w : g.neighbors(v))
                if (in(club, w)) reach.insert(w);
        }
        if (reach.size() != club.size()) return false;
    }
    return true;
}

bool has_cutpoint(const Graph& g, const std::vector<NodeId>& club) {
    for (NodeId removed : club) {
        std::vector<NodeId> rest;
        for (NodeId v : club)
            if (v != removed) rest.push_back(v);
        std::set<NodeId> seen{rest[0]};
        std::vector<NodeId> stack{rest[0]};
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(v))
                if (w != removed && in(club, w) && seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != rest.size()) return true;
    }
    return false;
}

class ClubInvariants : public ::testing::TestWithParam<int> {};

TEST_P(ClubInvariants, HoldOnRandomGraphs) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()));
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(6 + trial % 9, std::array{0.2, 0.4, 0.6}[trial % 3], rng);
        std::size_t max_degree = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));

        for (const auto& club : enumerate_two_clubs(g)) {
            EXPECT_TRUE(membership_wise_diameter_two(g, club.nodes));
            EXPECT_EQ(club.separable, has_cutpoint(g, club.nodes));
            if (club.type != ClubType::Coterie) EXPECT_FALSE(club.separable);
            if (club.nodes.size() > max_degree + 1) EXPECT_NE(club.type, ClubType::Coterie);

            if (club.type == ClubType::Coterie) {
                ASSERT_FALSE(club.centers.empty());
                for (NodeId a : club.centers) {
                    // Twinned egos: each center's closed neighbourhood inside the club is the club.
                    std::size_t seen = 1;
                    for (NodeId v : g.neighbors(a)) seen += in(club.nodes, v);
                    EXPECT_EQ(seen, club.nodes.size());
                    for (NodeId b : club.centers)
                        if (a != b) EXPECT_TRUE(adjacent(g, a, b));
                }
            }
            for (const Edge& e : club.central_pairs) {
                EXPECT_TRUE(adjacent(g, e.u, e.v));
                for (NodeId x : club.nodes)
                    if (x != e.u && x != e.v) EXPECT_TRUE(adjacent(g, x, e.u) || adjacent(g, x, e.v));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ClubInvariants, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace borough
