#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "borough/graph.hpp"
#include "borough/two_clubs.hpp"

namespace borough {

/// Percent value rounded half-up to one decimal.
double round_percent(double value);

struct TypeRow {
    std::size_t count = 0;
    double percent = 0.0;  // of all clubs in the scope
    std::size_t size_min = 0;
    std::size_t size_max = 0;
    std::size_t size_median = 0;  // lower middle on even counts
    double coverage = 0.0;        // distinct member nodes / scope nodes, in percent

    bool operator==(const TypeRow&) const = default;
};

struct TypeDistribution {
    std::array<TypeRow, kClubTypeCount> by_type{};  // indexed by ClubType
    TypeRow total;
    std::size_t scope_nodes = 0;

    const TypeRow& operator[](ClubType t) const { return by_type[static_cast<std::size_t>(t)]; }
    bool operator==(const TypeDistribution&) const = default;
};

TypeDistribution type_distribution(std::span<const TwoClub> clubs, std::size_t scope_node_count);

struct ClubRef {
    std::size_t index = 0;  // position in the queried club list
    ClubType type = ClubType::Hamlet;
    std::size_t size = 0;
};

struct MembershipProfile {
    NodeId node = 0;
    std::vector<ClubRef> clubs;
    std::array<std::size_t, kClubTypeCount> counts{};
    std::array<double, kClubTypeCount> percent_of_type{};  // counts / scope clubs of that type

    std::size_t total() const noexcept { return clubs.size(); }
};

MembershipProfile membership(std::span<const TwoClub> clubs, NodeId node);

/// Clubs that contain `node`, in their original order.
std::vector<TwoClub> clubs_containing(std::span<const TwoClub> clubs, NodeId node);

struct CoMembership {
    NodeId u = 0;
    NodeId v = 0;
    std::array<std::size_t, kClubTypeCount> only_u{};
    std::array<std::size_t, kClubTypeCount> only_v{};
    std::array<std::size_t, kClubTypeCount> both{};
    std::array<std::size_t, kClubTypeCount> either{};
    std::array<double, kClubTypeCount> both_percent_of_v{};  // both / clubs containing v

    static std::size_t sum(const std::array<std::size_t, kClubTypeCount>& a) {
        return a[0] + a[1] + a[2];
    }
};

/// Throws std::invalid_argument when u == v.
CoMembership co_membership(std::span<const TwoClub> clubs, NodeId u, NodeId v);

std::string render_type_distribution(const TypeDistribution& d, const std::string& title);
std::string render_membership(const Graph& g, const MembershipProfile& p);
std::string render_co_membership(const Graph& g, const CoMembership& c);

}  // namespace borough
