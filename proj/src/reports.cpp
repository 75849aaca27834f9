#include "borough/reports.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace borough {

namespace {

std::size_t type_index(ClubType t) { return static_cast<std::size_t>(t); }

constexpr std::array<ClubType, kClubTypeCount> kTypes{ClubType::Coterie, ClubType::SocialCircle,
                                                      ClubType::Hamlet};

double percent(std::size_t part, std::size_t whole) {
    if (whole == 0) return 0.0;
    return round_percent(100.0 * static_cast<double>(part) / static_cast<double>(whole));
}

TypeRow summarize(std::vector<std::size_t> sizes, std::size_t covered, std::size_t total_clubs,
                  std::size_t scope_nodes) {
    TypeRow row;
    row.count = sizes.size();
    row.percent = percent(row.count, total_clubs);
    row.coverage = percent(covered, scope_nodes);
    if (sizes.empty()) return row;
    std::sort(sizes.begin(), sizes.end());
    row.size_min = sizes.front();
    row.size_max = sizes.back();
    row.size_median = sizes[(sizes.size() - 1) / 2];
    return row;
}

}  // namespace

double round_percent(double value) {
    // The epsilon keeps values such as 12.25 (stored as 12.2499...) rounding up.
    return std::floor(value * 10.0 + 0.5 + 1e-9) / 10.0;
}

TypeDistribution type_distribution(std::span<const TwoClub> clubs, std::size_t scope_node_count) {
    std::array<std::vector<std::size_t>, kClubTypeCount> sizes;
    std::array<std::set<NodeId>, kClubTypeCount> members;
    std::vector<std::size_t> all_sizes;
    std::set<NodeId> all_members;
    for (const auto& c : clubs) {
        auto t = type_index(c.type);
        sizes[t].push_back(c.nodes.size());
        members[t].insert(c.nodes.begin(), c.nodes.end());
        all_sizes.push_back(c.nodes.size());
        all_members.insert(c.nodes.begin(), c.nodes.end());
    }

    TypeDistribution d;
    d.scope_nodes = scope_node_count;
    for (std::size_t t = 0; t < kClubTypeCount; ++t)
        d.by_type[t] = summarize(sizes[t], members[t].size(), clubs.size(), scope_node_count);
    d.total = summarize(all_sizes, all_members.size(), clubs.size(), scope_node_count);
    return d;
}

MembershipProfile membership(std::span<const TwoClub> clubs, NodeId node) {
    MembershipProfile p;
    p.node = node;
    std::array<std::size_t, kClubTypeCount> type_totals{};
    for (std::size_t i = 0; i < clubs.size(); ++i) {
        const auto& c = clubs[i];
        ++type_totals[type_index(c.type)];
        if (!std::binary_search(c.nodes.begin(), c.nodes.end(), node)) continue;
        p.clubs.push_back({i, c.type, c.nodes.size()});
        ++p.counts[type_index(c.type)];
    }
    for (std::size_t t = 0; t < kClubTypeCount; ++t)
        p.percent_of_type[t] = percent(p.counts[t], type_totals[t]);
    return p;
}

std::vector<TwoClub> clubs_containing(std::span<const TwoClub> clubs, NodeId node) {
    std::vector<TwoClub> out;
    for (const auto& c : clubs)
        if (std::binary_search(c.nodes.begin(), c.nodes.end(), node)) out.push_back(c);
    return out;
}

CoMembership co_membership(std::span<const TwoClub> clubs, NodeId u, NodeId v) {
    if (u == v) throw std::invalid_argument("co_membership: nodes must differ");
    CoMembership c;
    c.u = u;
    c.v = v;
    std::array<std::size_t, kClubTypeCount> with_v{};
    for (const auto& club : clubs) {
        bool has_u = std::binary_search(club.nodes.begin(), club.nodes.end(), u);
        bool has_v = std::binary_search(club.nodes.begin(), club.nodes.end(), v);
        auto t = type_index(club.type);
        if (has_u && has_v) ++c.both[t];
        else if (has_u) ++c.only_u[t];
        else if (has_v) ++c.only_v[t];
        if (has_u || has_v) ++c.either[t];
        if (has_v) ++with_v[t];
    }
    for (std::size_t t = 0; t < kClubTypeCount; ++t) c.both_percent_of_v[t] = percent(c.both[t], with_v[t]);
    return c;
}

std::string render_type_distribution(const TypeDistribution& d, const std::string& title) {
    std::string out = fmt::format("{}  (scope nodes: {}; % of total = share of all clubs in scope)\n", title,
                                  d.scope_nodes);
    out += fmt::format("{:<16}{:>10}{:>10}{:>8}{:>8}{:>8}{:>12}\n", "type", "count", "% total", "min",
                       "median", "max", "coverage %");
    auto line = [&](std::string_view name, const TypeRow& r) {
        out += fmt::format("{:<16}{:>10}{:>10.1f}{:>8}{:>8}{:>8}{:>12.1f}\n", name, r.count, r.percent,
                           r.size_min, r.size_median, r.size_max, r.coverage);
    };
    for (auto t : kTypes) line(to_string(t), d[t]);
    line("total", d.total);
    return out;
}

std::string render_membership(const Graph& g, const MembershipProfile& p) {
    std::string out = fmt::format("node {}: member of {} clubs (% of type = share of that type's clubs)\n",
                                  g.label(p.node), p.total());
    for (auto t : kTypes) {
        auto i = type_index(t);
        out += fmt::format("  {:<16}{:>6}{:>8.1f}%\n", to_string(t), p.counts[i], p.percent_of_type[i]);
    }
    return out;
}

std::string render_co_membership(const Graph& g, const CoMembership& c) {
    std::string out = fmt::format("nodes {} and {} (both % = share of clubs containing {})\n", g.label(c.u),
                                  g.label(c.v), g.label(c.v));
    out += fmt::format("  {:<16}{:>8}{:>8}{:>8}{:>8}{:>9}\n", "type", "only " + g.label(c.u),
                       "only " + g.label(c.v), "both", "either", "both %");
    for (auto t : kTypes) {
        auto i = type_index(t);
        out += fmt::format("  {:<16}{:>8}{:>8}{:>8}{:>8}{:>8.1f}%\n", to_string(t), c.only_u[i], c.only_v[i],
                           c.both[i], c.either[i], c.both_percent_of_v[i]);
    }
    out += fmt::format("  {:<16}{:>8}{:>8}{:>8}{:>8}\n", "total", CoMembership::sum(c.only_u),
                       CoMembership::sum(c.only_v), CoMembership::sum(c.both), CoMembership::sum(c.either));
    return out;
}

}  // namespace borough
