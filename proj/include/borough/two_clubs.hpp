#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "borough/boroughs.hpp"
#include "borough/errors.hpp"
#include "borough/graph.hpp"

namespace borough {

enum class ClubType { Coterie, SocialCircle, Hamlet };

inline constexpr std::size_t kClubTypeCount = 3;

std::string_view to_string(ClubType t);
std::optional<ClubType> parse_club_type(std::string_view s);

/// A maximal induced subgraph of diameter at most 2, with its classification.
///
/// Coteries have at least one universal node (`centers`, which form a
/// clique). Social circles have none, but at least one edge whose endpoints
/// together dominate the club (`central_pairs`). Hamlets have neither. Only a
/// coterie with a single center can be separable.
struct TwoClub {
    std::vector<NodeId> nodes;  // sorted, in host-graph indices
    ClubType type = ClubType::Hamlet;
    bool separable = false;
    std::vector<NodeId> centers;
    std::vector<Edge> central_pairs;
    std::optional<std::size_t> borough;  // nullopt for the whole-graph scope

    bool operator==(const TwoClub&) const = default;
};

struct Classification {
    ClubType type = ClubType::Hamlet;
    std::vector<NodeId> centers;
    std::vector<Edge> central_pairs;
    bool separable = false;
};

enum class SeedOrder { Label, Degree };

inline constexpr std::uint64_t kDefaultBranchBudget = 10'000'000;

struct EnumerationConfig {
    std::size_t min_nodes = 3;
    std::size_t min_edges = 3;
    std::uint64_t branch_budget = kDefaultBranchBudget;
    SeedOrder seed_order = SeedOrder::Label;
};

/// Thrown when the branch budget runs out. Carries every club collected so
/// far; these are 2-clubs but neither complete nor guaranteed maximal.
class IncompleteEnumeration : public ResourceLimitError {
public:
    IncompleteEnumeration(const std::string& what, std::vector<TwoClub> partial)
        : ResourceLimitError(what), partial_(std::move(partial)) {}
    const std::vector<TwoClub>& partial() const noexcept { return partial_; }

private:
    std::vector<TwoClub> partial_;
};

/// Connected with diameter <= 2, distances taken inside the induced subgraph.
bool is_two_club(const Graph& g, std::span<const NodeId> nodes);

/// Number of edges of g with both endpoints in `nodes` (sorted).
std::size_t induced_edge_count(const Graph& g, std::span<const NodeId> nodes);

/// Types a 2-club. Throws std::invalid_argument if `nodes` is not one.
Classification classify(const Graph& g, std::span<const NodeId> nodes);

/// All maximal 2-clubs of g passing the size floor, classified and sorted by
/// (size, nodes).
///
/// Each node u seeds a search over its closed 2-neighbourhood. A candidate set
/// with a pair at induced distance > 2 branches into "drop one endpoint" and
/// "drop the other" (u is never dropped). Visited sets are memoised and sets
/// inside an already collected club are pruned. Survivors are filtered for
/// strict containment and re-checked against one-node extensions.
std::vector<TwoClub> enumerate_two_clubs(const Graph& g, const EnumerationConfig& config = {});

/// Same, with the borough's edge-induced subgraph as the scope. Results are in
/// host indices and tagged with the borough id.
std::vector<TwoClub> enumerate_two_clubs(const Graph& g, const Borough& scope,
                                         const EnumerationConfig& config = {});

inline constexpr std::size_t kBruteForceNodeLimit = 16;

/// Exhaustive subset scan, used as an oracle. Refuses graphs above 16 nodes.
/// Classification here goes through eccentricities rather than classify().
std::vector<TwoClub> brute_force_two_clubs(const Graph& g, std::size_t min_nodes = 3,
                                           std::size_t min_edges = 3);

struct Discrepancy {
    enum class Kind {
        MissingInBorough,  // a global hamlet/social circle not found in any borough
        MissingInGraph,    // a borough hamlet/social circle not found globally
        OrphanCoterie,     // a borough coterie not covered by a global coterie with a shared center
    };
    Kind kind;
    std::vector<NodeId> nodes;
    std::optional<std::size_t> borough;
};

std::string_view to_string(Discrepancy::Kind k);

/// Cross-checks whole-graph clubs against per-borough clubs: hamlets and social
/// circles must match as sets; every borough coterie must be a global coterie
/// or lie inside one that shares a center.
std::vector<Discrepancy> reconcile_with_graph(std::span<const TwoClub> global_clubs,
                                              std::span<const TwoClub> borough_clubs);

}  // namespace borough
