#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "borough/boroughs.hpp"
#include "borough/cycles.hpp"
#include "borough/graph.hpp"
#include "borough/reports.hpp"
#include "borough/two_clubs.hpp"

namespace borough {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Two whitespace-separated tokens per line; '#' comments and blank lines skipped.
std::vector<LabeledEdge> parse_pairs(std::string_view text);

/// Parses an edge list. Wrong token counts and self-loops raise ParseError.
Graph parse_edge_list(std::string_view text);

/// Actor-actor graph: an edge wherever two actors share at least `threshold`
/// items. Actors without such an edge are omitted.
Graph project_bipartite(std::span<const std::pair<std::string, std::string>> actor_item,
                        std::size_t threshold);

/// Edge list text in label order, readable by parse_edge_list.
std::string write_edge_list(const Graph& g);

std::string read_file(const std::filesystem::path& path);

/// Writes via a temporary sibling file and rename, so readers never see a
/// partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

struct ScopeSelection {
    enum class Kind { AllBoroughs, Global, Boroughs };
    Kind kind = Kind::AllBoroughs;
    std::vector<std::size_t> borough_ids;  // for Kind::Boroughs

    /// "all", "global", or "borough=<id>[,<id>...]".
    static ScopeSelection parse(std::string_view text);
};

struct Config {
    std::size_t min_club_nodes = 3;
    std::size_t min_club_edges = 3;
    std::size_t cycle_cap = kDefaultCycleCap;
    std::uint64_t branch_budget = kDefaultBranchBudget;
    ScopeSelection scope;
    std::size_t threshold = 1;
    SeedOrder seed_order = SeedOrder::Label;

    EnumerationConfig enumeration() const {
        return {min_club_nodes, min_club_edges, branch_budget, seed_order};
    }
};

/// Clubs of one scope, in host-graph indices.
struct ScopeClubs {
    std::optional<std::size_t> borough;  // nullopt: whole graph
    std::size_t scope_nodes = 0;
    std::vector<TwoClub> clubs;
};

/// Everything the pipeline computes, in internal indices.
struct Analysis {
    Graph graph;
    std::vector<std::vector<NodeId>> components;
    std::vector<HopCount> component_diameters;
    std::vector<Cycle> cycles;
    std::vector<Borough> boroughs;
    OutbackReport outback;
    TouchPoints touch;
    std::vector<ScopeClubs> scopes;
};

/// Components, basic cycles, boroughs, outback, then 2-clubs per selected
/// scope. Resource errors are rethrown with the scope named.
Analysis analyze(Graph g, const Config& config);

/// Label-based, serialisable view of an Analysis.
struct AnalysisBundle {
    struct Component {
        std::vector<std::string> nodes;
        std::optional<std::uint32_t> diameter;  // always set for a connected component
        bool operator==(const Component&) const = default;
    };
    struct BoroughRecord {
        std::size_t id = 0;
        std::vector<std::string> nodes;
        std::vector<std::pair<std::string, std::string>> edges;
        std::uint32_t diameter = 0;
        std::size_t cycle_count = 0;
        std::vector<std::string> touch_points;
        bool operator==(const BoroughRecord&) const = default;
    };
    struct Outback {
        std::vector<std::pair<std::string, std::string>> bridges;
        std::vector<std::pair<std::string, std::string>> long_cycle_edges;
        std::vector<std::string> touch_points;
        bool operator==(const Outback&) const = default;
    };
    struct ClubRecord {
        std::string scope;  // "global" or "borough:<id>"
        std::string type;
        std::vector<std::string> nodes;
        bool separable = false;
        std::vector<std::string> centers;
        std::vector<std::pair<std::string, std::string>> central_pairs;
        bool operator==(const ClubRecord&) const = default;
    };
    struct ScopeReport {
        std::string scope;
        TypeDistribution distribution;
        bool operator==(const ScopeReport&) const = default;
    };

    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::vector<Component> components;
    std::vector<BoroughRecord> boroughs;
    Outback outback;
    std::vector<ClubRecord> clubs;
    std::vector<ScopeReport> reports;

    bool operator==(const AnalysisBundle&) const = default;
};

std::string scope_name(std::optional<std::size_t> borough);

AnalysisBundle make_bundle(const Analysis& a);

AnalysisBundle run_pipeline(const Graph& g, const Config& config);

enum class ExportFormat { Json, Csv, Dot };

std::string export_bundle(const AnalysisBundle& bundle, ExportFormat format);
std::string export_json(const AnalysisBundle& bundle);
std::string export_csv(const AnalysisBundle& bundle);
std::string export_dot(const AnalysisBundle& bundle);

/// Inverse of export_json.
AnalysisBundle parse_bundle_json(std::string_view text);

}  // namespace borough
