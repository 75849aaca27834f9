// borough: borough detection and 2-club enumeration for edge-list graphs.
//
// Exit codes: 0 success, 1 parse/usage error, 2 resource budget exceeded,
// 3 internal invariant violation.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "borough/io.hpp"

namespace {

using namespace borough;

enum ExitCode { kOk = 0, kParseError = 1, kBudgetExceeded = 2, kInvariant = 3 };

struct GlobalOptions {
    std::uint64_t branch_budget = kDefaultBranchBudget;
    std::size_t cycle_cap = kDefaultCycleCap;
    std::string seed_order = "label";
};

Config make_config(const GlobalOptions& opts) {
    Config c;
    c.branch_budget = opts.branch_budget;
    c.cycle_cap = opts.cycle_cap;
    c.seed_order = opts.seed_order == "degree" ? SeedOrder::Degree : SeedOrder::Label;
    return c;
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

std::string borough_text(const Analysis& a) {
    const Graph& g = a.graph;
    std::string out = fmt::format("graph: {} nodes, {} edges, {} components, {} basic cycles\n", g.node_count(),
                                  g.edge_count(), a.components.size(), a.cycles.size());
    out += fmt::format("boroughs: {}\n", a.boroughs.size());
    for (const auto& b : a.boroughs) {
        std::vector<std::string> labels;
        for (NodeId v : b.nodes) labels.push_back(g.label(v));
        out += fmt::format("  borough {}: {} nodes, {} edges, {} cycles, diameter {}\n    nodes: {}\n", b.id,
                           b.nodes.size(), b.edges.size(), b.cycle_ids.size(), b.diameter,
                           fmt::join(labels, " "));
    }
    out += fmt::format("outback: {} edges ({} bridges, {} on long cycles only)\n",
                       a.outback.non_basic_edges.size(), a.outback.bridges.size(),
                       a.outback.long_cycle_edges.size());
    if (!a.touch.between_boroughs.empty()) {
        out += "touch points between boroughs:\n";
        for (const auto& [v, ids] : a.touch.between_boroughs)
            out += fmt::format("  {}: boroughs {}\n", g.label(v), fmt::join(ids, ","));
    }
    if (!a.touch.with_outback.empty()) {
        out += "touch points with the outback:\n";
        for (const auto& [v, ids] : a.touch.with_outback)
            out += fmt::format("  {}: boroughs {}\n", g.label(v), fmt::join(ids, ","));
    }
    return out;
}

std::string clubs_text(const Analysis& a) {
    const Graph& g = a.graph;
    std::string out;
    for (const auto& s : a.scopes) {
        out += fmt::format("{} ({} nodes): {} clubs\n", scope_name(s.borough), s.scope_nodes, s.clubs.size());
        for (const auto& c : s.clubs) {
            std::vector<std::string> members, centers, pairs;
            for (NodeId v : c.nodes) members.push_back(g.label(v));
            for (NodeId v : c.centers) centers.push_back(g.label(v));
            for (const Edge& e : c.central_pairs) pairs.push_back(g.label(e.u) + "-" + g.label(e.v));
            std::string extra;
            if (!centers.empty()) extra = fmt::format(" centers [{}]", fmt::join(centers, ", "));
            if (!pairs.empty()) extra = fmt::format(" central pairs [{}]", fmt::join(pairs, ", "));
            out += fmt::format("  {:<14}{:>4}{}  [{}]{}\n", to_string(c.type), c.nodes.size(),
                               c.separable ? " sep" : "    ", fmt::join(members, ", "), extra);
        }
    }
    return out;
}

NodeId require_node(const Graph& g, const std::string& label) {
    auto id = g.find(label);
    if (!id) throw std::invalid_argument("unknown node '" + label + "'");
    return *id;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borough detection and 2-club enumeration for simple undirected graphs"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--branch-budget", global.branch_budget, "Max branch expansions per 2-club scope")
        ->capture_default_str();
    app.add_option("--cycle-cap", global.cycle_cap, "Max number of stored basic cycles")->capture_default_str();
    app.add_option("--seed-order", global.seed_order, "Seed order for enumeration")
        ->check(CLI::IsMember({"label", "degree"}))
        ->capture_default_str();
    app.fallthrough();

    std::string file;
    std::string format = "text";
    std::string scope = "all";
    std::size_t min_nodes = 3;
    std::size_t min_edges = 3;

    auto* boroughs_cmd = app.add_subcommand("boroughs", "Detect boroughs, outback and touch points");
    boroughs_cmd->add_option("file", file, "Edge-list file")->required();
    boroughs_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();

    auto* clubs_cmd = app.add_subcommand("clubs", "Enumerate and classify all maximal 2-clubs");
    clubs_cmd->add_option("file", file, "Edge-list file")->required();
    clubs_cmd->add_option("--scope", scope, "all | global | borough=<id>[,<id>...]")->capture_default_str();
    clubs_cmd->add_option("--min-nodes", min_nodes, "Minimum club size")->capture_default_str();
    clubs_cmd->add_option("--min-edges", min_edges, "Minimum induced edge count")->capture_default_str();
    clubs_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}))
        ->capture_default_str();

    auto* stats_cmd = app.add_subcommand("stats", "Type distribution tables per scope");
    stats_cmd->add_option("file", file, "Edge-list file")->required();
    stats_cmd->add_option("--scope", scope, "all | global | borough=<id>[,<id>...]")->capture_default_str();

    std::vector<std::string> query_nodes;
    auto* query_cmd = app.add_subcommand("query", "Membership and co-membership profiles");
    query_cmd->add_option("file", file, "Edge-list file")->required();
    query_cmd
        ->add_option("--node", query_nodes,
                     "Node label; repeat for co-membership (a third --node restricts to the first node's clubs)")
        ->required()
        ->expected(1, 3);
    query_cmd->add_option("--scope", scope, "all | global | borough=<id>[,<id>...]")->capture_default_str();

    std::string out_path;
    std::size_t threshold = 1;
    auto* project_cmd = app.add_subcommand("project", "Threshold projection of an actor-item pair file");
    project_cmd->add_option("file", file, "Bipartite pair file (actor item per line)")->required();
    project_cmd->add_option("--threshold", threshold, "Minimum shared items per edge")
        ->required()
        ->check(CLI::PositiveNumber);
    project_cmd->add_option("--out", out_path, "Output edge-list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    try {
        Config config = make_config(global);

        if (*project_cmd) {
            std::vector<std::pair<std::string, std::string>> pairs;
            for (auto& p : parse_pairs(read_file(file))) pairs.emplace_back(std::move(p.a), std::move(p.b));
            Graph g = project_bipartite(pairs, threshold);
            write_file_atomic(out_path, write_edge_list(g));
            std::cout << fmt::format("projected {} actors, {} edges at threshold {} -> {}\n", g.node_count(),
                                     g.edge_count(), threshold, out_path);
            return kOk;
        }

        Graph g = load_graph(file);

        if (*boroughs_cmd) {
            config.scope.kind = ScopeSelection::Kind::Boroughs;  // no clubs
            Analysis a = analyze(std::move(g), config);
            if (format == "text")
                std::cout << borough_text(a);
            else
                std::cout << export_bundle(make_bundle(a), format == "json" ? ExportFormat::Json : ExportFormat::Dot);
            return kOk;
        }

        config.scope = ScopeSelection::parse(scope);
        config.min_club_nodes = min_nodes;
        config.min_club_edges = min_edges;
        Analysis a = analyze(std::move(g), config);
        const Graph& graph = a.graph;

        if (*clubs_cmd) {
            if (format == "text")
                std::cout << clubs_text(a);
            else if (format == "json")
                std::cout << export_json(make_bundle(a));
            else if (format == "csv")
                std::cout << export_csv(make_bundle(a));
            else
                std::cout << export_dot(make_bundle(a));
            return kOk;
        }

        if (*stats_cmd) {
            for (const auto& s : a.scopes)
                std::cout << render_type_distribution(type_distribution(s.clubs, s.scope_nodes),
                                                      scope_name(s.borough))
                          << '\n';
            return kOk;
        }

        if (*query_cmd) {
            std::vector<TwoClub> clubs;
            for (const auto& s : a.scopes) clubs.insert(clubs.end(), s.clubs.begin(), s.clubs.end());
            std::vector<NodeId> ids;
            for (const auto& label : query_nodes) ids.push_back(require_node(graph, label));

            for (NodeId v : ids) std::cout << render_membership(graph, membership(clubs, v));
            if (ids.size() == 2) std::cout << render_co_membership(graph, co_membership(clubs, ids[0], ids[1]));
            if (ids.size() == 3) {
                auto focus = clubs_containing(clubs, ids[0]);
                std::cout << "within the clubs of node " << graph.label(ids[0]) << ":\n"
                          << render_co_membership(graph, co_membership(focus, ids[1], ids[2]));
            }
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const IncompleteEnumeration& e) {
        std::cerr << "budget exceeded: " << e.what() << " (" << e.partial().size() << " partial clubs)\n";
        return kBudgetExceeded;
    } catch (const ResourceLimitError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseError;
    }
    return kOk;
}
