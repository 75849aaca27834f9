#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace borough {

using NodeId = std::uint32_t;
using HopCount = std::uint32_t;

/// Distance sentinel for node pairs with no connecting path.
inline constexpr HopCount kUnreachable = std::numeric_limits<HopCount>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
    }
};

/// A labelled input edge. `line` is the 1-based source line, or 0 if unknown.
struct LabeledEdge {
    std::string a;
    std::string b;
    std::size_t line = 0;
};

class GraphError : public std::runtime_error {
public:
    GraphError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Immutable simple undirected graph over dense node indices 0..n-1.
///
/// Neighbour lists are sorted, so iteration order is deterministic. Each node
/// carries an external string label; labels sort numerically when every label
/// is an integer and lexicographically otherwise, and indices follow that
/// order.
class Graph {
public:
    Graph() = default;

    /// Builds from labelled pairs. Duplicates and reversed duplicates collapse;
    /// a self-loop raises GraphError naming the offending line.
    static Graph from_labeled_edges(std::span<const LabeledEdge> edges);

    /// Builds over nodes 0..n-1 with the given labels (defaults to "0".."n-1").
    static Graph from_index_edges(std::size_t n, std::span<const Edge> edges,
                                  std::vector<std::string> labels = {});

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId u) const { return adjacency_.at(u); }
    std::size_t degree(NodeId u) const { return adjacency_.at(u).size(); }
    bool has_edge(NodeId u, NodeId v) const;

    const std::string& label(NodeId u) const { return labels_.at(u); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeId> find(const std::string& label) const;

    /// All edges, sorted.
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::size_t edge_count_ = 0;
};

/// Convenience wrapper over Graph::from_labeled_edges for plain label pairs.
Graph build_graph(std::span<const std::pair<std::string, std::string>> edges);

/// Orders labels numerically if all parse as integers, else lexicographically.
void sort_labels(std::vector<std::string>& labels);

struct DistanceRow {
    NodeId source = 0;
    std::vector<HopCount> dist;
};

DistanceRow bfs_distances(const Graph& g, NodeId source);

/// Diameter of the subgraph induced by `nodes`, with distances measured inside
/// that subgraph. kUnreachable if it is disconnected. Throws on an empty set.
HopCount diameter_of(const Graph& g, std::span<const NodeId> nodes);

/// Diameter of the whole graph (kUnreachable if disconnected).
HopCount diameter_of(const Graph& g);

struct Bicomponent {
    std::vector<Edge> edges;  // sorted
    std::vector<NodeId> nodes;  // sorted
};

struct BicomponentDecomposition {
    std::vector<Bicomponent> components;
    std::vector<NodeId> cutpoints;  // sorted
};

/// Blocks of the graph by DFS low-link. Every edge lands in exactly one block;
/// a bridge forms a block of its own.
BicomponentDecomposition bicomponents(const Graph& g);

/// Closed k-neighbourhood {u} plus every node within k hops, sorted. k is 1 or 2.
std::vector<NodeId> closed_k_neighborhood(const Graph& g, NodeId u, int k);

/// Connected components as sorted node lists, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

/// Subgraph formed by an edge set, re-indexed locally. `to_host[i]` maps local
/// node i back to its host index; local order follows host order.
struct Subgraph {
    Graph graph;
    std::vector<NodeId> to_host;
};

Subgraph edge_induced_subgraph(const Graph& g, std::span<const Edge> edges);
Subgraph node_induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace borough
