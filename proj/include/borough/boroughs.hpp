#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "borough/cycles.hpp"
#include "borough/graph.hpp"

namespace borough {

/// A maximal edge-chained family of basic cycles, kept as an edge set.
struct Borough {
    std::size_t id = 0;
    std::vector<std::size_t> cycle_ids;  // indices into the basic-cycle list
    std::vector<Edge> edges;             // sorted
    std::vector<NodeId> nodes;           // sorted, derived from edges
    HopCount diameter = 0;               // over the edge-induced subgraph
};

/// Non-basic edges: those outside every borough.
struct OutbackReport {
    std::vector<Edge> non_basic_edges;
    std::vector<Edge> bridges;
    std::vector<Edge> long_cycle_edges;  // non-bridges whose shortest cycle is 6 or longer
};

struct TouchPoints {
    std::map<NodeId, std::vector<std::size_t>> between_boroughs;  // node -> borough ids (>= 2)
    std::map<NodeId, std::vector<std::size_t>> with_outback;      // node -> borough ids
};

struct DiameterDelta {
    HopCount before = 0;
    HopCount after = 0;
};

/// Unions basic cycles sharing an edge. Boroughs come back sorted by
/// descending node count, then by node list; ids follow that order.
std::vector<Borough> detect_boroughs(const Graph& g, std::span<const Cycle> cycles);
std::vector<Borough> detect_boroughs(const Graph& g);

OutbackReport outback(const Graph& g, std::span<const Borough> boroughs);

/// Nodes shared by two or more boroughs. When `outback_edges` is non-empty,
/// nodes shared between a borough and the outback are listed separately.
TouchPoints touch_points(std::span<const Borough> boroughs,
                         std::span<const Edge> outback_edges = {});

/// Diameter of the borough's edge-induced subgraph.
HopCount borough_diameter(const Graph& g, const Borough& b);

/// Diameters of the borough subgraph before and after deleting `e`.
DiameterDelta edge_removal_diameter_delta(const Graph& g, const Borough& b, Edge e);

}  // namespace borough
