#include "borough/boroughs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace borough {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

}  // namespace

std::vector<Borough> detect_boroughs(const Graph& g, std::span<const Cycle> cycles) {
    DisjointSets sets(cycles.size());
    std::unordered_map<Edge, std::size_t, EdgeHash> first_cycle_on_edge;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (const Edge& e : cycles[c].edges()) {
            auto [it, inserted] = first_cycle_on_edge.emplace(e, c);
            if (!inserted) sets.unite(it->second, c);
        }
    }

    std::unordered_map<std::size_t, std::size_t> class_index;
    std::vector<Borough> out;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        auto [it, inserted] = class_index.emplace(sets.find(c), out.size());
        if (inserted) out.emplace_back();
        out[it->second].cycle_ids.push_back(c);
    }

    for (auto& b : out) {
        for (std::size_t c : b.cycle_ids)
            for (const Edge& e : cycles[c].edges()) b.edges.push_back(e);
        std::sort(b.edges.begin(), b.edges.end());
        b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
        for (const Edge& e : b.edges) {
            b.nodes.push_back(e.u);
            b.nodes.push_back(e.v);
        }
        std::sort(b.nodes.begin(), b.nodes.end());
        b.nodes.erase(std::unique(b.nodes.begin(), b.nodes.end()), b.nodes.end());
        b.diameter = borough_diameter(g, b);
    }

    std::sort(out.begin(), out.end(), [](const Borough& a, const Borough& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
        return a.nodes < b.nodes;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i;
    return out;
}

std::vector<Borough> detect_boroughs(const Graph& g) {
    auto cycles = enumerate_basic_cycles(g);
    return detect_boroughs(g, cycles);
}

OutbackReport outback(const Graph& g, std::span<const Borough> boroughs) {
    std::vector<Edge> basic;
    for (const auto& b : boroughs) basic.insert(basic.end(), b.edges.begin(), b.edges.end());
    std::sort(basic.begin(), basic.end());

    std::vector<Edge> bridge_set;
    for (const auto& block : bicomponents(g).components)
        if (block.edges.size() == 1) bridge_set.push_back(block.edges.front());
    std::sort(bridge_set.begin(), bridge_set.end());

    OutbackReport report;
    for (const Edge& e : g.edges()) {
        if (std::binary_search(basic.begin(), basic.end(), e)) continue;
        report.non_basic_edges.push_back(e);
        if (std::binary_search(bridge_set.begin(), bridge_set.end(), e))
            report.bridges.push_back(e);
        else
            report.long_cycle_edges.push_back(e);
    }
    return report;
}

TouchPoints touch_points(std::span<const Borough> boroughs, std::span<const Edge> outback_edges) {
    std::map<NodeId, std::vector<std::size_t>> membership;
    for (const auto& b : boroughs)
        for (NodeId v : b.nodes) membership[v].push_back(b.id);

    TouchPoints out;
    for (auto& [node, ids] : membership) {
        std::sort(ids.begin(), ids.end());
        if (ids.size() >= 2) out.between_boroughs.emplace(node, ids);
    }
    for (const Edge& e : outback_edges) {
        for (NodeId v : {e.u, e.v}) {
            auto it = membership.find(v);
            if (it != membership.end()) out.with_outback.emplace(v, it->second);
        }
    }
    return out;
}

HopCount borough_diameter(const Graph& g, const Borough& b) {
    if (b.edges.empty()) throw std::invalid_argument("borough has no edges");
    return diameter_of(edge_induced_subgraph(g, b.edges).graph);
}

DiameterDelta edge_removal_diameter_delta(const Graph& g, const Borough& b, Edge e) {
    auto it = std::lower_bound(b.edges.begin(), b.edges.end(), e);
    if (it == b.edges.end() || *it != e)
        throw std::invalid_argument("edge is not part of the borough");

    DiameterDelta delta;
    delta.before = borough_diameter(g, b);
    std::vector<Edge> remaining(b.edges.begin(), it);
    remaining.insert(remaining.end(), std::next(it), b.edges.end());
    // Removing an edge never drops a node of a borough: every node lies on a
    // basic cycle, so it keeps at least one other incident edge.
    delta.after = diameter_of(edge_induced_subgraph(g, remaining).graph);
    return delta;
}

}  // namespace borough
