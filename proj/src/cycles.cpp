#include "borough/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace borough {

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    out.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out.emplace_back(nodes[i], nodes[(i + 1) % nodes.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

Cycle canonical_cycle(std::vector<NodeId> nodes) {
    if (nodes.size() < 3) throw std::invalid_argument("a cycle needs at least 3 nodes");
    auto min_it = std::min_element(nodes.begin(), nodes.end());
    std::rotate(nodes.begin(), min_it, nodes.end());
    if (nodes.back() < nodes[1]) std::reverse(nodes.begin() + 1, nodes.end());
    return Cycle{std::move(nodes)};
}

bool is_induced_cycle(const Graph& g, std::span<const NodeId> nodes) {
    const std::size_t len = nodes.size();
    if (len < 3) return false;
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(nodes[i], nodes[j]) != consecutive) return false;
        }
    }
    return true;
}

std::vector<Cycle> enumerate_basic_cycles(const Graph& g, std::size_t cap) {
    std::vector<Cycle> out;
    std::vector<NodeId> path;
    path.reserve(5);

    // path[0] is the smallest node; every extension must stay chordless with
    // respect to path[1..k-1] and may touch path[0] only to close the cycle.
    auto extend = [&](auto&& self) -> void {
        const NodeId start = path.front();
        const NodeId tail = path.back();
        for (NodeId w : g.neighbors(tail)) {
            if (w <= start) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (path[i] == w || g.has_edge(path[i], w)) {
                    chord = true;
                    break;
                }
            }
            if (chord || w == tail) continue;
            if (g.has_edge(start, w)) {
                // Closing here; each cycle is reported once, in the direction
                // where path[1] < last node.
                if (path.size() >= 2 && path[1] < w) {
                    if (out.size() >= cap)
                        throw CycleCapExceeded("basic cycle count exceeds cap of " + std::to_string(cap));
                    std::vector<NodeId> nodes(path);
                    nodes.push_back(w);
                    out.push_back(Cycle{std::move(nodes)});
                }
                continue;
            }
            if (path.size() + 1 < 5) {
                path.push_back(w);
                self(self);
                path.pop_back();
            }
        }
    };

    for (NodeId s = 0; s < g.node_count(); ++s) {
        for (NodeId t : g.neighbors(s)) {
            if (t <= s) continue;
            path = {s, t};
            extend(extend);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> basic_edges(std::span<const Cycle> cycles) {
    std::vector<Edge> out;
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.nodes.size(); ++i)
            out.emplace_back(c.nodes[i], c.nodes[(i + 1) % c.nodes.size()]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace borough
