#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "borough/errors.hpp"
#include "borough/graph.hpp"

namespace borough {

inline constexpr std::size_t kDefaultCycleCap = 50'000'000;

/// An induced cycle of length 3, 4 or 5.
///
/// Canonical rotation: the smallest node first, followed by the smaller of its
/// two cycle neighbours.
struct Cycle {
    std::vector<NodeId> nodes;

    std::size_t length() const noexcept { return nodes.size(); }
    std::vector<Edge> edges() const;  // sorted

    auto operator<=>(const Cycle&) const = default;
};

class CycleCapExceeded : public ResourceLimitError {
public:
    using ResourceLimitError::ResourceLimitError;
};

/// Rotates and orients a cyclic node sequence into canonical form.
Cycle canonical_cycle(std::vector<NodeId> nodes);

/// True when `nodes`, read cyclically, is a chordless cycle of g.
bool is_induced_cycle(const Graph& g, std::span<const NodeId> nodes);

/// Every induced C3, C4 and C5 of g, canonical and sorted.
///
/// Paths are grown from each edge (s, t) with s the smallest node on the path;
/// a candidate node adjacent to any interior path node is rejected, so only
/// chordless cycles close. Throws CycleCapExceeded past `cap` cycles.
std::vector<Cycle> enumerate_basic_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// Union of the edge sets of `cycles`, sorted.
std::vector<Edge> basic_edges(std::span<const Cycle> cycles);

}  // namespace borough
