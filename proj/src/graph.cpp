#include "borough/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

namespace borough {

namespace {

std::optional<long long> parse_integer(const std::string& s) {
    long long value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || s.empty()) return std::nullopt;
    return value;
}

}  // namespace

void sort_labels(std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        if (!parse_integer(l)) {
            std::sort(labels.begin(), labels.end());
            return;
        }
    }
    std::sort(labels.begin(), labels.end(), [](const std::string& x, const std::string& y) {
        auto a = *parse_integer(x);
        auto b = *parse_integer(y);
        if (a != b) return a < b;
        return x < y;
    });
}

Graph Graph::from_labeled_edges(std::span<const LabeledEdge> edges) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.a == e.b) {
            std::size_t line = e.line ? e.line : i + 1;
            throw GraphError("self-loop '" + e.a + "' on line " + std::to_string(line), line);
        }
        seen.insert(e.a);
        seen.insert(e.b);
    }
    std::vector<std::string> labels(seen.begin(), seen.end());
    sort_labels(labels);

    std::unordered_map<std::string, NodeId> index;
    for (NodeId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

    std::vector<Edge> indexed;
    indexed.reserve(edges.size());
    for (const auto& e : edges) indexed.emplace_back(index.at(e.a), index.at(e.b));
    const std::size_t n = labels.size();
    return from_index_edges(n, indexed, std::move(labels));
}

Graph Graph::from_index_edges(std::size_t n, std::span<const Edge> edges,
                              std::vector<std::string> labels) {
    Graph g;
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) throw std::invalid_argument("label count does not match node count");

    g.adjacency_.assign(n, {});
    for (const auto& e : edges) {
        if (e.u == e.v) throw GraphError("self-loop on node " + std::to_string(e.u), 0);
        if (e.v >= n) throw std::out_of_range("edge endpoint out of range");
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        degree_sum += adj.size();
    }
    g.edge_count_ = degree_sum / 2;

    g.labels_ = std::move(labels);
    g.index_.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
        if (!g.index_.emplace(g.labels_[i], i).second)
            throw std::invalid_argument("duplicate node label '" + g.labels_[i] + "'");
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& adj = adjacency_.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (NodeId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(std::span<const std::pair<std::string, std::string>> edges) {
    std::vector<LabeledEdge> labeled;
    labeled.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        labeled.push_back({edges[i].first, edges[i].second, i + 1});
    return Graph::from_labeled_edges(labeled);
}

DistanceRow bfs_distances(const Graph& g, NodeId source) {
    if (source >= g.node_count()) throw std::out_of_range("source node out of range");
    DistanceRow row{source, std::vector<HopCount>(g.node_count(), kUnreachable)};
    std::deque<NodeId> queue{source};
    row.dist[source] = 0;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(u)) {
            if (row.dist[w] == kUnreachable) {
                row.dist[w] = row.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return row;
}

HopCount diameter_of(const Graph& g, std::span<const NodeId> nodes) {
    if (nodes.empty()) throw std::invalid_argument("diameter_of: empty node set");
    constexpr NodeId kAbsent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> local(g.node_count(), kAbsent);
    for (NodeId i = 0; i < nodes.size(); ++i) {
        if (nodes[i] >= g.node_count()) throw std::out_of_range("node out of range");
        local[nodes[i]] = i;
    }

    HopCount diameter = 0;
    std::vector<HopCount> dist(nodes.size());
    std::vector<NodeId> queue;
    queue.reserve(nodes.size());
    for (NodeId s = 0; s < nodes.size(); ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId x = queue[head];
            for (NodeId w : g.neighbors(nodes[x])) {
                NodeId lw = local[w];
                if (lw != kAbsent && dist[lw] == kUnreachable) {
                    dist[lw] = dist[x] + 1;
                    queue.push_back(lw);
                }
            }
        }
        if (queue.size() != nodes.size()) return kUnreachable;
        diameter = std::max(diameter, dist[queue.back()]);
    }
    return diameter;
}

HopCount diameter_of(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("diameter_of: empty graph");
    HopCount diameter = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        auto row = bfs_distances(g, s);
        for (HopCount d : row.dist) {
            if (d == kUnreachable) return kUnreachable;
            diameter = std::max(diameter, d);
        }
    }
    return diameter;
}

BicomponentDecomposition bicomponents(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> order(n, 0), low(n, 0);
    std::vector<NodeId> parent(n, 0);
    std::vector<std::size_t> next_child(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<int> block_count(n, 0);
    BicomponentDecomposition out;
    std::uint32_t counter = 0;

    auto pop_block = [&](const Edge& until) {
        Bicomponent block;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.edges.push_back(e);
            block.nodes.push_back(e.u);
            block.nodes.push_back(e.v);
            if (e == until) break;
        }
        std::sort(block.edges.begin(), block.edges.end());
        std::sort(block.nodes.begin(), block.nodes.end());
        block.nodes.erase(std::unique(block.nodes.begin(), block.nodes.end()), block.nodes.end());
        for (NodeId v : block.nodes) ++block_count[v];
        out.components.push_back(std::move(block));
    };

    for (NodeId root = 0; root < n; ++root) {
        if (order[root] != 0) continue;
        order[root] = low[root] = ++counter;
        parent[root] = root;
        std::vector<NodeId> stack{root};
        while (!stack.empty()) {
            NodeId u = stack.back();
            auto adj = g.neighbors(u);
            if (next_child[u] < adj.size()) {
                NodeId w = adj[next_child[u]++];
                if (order[w] == 0) {
                    edge_stack.emplace_back(u, w);
                    parent[w] = u;
                    order[w] = low[w] = ++counter;
                    stack.push_back(w);
                } else if (w != parent[u] && order[w] < order[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], order[w]);
                }
                continue;
            }
            stack.pop_back();
            if (u == root) continue;
            NodeId p = parent[u];
            low[p] = std::min(low[p], low[u]);
            if (low[u] >= order[p]) pop_block(Edge(p, u));
        }
    }

    for (NodeId v = 0; v < n; ++v)
        if (block_count[v] >= 2) out.cutpoints.push_back(v);
    return out;
}

std::vector<NodeId> closed_k_neighborhood(const Graph& g, NodeId u, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("closed_k_neighborhood: k must be 1 or 2");
    std::vector<NodeId> out{u};
    for (NodeId w : g.neighbors(u)) {
        out.push_back(w);
        if (k == 2)
            for (NodeId x : g.neighbors(w)) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::vector<bool> seen(g.node_count(), false);
    std::vector<std::vector<NodeId>> out;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (NodeId w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

Subgraph reindex(const Graph& g, std::vector<NodeId> nodes, std::span<const Edge> edges) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::unordered_map<NodeId, NodeId> local;
    std::vector<std::string> labels;
    labels.reserve(nodes.size());
    for (NodeId i = 0; i < nodes.size(); ++i) {
        local.emplace(nodes[i], i);
        labels.push_back(g.label(nodes[i]));
    }
    std::vector<Edge> local_edges;
    local_edges.reserve(edges.size());
    for (const auto& e : edges) local_edges.emplace_back(local.at(e.u), local.at(e.v));
    return {Graph::from_index_edges(nodes.size(), local_edges, std::move(labels)), std::move(nodes)};
}

}  // namespace

Subgraph edge_induced_subgraph(const Graph& g, std::span<const Edge> edges) {
    std::vector<NodeId> nodes;
    nodes.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge not in host graph");
        nodes.push_back(e.u);
        nodes.push_back(e.v);
    }
    return reindex(g, std::move(nodes), edges);
}

Subgraph node_induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> edges;
    for (NodeId u : sorted)
        for (NodeId w : g.neighbors(u))
            if (u < w && std::binary_search(sorted.begin(), sorted.end(), w)) edges.emplace_back(u, w);
    return reindex(g, std::move(sorted), edges);
}

}  // namespace borough
