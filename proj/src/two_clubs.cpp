#include "borough/two_clubs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace borough {

std::string_view to_string(ClubType t) {
    switch (t) {
        case ClubType::Coterie: return "coterie";
        case ClubType::SocialCircle: return "social_circle";
        case ClubType::Hamlet: return "hamlet";
    }
    return "unknown";
}

std::optional<ClubType> parse_club_type(std::string_view s) {
    if (s == "coterie") return ClubType::Coterie;
    if (s == "social_circle") return ClubType::SocialCircle;
    if (s == "hamlet") return ClubType::Hamlet;
    return std::nullopt;
}

std::string_view to_string(Discrepancy::Kind k) {
    switch (k) {
        case Discrepancy::Kind::MissingInBorough: return "missing_in_borough";
        case Discrepancy::Kind::MissingInGraph: return "missing_in_graph";
        case Discrepancy::Kind::OrphanCoterie: return "orphan_coterie";
    }
    return "unknown";
}

namespace {

/// Fixed-width bit set over local seed indices.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    void fill(std::size_t n) {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        if (n % 64) words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    }

    NodeSet& operator|=(const NodeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    static NodeSet intersect(const NodeSet& a, const NodeSet& b) {
        NodeSet r = a;
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
        return r;
    }

    /// Lowest index in *this but not in `other`, or npos.
    std::size_t first_missing_from(const NodeSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i] & ~other.words_[i];
            if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
        }
        return npos;
    }

    bool subset_of(const NodeSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const NodeSet&) const = default;

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
        return h;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

struct NodeSetHash {
    std::size_t operator()(const NodeSet& s) const noexcept { return s.hash(); }
};

bool is_sorted_subset(const std::vector<NodeId>& inner, const std::vector<NodeId>& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

TwoClub make_club(const Graph& g, std::vector<NodeId> nodes) {
    auto c = classify(g, nodes);
    TwoClub club;
    club.nodes = std::move(nodes);
    club.type = c.type;
    club.separable = c.separable;
    club.centers = std::move(c.centers);
    club.central_pairs = std::move(c.central_pairs);
    return club;
}

bool passes_floor(const Graph& g, const std::vector<NodeId>& nodes, const EnumerationConfig& config) {
    return nodes.size() >= config.min_nodes && induced_edge_count(g, nodes) >= config.min_edges;
}

std::vector<TwoClub> finalize(const Graph& g, const std::vector<std::vector<NodeId>>& sets,
                              const EnumerationConfig& config) {
    std::vector<TwoClub> out;
    for (const auto& s : sets)
        if (passes_floor(g, s, config)) out.push_back(make_club(g, s));
    std::sort(out.begin(), out.end(), [](const TwoClub& a, const TwoClub& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
        return a.nodes < b.nodes;
    });
    return out;
}

/// Enumeration over a whole graph, which is the scope. Indices are local to g.
class ClubEnumerator {
public:
    ClubEnumerator(const Graph& g, const EnumerationConfig& config)
        : g_(g), config_(config), clubs_by_node_(g.node_count()) {}

    std::vector<TwoClub> run() {
        if (g_.node_count() < 3)
            throw std::invalid_argument("2-club enumeration needs a scope of at least 3 nodes");

        std::vector<NodeId> seeds(g_.node_count());
        std::iota(seeds.begin(), seeds.end(), NodeId{0});
        if (config_.seed_order == SeedOrder::Degree) {
            std::stable_sort(seeds.begin(), seeds.end(),
                             [&](NodeId a, NodeId b) { return g_.degree(a) > g_.degree(b); });
        }
        for (NodeId u : seeds) search_from(u);

        auto maximal = maximal_only();
        verify_maximal(maximal);
        return finalize(g_, maximal, config_);
    }

private:
    void search_from(NodeId u) {
        const auto local_nodes = closed_k_neighborhood(g_, u, 2);
        const std::size_t k = local_nodes.size();
        std::vector<NodeId> to_local(g_.node_count(), kAbsent);
        for (NodeId i = 0; i < k; ++i) to_local[local_nodes[i]] = i;
        const std::size_t root = to_local[u];

        std::vector<NodeSet> adj(k, NodeSet(k));
        for (NodeId i = 0; i < k; ++i)
            for (NodeId w : g_.neighbors(local_nodes[i]))
                if (to_local[w] != kAbsent) adj[i].set(to_local[w]);

        // Clubs already containing u bound this whole search.
        std::vector<NodeSet> known;
        auto remember = [&](const std::vector<NodeId>& club) {
            NodeSet s(k);
            for (NodeId v : club) s.set(to_local[v]);
            known.push_back(std::move(s));
        };
        for (std::size_t id : clubs_by_node_[u]) remember(found_[id]);

        NodeSet full(k);
        full.fill(k);
        std::vector<NodeSet> stack{full};
        std::unordered_set<NodeSet, NodeSetHash> visited;

        while (!stack.empty()) {
            NodeSet s = std::move(stack.back());
            stack.pop_back();
            if (!visited.insert(s).second) continue;
            if (++expansions_ > config_.branch_budget) budget_exhausted();
            if (std::any_of(known.begin(), known.end(), [&](const NodeSet& r) { return s.subset_of(r); }))
                continue;

            auto [a, b] = conflict_pair(s, adj);
            if (a == NodeSet::npos) {
                std::vector<NodeId> club;
                s.for_each([&](std::size_t i) { club.push_back(local_nodes[i]); });
                record(club);
                remember(club);
                continue;
            }
            if (a != root) {
                NodeSet t = s;
                t.reset(a);
                stack.push_back(std::move(t));
            }
            if (b != root) {
                NodeSet t = s;
                t.reset(b);
                stack.push_back(std::move(t));
            }
        }
    }

    /// Lexicographically smallest pair of members at induced distance > 2.
    static std::pair<std::size_t, std::size_t> conflict_pair(const NodeSet& s,
                                                             const std::vector<NodeSet>& adj) {
        std::pair<std::size_t, std::size_t> result{NodeSet::npos, NodeSet::npos};
        bool done = false;
        s.for_each([&](std::size_t a) {
            if (done) return;
            NodeSet near = NodeSet::intersect(adj[a], s);
            NodeSet reach = near;
            reach.set(a);
            near.for_each([&](std::size_t x) { reach |= NodeSet::intersect(adj[x], s); });
            std::size_t b = s.first_missing_from(reach);
            if (b != NodeSet::npos) {
                result = {a, b};
                done = true;
            }
        });
        return result;
    }

    void record(const std::vector<NodeId>& club) {
        if (!found_set_.insert(club).second) return;
        std::size_t id = found_.size();
        found_.push_back(club);
        for (NodeId v : club) clubs_by_node_[v].push_back(id);
    }

    std::vector<std::vector<NodeId>> maximal_only() const {
        std::vector<std::vector<NodeId>> by_size = found_;
        std::stable_sort(by_size.begin(), by_size.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        std::vector<std::vector<NodeId>> kept;
        for (const auto& c : by_size) {
            bool contained = std::any_of(kept.begin(), kept.end(), [&](const auto& r) {
                return r.size() > c.size() && is_sorted_subset(c, r);
            });
            if (!contained) kept.push_back(c);
        }
        return kept;
    }

    void verify_maximal(const std::vector<std::vector<NodeId>>& clubs) const {
        for (const auto& c : clubs) {
            std::set<NodeId> boundary;
            for (NodeId v : c)
                for (NodeId w : g_.neighbors(v))
                    if (!std::binary_search(c.begin(), c.end(), w)) boundary.insert(w);
            for (NodeId x : boundary) {
                std::vector<NodeId> grown = c;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
                if (is_two_club(g_, grown))
                    throw InvariantViolation("enumerated 2-club is not maximal: extends by node '" +
                                             g_.label(x) + "'");
            }
        }
    }

    [[noreturn]] void budget_exhausted() const {
        throw IncompleteEnumeration(
            "2-club branch budget of " + std::to_string(config_.branch_budget) + " expansions exceeded; " +
                std::to_string(found_.size()) + " clubs collected so far (results incomplete)",
            finalize(g_, found_, config_));
    }

    static constexpr NodeId kAbsent = std::numeric_limits<NodeId>::max();

    const Graph& g_;
    const EnumerationConfig& config_;
    std::vector<std::vector<NodeId>> found_;
    std::set<std::vector<NodeId>> found_set_;
    std::vector<std::vector<std::size_t>> clubs_by_node_;
    std::uint64_t expansions_ = 0;
};

std::vector<TwoClub> to_host(std::vector<TwoClub> clubs, const std::vector<NodeId>& host,
                             std::optional<std::size_t> borough_id) {
    for (auto& c : clubs) {
        for (auto& v : c.nodes) v = host[v];
        for (auto& v : c.centers) v = host[v];
        for (auto& e : c.central_pairs) e = Edge(host[e.u], host[e.v]);
        c.borough = borough_id;
    }
    return clubs;
}

}  // namespace

bool is_two_club(const Graph& g, std::span<const NodeId> nodes) {
    if (nodes.empty()) return false;
    auto d = diameter_of(g, nodes);
    return d != kUnreachable && d <= 2;
}

std::size_t induced_edge_count(const Graph& g, std::span<const NodeId> nodes) {
    std::size_t count = 0;
    for (NodeId u : nodes)
        for (NodeId w : g.neighbors(u))
            if (u < w && std::binary_search(nodes.begin(), nodes.end(), w)) ++count;
    return count;
}

Classification classify(const Graph& g, std::span<const NodeId> nodes) {
    if (!is_two_club(g, nodes)) throw std::invalid_argument("classify: node set is not a 2-club");
    auto sub = node_induced_subgraph(g, nodes);
    const Graph& h = sub.graph;
    const std::size_t k = h.node_count();

    Classification out;
    for (NodeId v = 0; v < k; ++v)
        if (h.degree(v) + 1 == k) out.centers.push_back(sub.to_host[v]);

    if (!out.centers.empty()) {
        out.type = ClubType::Coterie;
    } else {
        for (const Edge& e : h.edges()) {
            std::vector<bool> covered(k, false);
            covered[e.u] = covered[e.v] = true;
            for (NodeId w : h.neighbors(e.u)) covered[w] = true;
            for (NodeId w : h.neighbors(e.v)) covered[w] = true;
            if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
                out.central_pairs.emplace_back(sub.to_host[e.u], sub.to_host[e.v]);
        }
        out.type = out.central_pairs.empty() ? ClubType::Hamlet : ClubType::SocialCircle;
    }

    out.separable = !bicomponents(h).cutpoints.empty();
    if (out.separable && (out.type != ClubType::Coterie || out.centers.size() != 1))
        throw InvariantViolation("separable 2-club without a single center");
    return out;
}

std::vector<TwoClub> enumerate_two_clubs(const Graph& g, const EnumerationConfig& config) {
    return ClubEnumerator(g, config).run();
}

std::vector<TwoClub> enumerate_two_clubs(const Graph& g, const Borough& scope,
                                         const EnumerationConfig& config) {
    auto sub = edge_induced_subgraph(g, scope.edges);
    try {
        return to_host(ClubEnumerator(sub.graph, config).run(), sub.to_host, scope.id);
    } catch (const IncompleteEnumeration& e) {
        throw IncompleteEnumeration("borough " + std::to_string(scope.id) + ": " + e.what(),
                                    to_host(e.partial(), sub.to_host, scope.id));
    }
}

std::vector<TwoClub> brute_force_two_clubs(const Graph& g, std::size_t min_nodes, std::size_t min_edges) {
    const std::size_t n = g.node_count();
    if (n > kBruteForceNodeLimit)
        throw std::invalid_argument("brute_force_two_clubs: graph exceeds 16 nodes");

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1U << e.v;
        adj[e.v] |= 1U << e.u;
    }
    auto bits_of = [](std::uint32_t mask) {
        std::vector<NodeId> out;
        for (NodeId i = 0; mask; ++i, mask >>= 1)
            if (mask & 1U) out.push_back(i);
        return out;
    };
    auto diameter_at_most_two = [&](std::uint32_t mask) {
        for (NodeId a : bits_of(mask)) {
            std::uint32_t reach = (adj[a] & mask) | (1U << a);
            for (NodeId x : bits_of(adj[a] & mask)) reach |= adj[x] & mask;
            if (reach != mask) return false;
        }
        return true;
    };

    std::vector<std::uint32_t> clubs;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask)
        if (diameter_at_most_two(mask)) clubs.push_back(mask);
    std::stable_sort(clubs.begin(), clubs.end(),
                     [](auto a, auto b) { return std::popcount(a) > std::popcount(b); });
    std::vector<std::uint32_t> maximal;
    for (auto c : clubs)
        if (std::none_of(maximal.begin(), maximal.end(), [&](auto m) { return (c & m) == c; }))
            maximal.push_back(c);

    std::vector<TwoClub> out;
    for (auto mask : maximal) {
        auto nodes = bits_of(mask);
        std::size_t edges = 0;
        for (NodeId v : nodes) edges += static_cast<std::size_t>(std::popcount(adj[v] & mask));
        edges /= 2;
        if (nodes.size() < min_nodes || edges < min_edges) continue;

        // Distance matrix inside the club by repeated relaxation.
        const std::size_t k = nodes.size();
        std::vector<std::vector<HopCount>> d(k, std::vector<HopCount>(k, kUnreachable));
        for (std::size_t i = 0; i < k; ++i) {
            d[i][i] = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (adj[nodes[i]] >> nodes[j] & 1U) d[i][j] = 1;
        }
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (d[i][m] != kUnreachable && d[m][j] != kUnreachable)
                        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);

        TwoClub club;
        club.nodes = nodes;
        for (std::size_t i = 0; i < k; ++i)
            if (*std::max_element(d[i].begin(), d[i].end()) <= 1) club.centers.push_back(nodes[i]);
        if (!club.centers.empty()) {
            club.type = ClubType::Coterie;
        } else {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    if (d[i][j] != 1) continue;
                    bool dominates = true;
                    for (std::size_t x = 0; x < k && dominates; ++x)
                        dominates = std::min(d[i][x], d[j][x]) <= 1;
                    if (dominates) club.central_pairs.emplace_back(nodes[i], nodes[j]);
                }
            club.type = club.central_pairs.empty() ? ClubType::Hamlet : ClubType::SocialCircle;
        }
        // Separable iff deleting some member disconnects the rest.
        for (NodeId cut : nodes) {
            std::uint32_t rest = mask & ~(1U << cut);
            std::uint32_t seen = rest & (~rest + 1);
            std::uint32_t frontier = seen;
            while (frontier) {
                std::uint32_t next = 0;
                for (NodeId v : bits_of(frontier)) next |= adj[v] & rest;
                frontier = next & ~seen;
                seen |= next;
            }
            if (seen != rest) club.separable = true;
        }
        out.push_back(std::move(club));
    }
    std::sort(out.begin(), out.end(), [](const TwoClub& a, const TwoClub& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
        return a.nodes < b.nodes;
    });
    return out;
}

std::vector<Discrepancy> reconcile_with_graph(std::span<const TwoClub> global_clubs,
                                              std::span<const TwoClub> borough_clubs) {
    std::map<std::vector<NodeId>, const TwoClub*> global_close, borough_close;
    for (const auto& c : global_clubs)
        if (c.type != ClubType::Coterie) global_close.emplace(c.nodes, &c);
    for (const auto& c : borough_clubs)
        if (c.type != ClubType::Coterie) borough_close.emplace(c.nodes, &c);

    std::vector<Discrepancy> out;
    for (const auto& [nodes, club] : global_close) {
        auto it = borough_close.find(nodes);
        if (it == borough_close.end() || it->second->type != club->type)
            out.push_back({Discrepancy::Kind::MissingInBorough, nodes, std::nullopt});
    }
    for (const auto& [nodes, club] : borough_close) {
        auto it = global_close.find(nodes);
        if (it == global_close.end() || it->second->type != club->type)
            out.push_back({Discrepancy::Kind::MissingInGraph, nodes, club->borough});
    }

    for (const auto& c : borough_clubs) {
        if (c.type != ClubType::Coterie) continue;
        bool covered = std::any_of(global_clubs.begin(), global_clubs.end(), [&](const TwoClub& gc) {
            if (gc.type != ClubType::Coterie || !is_sorted_subset(c.nodes, gc.nodes)) return false;
            return std::any_of(c.centers.begin(), c.centers.end(), [&](NodeId v) {
                return std::find(gc.centers.begin(), gc.centers.end(), v) != gc.centers.end();
            });
        });
        if (!covered) out.push_back({Discrepancy::Kind::OrphanCoterie, c.nodes, c.borough});
    }
    return out;
}

}  // namespace borough
