#include "borough/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

namespace borough {

using nlohmann::json;

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

std::vector<LabeledEdge> parse_pairs(std::string_view text) {
    std::vector<LabeledEdge> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2)
            throw ParseError(fmt::format("line {}: expected 2 tokens, found {}", line_no, tokens.size()),
                             line_no);
        out.push_back({std::string(tokens[0]), std::string(tokens[1]), line_no});
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    auto pairs = parse_pairs(text);
    try {
        return Graph::from_labeled_edges(pairs);
    } catch (const GraphError& e) {
        throw ParseError(e.what(), e.line());
    }
}

Graph project_bipartite(std::span<const std::pair<std::string, std::string>> actor_item,
                        std::size_t threshold) {
    if (threshold < 1) throw std::invalid_argument("projection threshold must be at least 1");
    std::map<std::string, std::set<std::string>> actors_of_item;
    for (const auto& [actor, item] : actor_item) actors_of_item[item].insert(actor);

    std::map<std::pair<std::string, std::string>, std::size_t> shared;
    for (const auto& [item, actors] : actors_of_item) {
        for (auto a = actors.begin(); a != actors.end(); ++a)
            for (auto b = std::next(a); b != actors.end(); ++b) ++shared[{*a, *b}];
    }

    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [pair, count] : shared)
        if (count >= threshold) edges.push_back(pair);
    return build_graph(edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) out += g.label(e.u) + ' ' + g.label(e.v) + '\n';
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

ScopeSelection ScopeSelection::parse(std::string_view text) {
    ScopeSelection s;
    if (text == "all") return s;
    if (text == "global") {
        s.kind = Kind::Global;
        return s;
    }
    constexpr std::string_view prefix = "borough=";
    if (text.substr(0, prefix.size()) != prefix || text.size() == prefix.size())
        throw std::invalid_argument("scope must be all, global or borough=<id>");
    s.kind = Kind::Boroughs;
    std::string ids(text.substr(prefix.size()));
    std::stringstream ss(ids);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long id = 0;
        try {
            id = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("bad borough id '" + item + "'");
        s.borough_ids.push_back(id);
    }
    return s;
}

Analysis analyze(Graph g, const Config& config) {
    Analysis a;
    a.graph = std::move(g);
    const Graph& graph = a.graph;

    a.components = connected_components(graph);
    for (const auto& comp : a.components) a.component_diameters.push_back(diameter_of(graph, comp));

    try {
        a.cycles = enumerate_basic_cycles(graph, config.cycle_cap);
    } catch (const CycleCapExceeded& e) {
        throw CycleCapExceeded(std::string("scope global (basic cycles): ") + e.what());
    }
    a.boroughs = detect_boroughs(graph, a.cycles);
    a.outback = outback(graph, a.boroughs);
    a.touch = touch_points(a.boroughs, a.outback.non_basic_edges);

    const auto enum_config = config.enumeration();
    switch (config.scope.kind) {
        case ScopeSelection::Kind::Global: {
            ScopeClubs s{std::nullopt, graph.node_count(), {}};
            if (graph.node_count() >= 3) {
                try {
                    s.clubs = enumerate_two_clubs(graph, enum_config);
                } catch (const IncompleteEnumeration& e) {
                    throw IncompleteEnumeration(std::string("scope global: ") + e.what(), e.partial());
                }
            }
            a.scopes.push_back(std::move(s));
            break;
        }
        case ScopeSelection::Kind::AllBoroughs:
            for (const auto& b : a.boroughs)
                a.scopes.push_back({b.id, b.nodes.size(), enumerate_two_clubs(graph, b, enum_config)});
            break;
        case ScopeSelection::Kind::Boroughs:
            for (std::size_t id : config.scope.borough_ids) {
                if (id >= a.boroughs.size())
                    throw std::invalid_argument(fmt::format("no borough with id {} ({} boroughs found)", id,
                                                            a.boroughs.size()));
                const auto& b = a.boroughs[id];
                a.scopes.push_back({b.id, b.nodes.size(), enumerate_two_clubs(graph, b, enum_config)});
            }
            break;
    }
    return a;
}

std::string scope_name(std::optional<std::size_t> borough) {
    return borough ? "borough:" + std::to_string(*borough) : std::string("global");
}

namespace {

std::vector<std::string> labels_of(const Graph& g, std::span<const NodeId> nodes) {
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (NodeId v : nodes) out.push_back(g.label(v));
    return out;
}

std::vector<std::pair<std::string, std::string>> labels_of(const Graph& g, std::span<const Edge> edges) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(g.label(e.u), g.label(e.v));
    return out;
}

}  // namespace

AnalysisBundle make_bundle(const Analysis& a) {
    const Graph& g = a.graph;
    AnalysisBundle b;
    b.node_count = g.node_count();
    b.edge_count = g.edge_count();
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        AnalysisBundle::Component c;
        c.nodes = labels_of(g, a.components[i]);
        if (a.component_diameters[i] != kUnreachable) c.diameter = a.component_diameters[i];
        b.components.push_back(std::move(c));
    }

    std::set<NodeId> touch_nodes;
    for (const auto& [v, ids] : a.touch.between_boroughs) touch_nodes.insert(v);
    for (const auto& [v, ids] : a.touch.with_outback) touch_nodes.insert(v);
    for (const auto& br : a.boroughs) {
        AnalysisBundle::BoroughRecord r;
        r.id = br.id;
        r.nodes = labels_of(g, br.nodes);
        r.edges = labels_of(g, br.edges);
        r.diameter = br.diameter;
        r.cycle_count = br.cycle_ids.size();
        std::vector<NodeId> touches;
        for (NodeId v : br.nodes)
            if (touch_nodes.count(v)) touches.push_back(v);
        r.touch_points = labels_of(g, touches);
        b.boroughs.push_back(std::move(r));
    }

    b.outback.bridges = labels_of(g, a.outback.bridges);
    b.outback.long_cycle_edges = labels_of(g, a.outback.long_cycle_edges);
    std::vector<NodeId> outback_touch;
    for (const auto& [v, ids] : a.touch.with_outback) outback_touch.push_back(v);
    b.outback.touch_points = labels_of(g, outback_touch);

    for (const auto& s : a.scopes) {
        const std::string name = scope_name(s.borough);
        for (const auto& c : s.clubs) {
            AnalysisBundle::ClubRecord r;
            r.scope = name;
            r.type = std::string(to_string(c.type));
            r.nodes = labels_of(g, c.nodes);
            r.separable = c.separable;
            r.centers = labels_of(g, c.centers);
            r.central_pairs = labels_of(g, c.central_pairs);
            b.clubs.push_back(std::move(r));
        }
        b.reports.push_back({name, type_distribution(s.clubs, s.scope_nodes)});
    }
    return b;
}

AnalysisBundle run_pipeline(const Graph& g, const Config& config) { return make_bundle(analyze(g, config)); }

namespace {

json row_to_json(const TypeRow& r) {
    return json{{"count", r.count},       {"percent", r.percent},         {"size_min", r.size_min},
                {"size_max", r.size_max}, {"size_median", r.size_median}, {"coverage", r.coverage}};
}

TypeRow row_from_json(const json& j) {
    TypeRow r;
    r.count = j.at("count").get<std::size_t>();
    r.percent = j.at("percent").get<double>();
    r.size_min = j.at("size_min").get<std::size_t>();
    r.size_max = j.at("size_max").get<std::size_t>();
    r.size_median = j.at("size_median").get<std::size_t>();
    r.coverage = j.at("coverage").get<double>();
    return r;
}

json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
    return arr;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : j) out.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    return out;
}

constexpr std::array<ClubType, kClubTypeCount> kTypes{ClubType::Coterie, ClubType::SocialCircle,
                                                      ClubType::Hamlet};

}  // namespace

std::string export_json(const AnalysisBundle& b) {
    json root;
    root["graph"] = {{"nodes", b.node_count}, {"edges", b.edge_count}, {"component_count", b.components.size()}};
    json comps = json::array();
    for (const auto& c : b.components) {
        comps.push_back({{"nodes", c.nodes}, {"diameter", c.diameter ? json(*c.diameter) : json(nullptr)}});
    }
    root["graph"]["components"] = comps;

    json boroughs = json::array();
    for (const auto& r : b.boroughs) {
        boroughs.push_back({{"id", r.id},
                            {"nodes", r.nodes},
                            {"edges", pairs_to_json(r.edges)},
                            {"diameter", r.diameter},
                            {"cycle_count", r.cycle_count},
                            {"touch_points", r.touch_points}});
    }
    root["boroughs"] = boroughs;
    root["outback"] = {{"bridges", pairs_to_json(b.outback.bridges)},
                       {"long_cycle_edges", pairs_to_json(b.outback.long_cycle_edges)},
                       {"touch_points", b.outback.touch_points}};

    json clubs = json::array();
    for (const auto& c : b.clubs) {
        clubs.push_back({{"scope", c.scope},
                         {"type", c.type},
                         {"nodes", c.nodes},
                         {"separable", c.separable},
                         {"centers", c.centers},
                         {"central_pairs", pairs_to_json(c.central_pairs)}});
    }
    root["clubs"] = clubs;

    json reports = json::array();
    for (const auto& r : b.reports) {
        json dist{{"scope_nodes", r.distribution.scope_nodes}, {"total", row_to_json(r.distribution.total)}};
        for (auto t : kTypes) dist[std::string(to_string(t))] = row_to_json(r.distribution[t]);
        reports.push_back({{"scope", r.scope}, {"distribution", dist}});
    }
    root["reports"] = reports;
    return root.dump(2) + "\n";
}

AnalysisBundle parse_bundle_json(std::string_view text) {
    json root = json::parse(text);
    AnalysisBundle b;
    b.node_count = root.at("graph").at("nodes").get<std::size_t>();
    b.edge_count = root.at("graph").at("edges").get<std::size_t>();
    for (const auto& c : root.at("graph").at("components")) {
        AnalysisBundle::Component comp;
        comp.nodes = c.at("nodes").get<std::vector<std::string>>();
        if (!c.at("diameter").is_null()) comp.diameter = c.at("diameter").get<std::uint32_t>();
        b.components.push_back(std::move(comp));
    }
    for (const auto& r : root.at("boroughs")) {
        AnalysisBundle::BoroughRecord br;
        br.id = r.at("id").get<std::size_t>();
        br.nodes = r.at("nodes").get<std::vector<std::string>>();
        br.edges = pairs_from_json(r.at("edges"));
        br.diameter = r.at("diameter").get<std::uint32_t>();
        br.cycle_count = r.at("cycle_count").get<std::size_t>();
        br.touch_points = r.at("touch_points").get<std::vector<std::string>>();
        b.boroughs.push_back(std::move(br));
    }
    const auto& ob = root.at("outback");
    b.outback.bridges = pairs_from_json(ob.at("bridges"));
    b.outback.long_cycle_edges = pairs_from_json(ob.at("long_cycle_edges"));
    b.outback.touch_points = ob.at("touch_points").get<std::vector<std::string>>();
    for (const auto& c : root.at("clubs")) {
        AnalysisBundle::ClubRecord cr;
        cr.scope = c.at("scope").get<std::string>();
        cr.type = c.at("type").get<std::string>();
        cr.nodes = c.at("nodes").get<std::vector<std::string>>();
        cr.separable = c.at("separable").get<bool>();
        cr.centers = c.at("centers").get<std::vector<std::string>>();
        cr.central_pairs = pairs_from_json(c.at("central_pairs"));
        b.clubs.push_back(std::move(cr));
    }
    for (const auto& r : root.at("reports")) {
        AnalysisBundle::ScopeReport sr;
        sr.scope = r.at("scope").get<std::string>();
        const auto& d = r.at("distribution");
        sr.distribution.scope_nodes = d.at("scope_nodes").get<std::size_t>();
        sr.distribution.total = row_from_json(d.at("total"));
        for (auto t : kTypes)
            sr.distribution.by_type[static_cast<std::size_t>(t)] = row_from_json(d.at(std::string(to_string(t))));
        b.reports.push_back(std::move(sr));
    }
    return b;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string dot_id(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

constexpr std::array<std::string_view, 8> kPalette{"red",    "blue",   "darkgreen", "orange",
                                                   "purple", "brown", "magenta",   "cyan4"};

}  // namespace

std::string export_csv(const AnalysisBundle& b) {
    std::string out = "scope,type,size,separable,members\n";
    for (const auto& c : b.clubs) {
        out += fmt::format("{},{},{},{},{}\n", csv_field(c.scope), c.type, c.nodes.size(),
                           c.separable ? "true" : "false", csv_field(join(c.nodes, ";")));
    }
    return out;
}

std::string export_dot(const AnalysisBundle& b) {
    std::string out = "graph boroughs {\n  node [shape=circle];\n";
    for (const auto& r : b.boroughs) {
        auto color = kPalette[r.id % kPalette.size()];
        const char* width = r.id == 0 ? "2.0" : "1.0";
        out += fmt::format("  // borough {}\n", r.id);
        for (const auto& [u, v] : r.edges)
            out += fmt::format("  {} -- {} [color={}, penwidth={}, style=solid];\n", dot_id(u), dot_id(v),
                               color, width);
    }
    if (!b.outback.bridges.empty() || !b.outback.long_cycle_edges.empty()) out += "  // outback\n";
    for (const auto* list : {&b.outback.bridges, &b.outback.long_cycle_edges})
        for (const auto& [u, v] : *list)
            out += fmt::format("  {} -- {} [color=black, style=dashed];\n", dot_id(u), dot_id(v));
    out += "}\n";
    return out;
}

std::string export_bundle(const AnalysisBundle& bundle, ExportFormat format) {
    switch (format) {
        case ExportFormat::Json: return export_json(bundle);
        case ExportFormat::Csv: return export_csv(bundle);
        case ExportFormat::Dot: return export_dot(bundle);
    }
    return {};
}

}  // namespace borough
