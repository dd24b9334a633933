#include "cnsdiff/graph.hpp"

#include "cnsdiff/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cnsdiff {

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
    Graph g;
    const auto n = labels.size();
    g.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.index_.emplace(labels[i], static_cast<NodeIndex>(i)).second) {
            throw DomainError("duplicate node label '" + labels[i] + "'");
        }
    }
    g.labels_ = std::move(labels);

    std::vector<std::vector<NodeIndex>> adjacency(n);
    for (const auto& [a, b] : edges) {
        if (a >= n || b >= n) {
            throw DomainError("edge endpoint out of range");
        }
        if (a == b) {
            continue;
        }
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }

    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adjacency[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.offsets_[v + 1] = g.offsets_[v] + list.size();
    }
    g.targets_.reserve(g.offsets_[n]);
    for (auto& list : adjacency) {
        g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    }
    return g;
}

bool Graph::has_edge(NodeIndex v, NodeIndex u) const {
    return edge_slot(v, u).has_value();
}

std::optional<std::size_t> Graph::edge_slot(NodeIndex v, NodeIndex u) const {
    if (!contains(v) || !contains(u)) {
        return std::nullopt;
    }
    const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    const auto it = std::lower_bound(first, last, u);
    if (it == last || *it != u) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - targets_.begin());
}

std::optional<NodeIndex> Graph::find(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

NodeIndex Graph::index_of(std::string_view label) const {
    if (auto v = find(label)) {
        return *v;
    }
    throw DomainError("unknown node label '" + std::string(label) + "'");
}

void Graph::require_node(NodeIndex v) const {
    if (!contains(v)) {
        throw DomainError("node index " + std::to_string(v) + " is not in the graph (" +
                          std::to_string(node_count()) + " nodes)");
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeIndex v = 0; v < node_count(); ++v) {
        for (NodeIndex u : neighbors(v)) {
            if (v < u) {
                out.emplace_back(v, u);
            }
        }
    }
    return out;
}

Graph load_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeIndex> index;
    std::vector<Edge> edges;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, static_cast<NodeIndex>(labels.size()));
        if (inserted) {
            labels.push_back(label);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty() || (fields >> extra)) {
            throw ParseError(line_no, "expected exactly two node labels, got '" + line + "'");
        }
        const NodeIndex ia = intern(a);
        const NodeIndex ib = intern(b);
        if (ia != ib) {
            edges.emplace_back(ia, ib);
        }
    }
    if (edges.empty()) {
        throw EmptyInputError("edge list contains no edges");
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph load_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open edge list '" + path.string() + "'");
    }
    try {
        return load_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    std::vector<std::pair<std::string_view, std::string_view>> rows;
    rows.reserve(g.edge_count());
    for (const auto& [v, u] : g.edges()) {
        std::string_view a = g.label(v);
        std::string_view b = g.label(u);
        if (b < a) {
            std::swap(a, b);
        }
        rows.emplace_back(a, b);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [a, b] : rows) {
        out << a << ' ' << b << '\n';
    }
}

Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes) {
    std::vector<NodeIndex> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    constexpr auto kAbsent = static_cast<NodeIndex>(-1);
    std::vector<NodeIndex> remap(g.node_count(), kAbsent);
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (NodeIndex v : sorted) {
        g.require_node(v);
        remap[v] = static_cast<NodeIndex>(labels.size());
        labels.push_back(g.label(v));
    }

    std::vector<Edge> edges;
    for (NodeIndex v : sorted) {
        for (NodeIndex u : g.neighbors(v)) {
            if (v < u && remap[u] != kAbsent) {
                edges.emplace_back(remap[v], remap[u]);
            }
        }
    }
    return Graph::from_edges(std::move(labels), edges);
}

std::vector<std::vector<NodeIndex>> connected_components(const Graph& g) {
    std::vector<std::vector<NodeIndex>> components;
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeIndex> queue;
    for (NodeIndex start = 0; start < g.node_count(); ++start) {
        if (seen[start]) {
            continue;
        }
        queue.assign(1, start);
        seen[start] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeIndex u : g.neighbors(queue[head])) {
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        components.push_back(queue);
    }
    return components;
}

Graph largest_connected_component(const Graph& g) {
    const auto components = connected_components(g);
    if (components.empty()) {
        return g;
    }
    // Components arrive ordered by smallest member, so strict '>' keeps the earliest on ties.
    const std::vector<NodeIndex>* best = &components.front();
    for (const auto& c : components) {
        if (c.size() > best->size()) {
            best = &c;
        }
    }
    if (best->size() == g.node_count()) {
        return g;
    }
    return induced_subgraph(g, *best);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, NodeIndex source) {
    g.require_node(source);
    std::vector<std::int32_t> dist(g.node_count(), kUnreachable);
    std::vector<NodeIndex> queue;
    queue.reserve(g.node_count());
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeIndex v = queue[head];
        for (NodeIndex u : g.neighbors(v)) {
            if (dist[u] == kUnreachable) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

DistanceSummary all_pairs_distance_summary(const Graph& g) {
    DistanceSummary summary;
    for (NodeIndex s = 0; s < g.node_count(); ++s) {
        const auto dist = bfs_distances(g, s);
        for (NodeIndex t = s + 1; t < g.node_count(); ++t) {
            if (dist[t] == kUnreachable) {
                continue;
            }
            summary.diameter = std::max(summary.diameter, dist[t]);
            summary.distance_sum += static_cast<std::uint64_t>(dist[t]);
            ++summary.connected_pairs;
        }
    }
    return summary;
}

std::int32_t diameter(const Graph& g) {
    if (g.empty()) {
        throw DomainError("diameter of an empty graph");
    }
    return all_pairs_distance_summary(g).diameter;
}

double average_distance(const Graph& g) {
    if (g.node_count() < 2) {
        throw DomainError("average distance needs at least two nodes");
    }
    const auto summary = all_pairs_distance_summary(g);
    if (summary.connected_pairs == 0) {
        return 0.0;
    }
    return static_cast<double>(summary.distance_sum) / static_cast<double>(summary.connected_pairs);
}

double density(const Graph& g) {
    const auto n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) {
        throw DomainError("density needs at least two nodes");
    }
    return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

double average_degree(const Graph& g) {
    if (g.empty()) {
        throw DomainError("average degree of an empty graph");
    }
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

}  // namespace cnsdiff
