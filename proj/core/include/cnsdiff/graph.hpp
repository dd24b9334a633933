#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cnsdiff {

// Dense 0-based node index. Indices follow first-appearance order of labels in the source.
using NodeIndex = std::uint32_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

// Hop count for nodes a BFS did not reach.
inline constexpr std::int32_t kUnreachable = -1;

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Every node keeps its original dataset label; labels are opaque strings.
/// Neighbor lists are sorted ascending, contain no duplicates and never the
/// node itself, and adjacency is symmetric. A Graph is safe to share between
/// threads once constructed.
class Graph {
public:
    Graph() = default;

    /// Builds a graph over `labels` (index i carries labels[i]). Self-loops are
    /// dropped and duplicate edges in either orientation are collapsed.
    /// Throws DomainError on duplicate labels or out-of-range endpoints.
    static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }
    bool empty() const noexcept { return labels_.empty(); }

    std::span<const NodeIndex> neighbors(NodeIndex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeIndex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeIndex v, NodeIndex u) const;

    // Position of u inside the concatenated adjacency array when (v,u) is an
    // edge. Slots index per-orientation edge attributes.
    std::optional<std::size_t> edge_slot(NodeIndex v, NodeIndex u) const;
    std::size_t slot_begin(NodeIndex v) const { return offsets_[v]; }
    std::size_t slot_count() const noexcept { return targets_.size(); }

    const std::string& label(NodeIndex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeIndex> find(std::string_view label) const;
    // Like find() but throws DomainError naming the label.
    NodeIndex index_of(std::string_view label) const;

    bool contains(NodeIndex v) const noexcept { return v < labels_.size(); }
    // Throws DomainError when v is not a node of this graph.
    void require_node(NodeIndex v) const;

    // Every undirected edge once, as (v,u) with v < u by index.
    std::vector<Edge> edges() const;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeIndex> targets_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeIndex> index_;
};

// Reads a whitespace-separated edge list, one edge per line; blank lines and
// lines starting with '#' are skipped. Throws ParseError (with line number)
// for lines that do not hold exactly two tokens and EmptyInputError when no
// edge survives self-loop removal.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::filesystem::path& path);

// Writes "u v" lines with u < v in label string order, sorted lexicographically.
void write_edge_list(const Graph& g, std::ostream& out);

Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes);

// Induced subgraph on the largest connected node set. Equal-size components
// are resolved in favor of the one holding the smallest node index.
Graph largest_connected_component(const Graph& g);

// Connected components as sorted node lists, ordered by smallest member.
std::vector<std::vector<NodeIndex>> connected_components(const Graph& g);

// Hop distances from `source`; unreachable nodes hold kUnreachable.
std::vector<std::int32_t> bfs_distances(const Graph& g, NodeIndex source);

struct DistanceSummary {
    std::int32_t diameter = 0;
    std::uint64_t distance_sum = 0;
    std::uint64_t connected_pairs = 0;  // unordered pairs at finite distance
};

// One BFS per source; unreachable pairs are skipped.
DistanceSummary all_pairs_distance_summary(const Graph& g);

std::int32_t diameter(const Graph& g);
double average_distance(const Graph& g);
double density(const Graph& g);
double average_degree(const Graph& g);

}  // namespace cnsdiff
