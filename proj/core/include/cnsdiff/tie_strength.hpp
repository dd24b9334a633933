#pragma once

#include "cnsdiff/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace cnsdiff {

/// Five-term common-neighborhood score of a connected pair (v,u).
///
/// With C = N(v) ∩ N(u):
///   term_cn      |C|
///   term_v_side  sum over z in C of |N(v) ∩ N(z)|
///   term_u_side  sum over z in C of |N(u) ∩ N(z)|
///   term_sigma   number of unordered pairs {w,z} ⊆ C joined by an edge
///   term_ww      sum over those connected pairs of |N(w) ∩ N(z)|
///
/// When C is empty every term is zero and `rho` holds the degenerate value:
/// 1 if either endpoint has degree one (the edge is its only path), else 0.
struct CommonNeighborhoodBreakdown {
    NodeIndex v = 0;
    NodeIndex u = 0;
    std::int64_t term_cn = 0;
    std::int64_t term_v_side = 0;
    std::int64_t term_u_side = 0;
    std::int64_t term_sigma = 0;
    std::int64_t term_ww = 0;
    std::int64_t rho = 0;

    bool degenerate() const noexcept { return term_cn == 0; }
    friend bool operator==(const CommonNeighborhoodBreakdown&, const CommonNeighborhoodBreakdown&) = default;
};

// Throws DomainError unless (v,u) is an edge.
CommonNeighborhoodBreakdown common_neighborhood(const Graph& g, NodeIndex v, NodeIndex u);

// rho for every adjacency slot (see Graph::edge_slot); symmetric pairs are computed once.
std::vector<std::int64_t> compute_rho_by_slot(const Graph& g);

// rho(v,u) / max over neighbors u' of rho(v,u'); zero whenever rho(v,u) is zero.
double tie_strength(const Graph& g, std::span<const std::int64_t> rho_by_slot, NodeIndex v, NodeIndex u);

struct ContributorSet {
    NodeIndex v = 0;
    NodeIndex u = 0;
    std::vector<NodeIndex> members;  // sorted, excludes v and u
};

// Every node that appears in one of the five terms for (v,u). Empty for the
// degenerate (no common neighbor) case. Throws DomainError unless (v,u) is an edge.
ContributorSet contributors(const Graph& g, NodeIndex v, NodeIndex u);

/// Per-orientation tie strengths of every edge plus the strong-tie set.
///
/// (v,u) is a strong tie when rho(v,u) equals the positive row maximum of v.
/// Co-maximal neighbors are all strong; nothing is tie-broken.
class TieStrengthTable {
public:
    TieStrengthTable() = default;

    static TieStrengthTable build(const Graph& g);
    // Table from externally supplied per-slot scores (same layout as compute_rho_by_slot).
    static TieStrengthTable from_rho(const Graph& g, std::vector<std::int64_t> rho_by_slot);

    std::int64_t rho(NodeIndex v, NodeIndex u) const { return rho_[slot(v, u)]; }
    double phi(NodeIndex v, NodeIndex u) const;
    bool is_strong(NodeIndex v, NodeIndex u) const { return strong_[slot(v, u)] != 0; }
    std::int64_t row_max(NodeIndex v) const { return row_max_.at(v); }

    // Neighbors u with (v,u) strong, ascending.
    std::vector<NodeIndex> strong_targets(NodeIndex v) const;
    // All strong ordered pairs, sorted by (v,u) index.
    std::vector<Edge> strong_ties() const;

    std::size_t node_count() const noexcept { return row_max_.size(); }

private:
    std::size_t slot(NodeIndex v, NodeIndex u) const;

    std::vector<std::size_t> offsets_;
    std::vector<NodeIndex> targets_;
    std::vector<std::int64_t> rho_;
    std::vector<std::int64_t> row_max_;
    std::vector<std::uint8_t> strong_;
};

// CSV dump: v,u,term_cn,term_v_side,term_u_side,term_sigma,term_ww,rho,phi
// one row per ordered edge, sorted by (v label, u label).
void write_tie_table_csv(const Graph& g, const TieStrengthTable& table, std::ostream& out);

}  // namespace cnsdiff
