#include "cnsdiff/tie_strength.hpp"

#include "cnsdiff/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <ostream>
#include <string_view>

namespace cnsdiff {

namespace {

std::vector<NodeIndex> intersect(std::span<const NodeIndex> a, std::span<const NodeIndex> b) {
    std::vector<NodeIndex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::int64_t intersection_size(std::span<const NodeIndex> a, std::span<const NodeIndex> b) {
    std::int64_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

void require_edge(const Graph& g, NodeIndex v, NodeIndex u) {
    g.require_node(v);
    g.require_node(u);
    if (!g.has_edge(v, u)) {
        throw DomainError("(" + g.label(v) + "," + g.label(u) + ") is not an edge");
    }
}

// Calls fn(w, z) for every unordered pair w < z of `common` joined by an edge.
template <typename Fn>
void for_each_connected_pair(const Graph& g, std::span<const NodeIndex> common, Fn&& fn) {
    for (NodeIndex w : common) {
        const auto nw = g.neighbors(w);
        auto i = std::upper_bound(nw.begin(), nw.end(), w);
        auto j = std::upper_bound(common.begin(), common.end(), w);
        while (i != nw.end() && j != common.end()) {
            if (*i < *j) {
                ++i;
            } else if (*j < *i) {
                ++j;
            } else {
                fn(w, *i);
                ++i;
                ++j;
            }
        }
    }
}

// `pair_cn(a, b)` must return |N(a) ∩ N(b)| for an edge (a,b).
template <typename PairCn>
CommonNeighborhoodBreakdown breakdown_with(const Graph& g, NodeIndex v, NodeIndex u, PairCn&& pair_cn) {
    CommonNeighborhoodBreakdown b;
    b.v = v;
    b.u = u;
    const auto common = intersect(g.neighbors(v), g.neighbors(u));
    if (common.empty()) {
        b.rho = (g.degree(v) == 1 || g.degree(u) == 1) ? 1 : 0;
        return b;
    }
    b.term_cn = static_cast<std::int64_t>(common.size());
    for (NodeIndex z : common) {
        b.term_v_side += pair_cn(v, z);
        b.term_u_side += pair_cn(u, z);
    }
    for_each_connected_pair(g, common, [&](NodeIndex w, NodeIndex z) {
        ++b.term_sigma;
        b.term_ww += pair_cn(w, z);
    });
    b.rho = b.term_cn + b.term_v_side + b.term_u_side + b.term_sigma + b.term_ww;
    return b;
}

}  // namespace

CommonNeighborhoodBreakdown common_neighborhood(const Graph& g, NodeIndex v, NodeIndex u) {
    require_edge(g, v, u);
    return breakdown_with(g, v, u, [&](NodeIndex a, NodeIndex b) {
        return intersection_size(g.neighbors(a), g.neighbors(b));
    });
}

std::vector<std::int64_t> compute_rho_by_slot(const Graph& g) {
    // Triangle count per adjacency slot, filled symmetrically.
    std::vector<std::int64_t> cn(g.slot_count(), 0);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        const auto nv = g.neighbors(v);
        for (std::size_t k = 0; k < nv.size(); ++k) {
            const NodeIndex u = nv[k];
            if (u < v) {
                continue;
            }
            const auto c = intersection_size(nv, g.neighbors(u));
            cn[g.slot_begin(v) + k] = c;
            cn[*g.edge_slot(u, v)] = c;
        }
    }
    auto pair_cn = [&](NodeIndex a, NodeIndex b) { return cn[*g.edge_slot(a, b)]; };

    std::vector<std::int64_t> rho(g.slot_count(), 0);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        const auto nv = g.neighbors(v);
        for (std::size_t k = 0; k < nv.size(); ++k) {
            const NodeIndex u = nv[k];
            if (u < v) {
                continue;
            }
            const auto r = breakdown_with(g, v, u, pair_cn).rho;
            rho[g.slot_begin(v) + k] = r;
            rho[*g.edge_slot(u, v)] = r;
        }
    }
    return rho;
}

double tie_strength(const Graph& g, std::span<const std::int64_t> rho_by_slot, NodeIndex v, NodeIndex u) {
    require_edge(g, v, u);
    if (rho_by_slot.size() != g.slot_count()) {
        throw ContractViolation("rho table does not match graph layout");
    }
    const auto r = rho_by_slot[*g.edge_slot(v, u)];
    if (r == 0) {
        return 0.0;
    }
    const auto first = rho_by_slot.begin() + static_cast<std::ptrdiff_t>(g.slot_begin(v));
    const auto row_max = *std::max_element(first, first + static_cast<std::ptrdiff_t>(g.degree(v)));
    return static_cast<double>(r) / static_cast<double>(row_max);
}

ContributorSet contributors(const Graph& g, NodeIndex v, NodeIndex u) {
    require_edge(g, v, u);
    ContributorSet out;
    out.v = v;
    out.u = u;
    const auto common = intersect(g.neighbors(v), g.neighbors(u));
    if (common.empty()) {
        return out;
    }
    std::vector<NodeIndex> members(common.begin(), common.end());
    auto add_intersection = [&](NodeIndex a, NodeIndex b) {
        std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                              g.neighbors(b).end(), std::back_inserter(members));
    };
    for (NodeIndex z : common) {
        add_intersection(v, z);
        add_intersection(u, z);
    }
    for_each_connected_pair(g, common, add_intersection);

    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::erase_if(members, [&](NodeIndex x) { return x == v || x == u; });
    out.members = std::move(members);
    return out;
}

TieStrengthTable TieStrengthTable::build(const Graph& g) {
    return from_rho(g, compute_rho_by_slot(g));
}

TieStrengthTable TieStrengthTable::from_rho(const Graph& g, std::vector<std::int64_t> rho_by_slot) {
    if (rho_by_slot.size() != g.slot_count()) {
        throw ContractViolation("rho table does not match graph layout");
    }
    TieStrengthTable t;
    t.offsets_.resize(g.node_count() + 1);
    for (NodeIndex v = 0; v <= g.node_count(); ++v) {
        t.offsets_[v] = v < g.node_count() ? g.slot_begin(v) : g.slot_count();
    }
    t.targets_.reserve(g.slot_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        const auto nv = g.neighbors(v);
        t.targets_.insert(t.targets_.end(), nv.begin(), nv.end());
    }
    t.rho_ = std::move(rho_by_slot);
    t.row_max_.assign(g.node_count(), 0);
    t.strong_.assign(g.slot_count(), 0);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        const auto first = t.offsets_[v];
        const auto last = t.offsets_[v + 1];
        std::int64_t best = 0;
        for (auto s = first; s < last; ++s) {
            best = std::max(best, t.rho_[s]);
        }
        t.row_max_[v] = best;
        if (best <= 0) {
            continue;
        }
        for (auto s = first; s < last; ++s) {
            t.strong_[s] = t.rho_[s] == best ? 1 : 0;
        }
    }
    return t;
}

std::size_t TieStrengthTable::slot(NodeIndex v, NodeIndex u) const {
    if (v + 1 >= offsets_.size()) {
        throw DomainError("node index " + std::to_string(v) + " is not in the tie-strength table");
    }
    const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    const auto it = std::lower_bound(first, last, u);
    if (it == last || *it != u) {
        throw DomainError("(" + std::to_string(v) + "," + std::to_string(u) + ") is not an edge");
    }
    return static_cast<std::size_t>(it - targets_.begin());
}

double TieStrengthTable::phi(NodeIndex v, NodeIndex u) const {
    const auto r = rho_[slot(v, u)];
    if (r == 0) {
        return 0.0;
    }
    return static_cast<double>(r) / static_cast<double>(row_max_[v]);
}

std::vector<NodeIndex> TieStrengthTable::strong_targets(NodeIndex v) const {
    std::vector<NodeIndex> out;
    for (auto s = offsets_.at(v); s < offsets_.at(v + 1); ++s) {
        if (strong_[s] != 0) {
            out.push_back(targets_[s]);
        }
    }
    return out;
}

std::vector<Edge> TieStrengthTable::strong_ties() const {
    std::vector<Edge> out;
    for (NodeIndex v = 0; v < node_count(); ++v) {
        for (NodeIndex u : strong_targets(v)) {
            out.emplace_back(v, u);
        }
    }
    return out;
}

void write_tie_table_csv(const Graph& g, const TieStrengthTable& table, std::ostream& out) {
    std::vector<Edge> ordered;
    ordered.reserve(g.slot_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        for (NodeIndex u : g.neighbors(v)) {
            ordered.emplace_back(v, u);
        }
    }
    std::sort(ordered.begin(), ordered.end(), [&](const Edge& a, const Edge& b) {
        const std::string_view av = g.label(a.first);
        const std::string_view bv = g.label(b.first);
        if (av != bv) {
            return av < bv;
        }
        return std::string_view(g.label(a.second)) < std::string_view(g.label(b.second));
    });

    out << "v,u,term_cn,term_v_side,term_u_side,term_sigma,term_ww,rho,phi\n";
    char phi_text[32];
    for (const auto& [v, u] : ordered) {
        const auto b = common_neighborhood(g, v, u);
        std::snprintf(phi_text, sizeof phi_text, "%.6f", table.phi(v, u));
        out << g.label(v) << ',' << g.label(u) << ',' << b.term_cn << ',' << b.term_v_side << ','
            << b.term_u_side << ',' << b.term_sigma << ',' << b.term_ww << ',' << b.rho << ','
            << phi_text << '\n';
    }
}

}  // namespace cnsdiff
