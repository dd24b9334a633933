#include "cnsdiff/diffusion.hpp"

#include "cnsdiff/errors.hpp"

#include <algorithm>

namespace cnsdiff {

std::string_view to_string(Model m) noexcept {
    switch (m) {
        case Model::cns: return "cns";
        case Model::ic: return "ic";
        case Model::si: return "si";
    }
    return "unknown";
}

Model parse_model(std::string_view text) {
    if (text == "cns") return Model::cns;
    if (text == "ic") return Model::ic;
    if (text == "si") return Model::si;
    throw ConfigError("unknown model '" + std::string(text) + "' (expected cns, ic or si)");
}

void ModelParams::validate() const {
    if (!(ic_probability >= 0.0 && ic_probability <= 1.0)) {
        throw ConfigError("ic probability must lie in [0,1], got " + std::to_string(ic_probability));
    }
    if (!(si_beta >= 0.0 && si_beta <= 1.0)) {
        throw ConfigError("si beta must lie in [0,1], got " + std::to_string(si_beta));
    }
}

std::vector<NodeIndex> DiffusionTrace::cumulative_active(std::size_t t) const {
    if (t > newly_active.size()) {
        throw DomainError("iteration " + std::to_string(t) + " beyond trace length " +
                          std::to_string(newly_active.size()));
    }
    std::vector<NodeIndex> out{seed};
    for (std::size_t i = 0; i < t; ++i) {
        out.insert(out.end(), newly_active[i].begin(), newly_active[i].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t DiffusionTrace::cumulative_count(std::size_t t) const {
    if (t > newly_active.size()) {
        throw DomainError("iteration " + std::to_string(t) + " beyond trace length");
    }
    std::size_t n = 1;
    for (std::size_t i = 0; i < t; ++i) {
        n += newly_active[i].size();
    }
    return n;
}

std::mt19937_64 make_run_engine(std::uint64_t rng_seed, std::uint64_t run_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                      static_cast<std::uint32_t>(run_index), static_cast<std::uint32_t>(run_index >> 32)};
    return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

namespace {

DiffusionTrace start_trace(const Graph& g, Model model, NodeIndex seed, const ModelParams& params,
                           std::size_t run_index) {
    g.require_node(seed);
    DiffusionTrace trace;
    trace.seed = seed;
    trace.model = model;
    trace.params = params;
    trace.run_index = run_index;
    trace.node_count = g.node_count();
    return trace;
}

void sort_unique(std::vector<NodeIndex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_set(std::span<const std::uint8_t> flags, NodeIndex v) {
    return flags[v] != 0;
}

}  // namespace

std::vector<NodeIndex> cns_activate(const Graph& g, const TieStrengthTable& table, NodeIndex v,
                                    std::span<const std::uint8_t> active) {
    g.require_node(v);
    if (active.size() != g.node_count()) {
        throw ContractViolation("active flags do not match graph size");
    }
    if (!is_set(active, v)) {
        throw ContractViolation("cns_activate called for inactive node '" + g.label(v) + "'");
    }

    std::vector<NodeIndex> out;
    for (NodeIndex u : table.strong_targets(v)) {
        out.push_back(u);
        const auto members = contributors(g, v, u).members;
        for (NodeIndex c : members) {
            if (g.has_edge(v, c) || g.has_edge(u, c)) {
                out.push_back(c);
            }
        }
    }
    for (NodeIndex z : g.neighbors(v)) {
        if (table.is_strong(z, v) && !is_set(active, z)) {
            out.push_back(z);
        }
    }
    std::erase_if(out, [&](NodeIndex x) { return is_set(active, x); });
    sort_unique(out);
    return out;
}

DiffusionTrace run_cns(const Graph& g, NodeIndex seed) {
    g.require_node(seed);
    return run_cns(g, TieStrengthTable::build(g), seed);
}

DiffusionTrace run_cns(const Graph& g, const TieStrengthTable& table, NodeIndex seed) {
    auto trace = start_trace(g, Model::cns, seed, ModelParams{}, 0);
    if (table.node_count() != g.node_count()) {
        throw ContractViolation("tie-strength table was built for a different graph");
    }
    std::vector<std::uint8_t> active(g.node_count(), 0);
    active[seed] = 1;
    std::vector<NodeIndex> frontier{seed};
    while (true) {
        std::vector<NodeIndex> fresh;
        for (NodeIndex v : frontier) {
            const auto reached = cns_activate(g, table, v, active);
            fresh.insert(fresh.end(), reached.begin(), reached.end());
        }
        sort_unique(fresh);
        if (fresh.empty()) {
            break;
        }
        for (NodeIndex x : fresh) {
            active[x] = 1;
        }
        trace.newly_active.push_back(fresh);
        frontier = std::move(fresh);
    }
    return trace;
}

DiffusionTrace run_ic(const Graph& g, NodeIndex seed, const ModelParams& params, std::size_t run_index) {
    params.validate();
    auto trace = start_trace(g, Model::ic, seed, params, run_index);
    auto engine = make_run_engine(params.rng_seed, run_index);
    const double p = params.ic_probability;

    std::vector<std::uint8_t> active(g.node_count(), 0);
    active[seed] = 1;
    std::vector<NodeIndex> frontier{seed};
    while (!frontier.empty()) {
        std::vector<NodeIndex> fresh;
        for (NodeIndex v : frontier) {
            for (NodeIndex u : g.neighbors(v)) {
                if (active[u] != 0) {
                    continue;
                }
                const bool success = p >= 1.0 ? true : p <= 0.0 ? false : uniform01(engine) < p;
                if (success) {
                    fresh.push_back(u);
                }
            }
        }
        sort_unique(fresh);
        if (fresh.empty()) {
            break;
        }
        for (NodeIndex x : fresh) {
            active[x] = 1;
        }
        trace.newly_active.push_back(fresh);
        frontier = std::move(fresh);
    }
    return trace;
}

DiffusionTrace run_si(const Graph& g, NodeIndex seed, const ModelParams& params, std::size_t run_index) {
    params.validate();
    auto trace = start_trace(g, Model::si, seed, params, run_index);
    auto engine = make_run_engine(params.rng_seed, run_index);
    const double beta = params.si_beta;
    const std::size_t cap = params.max_iterations.value_or(10 * g.node_count());

    const auto dist = bfs_distances(g, seed);
    const auto reachable = static_cast<std::size_t>(
        std::count_if(dist.begin(), dist.end(), [](std::int32_t d) { return d != kUnreachable; }));

    std::vector<std::uint8_t> infected(g.node_count(), 0);
    infected[seed] = 1;
    std::vector<NodeIndex> infected_list{seed};
    std::size_t infected_count = 1;
    while (infected_count < reachable) {
        if (trace.newly_active.size() >= cap) {
            trace.truncated = true;
            break;
        }
        std::vector<NodeIndex> fresh;
        for (NodeIndex v : infected_list) {
            for (NodeIndex u : g.neighbors(v)) {
                if (infected[u] != 0) {
                    continue;
                }
                const bool success = beta >= 1.0 ? true : beta <= 0.0 ? false : uniform01(engine) < beta;
                if (success) {
                    fresh.push_back(u);
                }
            }
        }
        sort_unique(fresh);
        for (NodeIndex x : fresh) {
            infected[x] = 1;
        }
        infected_count += fresh.size();
        infected_list.insert(infected_list.end(), fresh.begin(), fresh.end());
        std::sort(infected_list.begin(), infected_list.end());
        trace.newly_active.push_back(std::move(fresh));
    }
    if (trace.truncated) {
        while (!trace.newly_active.empty() && trace.newly_active.back().empty()) {
            trace.newly_active.pop_back();
        }
    }
    return trace;
}

DiffusionTrace run_model(const Graph& g, Model model, NodeIndex seed, const ModelParams& params,
                         std::size_t run_index) {
    switch (model) {
        case Model::cns: {
            auto trace = run_cns(g, seed);
            trace.params = params;
            trace.run_index = run_index;
            return trace;
        }
        case Model::ic: return run_ic(g, seed, params, run_index);
        case Model::si: return run_si(g, seed, params, run_index);
    }
    throw ConfigError("unknown model");
}

}  // namespace cnsdiff
