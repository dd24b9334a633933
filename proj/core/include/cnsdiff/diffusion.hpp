#pragma once

#include "cnsdiff/graph.hpp"
#include "cnsdiff/tie_strength.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cnsdiff {

enum class Model { cns, ic, si };

std::string_view to_string(Model m) noexcept;
// Accepts "cns", "ic", "si"; throws ConfigError otherwise.
Model parse_model(std::string_view text);

struct ModelParams {
    double ic_probability = 1.0;
    double si_beta = 0.5;
    std::uint64_t rng_seed = 42;
    // SI round cap; unset means 10 x node count.
    std::optional<std::size_t> max_iterations;

    // Throws ConfigError when a probability leaves [0,1].
    void validate() const;
};

/// Activation history of one diffusion run.
///
/// Iteration 0 is the seed alone. `newly_active[t-1]` holds the nodes first
/// activated in round t, sorted ascending by index, so the state reported for
/// iteration t is the seed plus rounds 1..t.
struct DiffusionTrace {
    NodeIndex seed = 0;
    Model model = Model::cns;
    ModelParams params;
    std::size_t run_index = 0;
    std::size_t node_count = 0;  // |V| of the graph the run was made on
    std::vector<std::vector<NodeIndex>> newly_active;
    bool truncated = false;  // SI stopped by the round cap

    std::size_t iteration_count() const noexcept { return newly_active.size(); }
    // Sorted cumulative active set after round t (t = 0 is {seed}).
    std::vector<NodeIndex> cumulative_active(std::size_t t) const;
    std::size_t cumulative_count(std::size_t t) const;
};

// Independent engine for (rng_seed, run_index) built through std::seed_seq.
std::mt19937_64 make_run_engine(std::uint64_t rng_seed, std::uint64_t run_index);
// Uniform double in [0,1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& engine);

/// Nodes that active node `v` would activate in one CNS step:
///   strongest ties of v, then for each such u the contributors of (v,u)
///   adjacent to v or to u, then neighbors whose own strongest tie is v.
/// Already-active nodes are removed. Result is sorted.
/// Throws ContractViolation if v is not active.
std::vector<NodeIndex> cns_activate(const Graph& g, const TieStrengthTable& table, NodeIndex v,
                                    std::span<const std::uint8_t> active);

// Synchronous CNS rounds; every node acts once, in the round after its activation.
DiffusionTrace run_cns(const Graph& g, NodeIndex seed);
DiffusionTrace run_cns(const Graph& g, const TieStrengthTable& table, NodeIndex seed);

// Synchronous independent cascade. Draw order: frontier ascending, neighbors ascending.
DiffusionTrace run_ic(const Graph& g, NodeIndex seed, const ModelParams& params, std::size_t run_index = 0);

// Synchronous SI. Rounds that infect nobody stay in the trace; trailing empty
// rounds are dropped when the cap is hit and `truncated` is set.
DiffusionTrace run_si(const Graph& g, NodeIndex seed, const ModelParams& params, std::size_t run_index = 0);

DiffusionTrace run_model(const Graph& g, Model model, NodeIndex seed, const ModelParams& params,
                         std::size_t run_index = 0);

// JSON form: {"seed","model","params","run","node_count","truncated","iterations":[[labels...]...]}
// with labels sorted by string order inside every iteration.
std::string trace_to_json(const Graph& g, const DiffusionTrace& trace);
// Inverse of trace_to_json. Throws DomainError for labels not in `g`, ParseError for bad JSON.
DiffusionTrace trace_from_json(const Graph& g, std::string_view json);

}  // namespace cnsdiff
