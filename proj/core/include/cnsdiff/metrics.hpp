#pragma once

#include "cnsdiff/diffusion.hpp"
#include "cnsdiff/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cnsdiff {

/// Structure of the diffusion horizon (the subgraph induced by the cumulative
/// active set) after one iteration. A single-node horizon reports zeros.
struct IterationMetrics {
    std::size_t iteration = 0;
    std::size_t new_active = 0;
    double coverage = 0.0;
    std::size_t horizon_nodes = 0;
    std::size_t horizon_edges = 0;
    std::int32_t diameter = 0;
    double avg_distance = 0.0;
    double density = 0.0;
    double avg_degree = 0.0;
};

struct SpeedSummary {
    std::size_t total_iterations = 0;
    double final_coverage = 0.0;
};

IterationMetrics evaluate_horizon(const Graph& g, std::span<const NodeIndex> active, std::size_t iteration,
                                  std::size_t new_active);

// One row per iteration 1..T; with include_seed_row the iteration-0 state leads.
// Throws DomainError if the trace references nodes outside `g`.
std::vector<IterationMetrics> evaluate_trace(const Graph& g, const DiffusionTrace& trace,
                                             bool include_seed_row = false);

// Throws DomainError for a trace that was never run (node_count 0).
SpeedSummary summarize_speed(const DiffusionTrace& trace);

// Row identity columns that precede the metric values in the CSV.
struct MetricsRowKey {
    std::string dataset;
    std::string model;
    std::string run;  // run index, or "mean" for aggregated rows
    std::string seed_node;
};

inline constexpr const char* kMetricsCsvHeader =
    "dataset,model,run,seed_node,iteration,new_active,cum_active,coverage,diameter,avg_distance,density,avg_degree";

// Fixed-point text with six decimals and '.' separator, independent of locale.
std::string format_real(double value);

void write_metrics_row(std::ostream& out, const MetricsRowKey& key, const IterationMetrics& m);

/// Per-iteration means across runs of unequal length. Runs that ended before
/// an iteration contribute their terminal row with zero new activations;
/// `padded_runs` counts them.
struct AggregateRow {
    std::size_t iteration = 0;
    std::size_t padded_runs = 0;
    double new_active = 0.0;
    double cum_active = 0.0;
    double coverage = 0.0;
    double diameter = 0.0;
    double avg_distance = 0.0;
    double density = 0.0;
    double avg_degree = 0.0;
};

// Runs with zero iterations are padded with `seed_row` (their iteration-0 state).
std::vector<AggregateRow> aggregate_runs(const std::vector<std::vector<IterationMetrics>>& runs,
                                         const IterationMetrics& seed_row);

void write_aggregate_row(std::ostream& out, const MetricsRowKey& key, const AggregateRow& row);

}  // namespace cnsdiff
