#include "cnsdiff/metrics.hpp"

#include "cnsdiff/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace cnsdiff {

IterationMetrics evaluate_horizon(const Graph& g, std::span<const NodeIndex> active, std::size_t iteration,
                                  std::size_t new_active) {
    const Graph horizon = induced_subgraph(g, active);
    IterationMetrics m;
    m.iteration = iteration;
    m.new_active = new_active;
    m.horizon_nodes = horizon.node_count();
    m.horizon_edges = horizon.edge_count();
    m.coverage = g.empty() ? 0.0 : static_cast<double>(m.horizon_nodes) / static_cast<double>(g.node_count());
    if (m.horizon_nodes < 2) {
        return m;
    }
    const auto distances = all_pairs_distance_summary(horizon);
    m.diameter = distances.diameter;
    m.avg_distance = distances.connected_pairs == 0
                         ? 0.0
                         : static_cast<double>(distances.distance_sum) /
                               static_cast<double>(distances.connected_pairs);
    m.density = density(horizon);
    m.avg_degree = average_degree(horizon);
    return m;
}

std::vector<IterationMetrics> evaluate_trace(const Graph& g, const DiffusionTrace& trace, bool include_seed_row) {
    g.require_node(trace.seed);
    for (const auto& round : trace.newly_active) {
        for (NodeIndex v : round) {
            g.require_node(v);
        }
    }

    std::vector<IterationMetrics> rows;
    std::vector<NodeIndex> active{trace.seed};
    if (include_seed_row) {
        rows.push_back(evaluate_horizon(g, active, 0, 1));
    }
    for (std::size_t t = 0; t < trace.newly_active.size(); ++t) {
        const auto& fresh = trace.newly_active[t];
        active.insert(active.end(), fresh.begin(), fresh.end());
        rows.push_back(evaluate_horizon(g, active, t + 1, fresh.size()));
    }
    return rows;
}

SpeedSummary summarize_speed(const DiffusionTrace& trace) {
    if (trace.node_count == 0) {
        throw DomainError("cannot summarize an empty trace");
    }
    SpeedSummary s;
    s.total_iterations = trace.iteration_count();
    s.final_coverage = static_cast<double>(trace.cumulative_count(trace.iteration_count())) /
                       static_cast<double>(trace.node_count);
    return s;
}

std::string format_real(double value) {
    char buf[64];
    // Keep "-0.000000" out of the output.
    if (value == 0.0 || std::fabs(value) < 5e-7) {
        value = 0.0;
    }
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

void write_metrics_row(std::ostream& out, const MetricsRowKey& key, const IterationMetrics& m) {
    out << key.dataset << ',' << key.model << ',' << key.run << ',' << key.seed_node << ',' << m.iteration << ','
        << m.new_active << ',' << m.horizon_nodes << ',' << format_real(m.coverage) << ',' << m.diameter << ','
        << format_real(m.avg_distance) << ',' << format_real(m.density) << ',' << format_real(m.avg_degree)
        << '\n';
}

std::vector<AggregateRow> aggregate_runs(const std::vector<std::vector<IterationMetrics>>& runs,
                                         const IterationMetrics& seed_row) {
    std::size_t longest = 0;
    for (const auto& r : runs) {
        longest = std::max(longest, r.size());
    }
    std::vector<AggregateRow> out;
    if (runs.empty()) {
        return out;
    }
    const double n = static_cast<double>(runs.size());
    for (std::size_t t = 0; t < longest; ++t) {
        AggregateRow row;
        row.iteration = t + 1;
        for (const auto& r : runs) {
            const bool padded = t >= r.size();
            const IterationMetrics& m = padded ? (r.empty() ? seed_row : r.back()) : r[t];
            if (padded) {
                ++row.padded_runs;
            } else {
                row.new_active += static_cast<double>(m.new_active);
            }
            row.cum_active += static_cast<double>(m.horizon_nodes);
            row.coverage += m.coverage;
            row.diameter += static_cast<double>(m.diameter);
            row.avg_distance += m.avg_distance;
            row.density += m.density;
            row.avg_degree += m.avg_degree;
        }
        row.new_active /= n;
        row.cum_active /= n;
        row.coverage /= n;
        row.diameter /= n;
        row.avg_distance /= n;
        row.density /= n;
        row.avg_degree /= n;
        out.push_back(row);
    }
    return out;
}

void write_aggregate_row(std::ostream& out, const MetricsRowKey& key, const AggregateRow& row) {
    out << key.dataset << ',' << key.model << ',' << key.run << ',' << key.seed_node << ',' << row.iteration << ','
        << format_real(row.new_active) << ',' << format_real(row.cum_active) << ',' << format_real(row.coverage)
        << ',' << format_real(row.diameter) << ',' << format_real(row.avg_distance) << ','
        << format_real(row.density) << ',' << format_real(row.avg_degree) << '\n';
}

}  // namespace cnsdiff
