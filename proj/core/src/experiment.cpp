#include "cnsdiff/experiment.hpp"

#include "cnsdiff/errors.hpp"

#include <algorithm>
#include <ostream>

namespace cnsdiff {

bool is_stochastic(Model m, const ModelParams& params) noexcept {
    switch (m) {
        case Model::cns: return false;
        case Model::ic: return params.ic_probability > 0.0 && params.ic_probability < 1.0;
        case Model::si: return true;
    }
    return false;
}

void ExperimentConfig::validate() const {
    if (models.empty()) {
        throw ConfigError("no model selected");
    }
    if (seed_node.empty()) {
        throw ConfigError("a seed node label is required");
    }
    if (runs == 0) {
        throw ConfigError("runs must be at least 1");
    }
    params.validate();
    if (runs > 1) {
        for (Model m : models) {
            if (!is_stochastic(m, params)) {
                throw ConfigError("runs > 1 requested for deterministic model '" + std::string(to_string(m)) + "'");
            }
        }
    }
}

const ModelReport* ComparisonReport::find(Model m) const {
    const auto it = std::find_if(models.begin(), models.end(), [m](const ModelReport& r) { return r.model == m; });
    return it == models.end() ? nullptr : &*it;
}

ComparisonReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    const Graph raw = load_edge_list_file(config.graph_path);
    const Graph g = largest_connected_component(raw);
    auto named = config;
    if (named.dataset_name.empty()) {
        named.dataset_name = config.graph_path.stem().string();
    }
    auto report = run_experiment(named, g, &raw);
    if (g.node_count() != raw.node_count()) {
        report.notes.insert(report.notes.begin(),
                            "reduced to largest connected component: " + std::to_string(raw.node_count()) + " -> " +
                                std::to_string(g.node_count()) + " nodes");
    }
    return report;
}

ComparisonReport run_experiment(const ExperimentConfig& config, const Graph& g, const Graph* raw_graph) {
    config.validate();
    const auto seed = g.find(config.seed_node);
    if (!seed) {
        if (raw_graph != nullptr && raw_graph->find(config.seed_node)) {
            throw DataError("seed node '" + config.seed_node +
                            "' was removed by the largest-connected-component reduction (" +
                            std::to_string(raw_graph->node_count()) + " -> " + std::to_string(g.node_count()) +
                            " nodes)");
        }
        throw DataError("seed node '" + config.seed_node + "' is not in the graph");
    }

    ComparisonReport report;
    report.dataset = config.dataset_name;
    report.seed_node = config.seed_node;
    report.node_count = g.node_count();

    const IterationMetrics seed_row = evaluate_horizon(g, std::vector<NodeIndex>{*seed}, 0, 1);
    for (Model m : config.models) {
        ModelReport mr;
        mr.model = m;
        const std::size_t runs = is_stochastic(m, config.params) ? config.runs : 1;
        double iteration_sum = 0.0;
        for (std::size_t r = 0; r < runs; ++r) {
            ModelRun run;
            run.trace = run_model(g, m, *seed, config.params, r);
            run.rows = evaluate_trace(g, run.trace);
            iteration_sum += static_cast<double>(run.trace.iteration_count());
            mr.runs.push_back(std::move(run));
        }
        mr.speed = summarize_speed(mr.runs.front().trace);
        mr.mean_iterations = iteration_sum / static_cast<double>(runs);
        if (runs > 1) {
            std::vector<std::vector<IterationMetrics>> rows;
            rows.reserve(runs);
            for (const auto& run : mr.runs) {
                rows.push_back(run.rows);
            }
            mr.mean = aggregate_runs(rows, seed_row);
        }
        report.models.push_back(std::move(mr));
    }
    return report;
}

void write_report_csv(const ComparisonReport& report, std::ostream& out, bool with_header) {
    if (with_header) {
        out << kMetricsCsvHeader << '\n';
    }
    for (const auto& mr : report.models) {
        const std::string model(to_string(mr.model));
        for (const auto& run : mr.runs) {
            const MetricsRowKey key{report.dataset, model, std::to_string(run.trace.run_index), report.seed_node};
            for (const auto& row : run.rows) {
                write_metrics_row(out, key, row);
            }
        }
        const MetricsRowKey mean_key{report.dataset, model, "mean", report.seed_node};
        for (const auto& row : mr.mean) {
            write_aggregate_row(out, mean_key, row);
        }
    }
}

void write_padding_csv(const ComparisonReport& report, std::ostream& out) {
    out << "dataset,model,iteration,runs,padded_runs\n";
    for (const auto& mr : report.models) {
        for (const auto& row : mr.mean) {
            out << report.dataset << ',' << to_string(mr.model) << ',' << row.iteration << ',' << mr.runs.size()
                << ',' << row.padded_runs << '\n';
        }
    }
}

}  // namespace cnsdiff
