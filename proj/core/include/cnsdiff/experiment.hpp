#pragma once

#include "cnsdiff/dataset.hpp"
#include "cnsdiff/diffusion.hpp"
#include "cnsdiff/graph.hpp"
#include "cnsdiff/metrics.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cnsdiff {

struct ExperimentConfig {
    std::string dataset_name;  // used for the dataset column; defaults to the file stem
    std::filesystem::path graph_path;
    std::vector<Model> models;
    std::string seed_node;
    ModelParams params;
    std::size_t runs = 1;

    // Throws ConfigError: no model, empty seed, runs == 0, bad probabilities,
    // or runs > 1 for a deterministic model (cns, ic with p = 1).
    void validate() const;
};

bool is_stochastic(Model m, const ModelParams& params) noexcept;

struct ModelRun {
    DiffusionTrace trace;
    std::vector<IterationMetrics> rows;
};

struct ModelReport {
    Model model = Model::cns;
    std::vector<ModelRun> runs;
    std::vector<AggregateRow> mean;  // filled when there is more than one run
    SpeedSummary speed;              // of run 0
    double mean_iterations = 0.0;    // over all runs
};

struct ComparisonReport {
    std::string dataset;
    std::string seed_node;
    std::size_t node_count = 0;
    std::vector<ModelReport> models;
    std::vector<std::string> notes;

    const ModelReport* find(Model m) const;
};

// Loads config.graph_path, reduces to the largest component and runs every model.
ComparisonReport run_experiment(const ExperimentConfig& config);
// Runs on an already prepared graph. `raw_graph` (optional) is the pre-reduction
// graph, used only to explain a seed that the reduction removed.
ComparisonReport run_experiment(const ExperimentConfig& config, const Graph& g, const Graph* raw_graph = nullptr);

// Per-run rows for every model, followed by "mean" rows when runs > 1.
void write_report_csv(const ComparisonReport& report, std::ostream& out, bool with_header = true);
// iteration,padded_runs for every model that was aggregated.
void write_padding_csv(const ComparisonReport& report, std::ostream& out);

// --- benchmark reproduction -------------------------------------------------

// "name = label" lines, '#' comments and blank lines ignored.
std::map<std::string, std::string> parse_seed_config(std::istream& in);
std::map<std::string, std::string> load_seed_config(const std::filesystem::path& path);

/// One published coordinate: `figure` is fig2..fig7 or table1; for fig2 and
/// table1 the iteration is 0 and, for table1, `model` names the column
/// (nodes, edges, avg_degree).
struct GoldenValue {
    std::string figure;
    std::string dataset;
    std::string model;
    std::size_t iteration = 0;
    double value = 0.0;
};

std::vector<GoldenValue> parse_golden_values(std::istream& in);
std::vector<GoldenValue> load_golden_values(const std::filesystem::path& path);

// Absolute tolerance a produced value must meet to count as reproducing `figure`.
double golden_tolerance(const std::string& figure, const std::string& model);

struct Deviation {
    GoldenValue expected;
    bool produced_available = false;
    double produced = 0.0;
    double abs_diff = 0.0;
    bool within_tolerance = false;
};

struct ReproduceOptions {
    std::filesystem::path data_dir;
    std::filesystem::path out_dir;
    std::map<std::string, std::string> seeds;
    std::filesystem::path golden_path;  // defaults to data_dir/golden_values.csv
    DatasetRegistry registry = DatasetRegistry::benchmark_suite();
    std::uint64_t rng_seed = 42;
};

struct ReproduceResult {
    std::vector<ComparisonReport> reports;
    std::vector<LoadedDataset> datasets;
    std::vector<Deviation> deviations;
    std::vector<std::filesystem::path> written;
};

// Karate falls back to seed "2"; every other dataset needs an explicit seed.
// Throws DataError listing missing dataset files and ConfigError listing
// datasets without a seed.
ReproduceResult reproduce_paper(const ReproduceOptions& options);

// Compares every golden entry against produced values; nothing is skipped.
std::vector<Deviation> compare_with_golden(const std::vector<GoldenValue>& golden,
                                           const std::vector<ComparisonReport>& reports,
                                           const std::vector<LoadedDataset>& datasets);
void write_deviation_report(const std::vector<Deviation>& deviations, const std::vector<LoadedDataset>& datasets,
                            std::ostream& out);

}  // namespace cnsdiff
