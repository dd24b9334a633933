// cnsdiff: run diffusion experiments, reproduce the benchmark figures, dump tie strengths.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include "cnsdiff/errors.hpp"
#include "cnsdiff/experiment.hpp"
#include "cnsdiff/tie_strength.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct RunArgs {
    std::string graph;
    std::string model;
    std::string seed_node;
    std::string dataset_name;
    double ic_p = 1.0;
    double si_beta = 0.5;
    std::uint64_t rng_seed = 42;
    std::size_t runs = 1;
    std::optional<std::size_t> max_iterations;
    std::string out;
    std::string trace_json;
};

struct ReproduceArgs {
    std::string data_dir;
    std::string out_dir;
    std::string seeds;
    std::string golden;
    std::uint64_t rng_seed = 42;
};

struct TieTableArgs {
    std::string graph;
    std::string out;
};

// Writes to `path`, or standard output for "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw cnsdiff::DataError("cannot write '" + path + "'");
    }
    fn(out);
}

int cmd_run(const RunArgs& args) {
    cnsdiff::ExperimentConfig config;
    config.graph_path = args.graph;
    config.dataset_name = args.dataset_name;
    config.models = {cnsdiff::parse_model(args.model)};
    config.seed_node = args.seed_node;
    config.params.ic_probability = args.ic_p;
    config.params.si_beta = args.si_beta;
    config.params.rng_seed = args.rng_seed;
    config.params.max_iterations = args.max_iterations;
    config.runs = args.runs;
    config.validate();

    const auto report = cnsdiff::run_experiment(config);
    for (const auto& note : report.notes) {
        std::cerr << "note: " << note << '\n';
    }
    with_output(args.out, [&](std::ostream& out) { cnsdiff::write_report_csv(report, out); });

    const auto& mr = report.models.front();
    if (!mr.mean.empty() && args.out != "-") {
        with_output(args.out + ".padding.csv", [&](std::ostream& out) { cnsdiff::write_padding_csv(report, out); });
    }
    if (!args.trace_json.empty()) {
        const auto g = cnsdiff::largest_connected_component(cnsdiff::load_edge_list_file(args.graph));
        with_output(args.trace_json, [&](std::ostream& out) {
            for (const auto& run : mr.runs) {
                out << cnsdiff::trace_to_json(g, run.trace) << '\n';
            }
        });
    }
    std::cerr << cnsdiff::to_string(mr.model) << ": " << mr.speed.total_iterations << " iterations, final coverage "
              << cnsdiff::format_real(mr.speed.final_coverage);
    if (mr.runs.size() > 1) {
        std::cerr << " (run 0; mean iterations over " << mr.runs.size()
                  << " runs: " << cnsdiff::format_real(mr.mean_iterations) << ")";
    }
    if (mr.runs.front().trace.truncated) {
        std::cerr << " [truncated at iteration cap]";
    }
    std::cerr << '\n';
    return 0;
}

int cmd_reproduce(const ReproduceArgs& args) {
    cnsdiff::ReproduceOptions options;
    options.data_dir = args.data_dir;
    options.out_dir = args.out_dir;
    options.seeds = cnsdiff::load_seed_config(args.seeds);
    options.golden_path = args.golden;
    options.rng_seed = args.rng_seed;

    const auto result = cnsdiff::reproduce_paper(options);
    std::size_t within = 0;
    for (const auto& d : result.deviations) {
        within += d.within_tolerance ? 1 : 0;
    }
    for (const auto& ds : result.datasets) {
        for (const auto& note : ds.notes) {
            std::cerr << "note: " << note << '\n';
        }
    }
    for (const auto& path : result.written) {
        std::cerr << "wrote " << path.string() << '\n';
    }
    std::cerr << within << " of " << result.deviations.size() << " golden values reproduced within tolerance\n";
    return 0;
}

int cmd_tie_table(const TieTableArgs& args) {
    const auto g = cnsdiff::load_edge_list_file(args.graph);
    const auto table = cnsdiff::TieStrengthTable::build(g);
    with_output(args.out, [&](std::ostream& out) { cnsdiff::write_tie_table_csv(g, table, out); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common-neighborhood diffusion simulator and benchmark harness"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Run one diffusion model and write per-iteration metrics as CSV");
    run_cmd->add_option("--graph", run.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--model", run.model, "cns, ic or si")->required()->check(CLI::IsMember({"cns", "ic", "si"}));
    run_cmd->add_option("--seed-node", run.seed_node, "Label of the seed node")->required();
    run_cmd->add_option("--ic-p", run.ic_p, "IC activation probability")->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--si-beta", run.si_beta, "SI infection probability")->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--rng-seed", run.rng_seed, "Base seed for stochastic models");
    run_cmd->add_option("--runs", run.runs, "Repetitions (stochastic models only)")->check(CLI::PositiveNumber);
    run_cmd->add_option("--max-iterations", run.max_iterations, "SI round cap (default 10 x |V|)");
    run_cmd->add_option("--dataset-name", run.dataset_name, "Value for the dataset column (default: file stem)");
    run_cmd->add_option("--trace-json", run.trace_json, "Also write one JSON trace per run to this file");
    run_cmd->add_option("--out", run.out, "Output CSV path, or - for stdout")->required();

    ReproduceArgs rep;
    auto* rep_cmd = app.add_subcommand("reproduce", "Regenerate every benchmark figure as CSV plus a deviation report");
    rep_cmd->add_option("--data-dir", rep.data_dir, "Directory holding the dataset edge lists")->required();
    rep_cmd->add_option("--out-dir", rep.out_dir, "Output directory")->required();
    rep_cmd->add_option("--seeds", rep.seeds, "Seed config file (dataset = label)")->required()->check(CLI::ExistingFile);
    rep_cmd->add_option("--golden", rep.golden, "Golden values CSV (default: <data-dir>/golden_values.csv)");
    rep_cmd->add_option("--rng-seed", rep.rng_seed, "Seed for the SI runs");

    TieTableArgs tie;
    auto* tie_cmd = app.add_subcommand("tie-table", "Write the per-edge common-neighborhood breakdown as CSV");
    tie_cmd->add_option("--graph", tie.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
    tie_cmd->add_option("--out", tie.out, "Output CSV path, or - for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run);
        if (*rep_cmd) return cmd_reproduce(rep);
        if (*tie_cmd) return cmd_tie_table(tie);
    } catch (const cnsdiff::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cnsdiff::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
