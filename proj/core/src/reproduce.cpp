#include "cnsdiff/errors.hpp"
#include "cnsdiff/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace cnsdiff {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        out.push_back(trim(field));
    }
    return out;
}

using ValueKey = std::tuple<std::string, std::string, std::string, std::size_t>;

struct FigureSeries {
    const char* figure;
    const char* file;
    const char* column;
};

constexpr FigureSeries kSeriesFigures[] = {
    {"fig3", "fig3_coverage.csv", "coverage"},
    {"fig4", "fig4_diameter.csv", "diameter"},
    {"fig5", "fig5_avg_distance.csv", "avg_distance"},
    {"fig6", "fig6_density.csv", "density"},
    {"fig7", "fig7_avg_degree.csv", "avg_degree"},
};

double series_value(const std::string& figure, const IterationMetrics& m) {
    if (figure == "fig3") return m.coverage;
    if (figure == "fig4") return static_cast<double>(m.diameter);
    if (figure == "fig5") return m.avg_distance;
    if (figure == "fig6") return m.density;
    return m.avg_degree;
}

std::string series_text(const std::string& figure, const IterationMetrics& m) {
    if (figure == "fig4") {
        return std::to_string(m.diameter);
    }
    return format_real(series_value(figure, m));
}

std::map<ValueKey, double> produced_values(const std::vector<ComparisonReport>& reports,
                                           const std::vector<LoadedDataset>& datasets) {
    std::map<ValueKey, double> values;
    for (const auto& report : reports) {
        for (const auto& mr : report.models) {
            const std::string model(to_string(mr.model));
            values[{"fig2", report.dataset, model, 0}] = static_cast<double>(mr.speed.total_iterations);
            for (const auto& row : mr.runs.front().rows) {
                for (const auto& fig : kSeriesFigures) {
                    values[{fig.figure, report.dataset, model, row.iteration}] = series_value(fig.figure, row);
                }
            }
        }
    }
    for (const auto& d : datasets) {
        values[{"table1", d.descriptor.name, "nodes", 0}] = static_cast<double>(d.graph.node_count());
        values[{"table1", d.descriptor.name, "edges", 0}] = static_cast<double>(d.graph.edge_count());
        values[{"table1", d.descriptor.name, "avg_degree", 0}] = average_degree(d.graph);
    }
    return values;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    return out;
}

}  // namespace

std::map<std::string, std::string> parse_seed_config(std::istream& in) {
    std::map<std::string, std::string> seeds;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(line_no, "expected 'dataset = seed-label', got '" + text + "'");
        }
        auto key = trim(std::string_view(text).substr(0, eq));
        auto value = trim(std::string_view(text).substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError(line_no, "empty dataset name or seed label");
        }
        seeds[std::move(key)] = std::move(value);
    }
    return seeds;
}

std::map<std::string, std::string> load_seed_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open seed config '" + path.string() + "'");
    }
    return parse_seed_config(in);
}

std::vector<GoldenValue> parse_golden_values(std::istream& in) {
    std::vector<GoldenValue> out;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const auto fields = split_csv(text);
        if (!header_seen) {
            header_seen = true;
            if (fields.size() == 5 && fields[0] == "figure") {
                continue;
            }
        }
        if (fields.size() != 5) {
            throw ParseError(line_no, "golden values need 5 columns (figure,dataset,model,iteration,value)");
        }
        GoldenValue g;
        g.figure = fields[0];
        g.dataset = fields[1];
        g.model = fields[2];
        try {
            g.iteration = static_cast<std::size_t>(std::stoul(fields[3]));
            g.value = std::stod(fields[4]);
        } catch (const std::exception&) {
            throw ParseError(line_no, "non-numeric iteration or value in '" + text + "'");
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<GoldenValue> load_golden_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open golden values '" + path.string() + "'");
    }
    return parse_golden_values(in);
}

double golden_tolerance(const std::string& figure, const std::string& model) {
    // Published values are truncated to four (sometimes three) decimals.
    if (figure == "fig2" || figure == "fig4") {
        return 0.0;
    }
    if (figure == "table1") {
        return model == "avg_degree" ? 0.005 : 0.0;
    }
    return 0.001;
}

std::vector<Deviation> compare_with_golden(const std::vector<GoldenValue>& golden,
                                           const std::vector<ComparisonReport>& reports,
                                           const std::vector<LoadedDataset>& datasets) {
    const auto produced = produced_values(reports, datasets);
    std::vector<Deviation> out;
    out.reserve(golden.size());
    for (const auto& g : golden) {
        Deviation d;
        d.expected = g;
        const auto it = produced.find({g.figure, g.dataset, g.model, g.iteration});
        if (it != produced.end()) {
            d.produced_available = true;
            d.produced = it->second;
            d.abs_diff = std::fabs(d.produced - g.value);
            d.within_tolerance = d.abs_diff <= golden_tolerance(g.figure, g.model) + 1e-12;
        }
        out.push_back(d);
    }
    return out;
}

void write_deviation_report(const std::vector<Deviation>& deviations, const std::vector<LoadedDataset>& datasets,
                            std::ostream& out) {
    std::size_t matched = 0;
    std::size_t missing = 0;
    for (const auto& d : deviations) {
        if (!d.produced_available) {
            ++missing;
        } else if (d.within_tolerance) {
            ++matched;
        }
    }
    out << "# golden entries: " << deviations.size() << ", within tolerance: " << matched
        << ", deviating: " << deviations.size() - matched - missing << ", not produced: " << missing << '\n';
    for (const auto& ds : datasets) {
        for (const auto& note : ds.notes) {
            out << "# note: " << note << '\n';
        }
    }
    out << "status,figure,dataset,model,iteration,expected,produced,abs_diff,tolerance\n";
    for (const auto& d : deviations) {
        const auto& g = d.expected;
        const char* status = !d.produced_available ? "MISSING" : d.within_tolerance ? "OK" : "DEVIATION";
        out << status << ',' << g.figure << ',' << g.dataset << ',' << g.model << ',' << g.iteration << ','
            << format_real(g.value) << ',' << (d.produced_available ? format_real(d.produced) : std::string("-"))
            << ',' << (d.produced_available ? format_real(d.abs_diff) : std::string("-")) << ','
            << format_real(golden_tolerance(g.figure, g.model)) << '\n';
    }
}

ReproduceResult reproduce_paper(const ReproduceOptions& options) {
    std::vector<std::string> missing_files;
    for (const auto& d : options.registry.entries()) {
        if (!std::filesystem::exists(resolve_source(d, options.data_dir))) {
            missing_files.push_back(d.name);
        }
    }
    if (!missing_files.empty()) {
        std::string names;
        for (const auto& n : missing_files) {
            names += (names.empty() ? "" : ", ") + n;
        }
        throw DataError("missing datasets in '" + options.data_dir.string() + "': " + names);
    }

    std::map<std::string, std::string> seeds = options.seeds;
    if (!seeds.contains("karate") && options.registry.find("karate") != nullptr) {
        seeds["karate"] = "2";
    }
    std::string unseeded;
    for (const auto& d : options.registry.entries()) {
        if (!seeds.contains(d.name)) {
            unseeded += (unseeded.empty() ? "" : ", ") + d.name;
        }
    }
    if (!unseeded.empty()) {
        throw ConfigError("no seed node configured for: " + unseeded);
    }

    const auto golden_path =
        options.golden_path.empty() ? options.data_dir / "golden_values.csv" : options.golden_path;
    const auto golden = load_golden_values(golden_path);

    ReproduceResult result;
    for (const auto& d : options.registry.entries()) {
        auto loaded = load_dataset(d, options.data_dir);
        ExperimentConfig config;
        config.dataset_name = d.name;
        config.models = {Model::cns, Model::ic, Model::si};
        config.seed_node = seeds.at(d.name);
        config.params.rng_seed = options.rng_seed;
        result.reports.push_back(run_experiment(config, loaded.graph));
        result.datasets.push_back(std::move(loaded));
    }
    result.deviations = compare_with_golden(golden, result.reports, result.datasets);

    std::filesystem::create_directories(options.out_dir);
    {
        const auto path = options.out_dir / "fig2_iterations.csv";
        auto out = open_output(path);
        out << "dataset,model,seed_node,iterations,final_coverage\n";
        for (const auto& report : result.reports) {
            for (const auto& mr : report.models) {
                out << report.dataset << ',' << to_string(mr.model) << ',' << report.seed_node << ','
                    << mr.speed.total_iterations << ',' << format_real(mr.speed.final_coverage) << '\n';
            }
        }
        result.written.push_back(path);
    }
    for (const auto& fig : kSeriesFigures) {
        const auto path = options.out_dir / fig.file;
        auto out = open_output(path);
        out << "dataset,model,seed_node,iteration," << fig.column << '\n';
        for (const auto& report : result.reports) {
            for (const auto& mr : report.models) {
                for (const auto& row : mr.runs.front().rows) {
                    out << report.dataset << ',' << to_string(mr.model) << ',' << report.seed_node << ','
                        << row.iteration << ',' << series_text(fig.figure, row) << '\n';
                }
            }
        }
        result.written.push_back(path);
    }
    {
        const auto path = options.out_dir / "deviations.txt";
        auto out = open_output(path);
        write_deviation_report(result.deviations, result.datasets, out);
        result.written.push_back(path);
    }
    return result;
}

}  // namespace cnsdiff
