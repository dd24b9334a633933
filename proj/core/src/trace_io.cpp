#include "cnsdiff/diffusion.hpp"
#include "cnsdiff/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace cnsdiff {

using nlohmann::json;

std::string trace_to_json(const Graph& g, const DiffusionTrace& trace) {
    json doc;
    doc["seed"] = g.label(trace.seed);
    doc["model"] = std::string(to_string(trace.model));
    json params;
    params["ic_probability"] = trace.params.ic_probability;
    params["si_beta"] = trace.params.si_beta;
    params["rng_seed"] = trace.params.rng_seed;
    if (trace.params.max_iterations) {
        params["max_iterations"] = *trace.params.max_iterations;
    }
    doc["params"] = std::move(params);
    doc["run"] = trace.run_index;
    doc["node_count"] = trace.node_count;
    doc["truncated"] = trace.truncated;

    json iterations = json::array();
    for (const auto& round : trace.newly_active) {
        std::vector<std::string> labels;
        labels.reserve(round.size());
        for (NodeIndex v : round) {
            labels.push_back(g.label(v));
        }
        std::sort(labels.begin(), labels.end());
        iterations.push_back(std::move(labels));
    }
    doc["iterations"] = std::move(iterations);
    return doc.dump();
}

DiffusionTrace trace_from_json(const Graph& g, std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("trace json: ") + e.what());
    }
    try {
        DiffusionTrace trace;
        trace.seed = g.index_of(doc.at("seed").get<std::string>());
        trace.model = parse_model(doc.at("model").get<std::string>());
        const auto& params = doc.at("params");
        trace.params.ic_probability = params.at("ic_probability").get<double>();
        trace.params.si_beta = params.at("si_beta").get<double>();
        trace.params.rng_seed = params.at("rng_seed").get<std::uint64_t>();
        if (params.contains("max_iterations")) {
            trace.params.max_iterations = params.at("max_iterations").get<std::size_t>();
        }
        trace.run_index = doc.value("run", std::size_t{0});
        trace.node_count = doc.value("node_count", g.node_count());
        trace.truncated = doc.value("truncated", false);
        for (const auto& round : doc.at("iterations")) {
            std::vector<NodeIndex> nodes;
            for (const auto& label : round) {
                nodes.push_back(g.index_of(label.get<std::string>()));
            }
            std::sort(nodes.begin(), nodes.end());
            trace.newly_active.push_back(std::move(nodes));
        }
        return trace;
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("trace json: ") + e.what());
    }
}

}  // namespace cnsdiff
