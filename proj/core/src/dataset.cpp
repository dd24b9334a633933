#include "cnsdiff/dataset.hpp"

#include "cnsdiff/errors.hpp"

#include <algorithm>

namespace cnsdiff {

DatasetRegistry::DatasetRegistry(std::vector<DatasetDescriptor> entries) {
    for (auto& d : entries) {
        add(std::move(d));
    }
}

void DatasetRegistry::add(DatasetDescriptor descriptor) {
    if (find(descriptor.name) != nullptr) {
        throw ConfigError("dataset '" + descriptor.name + "' registered twice");
    }
    entries_.push_back(std::move(descriptor));
}

const DatasetDescriptor* DatasetRegistry::find(std::string_view name) const {
    const auto it = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const DatasetDescriptor& d) { return d.name == name; });
    return it == entries_.end() ? nullptr : &*it;
}

DatasetRegistry DatasetRegistry::benchmark_suite() {
    return DatasetRegistry({
        {"karate", 34, 78, "karate.txt"},
        {"lesmis", 77, 254, "lesmis.txt"},
        {"jazz", 198, 2742, "jazz.txt"},
        {"polblogs", 1224, 16718, "polblogs.txt"},
    });
}

std::filesystem::path resolve_source(const DatasetDescriptor& d, const std::filesystem::path& data_dir) {
    if (d.source_path.is_absolute()) {
        return d.source_path;
    }
    return data_dir / d.source_path;
}

LoadedDataset load_dataset(const DatasetDescriptor& d, const std::filesystem::path& data_dir) {
    const auto path = resolve_source(d, data_dir);
    if (!std::filesystem::exists(path)) {
        throw DataError("dataset '" + d.name + "' not found at '" + path.string() + "'");
    }
    Graph raw = load_edge_list_file(path);

    LoadedDataset out;
    out.descriptor = d;
    out.raw_nodes = raw.node_count();
    out.raw_edges = raw.edge_count();
    out.graph = largest_connected_component(raw);

    if (out.graph.node_count() != out.raw_nodes) {
        out.notes.push_back(d.name + ": reduced to largest connected component (" +
                            std::to_string(out.raw_nodes) + " -> " +
                            std::to_string(out.graph.node_count()) + " nodes, " +
                            std::to_string(out.raw_edges) + " -> " +
                            std::to_string(out.graph.edge_count()) + " edges)");
    }
    if (!out.matches_expected_size()) {
        out.notes.push_back(d.name + ": size mismatch, expected " + std::to_string(d.expected_nodes) +
                            " nodes / " + std::to_string(d.expected_edges) + " edges, loaded " +
                            std::to_string(out.graph.node_count()) + " / " +
                            std::to_string(out.graph.edge_count()));
    }
    return out;
}

}  // namespace cnsdiff
