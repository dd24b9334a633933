#pragma once

#include "cnsdiff/graph.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cnsdiff {

struct DatasetDescriptor {
    std::string name;
    std::size_t expected_nodes = 0;
    std::size_t expected_edges = 0;
    // Relative paths resolve against the data directory handed to load_dataset().
    std::filesystem::path source_path;
};

// Unique-name collection of dataset descriptors.
class DatasetRegistry {
public:
    DatasetRegistry() = default;
    explicit DatasetRegistry(std::vector<DatasetDescriptor> entries);

    // Throws ConfigError if the name is taken.
    void add(DatasetDescriptor descriptor);
    const DatasetDescriptor* find(std::string_view name) const;
    const std::vector<DatasetDescriptor>& entries() const noexcept { return entries_; }

    // Karate, Les Miserables, Jazz and Polblogs with their published sizes.
    static DatasetRegistry benchmark_suite();

private:
    std::vector<DatasetDescriptor> entries_;
};

struct LoadedDataset {
    DatasetDescriptor descriptor;
    Graph graph;                 // after largest-connected-component reduction
    std::size_t raw_nodes = 0;   // before reduction
    std::size_t raw_edges = 0;
    // Human-readable notes: component reduction, size mismatches against the descriptor.
    std::vector<std::string> notes;

    bool matches_expected_size() const {
        return graph.node_count() == descriptor.expected_nodes &&
               graph.edge_count() == descriptor.expected_edges;
    }
};

std::filesystem::path resolve_source(const DatasetDescriptor& d, const std::filesystem::path& data_dir);

// Loads, symmetrizes, deduplicates and reduces to the largest component.
// A size mismatch against the descriptor is reported in `notes`, never thrown.
LoadedDataset load_dataset(const DatasetDescriptor& d, const std::filesystem::path& data_dir);

}  // namespace cnsdiff
