#include "cnsdiff/errors.hpp"
#include "cnsdiff/metrics.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace cnsdiff;

namespace {

Graph karate() {
    return load_edge_list_file(std::filesystem::path(CNSDIFF_DATA_DIR) / "karate.txt");
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("Karate CNS horizons match the published per-iteration values") {
    const auto g = karate();
    const auto rows = evaluate_trace(g, run_cns(g, g.index_of("2")));
    REQUIRE(rows.size() == 3);

    CHECK(rows[0].horizon_nodes == 11);
    CHECK(rows[0].horizon_edges == 24);
    CHECK(rows[0].diameter == 2);
    CHECK(std::abs(rows[0].avg_distance - 1.5636) < 1e-3);
    CHECK(std::abs(rows[0].density - 0.4363) < 1e-3);
    CHECK(std::abs(rows[0].avg_degree - 4.3636) < 1e-3);

    CHECK(rows[1].horizon_nodes == 27);
    CHECK(rows[1].horizon_edges == 61);
    CHECK(rows[1].diameter == 4);

    CHECK(rows[2].horizon_nodes == 33);
    CHECK(rows[2].horizon_edges == 76);
    CHECK(rows[2].diameter == 5);
}

TEST_CASE("K3 covered in one iteration") {
    const auto g = oracle::complete_graph(3);
    const auto rows = evaluate_trace(g, run_cns(g, 0));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].coverage == 1.0);
    CHECK(rows[0].diameter == 1);
    CHECK(rows[0].density == 1.0);
    CHECK(rows[0].avg_degree == 2.0);
}

TEST_CASE("single-node horizon reports zeros") {
    const auto g = oracle::complete_graph(3);
    DiffusionTrace t;
    t.seed = 1;
    t.node_count = 3;
    const auto rows = evaluate_trace(g, t, true);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].iteration == 0);
    CHECK(rows[0].horizon_nodes == 1);
    CHECK(rows[0].diameter == 0);
    CHECK(rows[0].avg_distance == 0.0);
    CHECK(rows[0].density == 0.0);
    CHECK(rows[0].avg_degree == 0.0);
    CHECK(rows[0].coverage == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("trace with unknown node is a domain error") {
    DiffusionTrace t;
    t.seed = 0;
    t.node_count = 3;
    t.newly_active = {{1, 17}};
    CHECK_THROWS_AS(evaluate_trace(oracle::complete_graph(3), t), DomainError);
}

TEST_CASE("summarize_speed") {
    const auto g = karate();
    SUBCASE("Karate CNS") {
        const auto s = summarize_speed(run_cns(g, g.index_of("2")));
        CHECK(s.total_iterations == 3);
        CHECK(s.final_coverage == doctest::Approx(33.0 / 34.0));
    }
    SUBCASE("no spread") {
        ModelParams p;
        p.ic_probability = 0.0;
        const auto s = summarize_speed(run_ic(g, 0, p));
        CHECK(s.total_iterations == 0);
        CHECK(s.final_coverage == doctest::Approx(1.0 / 34.0));
    }
    SUBCASE("empty trace") {
        CHECK_THROWS_AS(summarize_speed(DiffusionTrace{}), DomainError);
    }
}

TEST_CASE("row invariants across models on random graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = largest_connected_component(oracle::erdos_renyi(60, 0.06, 77000 + seed));
        ModelParams p;
        p.rng_seed = seed;
        p.ic_probability = 0.6;
        for (Model m : {Model::cns, Model::ic, Model::si}) {
            const auto t = run_model(g, m, 0, p);
            const auto rows = evaluate_trace(g, t);
            CHECK(rows.size() == t.iteration_count());
            std::size_t last_nodes = 1, last_edges = 0;
            double last_cov = 0.0;
            for (const auto& r : rows) {
                CHECK(std::abs(r.avg_degree - r.density * static_cast<double>(r.horizon_nodes - 1)) <= 1e-9);
                CHECK(r.coverage == doctest::Approx(static_cast<double>(r.horizon_nodes) / g.node_count()));
                CHECK(r.horizon_nodes >= last_nodes);
                CHECK(r.horizon_edges >= last_edges);
                CHECK(r.coverage >= last_cov);
                last_nodes = r.horizon_nodes;
                last_edges = r.horizon_edges;
                last_cov = r.coverage;
            }
        }
    }
}

TEST_CASE("horizon diameter and average distance agree with Floyd-Warshall") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = largest_connected_component(oracle::erdos_renyi(80, 0.05, 78000 + seed));
        const auto t = run_ic(g, 0, ModelParams{});
        const auto rows = evaluate_trace(g, t);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto h = induced_subgraph(g, t.cumulative_active(i + 1));
            const auto fw = oracle::floyd_warshall(h);
            int diam = 0;
            long sum = 0, pairs = 0;
            for (std::size_t a = 0; a < h.node_count(); ++a)
                for (std::size_t b = a + 1; b < h.node_count(); ++b)
                    if (fw[a][b] < oracle::kInf) {
                        diam = std::max(diam, fw[a][b]);
                        sum += fw[a][b];
                        ++pairs;
                    }
            CHECK(rows[i].diameter == diam);
            CHECK(rows[i].avg_distance == doctest::Approx(static_cast<double>(sum) / static_cast<double>(pairs)));
        }
    }
}

TEST_CASE("CSV row formatting") {
    CHECK(format_real(0.5) == "0.500000");
    CHECK(format_real(-1e-9) == "0.000000");
    CHECK(format_real(2.0 / 3.0) == "0.666667");

    IterationMetrics m;
    m.iteration = 2;
    m.new_active = 4;
    m.horizon_nodes = 7;
    m.coverage = 0.25;
    m.diameter = 3;
    m.avg_distance = 1.5;
    m.density = 0.1;
    m.avg_degree = 0.6;
    std::ostringstream out;
    write_metrics_row(out, {"karate", "ic", "0", "2"}, m);
    CHECK(out.str() == "karate,ic,0,2,2,4,7,0.250000,3,1.500000,0.100000,0.600000\n");
    CHECK(std::string(kMetricsCsvHeader) ==
          "dataset,model,run,seed_node,iteration,new_active,cum_active,coverage,diameter,avg_distance,density,"
          "avg_degree");
}

TEST_CASE("aggregation pads shorter runs with their terminal row") {
    IterationMetrics seed_row;
    seed_row.horizon_nodes = 1;
    seed_row.coverage = 0.1;
    auto row = [](std::size_t it, std::size_t nodes, double cov) {
        IterationMetrics m;
        m.iteration = it;
        m.new_active = 1;
        m.horizon_nodes = nodes;
        m.coverage = cov;
        m.diameter = static_cast<std::int32_t>(it);
        return m;
    };
    const std::vector<std::vector<IterationMetrics>> runs{
        {row(1, 2, 0.2), row(2, 3, 0.3), row(3, 4, 0.4)},
        {row(1, 2, 0.2)},
        {},
    };
    const auto agg = aggregate_runs(runs, seed_row);
    REQUIRE(agg.size() == 3);
    CHECK(agg[0].padded_runs == 1);
    CHECK(agg[0].coverage == doctest::Approx((0.2 + 0.2 + 0.1) / 3));
    CHECK(agg[0].new_active == doctest::Approx(2.0 / 3));
    CHECK(agg[2].padded_runs == 2);
    CHECK(agg[2].coverage == doctest::Approx((0.4 + 0.2 + 0.1) / 3));
    CHECK(agg[2].cum_active == doctest::Approx((4.0 + 2.0 + 1.0) / 3));
    CHECK(agg[2].diameter == doctest::Approx((3.0 + 1.0 + 0.0) / 3));
    CHECK(agg[2].new_active == doctest::Approx(1.0 / 3));
}

}
