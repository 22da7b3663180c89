#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lai/bench.hpp"
#include "lai/workloads.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Adaptive range-query indexing benchmark"};

    lai::BenchConfig config;
    std::string workload = "random";
    std::string forecast = "on";

    app.add_option("--engine", config.engine, "Engine to drive")
        ->check(CLI::IsMember({"lai", "crack", "dd1r", "sorted", "scan"}))
        ->capture_default_str();
    app.add_option("--workload", workload,
                   "Workload kind: random, seq_random, seq_alternate, seq_inverse, "
                   "seq_overlap, zoomin, seq_zoomin, zoomout, seq_zoomout, periodic")
        ->capture_default_str();
    app.add_option("--n", config.n, "Dataset size (shuffled keys [0, n))")
        ->capture_default_str();
    app.add_option("--queries", config.queries, "Number of queries")->capture_default_str();
    app.add_option("--delta", config.delta, "Batch size / forecast window")
        ->capture_default_str();
    app.add_option("--forecast", forecast, "Workload forecasting (lai engine only)")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    app.add_option("--tau", config.tau, "Learned-sort crossover threshold")
        ->capture_default_str();
    app.add_option("--epsilon", config.epsilon, "Learned-model error bound")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    app.add_option("--out", config.out_path, "Per-query CSV path (companions: _cases, _batches)")
        ->capture_default_str();
    app.add_option("--dump-workload", config.dump_workload_path,
                   "Write the generated query stream as CSV (idx,l,h)");
    app.add_option("--forecast-log", config.forecast_log_path,
                   "Write the per-batch forecast audit as CSV "
                   "(batch_index,series,method,mase,chosen)");
    app.add_flag("--check-oracle", config.check_oracle,
                 "Verify every result against a full scan of the initial column");

    CLI11_PARSE(app, argc, argv);

    const auto kind = lai::workload_from_name(workload);
    if (!kind) {
        std::cerr << "unknown workload: " << workload << "\n";
        return 64;
    }
    config.workload = *kind;
    config.forecast = (forecast == "on");

    try {
        return lai::run_bench(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
