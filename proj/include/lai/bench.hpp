#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lai/core.hpp"
#include "lai/engine.hpp"
#include "lai/forecast.hpp"
#include "lai/range_engine.hpp"
#include "lai/workloads.hpp"

namespace lai {

// Seeded shuffle of [0, n): the standard benchmark dataset.
Column make_shuffled_dataset(std::size_t n, std::uint64_t seed);

// Engine factory for the names accepted by the CLI: lai, crack, dd1r, sorted,
// scan. The LAI instance is also returned through `lai_out` so the driver can
// hook up forecasting.
std::unique_ptr<RangeEngine> make_engine(const std::string& name, Column column,
                                         const LaiConfig& config, std::uint64_t seed,
                                         LaiEngine** lai_out = nullptr);

struct BatchMetrics {
    std::size_t batch_index = 0;
    std::uint64_t query_ns = 0;     // sum of user-query latencies in the batch
    std::uint64_t forecast_ns = 0;  // prediction-task wall time (separate thread)
    std::uint64_t apply_ns = 0;     // index pre-building from the forecast
    std::size_t mutations = 0;      // forecast queries that changed anything

    // Audit trail of the prediction task, when one ran for this batch.
    std::string chosen_method_l;
    std::string chosen_method_h;
    std::vector<std::pair<std::string, double>> mase_scores_l;
    std::vector<std::pair<std::string, double>> mase_scores_h;
};

struct ExecOptions {
    std::size_t delta = 200;
    bool forecast = false;    // honored only when a LaiEngine hook is given
    std::size_t horizon = 0;  // 0 means delta
    const Column* oracle_column = nullptr;  // enables per-query oracle checking
};

struct ExecResult {
    std::vector<BatchMetrics> batches;
    std::size_t oracle_failures = 0;
    std::size_t first_failure_query = 0;
};

// Drives the engine through the query stream in batches of delta. With
// forecasting enabled, the prediction task for the batch being executed runs
// concurrently on a separate thread; it is joined after the batch completes
// and its forecast applied before the next batch begins, so all engine
// mutations stay serialized.
ExecResult execute_workload(RangeEngine& engine, std::span<const RangeQuery> queries,
                            const ExecOptions& opts, LaiEngine* lai = nullptr);

struct BenchConfig {
    std::string engine = "lai";
    WorkloadKind workload = WorkloadKind::Random;
    std::size_t n = 1'000'000;
    std::size_t queries = 2000;
    std::size_t delta = 200;
    bool forecast = true;
    std::size_t tau = 6000;
    std::size_t epsilon = 32;
    std::uint64_t seed = 42;
    std::string out_path = "results.csv";
    std::string dump_workload_path;
    std::string forecast_log_path;
    bool check_oracle = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitOracleMismatch = 3;

// Full benchmark run: dataset, workload, execution, CSV emission.
int run_bench(const BenchConfig& config);

// CSV writers, exposed for tests.
void write_per_query_csv(std::ostream& os, const BenchConfig& config,
                         std::span<const QueryStats> stats);
void write_per_case_csv(std::ostream& os, std::span<const QueryStats> stats);
void write_batches_csv(std::ostream& os, std::span<const BatchMetrics> batches);
void write_workload_csv(std::ostream& os, std::span<const RangeQuery> queries);
void write_forecast_log_csv(std::ostream& os, std::span<const BatchMetrics> batches);
std::string metadata_line(const BenchConfig& config);

}  // namespace lai
