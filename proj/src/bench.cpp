#include "lai/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lai/baselines.hpp"

namespace lai {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_between(Clock::time_point a, Clock::time_point b) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
}

struct TimedForecast {
    ForecastResult result;
    std::uint64_t wall_ns = 0;
};

std::string out_sibling(const std::string& path, const std::string& suffix) {
    std::string stem = path;
    if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv") {
        stem.resize(stem.size() - 4);
    }
    return stem + suffix + ".csv";
}

}  // namespace

Column make_shuffled_dataset(std::size_t n, std::uint64_t seed) {
    Column column(n);
    std::iota(column.begin(), column.end(), Key{0});
    std::mt19937_64 rng(seed);
    std::shuffle(column.begin(), column.end(), rng);
    return column;
}

std::unique_ptr<RangeEngine> make_engine(const std::string& name, Column column,
                                         const LaiConfig& config, std::uint64_t seed,
                                         LaiEngine** lai_out) {
    if (lai_out) *lai_out = nullptr;
    if (name == "lai") {
        auto engine = std::make_unique<LaiEngine>(std::move(column), config);
        if (lai_out) *lai_out = engine.get();
        return engine;
    }
    if (name == "crack") return std::make_unique<CrackEngine>(std::move(column));
    if (name == "dd1r") return std::make_unique<Dd1rEngine>(std::move(column), seed);
    if (name == "sorted") return std::make_unique<SortedEngine>(std::move(column));
    if (name == "scan") return std::make_unique<ScanEngine>(std::move(column));
    throw std::invalid_argument("unknown engine: " + name);
}

ExecResult execute_workload(RangeEngine& engine, std::span<const RangeQuery> queries,
                            const ExecOptions& opts, LaiEngine* lai) {
    if (opts.delta == 0) throw std::invalid_argument("execute_workload: delta must be > 0");
    const std::size_t horizon = opts.horizon != 0 ? opts.horizon : opts.delta;
    const std::vector<ForecastMethod> methods = default_forecast_methods();
    const bool forecasting = opts.forecast && lai != nullptr;

    ExecResult result;
    std::size_t batch_index = 0;
    for (std::size_t begin = 0; begin < queries.size(); begin += opts.delta, ++batch_index) {
        const std::size_t end = std::min(begin + opts.delta, queries.size());
        BatchMetrics metrics;
        metrics.batch_index = batch_index;

        // Prediction runs on its own thread over a snapshot of this batch
        // while the batch itself executes.
        std::future<TimedForecast> prediction;
        if (forecasting && end - begin >= 8) {
            QueryBatch history;
            history.queries.assign(queries.begin() + begin, queries.begin() + end);
            history.batch_index = batch_index;
            prediction = std::async(std::launch::async,
                                    [history = std::move(history), methods, horizon] {
                                        const auto start = Clock::now();
                                        TimedForecast timed;
                                        timed.result = predict_workload(history, methods, horizon);
                                        timed.wall_ns = ns_between(start, Clock::now());
                                        return timed;
                                    });
        }

        for (std::size_t i = begin; i < end; ++i) {
            const auto [lo, hi] = engine.query(queries[i].l, queries[i].h);
            metrics.query_ns += engine.stats_log().back().latency_ns;
            if (opts.oracle_column) {
                const std::vector<Key> expected = naive_scan(*opts.oracle_column, queries[i]);
                if (!same_multiset(engine.materialize(lo, hi), expected)) {
                    // fail fast: abandon the run at the first mismatch
                    result.first_failure_query = i;
                    result.oracle_failures = 1;
                    if (prediction.valid()) prediction.wait();
                    result.batches.push_back(metrics);
                    return result;
                }
            }
        }

        // Batch boundary: join the prediction task, then apply it before the
        // next batch starts. All engine mutations stay on this thread.
        if (prediction.valid()) {
            TimedForecast timed = prediction.get();
            metrics.forecast_ns = timed.wall_ns;
            metrics.chosen_method_l = timed.result.chosen_method_l;
            metrics.chosen_method_h = timed.result.chosen_method_h;
            metrics.mase_scores_l = timed.result.mase_scores_l;
            metrics.mase_scores_h = timed.result.mase_scores_h;
            const auto start = Clock::now();
            metrics.mutations = apply_forecast(*lai, timed.result);
            metrics.apply_ns = ns_between(start, Clock::now());
        }
        result.batches.push_back(metrics);
    }
    return result;
}

std::string metadata_line(const BenchConfig& config) {
    std::ostringstream os;
    os << "engine=" << config.engine << " workload=" << workload_name(config.workload)
       << " n=" << config.n << " queries=" << config.queries << " delta=" << config.delta
       << " tau=" << config.tau << " epsilon=" << config.epsilon << " seed=" << config.seed
       << " forecast=" << (config.forecast ? "on" : "off");
    return os.str();
}

void write_per_query_csv(std::ostream& os, const BenchConfig& config,
                         std::span<const QueryStats> stats) {
    os << "# " << metadata_line(config) << "\n";
    os << "# cumulative_ns sums user-query latencies only; forecast compute and\n";
    os << "# apply time are reported per batch in the _batches.csv companion file\n";
    os << "query_idx,case,latency_ns,cumulative_ns\n";
    std::uint64_t cumulative = 0;
    for (const QueryStats& s : stats) {
        cumulative += s.latency_ns;
        os << s.query_index << ',' << (s.case_kind ? case_name(*s.case_kind) : "-") << ','
           << s.latency_ns << ',' << cumulative << '\n';
    }
}

void write_per_case_csv(std::ostream& os, std::span<const QueryStats> stats) {
    os << "case,frequency,total_time_ns\n";
    constexpr CaseKind kinds[] = {CaseKind::Case1i, CaseKind::Case1ii, CaseKind::Case2,
                                  CaseKind::Case3,  CaseKind::Case4,   CaseKind::Case5};
    std::uint64_t unclassified_count = 0, unclassified_ns = 0;
    for (CaseKind kind : kinds) {
        std::uint64_t count = 0, total = 0;
        for (const QueryStats& s : stats) {
            if (s.case_kind == kind) {
                ++count;
                total += s.latency_ns;
            }
        }
        os << case_name(kind) << ',' << count << ',' << total << '\n';
    }
    for (const QueryStats& s : stats) {
        if (!s.case_kind) {
            ++unclassified_count;
            unclassified_ns += s.latency_ns;
        }
    }
    if (unclassified_count > 0) {
        os << "-," << unclassified_count << ',' << unclassified_ns << '\n';
    }
}

void write_batches_csv(std::ostream& os, std::span<const BatchMetrics> batches) {
    os << "batch_idx,query_ns,forecast_ns,apply_ns,mutations\n";
    for (const BatchMetrics& b : batches) {
        os << b.batch_index << ',' << b.query_ns << ',' << b.forecast_ns << ',' << b.apply_ns
           << ',' << b.mutations << '\n';
    }
}

void write_workload_csv(std::ostream& os, std::span<const RangeQuery> queries) {
    os << "idx,l,h\n";
    for (std::size_t i = 0; i < queries.size(); ++i) {
        os << i << ',' << queries[i].l << ',' << queries[i].h << '\n';
    }
}

void write_forecast_log_csv(std::ostream& os, std::span<const BatchMetrics> batches) {
    os << "batch_index,series,method,mase,chosen\n";
    for (const BatchMetrics& b : batches) {
        for (const auto& [method, score] : b.mase_scores_l) {
            os << b.batch_index << ",l," << method << ',' << score << ','
               << (method == b.chosen_method_l ? 1 : 0) << '\n';
        }
        for (const auto& [method, score] : b.mase_scores_h) {
            os << b.batch_index << ",h," << method << ',' << score << ','
               << (method == b.chosen_method_h ? 1 : 0) << '\n';
        }
    }
}

int run_bench(const BenchConfig& config) {
    Column column = make_shuffled_dataset(config.n, config.seed);
    Column pristine;
    if (config.check_oracle) pristine = column;

    WorkloadSpec spec;
    spec.kind = config.workload;
    spec.domain = config.n;
    spec.n_queries = config.queries;
    spec.seed = config.seed + 1;  // workload stream independent of the shuffle
    const std::vector<RangeQuery> queries = generate(spec);

    if (!config.dump_workload_path.empty()) {
        std::ofstream dump(config.dump_workload_path);
        if (!dump) throw std::runtime_error("cannot open " + config.dump_workload_path);
        write_workload_csv(dump, queries);
    }

    LaiEngine* lai = nullptr;
    LaiConfig lai_config{config.epsilon, config.tau};
    std::unique_ptr<RangeEngine> engine =
        make_engine(config.engine, std::move(column), lai_config, config.seed, &lai);

    ExecOptions opts;
    opts.delta = config.delta;
    opts.forecast = config.forecast;
    opts.oracle_column = config.check_oracle ? &pristine : nullptr;
    const ExecResult exec = execute_workload(*engine, queries, opts, lai);

    const auto& stats = engine->stats_log();
    if (!config.out_path.empty()) {
        std::ofstream out(config.out_path);
        if (!out) throw std::runtime_error("cannot open " + config.out_path);
        write_per_query_csv(out, config, stats);

        std::ofstream cases(out_sibling(config.out_path, "_cases"));
        cases << "# " << metadata_line(config) << "\n";
        write_per_case_csv(cases, stats);

        std::ofstream batches(out_sibling(config.out_path, "_batches"));
        batches << "# " << metadata_line(config) << "\n";
        write_batches_csv(batches, exec.batches);
    }
    if (!config.forecast_log_path.empty()) {
        std::ofstream flog(config.forecast_log_path);
        if (!flog) throw std::runtime_error("cannot open " + config.forecast_log_path);
        write_forecast_log_csv(flog, exec.batches);
    }

    std::cout << metadata_line(config) << "\n";
    const std::uint64_t total_ns =
        std::accumulate(stats.begin(), stats.end(), std::uint64_t{0},
                        [](std::uint64_t acc, const QueryStats& s) { return acc + s.latency_ns; });
    std::cout << "queries=" << stats.size() << " cumulative_query_ms=" << total_ns / 1'000'000.0
              << "\n";
    if (lai) {
        const SortStats& ss = lai->sort_stats();
        std::cout << "sort_paths learned=" << ss.learned_path_count
                  << " comparison=" << ss.comparison_path_count
                  << " spill_fraction=" << ss.spill_fraction() << "\n";
    }
    write_per_case_csv(std::cout, stats);

    if (config.check_oracle && exec.oracle_failures > 0) {
        std::cerr << "oracle mismatch on " << exec.oracle_failures
                  << " queries (first at index " << exec.first_failure_query << ")\n";
        return kExitOracleMismatch;
    }
    return kExitOk;
}

}  // namespace lai
