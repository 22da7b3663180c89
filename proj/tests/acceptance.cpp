// Acceptance suite: each criterion prints one [PASS]/[FAIL] line. Run with no
// arguments for all criteria or with a single number (1..10) for one of them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lai/baselines.hpp"
#include "lai/bench.hpp"
#include "lai/crack.hpp"
#include "lai/engine.hpp"
#include "lai/forecast.hpp"
#include "lai/learned_model.hpp"
#include "lai/learned_sort.hpp"
#include "lai/workloads.hpp"

using namespace lai;

namespace {

std::vector<Key> sorted_copy(std::vector<Key> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<RangeQuery> workload_queries(WorkloadKind kind, Key domain, std::size_t count,
                                         std::uint64_t seed) {
    WorkloadSpec spec;
    spec.kind = kind;
    spec.domain = domain;
    spec.n_queries = count;
    spec.seed = seed;
    return generate(spec);
}

std::uint64_t total_query_ns(const std::vector<QueryStats>& stats, std::size_t from = 0) {
    std::uint64_t total = 0;
    for (std::size_t i = from; i < stats.size(); ++i) total += stats[i].latency_ns;
    return total;
}

// ---------------------------------------------------------------------------
// 1. Oracle equivalence across all workloads and engines.

bool criterion1(std::string& detail) {
    constexpr std::size_t kN = 100'000;
    constexpr std::size_t kQueries = 500;
    constexpr std::size_t kDelta = 100;
    const Column original = make_shuffled_dataset(kN, 1001);

    std::size_t checked = 0;
    for (WorkloadKind kind : all_workload_kinds()) {
        const auto queries = workload_queries(kind, kN, kQueries, 2002);

        // Engines whose result ranges stay multiset-stable after the run.
        struct Run {
            std::string name;
            std::unique_ptr<RangeEngine> engine;
        };
        std::vector<Run> runs;
        runs.push_back({"lai+fc", nullptr});
        runs.push_back({"lai-fc", nullptr});
        runs.push_back({"crack", nullptr});
        runs.push_back({"dd1r", nullptr});
        runs.push_back({"sorted", nullptr});

        for (Run& run : runs) {
            LaiEngine* lai = nullptr;
            const std::string engine_name = run.name.rfind("lai", 0) == 0 ? "lai" : run.name;
            run.engine = make_engine(engine_name, original, {}, 3003, &lai);
            ExecOptions opts;
            opts.delta = kDelta;
            opts.forecast = (run.name == "lai+fc");
            execute_workload(*run.engine, queries, opts, lai);
        }

        // Scan keeps only the last result buffer, so it is checked in-stream.
        ScanEngine scan(original);
        for (const RangeQuery& q : queries) {
            const auto [lo, hi] = scan.query(q.l, q.h);
            if (!same_multiset(scan.materialize(lo, hi), naive_scan(original, q))) {
                detail = "scan mismatch on " + std::string(workload_name(kind));
                return false;
            }
            ++checked;
        }

        for (std::size_t i = 0; i < queries.size(); ++i) {
            const auto expected = sorted_copy(naive_scan(original, queries[i]));
            for (const Run& run : runs) {
                const QueryStats& s = run.engine->stats_log()[i];
                const auto got = sorted_copy(run.engine->materialize(s.result_lo, s.result_hi));
                if (got != expected) {
                    std::ostringstream os;
                    os << run.name << " mismatch on " << workload_name(kind) << " query " << i;
                    detail = os.str();
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " query results matched the scan oracle";
    return true;
}

// ---------------------------------------------------------------------------
// 2. Two-query walkthrough on the 14-element instance.

bool criterion2(std::string& detail) {
    Column column = {13, 16, 4, 9, 2, 12, 7, 1, 19, 3, 14, 11, 8, 6};
    LaiEngine engine(std::move(column));
    engine.query(9, 13);
    engine.query(6, 19);

    bool ends_at_8 = false;
    bool starts_at_14 = false;
    for (const PartitionEntry& e : engine.table().entries()) {
        if (e.hi_key == 8) ends_at_8 = true;
        if (e.lo_key == 14) starts_at_14 = true;
    }
    if (!ends_at_8 || !starts_at_14) {
        detail = "expected partitions bounded by keys 8 and 14";
        return false;
    }
    detail = "partitions (.,8) and (14,.) present after [9,13] then [6,19]";
    return true;
}

// ---------------------------------------------------------------------------
// 3. Convergence: full coverage, then only Case 2/3 and zero column writes.

bool criterion3(std::string& detail) {
    constexpr std::size_t kN = 100'000;
    LaiEngine engine(make_shuffled_dataset(kN, 42));
    for (Key t = 0; t < 100; ++t) {
        engine.query(t * 1000, t * 1000 + 999);  // tile the key domain
    }
    if (!engine.is_fully_indexed()) {
        detail = "tiling queries did not converge to a full index";
        return false;
    }

    const std::uint64_t writes = engine.column_write_events();
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        Key a = rng() % kN;
        Key b = rng() % kN;
        if (a > b) std::swap(a, b);
        const CaseKind kind = engine.classify(a, b);
        if (kind != CaseKind::Case2 && kind != CaseKind::Case3) {
            detail = "post-convergence query classified as " + std::string(case_name(kind));
            return false;
        }
        engine.query(a, b);
    }
    if (engine.column_write_events() != writes) {
        detail = "column writes continued after convergence";
        return false;
    }
    detail = "full coverage; 1000 queries stayed in Case 2/3 with zero writes";
    return true;
}

// ---------------------------------------------------------------------------
// 4. Learned sort equals the comparison oracle; tau toggles at 6K.

bool criterion4(std::string& detail) {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 2 + rng() % 20000;
        Column region(n);
        switch (round % 3) {
            case 0:
                for (Key& x : region) x = rng() % (4 * n + 1);
                break;
            case 1: {
                for (Key& x : region) {
                    const double u = double(rng() % 1000000) / 1000000.0 + 1e-9;
                    x = static_cast<Key>(2.0 / u);
                }
                break;
            }
            default: {
                const Key base = rng() % 1000000;
                for (Key& x : region) x = base + (rng() % 8) * 5000 + rng() % 64;
                break;
            }
        }
        Column expected = region;
        std::sort(expected.begin(), expected.end());
        adaptive_sort(region, 0, static_cast<Position>(n) - 1, 0, nullptr);  // force learned path
        if (region != expected) {
            detail =
                "learned path output diverged from std::sort on round " + std::to_string(round);
            return false;
        }
    }

    SortStats stats;
    std::mt19937_64 g2(78);
    Column at_tau(6000);
    for (Key& x : at_tau) x = g2();
    adaptive_sort(at_tau, 0, 5999, 6000, &stats);
    Column above_tau(6001);
    for (Key& x : above_tau) x = g2();
    adaptive_sort(above_tau, 0, 6000, 6000, &stats);
    if (stats.comparison_path_count != 1 || stats.learned_path_count != 1) {
        detail = "tau toggle counters off: comparison=" +
                 std::to_string(stats.comparison_path_count) +
                 " learned=" + std::to_string(stats.learned_path_count);
        return false;
    }
    detail = "200 regions matched the sort oracle; paths toggle at the 6K boundary";
    return true;
}

// ---------------------------------------------------------------------------
// 5. Learned model exactness and error bound.

bool criterion5(std::string& detail) {
    std::mt19937_64 rng(555);
    const std::size_t epsilons[] = {4, 32, 256};
    std::size_t lookups = 0;
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 1 + rng() % 10000;
        const std::size_t eps = epsilons[round % 3];
        Column region(n);
        for (Key& x : region) x = rng() % (8 * n + 3);
        std::sort(region.begin(), region.end());

        const Position hi = static_cast<Position>(n) - 1;
        const auto model = LearnedModel::build(region, 0, hi, eps);
        for (Position p = 0; p <= hi; ++p) {
            const Key k = region[p];
            const auto oracle = static_cast<Position>(
                std::lower_bound(region.begin(), region.end(), k) - region.begin());
            if (model.find(k, region) != oracle) {
                detail = "find mismatch at size " + std::to_string(n);
                return false;
            }
            if (p == 0 || region[p] != region[p - 1]) {
                if (std::fabs(model.predict(k) - static_cast<double>(p)) >
                    static_cast<double>(eps)) {
                    detail = "prediction error above epsilon " + std::to_string(eps);
                    return false;
                }
            }
            ++lookups;
        }
    }
    detail = std::to_string(lookups) + " lookups exact with bounded prediction error";
    return true;
}

// ---------------------------------------------------------------------------
// 6. MASE identities.

bool criterion6(std::string& detail) {
    const std::vector<double> series = {3, 8, 1, 12, 5, 9, 4, 11, 6};
    const std::vector<double> actual(series.begin() + 1, series.end());
    const std::vector<double> shifted(series.begin(), series.end() - 1);

    const double perfect = mase(actual, actual, series);
    const double naive_in_sample = mase(actual, shifted, series);
    if (perfect != 0.0) {
        detail = "perfect forecast scored " + std::to_string(perfect);
        return false;
    }
    if (std::fabs(naive_in_sample - 1.0) > 1e-9) {
        detail = "in-sample naive scored " + std::to_string(naive_in_sample);
        return false;
    }
    detail = "perfect=0, in-sample one-step naive=1 within 1e-9";
    return true;
}

// ---------------------------------------------------------------------------
// Shared runner for the forecasting criteria.

struct PairedRun {
    std::vector<QueryStats> stats_fc;
    std::vector<QueryStats> stats_nofc;
    std::vector<BatchMetrics> batches_fc;
    std::vector<BatchMetrics> batches_nofc;
};

PairedRun paired_run(WorkloadKind kind, std::size_t n, std::size_t queries, std::size_t delta,
                     std::uint64_t seed) {
    const Column original = make_shuffled_dataset(n, seed);
    const auto stream = workload_queries(kind, n, queries, seed + 1);

    PairedRun out;
    {
        LaiEngine engine(original);
        ExecOptions opts;
        opts.delta = delta;
        opts.forecast = true;
        out.batches_fc = execute_workload(engine, stream, opts, &engine).batches;
        out.stats_fc = engine.stats_log();
    }
    {
        LaiEngine engine(original);
        ExecOptions opts;
        opts.delta = delta;
        opts.forecast = false;
        out.batches_nofc = execute_workload(engine, stream, opts, &engine).batches;
        out.stats_nofc = engine.stats_log();
    }
    return out;
}

std::size_t case1_count(const std::vector<QueryStats>& stats, std::size_t from) {
    std::size_t count = 0;
    for (std::size_t i = from; i < stats.size(); ++i) {
        if (stats[i].case_kind == CaseKind::Case1i || stats[i].case_kind == CaseKind::Case1ii) {
            ++count;
        }
    }
    return count;
}

// 7. Forecasting shifts queries out of Case 1 on Sequential ZoomIn.

bool criterion7(std::string& detail) {
    const PairedRun run = paired_run(WorkloadKind::SequentialZoomIn, 1'000'000, 2000, 200, 7001);
    const std::size_t fc = case1_count(run.stats_fc, 200);
    const std::size_t nofc = case1_count(run.stats_nofc, 200);
    std::ostringstream os;
    os << "post-batch-1 Case 1 queries: forecast=" << fc << " vs plain=" << nofc;
    detail = os.str();
    if (nofc == 0) {
        detail += " (no Case 1 queries to shift)";
        return false;
    }
    return fc * 4 <= nofc;  // fc <= 25% of nofc
}

// 8. Forecasting at least halves the post-first-batch query time.

bool criterion8(std::string& detail) {
    const WorkloadKind kinds[] = {WorkloadKind::SequentialZoomIn, WorkloadKind::ZoomOut,
                                  WorkloadKind::SequentialZoomOut, WorkloadKind::Periodic};
    std::ostringstream os;
    os.precision(3);
    bool ok = true;
    for (WorkloadKind kind : kinds) {
        const PairedRun run = paired_run(kind, 1'000'000, 2000, 200, 8001);
        const std::uint64_t fc = total_query_ns(run.stats_fc, 200);
        const std::uint64_t nofc = total_query_ns(run.stats_nofc, 200);
        const double ratio = nofc == 0 ? 1.0 : double(fc) / double(nofc);
        os << workload_name(kind) << "=" << std::fixed << ratio << " ";
        if (2 * fc > nofc) ok = false;
    }
    detail = "post-batch-1 time ratios (forecast/plain): " + os.str();
    return ok;
}

// 9. Cumulative-time shape on Sequential ZoomIn.

bool criterion9(std::string& detail) {
    const PairedRun run = paired_run(WorkloadKind::SequentialZoomIn, 1'000'000, 2000, 200, 9001);

    std::uint64_t total_fc = 0, tail_fc = 0;
    for (const BatchMetrics& b : run.batches_fc) {
        total_fc += b.query_ns;
        if (b.batch_index >= 1) tail_fc += b.query_ns;  // batches 2..10, 1-based
    }
    for (const BatchMetrics& b : run.batches_nofc) {
        if (b.query_ns == 0) {
            detail = "plain run batch " + std::to_string(b.batch_index) + " added no time";
            return false;
        }
    }
    std::ostringstream os;
    os.precision(2);
    os << "batches 2..10 add " << std::fixed
       << (total_fc == 0 ? 0.0 : 100.0 * double(tail_fc) / double(total_fc))
       << "% of the forecasting run's total; plain run grows every batch";
    detail = os.str();
    return tail_fc * 10 < total_fc;  // < 10% of total
}

// 10. Baseline sanity: cracking beats scanning; stochastic cracking touches
//     no more than plain cracking on sequential workloads.

bool criterion10(std::string& detail) {
    constexpr std::size_t kN = 1'000'000;
    const Column original = make_shuffled_dataset(kN, 10001);

    const auto random_stream = workload_queries(WorkloadKind::Random, kN, 500, 10002);
    CrackEngine crack_engine(original);
    ScanEngine scan_engine(original);
    for (const RangeQuery& q : random_stream) {
        crack_engine.query(q.l, q.h);
        scan_engine.query(q.l, q.h);
    }
    const auto& crack_stats = crack_engine.stats_log();
    const auto& scan_stats = scan_engine.stats_log();
    std::uint64_t crack_cum = 0, scan_cum = 0;
    for (std::size_t i = 0; i < random_stream.size(); ++i) {
        crack_cum += crack_stats[i].latency_ns;
        scan_cum += scan_stats[i].latency_ns;
        if (i >= 100 && crack_cum >= scan_cum) {
            detail = "crack cumulative not below scan at query " + std::to_string(i);
            return false;
        }
    }

    const auto overlap_stream = workload_queries(WorkloadKind::SequentialOverlap, kN, 500, 10003);
    CrackEngine crack_seq(original);
    Dd1rEngine dd1r_seq(original, 10004);
    for (const RangeQuery& q : overlap_stream) {
        crack_seq.query(q.l, q.h);
        dd1r_seq.query(q.l, q.h);
    }
    if (dd1r_seq.touched_elements() > crack_seq.touched_elements()) {
        detail = "dd1r touched more elements than crack on sequential overlap";
        return false;
    }
    std::ostringstream os;
    os << "crack/scan cumulative at q500: " << crack_cum / 1000000 << "ms vs "
       << scan_cum / 1000000 << "ms; touched dd1r=" << dd1r_seq.touched_elements()
       << " crack=" << crack_seq.touched_elements();
    detail = os.str();
    return true;
}

struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> run;
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence across workloads and engines", criterion1},
    {2, "two-query walkthrough partitions", criterion2},
    {3, "convergence to a full index", criterion3},
    {4, "learned sort correctness and tau toggle", criterion4},
    {5, "learned model exactness", criterion5},
    {6, "MASE identities", criterion6},
    {7, "forecasting case shift on sequential zoom-in", criterion7},
    {8, "forecasting speedup direction", criterion8},
    {9, "cumulative-time shape", criterion9},
    {10, "baseline sanity", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 10) {
            std::cerr << "usage: acceptance [1..10]\n";
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& criterion : kCriteria) {
        if (selected != 0 && criterion.id != selected) continue;
        std::string detail;
        const bool ok = criterion.run(detail);
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
                  << criterion.title;
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
