#pragma once

#include <cstdint>
#include <utility>

#include "lai/core.hpp"
#include "lai/learned_sort.hpp"
#include "lai/partition_table.hpp"
#include "lai/range_engine.hpp"

namespace lai {

struct LaiConfig {
    std::size_t epsilon = 32;  // learned-model error bound, in positions
    std::size_t tau = 6000;    // learned-sort crossover threshold

    // Model family built over new partitions; defaults to the greedy spline.
    // Different builders may be swapped in per engine instance.
    ModelBuilder model_builder;
};

// The learned adaptive indexing engine. Each query is classified against the
// partition table into one of the five structural cases and dispatched to the
// matching routine; cracking, sorting and model building happen as a by-
// product of answering it.
class LaiEngine final : public RangeEngine {
public:
    explicit LaiEngine(Column column, LaiConfig config = {});

    // Answers [l, h] inclusive, reorganizing the column as needed. Appends a
    // QueryStats record. Throws std::invalid_argument when l > h.
    std::pair<Position, Position> query(Key l, Key h) override;

    // The case that query(l, h) would dispatch to right now. Pure.
    CaseKind classify(Key l, Key h) const;

    // Index-building path used when applying forecasted queries: identical
    // reorganization to query() but no stats record. Returns true when the
    // column or table changed.
    bool rebuild_for(Key l, Key h);

    std::vector<Key> materialize(Position lo, Position hi) const override;
    const std::vector<QueryStats>& stats_log() const override { return stats_log_; }
    std::string_view name() const override { return "lai"; }
    std::uint64_t touched_elements() const override { return touched_; }

    const Column& column() const { return column_; }
    const PartitionTable& table() const { return table_; }
    const SortStats& sort_stats() const { return sort_stats_; }

    // Number of elements written by cracking/sorting passes so far. Stays
    // flat once the table converges to full coverage.
    std::uint64_t column_write_events() const { return write_events_; }

    bool is_fully_indexed() const { return table_.is_fully_indexed(); }

private:
    // Case routines; names follow the structural cases they serve.
    std::pair<Position, Position> dispatch(Key l, Key h, CaseKind kind);
    std::pair<Position, Position> build_index(Key l, Key h);                     // Case 1(ii)
    std::pair<Position, Position> execute_overlap_query(Key l, Key h);           // Case 1(i)
    std::pair<Position, Position> get_results_from_same_bound(Key l, Key h,
                                                              std::size_t idx);  // Case 2
    std::pair<Position, Position> get_results_from_different_bound(Key l, Key h,
                                                                   std::size_t idx_l,
                                                                   std::size_t idx_h);  // Case 3
    std::pair<Position, Position> crack_for_high_value(Key l, Key h,
                                                       std::size_t idx_l);  // Case 4
    std::pair<Position, Position> crack_for_low_value(Key l, Key h,
                                                      std::size_t idx_h);  // Case 5

    void build_index_for_all_gaps(Position p1, Position p2);

    // Sorts [lo, hi], builds a model and registers the partition. No-op on an
    // empty region.
    void register_partition(Position lo, Position hi);

    // Position of the first element >= l inside entry idx.
    Position lower_bound_in_entry(std::size_t idx, Key l) const;
    // Position of the last element <= h inside entry idx.
    Position upper_bound_in_entry(std::size_t idx, Key h) const;

    Column column_;
    PartitionTable table_;
    LaiConfig config_;
    SortStats sort_stats_;
    std::vector<QueryStats> stats_log_;
    std::uint64_t touched_ = 0;
    std::uint64_t write_events_ = 0;
    std::uint64_t next_model_id_ = 0;
    std::uint64_t query_count_ = 0;
};

}  // namespace lai
