#include "lai/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "lai/crack.hpp"

namespace lai {

LaiEngine::LaiEngine(Column column, LaiConfig config)
    : column_(std::move(column)), table_(column_.size()), config_(std::move(config)) {
    if (!config_.model_builder) config_.model_builder = build_spline_model;
}

CaseKind LaiEngine::classify(Key l, Key h) const {
    if (l > h) throw std::invalid_argument("classify: l > h");
    const auto [tl, th] = table_.search_sorted_partitions(l, h);
    if (!tl && !th) {
        return table_.overlaps_open_interval(l, h) ? CaseKind::Case1i : CaseKind::Case1ii;
    }
    if (tl && th) return (*tl == *th) ? CaseKind::Case2 : CaseKind::Case3;
    return tl ? CaseKind::Case4 : CaseKind::Case5;
}

std::pair<Position, Position> LaiEngine::query(Key l, Key h) {
    if (l > h) throw std::invalid_argument("query: l > h");
    const auto start = std::chrono::steady_clock::now();
    const CaseKind kind = classify(l, h);
    const auto [lo, hi] = dispatch(l, h, kind);
    const auto stop = std::chrono::steady_clock::now();

    QueryStats stats;
    stats.query_index = query_count_++;
    stats.case_kind = kind;
    stats.latency_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    stats.result_lo = lo;
    stats.result_hi = hi;
    stats_log_.push_back(stats);
    return {lo, hi};
}

bool LaiEngine::rebuild_for(Key l, Key h) {
    if (l > h) std::swap(l, h);
    const std::uint64_t writes_before = write_events_;
    const std::size_t entries_before = table_.size();
    dispatch(l, h, classify(l, h));
    return write_events_ != writes_before || table_.size() != entries_before;
}

std::pair<Position, Position> LaiEngine::dispatch(Key l, Key h, CaseKind kind) {
    switch (kind) {
        case CaseKind::Case1i: return execute_overlap_query(l, h);
        case CaseKind::Case1ii: return build_index(l, h);
        case CaseKind::Case2:
            return get_results_from_same_bound(l, h, *table_.find_entry(l));
        case CaseKind::Case3:
            return get_results_from_different_bound(l, h, *table_.find_entry(l),
                                                    *table_.find_entry(h));
        case CaseKind::Case4: return crack_for_high_value(l, h, *table_.find_entry(l));
        case CaseKind::Case5: return crack_for_low_value(l, h, *table_.find_entry(h));
    }
    throw std::logic_error("dispatch: unreachable");
}

std::vector<Key> LaiEngine::materialize(Position lo, Position hi) const {
    if (hi < lo) return {};
    if (lo < 0 || hi >= static_cast<Position>(column_.size())) {
        throw std::out_of_range("materialize: invalid range");
    }
    return {column_.begin() + lo, column_.begin() + hi + 1};
}

void LaiEngine::register_partition(Position lo, Position hi) {
    if (lo > hi) return;
    const auto len = static_cast<std::size_t>(hi - lo + 1);
    if (len >= 2) {
        adaptive_sort(column_, lo, hi, config_.tau, &sort_stats_);
        write_events_ += len;
    }
    auto model = config_.model_builder(column_, lo, hi, config_.epsilon);
    table_.insert({column_[static_cast<std::size_t>(lo)], column_[static_cast<std::size_t>(hi)],
                   lo, hi, std::move(model), next_model_id_++});
}

Position LaiEngine::lower_bound_in_entry(std::size_t idx, Key l) const {
    const PartitionEntry& e = table_.entry(idx);
    return e.model->find(l, column_);
}

Position LaiEngine::upper_bound_in_entry(std::size_t idx, Key h) const {
    const PartitionEntry& e = table_.entry(idx);
    if (h >= e.hi_key) return e.hi_pos;
    return e.model->find(h + 1, column_) - 1;
}

// Case 1(ii): both endpoints in one gap. Crack it on [l, h], sort the middle,
// register it.
std::pair<Position, Position> LaiEngine::build_index(Key l, Key h) {
    const Gap gap = table_.search_gap(l);
    if (gap.empty()) return {gap.lo_pos, gap.lo_pos - 1};

    const std::uint64_t before = touched_;
    const auto [s_l, s_h] = crack_three(column_, gap.lo_pos, gap.hi_pos, l, h, &touched_);
    write_events_ += touched_ - before;
    if (s_l > s_h) return {s_l, s_h};  // nothing in [l, h] here
    register_partition(s_l, s_h);
    return {s_l, s_h};
}

// Case 1(i): endpoints in two different gaps with sorted partition(s) in
// between. Half-crack each endpoint gap, then index every interior gap.
std::pair<Position, Position> LaiEngine::execute_overlap_query(Key l, Key h) {
    const Gap gap_l = table_.search_gap(l);
    const Gap gap_h = table_.search_gap(h);

    Position l_pos;
    if (gap_l.empty()) {
        l_pos = gap_l.lo_pos;
    } else {
        const std::uint64_t before = touched_;
        const Position s = crack(column_, gap_l.lo_pos, gap_l.hi_pos, l, &touched_);
        write_events_ += touched_ - before;
        if (s <= gap_l.hi_pos) register_partition(s, gap_l.hi_pos);
        l_pos = s;
    }

    Position h_pos;
    if (gap_h.empty()) {
        h_pos = gap_h.lo_pos - 1;
    } else if (h == std::numeric_limits<Key>::max()) {
        register_partition(gap_h.lo_pos, gap_h.hi_pos);
        h_pos = gap_h.hi_pos;
    } else {
        const std::uint64_t before = touched_;
        const Position s = crack(column_, gap_h.lo_pos, gap_h.hi_pos, h + 1, &touched_);
        write_events_ += touched_ - before;
        if (gap_h.lo_pos <= s - 1) register_partition(gap_h.lo_pos, s - 1);
        h_pos = s - 1;
    }

    build_index_for_all_gaps(l_pos, h_pos);
    return {l_pos, h_pos};
}

// Converts every gap inside [p1, p2] into a sorted partition.
void LaiEngine::build_index_for_all_gaps(Position p1, Position p2) {
    if (p1 > p2) return;
    for (const Gap& gap : table_.get_all_gaps(p1, p2)) {
        const auto first = column_.begin() + gap.lo_pos;
        const auto last = column_.begin() + gap.hi_pos + 1;
        const auto [mn, mx] = std::minmax_element(first, last);
        build_index(*mn, *mx);
    }
}

// Case 2: pure lookups through the partition's model.
std::pair<Position, Position> LaiEngine::get_results_from_same_bound(Key l, Key h,
                                                                     std::size_t idx) {
    return {lower_bound_in_entry(idx, l), upper_bound_in_entry(idx, h)};
}

// Case 3: lookups through both models, plus indexing of the gaps in between.
std::pair<Position, Position> LaiEngine::get_results_from_different_bound(Key l, Key h,
                                                                          std::size_t idx_l,
                                                                          std::size_t idx_h) {
    const Position l_pos = lower_bound_in_entry(idx_l, l);
    const Position h_pos = upper_bound_in_entry(idx_h, h);
    build_index_for_all_gaps(table_.get_boundaries(idx_l).second,
                             table_.get_boundaries(idx_h).first);
    return {l_pos, h_pos};
}

// Case 4: l resolved through its model; interior gaps indexed; h's gap
// cracked on [min value, h].
std::pair<Position, Position> LaiEngine::crack_for_high_value(Key l, Key h, std::size_t idx_l) {
    const Position l_pos = lower_bound_in_entry(idx_l, l);
    const Gap gap_h = table_.search_gap(h);
    build_index_for_all_gaps(table_.get_boundaries(idx_l).second, gap_h.lo_pos - 1);

    Position h_pos;
    if (gap_h.empty()) {
        h_pos = gap_h.lo_pos - 1;
    } else {
        const Key min_val = *std::min_element(column_.begin() + gap_h.lo_pos,
                                              column_.begin() + gap_h.hi_pos + 1);
        if (min_val > h) {
            h_pos = gap_h.lo_pos - 1;  // nothing in the gap qualifies
        } else {
            h_pos = build_index(min_val, h).second;
        }
    }
    return {l_pos, h_pos};
}

// Case 5: mirror of Case 4 with l's gap cracked on [l, max value].
std::pair<Position, Position> LaiEngine::crack_for_low_value(Key l, Key h, std::size_t idx_h) {
    const Position h_pos = upper_bound_in_entry(idx_h, h);
    const Gap gap_l = table_.search_gap(l);
    build_index_for_all_gaps(gap_l.hi_pos + 1, table_.get_boundaries(idx_h).first);

    Position l_pos;
    if (gap_l.empty()) {
        l_pos = gap_l.lo_pos;
    } else {
        const Key max_val = *std::max_element(column_.begin() + gap_l.lo_pos,
                                              column_.begin() + gap_l.hi_pos + 1);
        if (max_val < l) {
            l_pos = gap_l.hi_pos + 1;  // nothing in the gap qualifies
        } else {
            l_pos = build_index(l, max_val).first;
        }
    }
    return {l_pos, h_pos};
}

}  // namespace lai
