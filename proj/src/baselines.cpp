#include "lai/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "lai/crack.hpp"

namespace lai {

namespace {

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
    const auto stop = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

}  // namespace

// ---------------------------------------------------------------------------
// CrackEngine

CrackEngine::CrackEngine(Column column) : column_(std::move(column)) {}

std::pair<Position, Position> CrackEngine::piece_for(Key k) const {
    Position lo = 0;
    Position hi = static_cast<Position>(column_.size()) - 1;
    auto it = index_.upper_bound(k);  // least pivot > k
    if (it != index_.end()) hi = it->second - 1;
    if (it != index_.begin()) lo = std::prev(it)->second;  // greatest pivot <= k
    return {lo, hi};
}

void CrackEngine::before_crack(Position, Position) {}

Position CrackEngine::split_for(Key k) {
    if (auto it = index_.find(k); it != index_.end()) return it->second;

    auto [lo, hi] = piece_for(k);
    if (lo <= hi) {
        before_crack(lo, hi);
        if (auto it = index_.find(k); it != index_.end()) return it->second;
        std::tie(lo, hi) = piece_for(k);
    }
    const Position split = (lo > hi) ? lo : crack(column_, lo, hi, k, &touched_);
    index_.emplace(k, split);
    return split;
}

std::pair<Position, Position> CrackEngine::query(Key l, Key h) {
    if (l > h) throw std::invalid_argument("query: l > h");
    const auto start = std::chrono::steady_clock::now();

    const Position lo = split_for(l);
    const Position hi = (h == std::numeric_limits<Key>::max())
                            ? static_cast<Position>(column_.size()) - 1
                            : split_for(h + 1) - 1;

    record(l, h, lo, hi, elapsed_ns(start));
    return {lo, hi};
}

std::vector<Key> CrackEngine::materialize(Position lo, Position hi) const {
    if (hi < lo) return {};
    if (lo < 0 || hi >= static_cast<Position>(column_.size())) {
        throw std::out_of_range("materialize: invalid range");
    }
    return {column_.begin() + lo, column_.begin() + hi + 1};
}

bool CrackEngine::index_consistent() const {
    for (const auto& [pivot, split] : index_) {
        for (Position p = 0; p < static_cast<Position>(column_.size()); ++p) {
            const bool left = p < split;
            if (left && column_[p] >= pivot) return false;
            if (!left && column_[p] < pivot) return false;
        }
    }
    return true;
}

void CrackEngine::record(Key, Key, Position lo, Position hi, std::uint64_t latency_ns) {
    QueryStats stats;
    stats.query_index = query_count_++;
    stats.latency_ns = latency_ns;
    stats.result_lo = lo;
    stats.result_hi = hi;
    stats_log_.push_back(stats);
}

// ---------------------------------------------------------------------------
// Dd1rEngine

Dd1rEngine::Dd1rEngine(Column column, std::uint64_t seed, std::size_t size_threshold)
    : CrackEngine(std::move(column)),
      rng_(seed),
      threshold_(size_threshold != 0 ? size_threshold : std::max<std::size_t>(1, column_.size() / 64)) {}

void Dd1rEngine::before_crack(Position piece_lo, Position piece_hi) {
    const auto piece_len = static_cast<std::size_t>(piece_hi - piece_lo + 1);
    if (piece_len <= threshold_) return;

    const Position at = piece_lo + static_cast<Position>(rng_() % piece_len);
    const Key pivot = column_[static_cast<std::size_t>(at)];
    if (index_.count(pivot) != 0) return;
    const Position split = crack(column_, piece_lo, piece_hi, pivot, &touched_);
    index_.emplace(pivot, split);
}

// ---------------------------------------------------------------------------
// SortedEngine

SortedEngine::SortedEngine(Column column) : column_(std::move(column)) {
    std::sort(column_.begin(), column_.end());
}

std::pair<Position, Position> SortedEngine::query(Key l, Key h) {
    if (l > h) throw std::invalid_argument("query: l > h");
    const auto start = std::chrono::steady_clock::now();

    const auto lo_it = std::lower_bound(column_.begin(), column_.end(), l);
    const auto hi_it = std::upper_bound(lo_it, column_.end(), h);
    const auto lo = static_cast<Position>(lo_it - column_.begin());
    const auto hi = static_cast<Position>(hi_it - column_.begin()) - 1;

    QueryStats stats;
    stats.query_index = query_count_++;
    stats.latency_ns = elapsed_ns(start);
    stats.result_lo = lo;
    stats.result_hi = hi;
    stats_log_.push_back(stats);
    return {lo, hi};
}

std::vector<Key> SortedEngine::materialize(Position lo, Position hi) const {
    if (hi < lo) return {};
    if (lo < 0 || hi >= static_cast<Position>(column_.size())) {
        throw std::out_of_range("materialize: invalid range");
    }
    return {column_.begin() + lo, column_.begin() + hi + 1};
}

// ---------------------------------------------------------------------------
// ScanEngine

ScanEngine::ScanEngine(Column column) : column_(std::move(column)) {}

std::pair<Position, Position> ScanEngine::query(Key l, Key h) {
    if (l > h) throw std::invalid_argument("query: l > h");
    const auto start = std::chrono::steady_clock::now();

    result_.clear();
    for (Key x : column_) {
        if (x >= l && x <= h) result_.push_back(x);
    }
    const Position hi = static_cast<Position>(result_.size()) - 1;

    QueryStats stats;
    stats.query_index = query_count_++;
    stats.latency_ns = elapsed_ns(start);
    stats.result_lo = 0;
    stats.result_hi = hi;
    stats_log_.push_back(stats);
    return {0, hi};
}

std::vector<Key> ScanEngine::materialize(Position lo, Position hi) const {
    if (hi < lo) return {};
    if (lo < 0 || hi >= static_cast<Position>(result_.size())) {
        throw std::out_of_range("materialize: invalid range");
    }
    return {result_.begin() + lo, result_.begin() + hi + 1};
}

}  // namespace lai
