#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "lai/core.hpp"
#include "lai/range_engine.hpp"

namespace lai {

// Classic database cracking: an ordered cracker index of (pivot -> split
// position), refined by cracking the at-most-two pieces containing the query
// bounds. No sorting, no models.
class CrackEngine : public RangeEngine {
public:
    explicit CrackEngine(Column column);

    std::pair<Position, Position> query(Key l, Key h) override;
    std::vector<Key> materialize(Position lo, Position hi) const override;
    const std::vector<QueryStats>& stats_log() const override { return stats_log_; }
    std::string_view name() const override { return "crack"; }
    std::uint64_t touched_elements() const override { return touched_; }

    const Column& column() const { return column_; }
    std::size_t pivot_count() const { return index_.size(); }

    // every element left of a pivot's split is < pivot
    bool index_consistent() const;

protected:
    // Split position for pivot k (first position holding values >= k),
    // cracking the containing piece if k is not yet a pivot.
    Position split_for(Key k);

    // Piece [lo, hi] that a crack on pivot k must reorder.
    std::pair<Position, Position> piece_for(Key k) const;

    // Hook for stochastic variants, called before a piece is cracked on a
    // query bound.
    virtual void before_crack(Position piece_lo, Position piece_hi);

    void record(Key l, Key h, Position lo, Position hi, std::uint64_t latency_ns);

    Column column_;
    std::map<Key, Position> index_;
    std::vector<QueryStats> stats_log_;
    std::uint64_t touched_ = 0;
    std::uint64_t query_count_ = 0;
};

// Stochastic cracking, DD1R flavor: the first time a large piece is about to
// be cracked by a query bound, it is first cracked once on the value of a
// uniformly random element within the piece.
class Dd1rEngine final : public CrackEngine {
public:
    Dd1rEngine(Column column, std::uint64_t seed, std::size_t size_threshold = 0);

    std::string_view name() const override { return "dd1r"; }

private:
    void before_crack(Position piece_lo, Position piece_hi) override;

    std::mt19937_64 rng_;
    std::size_t threshold_;
    bool in_random_crack_ = false;
};

// Upper anchor: the column is sorted once upfront, queries are answered with
// binary search over the sorted copy.
class SortedEngine final : public RangeEngine {
public:
    explicit SortedEngine(Column column);

    std::pair<Position, Position> query(Key l, Key h) override;
    std::vector<Key> materialize(Position lo, Position hi) const override;
    const std::vector<QueryStats>& stats_log() const override { return stats_log_; }
    std::string_view name() const override { return "sorted"; }

private:
    Column column_;
    std::vector<QueryStats> stats_log_;
    std::uint64_t query_count_ = 0;
};

// Lower anchor: every query is a full scan; matches are gathered into an
// internal buffer that the returned position range points into.
class ScanEngine final : public RangeEngine {
public:
    explicit ScanEngine(Column column);

    std::pair<Position, Position> query(Key l, Key h) override;
    std::vector<Key> materialize(Position lo, Position hi) const override;
    const std::vector<QueryStats>& stats_log() const override { return stats_log_; }
    std::string_view name() const override { return "scan"; }

private:
    Column column_;
    std::vector<Key> result_;
    std::vector<QueryStats> stats_log_;
    std::uint64_t query_count_ = 0;
};

}  // namespace lai
