#pragma once

#include <cstdint>

#include "lai/core.hpp"

namespace lai {

// Linear CDF model fit exactly through the two anchor points
// (min_key, lo_pos) and (max_key, hi_pos) of the region being sorted.
struct TwoPointRegression {
    double slope = 0.0;
    double intercept = 0.0;

    static TwoPointRegression fit(Key lo_key, Position lo_pos, Key hi_key, Position hi_pos);
    double predict(Key k) const { return intercept + slope * static_cast<double>(k); }
};

// Counters exported to the bench harness.
struct SortStats {
    std::uint64_t learned_path_count = 0;
    std::uint64_t comparison_path_count = 0;
    std::uint64_t spilled_keys = 0;
    std::uint64_t placed_keys = 0;

    double spill_fraction() const {
        const std::uint64_t total = spilled_keys + placed_keys;
        return total == 0 ? 0.0 : static_cast<double>(spilled_keys) / static_cast<double>(total);
    }
};

// Model-guided sort of column[lo_pos..hi_pos]. Precondition: column[lo_pos]
// and column[hi_pos] already hold the region's min and max (the post-crack
// anchors) and the region has length >= 2. Interior keys are placed at their
// predicted slots when that keeps the occupied sequence sorted; everything
// else goes to a spill bucket that is sorted and merged back.
void learned_sort(Column& column, Position lo_pos, Position hi_pos,
                  const TwoPointRegression& model, SortStats* stats = nullptr);

// Sorts column[lo_pos..hi_pos]: regions longer than tau go through
// learned_sort (after the min/max anchors are swapped into place), smaller
// ones through the standard comparison sort.
void adaptive_sort(Column& column, Position lo_pos, Position hi_pos, std::size_t tau,
                   SortStats* stats = nullptr);

}  // namespace lai
