#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "lai/core.hpp"

namespace lai {

// Common driver interface for every engine in the repo. query() returns the
// inclusive position range holding the qualifying keys (empty encoded as
// hi == lo - 1); materialize() copies those keys out for verification.
class RangeEngine {
public:
    virtual ~RangeEngine() = default;

    virtual std::pair<Position, Position> query(Key l, Key h) = 0;
    virtual std::vector<Key> materialize(Position lo, Position hi) const = 0;
    virtual const std::vector<QueryStats>& stats_log() const = 0;
    virtual std::string_view name() const = 0;

    // Cumulative number of elements visited by reorganization passes; engines
    // without such passes report 0.
    virtual std::uint64_t touched_elements() const { return 0; }
};

}  // namespace lai
