#pragma once

#include <utility>

#include "lai/core.hpp"

namespace lai {

// Reorders column[p1..p2] so that every value < k precedes every value >= k.
// Returns the split position s in [p1, p2+1]: positions [p1, s) hold values
// < k, positions [s, p2] hold values >= k. Elements outside [p1, p2] are
// untouched. Throws std::out_of_range on invalid positions.
//
// `touched`, when non-null, is incremented by the number of elements visited
// (the length of the cracked region).
Position crack(Column& column, Position p1, Position p2, Key k,
               std::uint64_t* touched = nullptr);

// Double crack realizing the inclusive range [l, h]: cracks [p1..p2] on l,
// then the right side on h+1 (skipped when h is the maximum key). Returns
// (s_l, s_h - 1): positions [s_l, s_h - 1] hold exactly the values in [l, h].
// An empty middle is returned as (s, s - 1).
std::pair<Position, Position> crack_three(Column& column, Position p1, Position p2,
                                          Key l, Key h,
                                          std::uint64_t* touched = nullptr);

}  // namespace lai
