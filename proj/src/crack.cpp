#include "lai/crack.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace lai {

Position crack(Column& column, Position p1, Position p2, Key k, std::uint64_t* touched) {
    if (p1 < 0 || p1 > p2 || p2 >= static_cast<Position>(column.size())) {
        throw std::out_of_range("crack: invalid position range");
    }
    if (touched) *touched += static_cast<std::uint64_t>(p2 - p1 + 1);

    Key* data = column.data();
    Position lo = p1;
    Position hi = p2;
    while (lo <= hi) {
        while (lo <= hi && data[lo] < k) ++lo;
        while (lo <= hi && data[hi] >= k) --hi;
        if (lo < hi) {
            std::swap(data[lo], data[hi]);
            ++lo;
            --hi;
        }
    }
    return lo;
}

std::pair<Position, Position> crack_three(Column& column, Position p1, Position p2,
                                          Key l, Key h, std::uint64_t* touched) {
    const Position s_l = crack(column, p1, p2, l, touched);
    if (s_l > p2) return {s_l, s_l - 1};  // nothing >= l in the region

    Position s_h;
    if (h == std::numeric_limits<Key>::max()) {
        s_h = p2 + 1;  // everything >= l also satisfies <= h
    } else {
        s_h = crack(column, s_l, p2, h + 1, touched);
    }
    return {s_l, s_h - 1};
}

}  // namespace lai
