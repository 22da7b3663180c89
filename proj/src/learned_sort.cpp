#include "lai/learned_sort.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lai {

TwoPointRegression TwoPointRegression::fit(Key lo_key, Position lo_pos, Key hi_key,
                                           Position hi_pos) {
    TwoPointRegression lr;
    if (hi_key > lo_key) {
        lr.slope = static_cast<double>(hi_pos - lo_pos) / static_cast<double>(hi_key - lo_key);
        lr.intercept = static_cast<double>(lo_pos) - lr.slope * static_cast<double>(lo_key);
    } else {
        lr.slope = 0.0;
        lr.intercept = static_cast<double>(lo_pos);
    }
    return lr;
}

void learned_sort(Column& column, Position lo_pos, Position hi_pos,
                  const TwoPointRegression& model, SortStats* stats) {
    if (lo_pos < 0 || hi_pos >= static_cast<Position>(column.size()) || hi_pos - lo_pos < 1) {
        throw std::out_of_range("learned_sort: invalid region");
    }
#ifndef NDEBUG
    for (Position p = lo_pos; p <= hi_pos; ++p) {
        assert(column[p] >= column[lo_pos] && column[p] <= column[hi_pos] &&
               "learned_sort: anchors are not the region extremes");
    }
#endif
    const Position first = lo_pos + 1;
    const Position last = hi_pos - 1;
    if (first > last) return;  // no interior
    const std::size_t n = static_cast<std::size_t>(last - first + 1);

    std::vector<Key> temp(column.begin() + first, column.begin() + last + 1);
    std::vector<std::uint8_t> occupied(n, 0);
    std::vector<Key> spill;

    Key* slots = column.data() + first;
    for (Key key : temp) {
        double raw = model.predict(key);
        Position slot = static_cast<Position>(std::llround(raw));
        slot = std::clamp(slot, first, last);
        const std::size_t idx = static_cast<std::size_t>(slot - first);
        if (occupied[idx]) {
            spill.push_back(key);
            continue;
        }
        // Placement must keep the occupied sequence sorted, otherwise the
        // final merge of two sorted runs cannot produce sorted output.
        bool inversion = false;
        for (std::size_t i = idx; i-- > 0;) {
            if (occupied[i]) {
                inversion = slots[i] > key;
                break;
            }
        }
        if (!inversion) {
            for (std::size_t i = idx + 1; i < n; ++i) {
                if (occupied[i]) {
                    inversion = slots[i] < key;
                    break;
                }
            }
        }
        if (inversion) {
            spill.push_back(key);
        } else {
            slots[idx] = key;
            occupied[idx] = 1;
        }
    }

    // Compact the occupied slots to the front of the interior; slot order is
    // already sorted by construction.
    std::size_t placed = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (occupied[i]) slots[placed++] = slots[i];
    }
    std::sort(spill.begin(), spill.end());

    // Backward two-cursor merge of the occupied run and the spill bucket into
    // the full interior. Ties resolved spill-last.
    std::size_t write = n;
    std::size_t occ = placed;
    std::size_t sp = spill.size();
    while (sp > 0) {
        if (occ > 0 && slots[occ - 1] > spill[sp - 1]) {
            slots[--write] = slots[--occ];
        } else {
            slots[--write] = spill[--sp];
        }
    }
    // Remaining occupied prefix is already in place.

    if (stats) {
        stats->placed_keys += placed;
        stats->spilled_keys += spill.size();
    }
}

void adaptive_sort(Column& column, Position lo_pos, Position hi_pos, std::size_t tau,
                   SortStats* stats) {
    if (lo_pos < 0 || lo_pos > hi_pos || hi_pos >= static_cast<Position>(column.size())) {
        throw std::out_of_range("adaptive_sort: invalid region");
    }
    const std::size_t len = static_cast<std::size_t>(hi_pos - lo_pos + 1);
    if (len < 2) return;

    const auto begin = column.begin() + lo_pos;
    const auto end = column.begin() + hi_pos + 1;
    if (len <= tau) {
        std::sort(begin, end);
        if (stats) ++stats->comparison_path_count;
        return;
    }

    // Establish the two anchors: min at lo_pos, max at hi_pos.
    auto [min_it, max_it] = std::minmax_element(begin, end);
    Position min_pos = lo_pos + static_cast<Position>(min_it - begin);
    Position max_pos = lo_pos + static_cast<Position>(max_it - begin);
    std::swap(column[lo_pos], column[min_pos]);
    if (max_pos == lo_pos) max_pos = min_pos;
    std::swap(column[hi_pos], column[max_pos]);

    if (stats) ++stats->learned_path_count;
    if (column[lo_pos] == column[hi_pos]) return;  // constant region, already sorted

    const auto lr = TwoPointRegression::fit(column[lo_pos], lo_pos, column[hi_pos], hi_pos);
    learned_sort(column, lo_pos, hi_pos, lr, stats);
}

}  // namespace lai
