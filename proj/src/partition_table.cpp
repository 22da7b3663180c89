#include "lai/partition_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace lai {

std::optional<std::size_t> PartitionTable::find_entry(Key k) const {
    // First entry with hi_key >= k; it contains k iff its lo_key <= k.
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const PartitionEntry& e, Key key) { return e.hi_key < key; });
    if (it == entries_.end() || it->lo_key > k) return std::nullopt;
    return static_cast<std::size_t>(it - entries_.begin());
}

std::pair<std::optional<std::size_t>, std::optional<std::size_t>>
PartitionTable::search_sorted_partitions(Key l, Key h) const {
    return {find_entry(l), find_entry(h)};
}

Gap PartitionTable::search_gap(Key k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const PartitionEntry& e, Key key) { return e.hi_key < key; });
    if (it != entries_.end() && it->lo_key <= k) {
        throw std::logic_error("search_gap: key lies inside a sorted partition");
    }
    Gap gap;
    gap.lo_pos = (it == entries_.begin()) ? 0 : (it - 1)->hi_pos + 1;
    gap.hi_pos = (it == entries_.end()) ? static_cast<Position>(column_len_) - 1 : it->lo_pos - 1;
    return gap;
}

std::vector<Gap> PartitionTable::get_all_gaps(Position p1, Position p2) const {
    std::vector<Gap> gaps;
    if (p1 > p2) return gaps;

    // First entry whose position range ends at or after p1. Entries are
    // position-sorted because key order agrees with position order.
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p1,
                               [](const PartitionEntry& e, Position p) { return e.hi_pos < p; });
    Position cursor = p1;
    for (; it != entries_.end() && it->lo_pos <= p2; ++it) {
        if (cursor < it->lo_pos) gaps.push_back({cursor, it->lo_pos - 1});
        cursor = it->hi_pos + 1;
        if (cursor > p2) break;
    }
    if (cursor <= p2) gaps.push_back({cursor, p2});
    return gaps;
}

void PartitionTable::insert(PartitionEntry entry) {
    if (entry.lo_key > entry.hi_key || entry.lo_pos > entry.hi_pos) {
        throw std::logic_error("PartitionTable::insert: malformed entry");
    }
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), entry,
        [](const PartitionEntry& a, const PartitionEntry& b) { return a.lo_key < b.lo_key; });
    if (it != entries_.end() && (it->lo_key <= entry.hi_key || it->lo_pos <= entry.hi_pos)) {
        throw std::logic_error("PartitionTable::insert: overlaps following entry");
    }
    if (it != entries_.begin()) {
        const PartitionEntry& prev = *(it - 1);
        if (prev.hi_key >= entry.lo_key || prev.hi_pos >= entry.lo_pos) {
            throw std::logic_error("PartitionTable::insert: overlaps preceding entry");
        }
    }
    entries_.insert(it, std::move(entry));
}

const IndexModel& PartitionTable::get_learned_index(std::size_t idx) const {
    if (idx >= entries_.size() || !entries_[idx].model) {
        throw std::out_of_range("PartitionTable::get_learned_index: bad entry index");
    }
    return *entries_[idx].model;
}

std::pair<Position, Position> PartitionTable::get_boundaries(std::size_t idx) const {
    if (idx >= entries_.size()) {
        throw std::out_of_range("PartitionTable::get_boundaries: bad entry index");
    }
    return {entries_[idx].lo_pos, entries_[idx].hi_pos};
}

const PartitionEntry& PartitionTable::entry(std::size_t idx) const {
    if (idx >= entries_.size()) {
        throw std::out_of_range("PartitionTable::entry: bad entry index");
    }
    return entries_[idx];
}

bool PartitionTable::is_fully_indexed() const {
    if (column_len_ == 0) return true;
    Position cursor = 0;
    for (const PartitionEntry& e : entries_) {
        if (e.lo_pos != cursor) return false;
        cursor = e.hi_pos + 1;
    }
    return cursor == static_cast<Position>(column_len_);
}

bool PartitionTable::overlaps_open_interval(Key l, Key h) const {
    // Some entry with lo_key < h and hi_key > l. Entries are key-sorted, so
    // check the first entry whose hi_key is > l.
    auto it = std::lower_bound(entries_.begin(), entries_.end(), l,
                               [](const PartitionEntry& e, Key key) { return e.hi_key <= key; });
    return it != entries_.end() && it->lo_key < h;
}

void PartitionTable::dump(std::ostream& os) const {
    for (const PartitionEntry& e : entries_) {
        os << e.lo_key << ',' << e.hi_key << ',' << e.lo_pos << ',' << e.hi_pos << ','
           << e.model_id << '\n';
    }
}

}  // namespace lai
