#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "lai/core.hpp"
#include "lai/learned_model.hpp"

namespace lai {

// One sorted partition: its key interval, position interval and the learned
// model built over it. column[lo_pos..hi_pos] is sorted ascending with
// column[lo_pos] == lo_key and column[hi_pos] == hi_key.
struct PartitionEntry {
    Key lo_key = 0;
    Key hi_key = 0;
    Position lo_pos = 0;
    Position hi_pos = 0;
    std::shared_ptr<const IndexModel> model;
    std::uint64_t model_id = 0;
};

// Maximal unsorted position range not covered by any entry. search_gap may
// produce an empty gap (hi_pos == lo_pos - 1) for a key that falls between
// two position-adjacent entries; enumerated gaps are never empty.
struct Gap {
    Position lo_pos = 0;
    Position hi_pos = -1;

    bool empty() const { return hi_pos < lo_pos; }
    Position len() const { return empty() ? 0 : hi_pos - lo_pos + 1; }
};

// The 1-D partition table: entries kept sorted by key interval, with key
// order agreeing with position order. Disjointness is enforced on insert.
class PartitionTable {
public:
    PartitionTable() = default;
    explicit PartitionTable(std::size_t column_len) : column_len_(column_len) {}

    // Entry index containing each endpoint, independently; nullopt when the
    // endpoint lies in a gap.
    std::pair<std::optional<std::size_t>, std::optional<std::size_t>> search_sorted_partitions(
        Key l, Key h) const;

    // Entry index whose key interval contains k, or nullopt.
    std::optional<std::size_t> find_entry(Key k) const;

    // The position range in which a key k must reside, given that it is not
    // covered by any entry. Throws std::logic_error if k is inside an entry.
    Gap search_gap(Key k) const;

    // All maximal uncovered position ranges within [p1, p2], ascending.
    std::vector<Gap> get_all_gaps(Position p1, Position p2) const;

    // Inserts a new entry; throws std::logic_error if it overlaps an existing
    // one in key or position space (that would be an engine bug).
    void insert(PartitionEntry entry);

    const IndexModel& get_learned_index(std::size_t idx) const;
    std::pair<Position, Position> get_boundaries(std::size_t idx) const;
    const PartitionEntry& entry(std::size_t idx) const;

    // True iff the entries cover every position of the column.
    bool is_fully_indexed() const;

    // True iff some entry's key interval intersects the open interval (l, h).
    bool overlaps_open_interval(Key l, Key h) const;

    std::size_t size() const { return entries_.size(); }
    std::size_t column_len() const { return column_len_; }
    const std::vector<PartitionEntry>& entries() const { return entries_; }

    // One `lo_key,hi_key,lo_pos,hi_pos,model_id` line per entry.
    void dump(std::ostream& os) const;

private:
    std::vector<PartitionEntry> entries_;
    std::size_t column_len_ = 0;
};

}  // namespace lai
