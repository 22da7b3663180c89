#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lai {

// Column keys. The engines treat them as opaque totally-ordered values.
using Key = std::uint64_t;

// Zero-based index into a column. Signed so that the empty-range encoding
// (hi = lo - 1, possibly -1) never underflows.
using Position = std::int64_t;

// The column under adaptive indexing: a flat array of keys that is only ever
// reordered in place, never grown or shrunk.
using Column = std::vector<Key>;

// Inclusive range query [l, h].
struct RangeQuery {
    Key l = 0;
    Key h = 0;
};

// Structural relation between a query's endpoints and the sorted partitions
// built so far.
enum class CaseKind : std::uint8_t {
    Case1i,   // both endpoints unsorted, sorted partition(s) in between
    Case1ii,  // both endpoints in one unsorted partition
    Case2,    // both endpoints in the same sorted partition
    Case3,    // endpoints in two different sorted partitions
    Case4,    // only l in a sorted partition
    Case5,    // only h in a sorted partition
};

std::string_view case_name(CaseKind kind);

// Per-query record shared by all engines. Engines that do not classify
// queries (the baselines) leave case_kind empty; the CSV writer prints "-".
struct QueryStats {
    std::uint64_t query_index = 0;
    std::optional<CaseKind> case_kind;
    std::uint64_t latency_ns = 0;
    Position result_lo = 0;
    Position result_hi = -1;  // empty result: result_hi == result_lo - 1
};

// Reference answer for any range query: every x in column with l <= x <= h,
// with multiplicity, in column order. All engines must agree with this on
// their initial column contents.
std::vector<Key> naive_scan(const Column& column, const RangeQuery& q);

// Order-insensitive comparison helper used by the oracle checks.
bool same_multiset(std::vector<Key> a, std::vector<Key> b);

}  // namespace lai
