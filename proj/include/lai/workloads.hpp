#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lai/core.hpp"

namespace lai {

enum class WorkloadKind : std::uint8_t {
    Random,
    SequentialRandom,
    SequentialAlternate,
    SequentialInverse,
    SequentialOverlap,
    ZoomIn,
    SequentialZoomIn,
    ZoomOut,
    SequentialZoomOut,
    Periodic,
};

std::string_view workload_name(WorkloadKind kind);
std::optional<WorkloadKind> workload_from_name(std::string_view name);
std::vector<WorkloadKind> all_workload_kinds();

struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::Random;
    Key domain = 1'000'000;          // keys drawn from [0, domain)
    std::size_t n_queries = 2000;
    std::uint64_t seed = 42;
    double selectivity = 0.001;      // base range width as a fraction of the domain
    Key step = 0;                    // 0: derived so the stream spans the domain
    std::size_t zoom_group = 5;      // queries per zoom group in the sequential zooms
};

// Deterministic query stream for the spec: same spec, same stream. All
// generated ranges satisfy 0 <= l <= h < domain.
std::vector<RangeQuery> generate(const WorkloadSpec& spec);

}  // namespace lai
