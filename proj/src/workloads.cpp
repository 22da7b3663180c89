#include "lai/workloads.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lai {

namespace {

// bound-inclusive uniform draw; modulo bias is irrelevant for workload shapes
Key rnd_upto(std::mt19937_64& g, Key bound) {
    return bound == 0 ? 0 : static_cast<Key>(g() % (bound + 1));
}

}  // namespace

std::string_view workload_name(WorkloadKind kind) {
    switch (kind) {
        case WorkloadKind::Random: return "random";
        case WorkloadKind::SequentialRandom: return "seq_random";
        case WorkloadKind::SequentialAlternate: return "seq_alternate";
        case WorkloadKind::SequentialInverse: return "seq_inverse";
        case WorkloadKind::SequentialOverlap: return "seq_overlap";
        case WorkloadKind::ZoomIn: return "zoomin";
        case WorkloadKind::SequentialZoomIn: return "seq_zoomin";
        case WorkloadKind::ZoomOut: return "zoomout";
        case WorkloadKind::SequentialZoomOut: return "seq_zoomout";
        case WorkloadKind::Periodic: return "periodic";
    }
    return "unknown";
}

std::optional<WorkloadKind> workload_from_name(std::string_view name) {
    for (WorkloadKind kind : all_workload_kinds()) {
        if (workload_name(kind) == name) return kind;
    }
    return std::nullopt;
}

std::vector<WorkloadKind> all_workload_kinds() {
    return {WorkloadKind::Random,        WorkloadKind::SequentialRandom,
            WorkloadKind::SequentialAlternate, WorkloadKind::SequentialInverse,
            WorkloadKind::SequentialOverlap,   WorkloadKind::ZoomIn,
            WorkloadKind::SequentialZoomIn,    WorkloadKind::ZoomOut,
            WorkloadKind::SequentialZoomOut,   WorkloadKind::Periodic};
}

std::vector<RangeQuery> generate(const WorkloadSpec& spec) {
    if (spec.domain < 2) throw std::invalid_argument("generate: domain too small");
    if (spec.zoom_group == 0) throw std::invalid_argument("generate: zoom_group must be > 0");

    const Key n = spec.domain;
    const Key max_key = n - 1;
    const Key step = spec.step != 0
                         ? spec.step
                         : std::max<Key>(1, n / std::max<std::size_t>(1, spec.n_queries));
    const Key base_width =
        std::max<Key>(1, static_cast<Key>(spec.selectivity * static_cast<double>(n)));

    std::mt19937_64 rng(spec.seed);
    std::vector<RangeQuery> out;
    out.reserve(spec.n_queries);

    auto clamp_push = [&](Key l, Key h) {
        l = std::min(l, max_key);
        h = std::min(std::max(h, l), max_key);
        out.push_back({l, h});
    };

    switch (spec.kind) {
        case WorkloadKind::Random: {
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                const Key l = rnd_upto(rng, max_key);
                const Key width = rnd_upto(rng, base_width);
                clamp_push(l, l + std::min(width, max_key - l));
            }
            break;
        }
        case WorkloadKind::SequentialRandom: {
            Key seq_l = 0;
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                Key l;
                if (i % 2 == 0) {  // 1st, 3rd, ... queries: random low bound
                    l = rnd_upto(rng, max_key);
                } else {
                    l = std::min(seq_l, max_key);
                    seq_l += step;
                }
                clamp_push(l, l + rnd_upto(rng, max_key - l));
            }
            break;
        }
        case WorkloadKind::SequentialAlternate: {
            Key h_dec = max_key;
            Key l_inc = 0;
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                if (i % 2 == 0) {  // odd queries: h marches down, l random
                    const Key h = h_dec;
                    clamp_push(rnd_upto(rng, h), h);
                    h_dec = h_dec > step ? h_dec - step : 0;
                } else {  // even queries: l marches up, h random
                    const Key l = std::min(l_inc, max_key);
                    clamp_push(l, l + rnd_upto(rng, max_key - l));
                    l_inc += step;
                }
            }
            break;
        }
        case WorkloadKind::SequentialInverse: {
            Key h_dec = max_key;
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                clamp_push(rnd_upto(rng, h_dec), h_dec);
                h_dec = h_dec > step ? h_dec - step : 0;
            }
            break;
        }
        case WorkloadKind::SequentialOverlap: {
            Key l_inc = 0;
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                const Key l = std::min(l_inc, max_key);
                clamp_push(l, l + rnd_upto(rng, max_key - l));
                l_inc += step;
            }
            break;
        }
        case WorkloadKind::ZoomIn: {
            const Key center_lo = (n - 2) / 2;
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                const Key delta = static_cast<Key>(i) * step;
                const Key l = std::min(delta, center_lo);
                const Key h = std::max(max_key > delta ? max_key - delta : 0, center_lo + 1);
                clamp_push(l, h);
            }
            break;
        }
        case WorkloadKind::SequentialZoomIn: {
            const std::size_t groups =
                std::max<std::size_t>(1, (spec.n_queries + spec.zoom_group - 1) / spec.zoom_group);
            const Key window = std::max<Key>(2 * spec.zoom_group, n / groups);
            const Key zoom_step = std::max<Key>(1, window / (2 * spec.zoom_group));
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                const Key g = static_cast<Key>(i / spec.zoom_group);
                const Key j = static_cast<Key>(i % spec.zoom_group);
                const Key base = (g * window) % n;
                const Key l = base + j * zoom_step;
                const Key h = base + window - 1 - j * zoom_step;
                clamp_push(l, h);
            }
            break;
        }
        case WorkloadKind::ZoomOut: {
            const Key center = n / 2;
            const Key half = base_width / 2;
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                const Key delta = half + static_cast<Key>(i) * step;
                const Key l = center > delta ? center - delta : 0;
                const Key h = std::min(center + delta, max_key);
                clamp_push(l, h);
            }
            break;
        }
        case WorkloadKind::SequentialZoomOut: {
            const std::size_t groups =
                std::max<std::size_t>(1, (spec.n_queries + spec.zoom_group - 1) / spec.zoom_group);
            const Key window = std::max<Key>(2 * spec.zoom_group, n / groups);
            const Key zoom_step = std::max<Key>(1, window / (2 * spec.zoom_group));
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                const Key g = static_cast<Key>(i / spec.zoom_group);
                const Key j = static_cast<Key>(i % spec.zoom_group);
                const Key base = (g * window) % n;
                const Key center = base + window / 2;
                const Key delta = (j + 1) * zoom_step;
                const Key l = std::max(center > delta ? center - delta : 0, base);
                const Key h = std::min(center + delta, base + window - 1);
                clamp_push(l, h);
            }
            break;
        }
        case WorkloadKind::Periodic: {
            const Key width = base_width;
            const Key tiles = std::max<Key>(1, n / width);
            const Key shift = std::max<Key>(1, width / 2);
            Key l = 0;
            for (std::size_t i = 0; i < spec.n_queries; ++i) {
                if (static_cast<Key>(i) < tiles) {
                    l = static_cast<Key>(i) * width;
                } else {
                    l += shift;  // slides into the previous range, h beyond it
                    if (l + width - 1 > max_key) l = 0;
                }
                clamp_push(l, l + width - 1);
            }
            break;
        }
    }
    return out;
}

}  // namespace lai
