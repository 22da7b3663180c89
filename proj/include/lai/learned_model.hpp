#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "lai/core.hpp"

namespace lai {

// Behavioral contract of a per-partition index model: built once over a
// sorted region, then answers exact lower-bound lookups. Each partition can
// carry a different model family.
class IndexModel {
public:
    virtual ~IndexModel() = default;

    // Exact position of the first element >= k within the covered region.
    virtual Position find(Key k, const Column& column) const = 0;
};

// Builds a model over column[lo_pos..hi_pos] (sorted ascending) with the
// given error budget.
using ModelBuilder = std::function<std::shared_ptr<const IndexModel>(
    const Column& column, Position lo_pos, Position hi_pos, std::size_t epsilon)>;

// Monotone piecewise-linear CDF approximation over one sorted column region.
// Built in a single pass; every trained key k at position p satisfies
// |predict(k) - p| <= epsilon, which is what makes the bounded search in
// find() exact.
class LearnedModel final : public IndexModel {
public:
    struct Segment {
        Key start_key;
        double start_pos;  // prediction at start_key (absolute position)
        double slope;      // positions per key unit, >= 0
        double end_pos;    // prediction clamp for this segment's key span
    };

    // Builds over column[lo_pos..hi_pos], which must be sorted ascending.
    // epsilon is the maximum tolerated prediction error in positions (>= 1).
    static LearnedModel build(const Column& column, Position lo_pos, Position hi_pos,
                              std::size_t epsilon);

    // Raw (clamped) position prediction for k.
    double predict(Key k) const;

    // Exact position of the first element >= k within the covered region.
    // Prediction followed by binary search inside the epsilon window; falls
    // back to a whole-region binary search if the window turns out not to
    // contain the answer (possible only with long duplicate runs).
    // Throws std::invalid_argument when k is outside [min_key, max_key].
    Position find(Key k, const Column& column) const override;

    Position base_pos() const { return base_pos_; }
    std::size_t len() const { return len_; }
    std::size_t epsilon() const { return epsilon_; }
    Key min_key() const { return min_key_; }
    Key max_key() const { return max_key_; }
    std::size_t segment_count() const { return segments_.size(); }
    const std::vector<Segment>& segments() const { return segments_; }

private:
    std::vector<Segment> segments_;
    Position base_pos_ = 0;
    std::size_t len_ = 0;
    std::size_t epsilon_ = 0;
    Key min_key_ = 0;
    Key max_key_ = 0;
};

// Default ModelBuilder: the greedy spline model above.
std::shared_ptr<const IndexModel> build_spline_model(const Column& column, Position lo_pos,
                                                     Position hi_pos, std::size_t epsilon);

}  // namespace lai
