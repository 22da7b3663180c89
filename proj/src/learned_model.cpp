#include "lai/learned_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lai {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

LearnedModel LearnedModel::build(const Column& column, Position lo_pos, Position hi_pos,
                                 std::size_t epsilon) {
    if (lo_pos < 0 || lo_pos > hi_pos || hi_pos >= static_cast<Position>(column.size())) {
        throw std::out_of_range("LearnedModel::build: invalid region");
    }
    if (epsilon < 1) throw std::invalid_argument("LearnedModel::build: epsilon must be >= 1");

    LearnedModel m;
    m.base_pos_ = lo_pos;
    m.len_ = static_cast<std::size_t>(hi_pos - lo_pos + 1);
    m.epsilon_ = epsilon;
    m.min_key_ = column[static_cast<std::size_t>(lo_pos)];
    m.max_key_ = column[static_cast<std::size_t>(hi_pos)];

    const double eps = static_cast<double>(epsilon);

    // Shrinking-cone segmentation over the first occurrence of each distinct
    // key. Maintaining the feasible slope interval guarantees the per-key
    // error bound for every point folded into a segment.
    Key seg_key = m.min_key_;
    double seg_pos = static_cast<double>(lo_pos);
    double slope_lo = 0.0;
    double slope_hi = kInf;
    bool has_interior = false;  // segment has points beyond its origin

    auto close_segment = [&](double next_start_pos) {
        double slope;
        if (!has_interior) {
            slope = 0.0;
        } else if (slope_hi == kInf) {
            slope = slope_lo;
        } else {
            slope = 0.5 * (slope_lo + slope_hi);
        }
        m.segments_.push_back({seg_key, seg_pos, std::max(slope, 0.0), next_start_pos});
    };

    Key prev_key = m.min_key_;
    for (Position p = lo_pos + 1; p <= hi_pos; ++p) {
        const Key k = column[static_cast<std::size_t>(p)];
        if (k < prev_key) throw std::invalid_argument("LearnedModel::build: region not sorted");
        if (k == prev_key) continue;  // duplicates train on their first position
        prev_key = k;

        const double dx = static_cast<double>(k - seg_key);
        const double dy = static_cast<double>(p) - seg_pos;
        const double lo_bound = (dy - eps) / dx;
        const double hi_bound = (dy + eps) / dx;
        const double new_lo = std::max(slope_lo, lo_bound);
        const double new_hi = std::min(slope_hi, hi_bound);
        if (new_lo <= new_hi) {
            slope_lo = new_lo;
            slope_hi = new_hi;
            has_interior = true;
        } else {
            close_segment(static_cast<double>(p));
            seg_key = k;
            seg_pos = static_cast<double>(p);
            slope_lo = 0.0;
            slope_hi = kInf;
            has_interior = false;
        }
    }
    close_segment(static_cast<double>(hi_pos));
    return m;
}

double LearnedModel::predict(Key k) const {
    if (k <= min_key_) return static_cast<double>(base_pos_);
    if (k >= max_key_) return static_cast<double>(base_pos_) + static_cast<double>(len_ - 1);

    // Last segment with start_key <= k.
    auto it = std::upper_bound(segments_.begin(), segments_.end(), k,
                               [](Key key, const Segment& s) { return key < s.start_key; });
    const Segment& s = *(it - 1);  // first segment starts at min_key, so it > begin
    const double raw = s.start_pos + s.slope * static_cast<double>(k - s.start_key);
    return std::clamp(raw, s.start_pos, s.end_pos);
}

Position LearnedModel::find(Key k, const Column& column) const {
    if (k < min_key_ || k > max_key_) {
        throw std::invalid_argument("LearnedModel::find: key outside the partition");
    }
    const Position lo = base_pos_;
    const Position hi = base_pos_ + static_cast<Position>(len_) - 1;
    const auto pred = static_cast<Position>(std::llround(predict(k)));
    const auto eps = static_cast<Position>(epsilon_);

    // The +1 on the right covers lower-bound answers for keys absent from the
    // training data, which may land one past the prediction window.
    const Position w_lo = std::clamp<Position>(pred - eps, lo, hi);
    const Position w_hi = std::clamp<Position>(pred + eps + 1, lo, hi);

    const Key* data = column.data();
    const Key* cand = std::lower_bound(data + w_lo, data + w_hi + 1, k);
    Position c = static_cast<Position>(cand - data);

    const bool left_ok = (c == lo) || data[c - 1] < k;
    const bool right_ok = (c <= hi) && data[c] >= k;
    if (!left_ok || !right_ok) {
        cand = std::lower_bound(data + lo, data + hi + 1, k);
        c = static_cast<Position>(cand - data);
    }
    return c;
}

std::shared_ptr<const IndexModel> build_spline_model(const Column& column, Position lo_pos,
                                                     Position hi_pos, std::size_t epsilon) {
    return std::make_shared<const LearnedModel>(
        LearnedModel::build(column, lo_pos, hi_pos, epsilon));
}

}  // namespace lai
