#include "lai/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lai {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Forecasts stay inside [0, 2^63]: far beyond any key domain in use and still
// exactly representable as double, so the cast back to Key is safe.
constexpr double kKeyCap = 9223372036854775808.0;

Key to_key(double v) {
    if (!(v > 0.0)) return 0;  // also catches NaN
    if (v >= kKeyCap) return static_cast<Key>(kKeyCap);
    return static_cast<Key>(std::llround(v));
}

std::vector<double> diffs(std::span<const double> s) {
    std::vector<double> d;
    d.reserve(s.size() > 0 ? s.size() - 1 : 0);
    for (std::size_t i = 1; i < s.size(); ++i) d.push_back(s[i] - s[i - 1]);
    return d;
}

double median_abs(std::vector<double> v) {
    if (v.empty()) return 0.0;
    for (double& x : v) x = std::fabs(x);
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    return v[mid];
}

std::vector<double> forecast_naive(std::span<const double> s, std::size_t horizon) {
    const double last = s.empty() ? 0.0 : s.back();
    return std::vector<double>(horizon, last);
}

std::vector<double> forecast_drift(std::span<const double> s, std::size_t horizon) {
    if (s.size() < 2) return forecast_naive(s, horizon);
    const double slope = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
    std::vector<double> out(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        out[t] = s.back() + slope * static_cast<double>(t + 1);
    }
    return out;
}

// Detects jump steps (|diff| > 5 * median |diff|), estimates the in-segment
// slope, jump size and segment length, and replays that pattern forward.
std::vector<double> forecast_piecewise_jump(std::span<const double> s, std::size_t horizon) {
    if (s.size() < 3) return forecast_drift(s, horizon);
    const std::vector<double> d = diffs(s);
    const double med = median_abs(d);
    const double threshold = 5.0 * med;

    double slope_sum = 0.0, jump_sum = 0.0;
    std::size_t slope_n = 0, jump_n = 0;
    std::vector<std::size_t> jump_at;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::fabs(d[i]) > threshold && d[i] != 0.0) {
            jump_sum += d[i];
            ++jump_n;
            jump_at.push_back(i);
        } else {
            slope_sum += d[i];
            ++slope_n;
        }
    }
    const double slope = slope_n > 0 ? slope_sum / static_cast<double>(slope_n) : 0.0;
    if (jump_n == 0) {
        std::vector<double> out(horizon);
        for (std::size_t t = 0; t < horizon; ++t) {
            out[t] = s.back() + slope * static_cast<double>(t + 1);
        }
        return out;
    }
    const double jump = jump_sum / static_cast<double>(jump_n);

    double gap_sum = 0.0;
    for (std::size_t i = 1; i < jump_at.size(); ++i) {
        gap_sum += static_cast<double>(jump_at[i] - jump_at[i - 1]);
    }
    const std::size_t seg_len =
        jump_at.size() > 1
            ? std::max<std::size_t>(1, static_cast<std::size_t>(
                                           std::llround(gap_sum / double(jump_at.size() - 1))))
            : std::max<std::size_t>(1, jump_at.front() + 1);

    std::size_t since_jump = d.size() - 1 - jump_at.back();  // steps after the last jump
    double value = s.back();
    std::vector<double> out(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        ++since_jump;
        if (since_jump >= seg_len) {
            value += jump;
            since_jump = 0;
        } else {
            value += slope;
        }
        out[t] = value;
    }
    return out;
}

// Period chosen as the lag in [2, n/2] with the highest autocorrelation.
std::vector<double> forecast_seasonal_naive(std::span<const double> s, std::size_t horizon) {
    const std::size_t n = s.size();
    if (n < 4) return forecast_naive(s, horizon);

    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(n);
    double var = 0.0;
    for (double x : s) var += (x - mean) * (x - mean);

    std::size_t period = 2;
    double best = -kInf;
    if (var > 0.0) {
        for (std::size_t lag = 2; lag <= n / 2; ++lag) {
            double acf = 0.0;
            for (std::size_t i = lag; i < n; ++i) {
                acf += (s[i] - mean) * (s[i - lag] - mean);
            }
            acf /= var;
            if (acf > best) {
                best = acf;
                period = lag;
            }
        }
    }

    std::vector<double> out(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        out[t] = s[n - period + (t % period)];
    }
    return out;
}

struct SeriesChoice {
    std::size_t method = 0;
    std::vector<std::pair<std::string, double>> scores;
};

SeriesChoice select_method(std::span<const double> series,
                           std::span<const ForecastMethod> methods) {
    const std::size_t n = series.size();
    const std::size_t n_train = std::max<std::size_t>(2, n * 4 / 5);
    const std::size_t n_val = n - n_train;
    const auto train = series.subspan(0, n_train);
    const auto val = series.subspan(n_train, n_val);

    SeriesChoice choice;
    double best = kInf;
    for (std::size_t m = 0; m < methods.size(); ++m) {
        const std::vector<double> pred = methods[m].forecast(train, n_val);
        const double score = mase(val, pred, train);
        choice.scores.emplace_back(methods[m].name, score);
        if (score < best) {
            best = score;
            choice.method = m;
        }
    }
    return choice;
}

}  // namespace

double mase(std::span<const double> actual, std::span<const double> predicted,
            std::span<const double> training) {
    if (actual.size() != predicted.size() || actual.empty()) {
        throw std::invalid_argument("mase: actual/predicted length mismatch");
    }
    if (training.size() < 2) {
        throw std::invalid_argument("mase: training series too short");
    }
    double err = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        err += std::fabs(actual[i] - predicted[i]);
    }
    err /= static_cast<double>(actual.size());

    double naive = 0.0;
    for (std::size_t i = 1; i < training.size(); ++i) {
        naive += std::fabs(training[i] - training[i - 1]);
    }
    naive /= static_cast<double>(training.size() - 1);

    if (naive == 0.0) return err == 0.0 ? 0.0 : kInf;
    return err / naive;
}

std::vector<ForecastMethod> default_forecast_methods() {
    return {
        {"naive", forecast_naive},
        {"drift", forecast_drift},
        {"piecewise_jump", forecast_piecewise_jump},
        {"seasonal_naive", forecast_seasonal_naive},
    };
}

ForecastResult predict_workload(const QueryBatch& history,
                                std::span<const ForecastMethod> methods, std::size_t horizon) {
    if (methods.empty()) throw std::invalid_argument("predict_workload: no methods");
    if (history.queries.size() < 8) {
        throw std::invalid_argument("predict_workload: history too short");
    }

    std::vector<double> series_l, series_h;
    series_l.reserve(history.queries.size());
    series_h.reserve(history.queries.size());
    for (const RangeQuery& q : history.queries) {
        series_l.push_back(static_cast<double>(q.l));
        series_h.push_back(static_cast<double>(q.h));
    }

    const SeriesChoice pick_l = select_method(series_l, methods);
    const SeriesChoice pick_h = select_method(series_h, methods);

    const std::vector<double> fc_l = methods[pick_l.method].forecast(series_l, horizon);
    const std::vector<double> fc_h = methods[pick_h.method].forecast(series_h, horizon);

    ForecastResult result;
    result.chosen_method_l = methods[pick_l.method].name;
    result.chosen_method_h = methods[pick_h.method].name;
    result.mase_scores_l = pick_l.scores;
    result.mase_scores_h = pick_h.scores;
    result.predicted.reserve(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        Key l = to_key(fc_l[t]);
        Key h = to_key(fc_h[t]);
        if (l > h) std::swap(l, h);
        result.predicted.push_back({l, h});
    }
    return result;
}

std::size_t apply_forecast(LaiEngine& engine, const ForecastResult& forecast) {
    std::size_t mutations = 0;
    for (const RangeQuery& q : forecast.predicted) {
        if (engine.rebuild_for(q.l, q.h)) ++mutations;
    }
    return mutations;
}

}  // namespace lai
