#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lai/core.hpp"
#include "lai/engine.hpp"

namespace lai {

// One batch of user queries as seen by the forecaster.
struct QueryBatch {
    std::vector<RangeQuery> queries;
    std::size_t batch_index = 0;
};

// A forecasting method: fits a univariate series and extends it by `horizon`
// values. Implementations must be deterministic and return finite values.
struct ForecastMethod {
    std::string name;
    std::function<std::vector<double>(std::span<const double> series, std::size_t horizon)>
        forecast;
};

struct ForecastResult {
    std::vector<RangeQuery> predicted;
    std::string chosen_method_l;
    std::string chosen_method_h;
    std::vector<std::pair<std::string, double>> mase_scores_l;
    std::vector<std::pair<std::string, double>> mase_scores_h;
};

// Mean absolute scaled error: MAE(predicted vs actual) over the mean absolute
// one-step naive error of the training series. Returns 0 when both are zero,
// +infinity when only the denominator is. Throws std::invalid_argument on a
// length mismatch or when training has fewer than 2 points.
double mase(std::span<const double> actual, std::span<const double> predicted,
            std::span<const double> training);

// The default deterministic method set: last-value naive, drift, piecewise
// linear with jump replay, and seasonal naive with an autocorrelation-chosen
// period.
std::vector<ForecastMethod> default_forecast_methods();

// Models the l- and h-series independently: each method fits on the first 80%
// of the batch and is scored by MASE on the remaining 20%; the best method per
// series (ties broken by registration order) then forecasts `horizon` steps
// from the full series. Forecasts are clamped to the key domain and swap-
// repaired so l <= h. Requires history length >= 8 and a nonempty method set.
ForecastResult predict_workload(const QueryBatch& history,
                                std::span<const ForecastMethod> methods, std::size_t horizon);

// Pushes every predicted range through the engine's index-building path (no
// result materialization, no user-query stats). Returns how many of them
// caused any column or table mutation.
std::size_t apply_forecast(LaiEngine& engine, const ForecastResult& forecast);

}  // namespace lai
