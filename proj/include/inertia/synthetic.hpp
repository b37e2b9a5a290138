#pragma once

#include "inertia/dataset.hpp"
#include "inertia/features.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace inertia {

/// Parameters for the synthetic-data generator used by property tests and
/// seeded experiments.
struct SyntheticConfig {
    FeatureSpec spec;
    Eigen::VectorXd true_coeffs;     // must match the spec's column layout
    double noise_sd = 0.0;           // MVA·s, additive Gaussian on the target
    double forecast_error_sd = 0.0;  // MW, gap between forecast and actual series
    TimeWindow span;
    std::uint64_t seed = 0;
    RegionId region = RegionId::NordicTotal;
    bool with_hydro = true;
    double seed_level = 200000.0;    // target value for the first lag hours
};

/// Builds plausible exogenous series, then produces the target recursively
/// from the linear model plus noise. Actual series equal the forecasts plus
/// N(0, forecast_error_sd). Throws ConfigError on a coefficient/layout
/// mismatch.
InertiaDataset generate_synthetic(const SyntheticConfig& cfg);

/// The calendar used by generated datasets: Jan 1 and Dec 25/26 of every
/// year covered by `span`.
HolidayCalendar synthetic_calendar(RegionId region, TimeWindow span);

} // namespace inertia
