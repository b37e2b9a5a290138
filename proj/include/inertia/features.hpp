#pragma once

#include "inertia/dataset.hpp"

#include <Eigen/Dense>

#include <set>
#include <string>
#include <vector>

namespace inertia {

enum class TimeTrend { None, Linear, Quadratic };

/// Declarative description of the regressor set. Defaults reproduce the
/// seven-term day-type interaction model.
struct FeatureSpec {
    int lag_target_hours = 24;
    bool use_demand_fc = true;
    bool use_wind_fc = true;
    bool use_solar_fc = true;
    bool use_ic_flow = true;
    TimeTrend time_trend = TimeTrend::Quadratic;
    bool daytype_interaction = true;
    std::set<std::string> monthly_interaction_on;   // feature names, e.g. "demand_fc"
    bool hydro_lag = false;
    bool include_intercept = false;

    /// Throws ConfigError on violated invariants (lag < 1, monthly interaction
    /// naming a disabled feature).
    void validate() const;

    /// Feature names eligible for monthly expansion under this spec.
    std::vector<std::string> enabled_feature_names() const;

    std::size_t columns_per_block() const;
    std::size_t block_count() const { return daytype_interaction ? 2 : 1; }
    std::size_t column_count() const { return block_count() * columns_per_block(); }
};

/// Normalization of the raw hour index used by the trend terms:
/// tau(h) = (h - t0) / t_scale. Fixed at fit time, reused at predict time.
struct TrendRef {
    Timestamp t0;
    double t_scale = 1.0;

    double tau(Timestamp ts) const { return static_cast<double>(ts - t0) / t_scale; }

    static TrendRef for_window(TimeWindow w) {
        return {w.begin, static_cast<double>(std::max<std::int64_t>(w.length(), 1))};
    }
};

struct DesignMatrix {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;                    // MVA·s; meaningful only when built with targets
    std::vector<Timestamp> row_times;
    std::vector<std::string> column_names;
    TrendRef trend;
};

struct BuildOptions {
    bool require_target = true;           // drop rows whose target is a gap
    std::optional<TrendRef> trend;        // default: derived from the window
};

/// Emits one row per hour in `window` whose referenced inputs (including the
/// lagged values, which may reach before the window) are all present.
/// Throws EmptyDesignError when no hour qualifies.
DesignMatrix build_design(const InertiaDataset& ds, const FeatureSpec& spec, TimeWindow window,
                          const BuildOptions& options = {});

enum class ForecastKind { Demand, Wind, Solar };

/// Replaces the named day-ahead forecast series with their real-time
/// counterparts (perfect-forecast substitution). Throws MissingSeriesError
/// when a requested actual series is absent.
InertiaDataset substitute_actuals(const InertiaDataset& ds, const std::set<ForecastKind>& which);

} // namespace inertia
