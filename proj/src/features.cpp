#include "inertia/features.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace inertia {

namespace {

// Internal description of one column within a day-type block.
struct ColumnDef {
    std::string feature;   // "lag_inertia", "demand_fc", ..., "trend", "trend2",
                           // "hydro_lag", "intercept"
    int month = 0;         // 1..12 when this is a month-indicator column, else 0
};

std::vector<ColumnDef> block_layout(const FeatureSpec& spec) {
    std::vector<ColumnDef> cols;
    auto push = [&](const std::string& feature, bool monthly) {
        if (monthly)
            for (int m = 1; m <= 12; ++m)
                cols.push_back({feature, m});
        else
            cols.push_back({feature, 0});
    };
    auto monthly = [&](const std::string& f) {
        return spec.monthly_interaction_on.count(f) > 0;
    };
    push("lag_inertia", monthly("lag_inertia"));
    if (spec.use_demand_fc)
        push("demand_fc", monthly("demand_fc"));
    if (spec.use_wind_fc)
        push("wind_fc", monthly("wind_fc"));
    if (spec.use_solar_fc)
        push("solar_fc", monthly("solar_fc"));
    if (spec.use_ic_flow)
        push("ic_flow", monthly("ic_flow"));
    if (spec.time_trend != TimeTrend::None)
        push("trend", false);
    if (spec.time_trend == TimeTrend::Quadratic)
        push("trend2", false);
    if (spec.hydro_lag)
        push("hydro_lag", false);
    if (spec.include_intercept)
        push("intercept", false);
    return cols;
}

std::string column_name(const ColumnDef& def, DayType dt, bool interacted) {
    std::string name;
    if (interacted)
        name = (dt == DayType::Weekday ? "wd:" : "weh:");
    name += def.feature;
    if (def.month > 0) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), ":m%02d", def.month);
        name += buf;
    }
    return name;
}

} // namespace

void FeatureSpec::validate() const {
    if (lag_target_hours < 1)
        throw ConfigError("lag_target_hours must be >= 1");
    auto enabled = enabled_feature_names();
    for (const auto& f : monthly_interaction_on)
        if (std::find(enabled.begin(), enabled.end(), f) == enabled.end())
            throw ConfigError("monthly_interaction_on names feature '" + f +
                              "' which is not enabled in this spec");
}

std::vector<std::string> FeatureSpec::enabled_feature_names() const {
    std::vector<std::string> names{"lag_inertia"};
    if (use_demand_fc)
        names.emplace_back("demand_fc");
    if (use_wind_fc)
        names.emplace_back("wind_fc");
    if (use_solar_fc)
        names.emplace_back("solar_fc");
    if (use_ic_flow)
        names.emplace_back("ic_flow");
    return names;
}

std::size_t FeatureSpec::columns_per_block() const {
    return block_layout(*this).size();
}

DesignMatrix build_design(const InertiaDataset& ds, const FeatureSpec& spec, TimeWindow window,
                          const BuildOptions& options) {
    spec.validate();
    if (spec.hydro_lag && !ds.hydro_inertia)
        throw MissingSeriesError("hydro_lag requested but dataset has no hydro inertia series");

    const std::vector<ColumnDef> layout = block_layout(spec);
    const std::size_t per_block = layout.size();
    const std::size_t blocks = spec.block_count();
    const std::size_t n_cols = per_block * blocks;
    const TrendRef trend = options.trend ? *options.trend : TrendRef::for_window(window);

    struct Row {
        Timestamp ts;
        double target;
        std::vector<double> block_values;   // one value per in-block column
        DayType dt;
    };
    std::vector<Row> rows;

    for (Timestamp h = window.begin; h < window.end; h += 1) {
        std::optional<double> target = ds.target.at(h);
        if (options.require_target && !target)
            continue;
        std::optional<double> lag = ds.target.at(h - spec.lag_target_hours);
        std::optional<double> demand = ds.demand_fc.at(h);
        std::optional<double> wind = ds.wind_fc.at(h);
        std::optional<double> solar = ds.solar_fc.at(h);
        std::optional<double> ic = ds.ic_flow.at(h);
        std::optional<double> hydro =
            spec.hydro_lag ? ds.hydro_inertia->at(h - 24) : std::optional<double>{};

        if (!lag)
            continue;
        if (spec.use_demand_fc && !demand)
            continue;
        if (spec.use_wind_fc && !wind)
            continue;
        if (spec.use_solar_fc && !solar)
            continue;
        if (spec.use_ic_flow && !ic)
            continue;
        if (spec.hydro_lag && !hydro)
            continue;

        const int month = static_cast<int>(h.month());
        const double tau = trend.tau(h);
        std::vector<double> vals(per_block, 0.0);
        for (std::size_t c = 0; c < per_block; ++c) {
            const ColumnDef& def = layout[c];
            double raw;
            if (def.feature == "lag_inertia")
                raw = *lag;
            else if (def.feature == "demand_fc")
                raw = *demand;
            else if (def.feature == "wind_fc")
                raw = *wind;
            else if (def.feature == "solar_fc")
                raw = *solar;
            else if (def.feature == "ic_flow")
                raw = *ic;
            else if (def.feature == "trend")
                raw = tau;
            else if (def.feature == "trend2")
                raw = tau * tau;
            else if (def.feature == "hydro_lag")
                raw = *hydro;
            else   // intercept
                raw = 1.0;
            if (def.month > 0 && def.month != month)
                raw = 0.0;
            vals[c] = raw;
        }
        rows.push_back({h, target ? *target : 0.0, std::move(vals), day_type(h, ds.calendar)});
    }

    if (rows.empty())
        throw EmptyDesignError("no valid rows in window [" + window.begin.to_iso() + ", " +
                               window.end.to_iso() + ")");

    DesignMatrix dm;
    dm.trend = trend;
    dm.X = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                 static_cast<Eigen::Index>(n_cols));
    dm.y.resize(static_cast<Eigen::Index>(rows.size()));
    dm.row_times.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        std::size_t block = 0;
        if (spec.daytype_interaction && r.dt == DayType::WeekendOrHoliday)
            block = 1;
        for (std::size_t c = 0; c < per_block; ++c)
            dm.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(block * per_block + c)) =
                r.block_values[c];
        dm.y(static_cast<Eigen::Index>(i)) = r.target;
        dm.row_times.push_back(r.ts);
    }

    dm.column_names.reserve(n_cols);
    if (spec.daytype_interaction) {
        for (const auto& def : layout)
            dm.column_names.push_back(column_name(def, DayType::Weekday, true));
        for (const auto& def : layout)
            dm.column_names.push_back(column_name(def, DayType::WeekendOrHoliday, true));
    } else {
        for (const auto& def : layout)
            dm.column_names.push_back(column_name(def, DayType::Weekday, false));
    }
    return dm;
}

InertiaDataset substitute_actuals(const InertiaDataset& ds, const std::set<ForecastKind>& which) {
    InertiaDataset out = ds;
    auto swap_in = [&](ForecastKind kind, const std::optional<HourlySeries>& actual,
                       HourlySeries& forecast, const char* what) {
        if (!which.count(kind))
            return;
        if (!actual)
            throw MissingSeriesError(std::string("no real-time ") + what +
                                     " series available for substitution");
        HourlySeries replacement = actual->slice(forecast.window());
        forecast = HourlySeries(forecast.name(), forecast.unit(), replacement.start(),
                                replacement.values());
    };
    swap_in(ForecastKind::Demand, ds.demand_actual, out.demand_fc, "demand");
    swap_in(ForecastKind::Wind, ds.wind_actual, out.wind_fc, "wind");
    swap_in(ForecastKind::Solar, ds.solar_actual, out.solar_fc, "solar");
    return out;
}

} // namespace inertia
