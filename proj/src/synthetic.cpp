#include "inertia/synthetic.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace inertia {

HolidayCalendar synthetic_calendar(RegionId region, TimeWindow span) {
    HolidayCalendar cal(region, {});
    int y0 = static_cast<int>(span.begin.ymd().year());
    int y1 = static_cast<int>((span.end - 1).ymd().year());
    for (int y = y0; y <= y1; ++y) {
        cal.add(Date::from_ymd(y, 1, 1));
        cal.add(Date::from_ymd(y, 12, 25));
        cal.add(Date::from_ymd(y, 12, 26));
    }
    return cal;
}

InertiaDataset generate_synthetic(const SyntheticConfig& cfg) {
    cfg.spec.validate();
    if (static_cast<std::size_t>(cfg.true_coeffs.size()) != cfg.spec.column_count())
        throw ConfigError("true_coeffs has " + std::to_string(cfg.true_coeffs.size()) +
                          " entries but the spec layout has " +
                          std::to_string(cfg.spec.column_count()) + " columns");
    if (cfg.span.empty())
        throw ConfigError("synthetic span is empty");

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const std::size_t n = static_cast<std::size_t>(cfg.span.length());
    const TimeWindow w = cfg.span;

    InertiaDataset ds;
    ds.region = cfg.region;
    ds.calendar = synthetic_calendar(cfg.region, w);
    ds.target = HourlySeries::empty_like("inertia_mvas", Unit::MvaSeconds, w);
    ds.demand_fc = HourlySeries::empty_like("demand_fc_mw", Unit::Megawatts, w);
    ds.wind_fc = HourlySeries::empty_like("wind_fc_mw", Unit::Megawatts, w);
    ds.solar_fc = HourlySeries::empty_like("solar_fc_mw", Unit::Megawatts, w);
    ds.ic_flow = HourlySeries::empty_like("ic_flow_mw", Unit::Megawatts, w);
    if (cfg.with_hydro)
        ds.hydro_inertia = HourlySeries::empty_like("hydro_inertia_mvas", Unit::MvaSeconds, w);

    double ic_state = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Timestamp h = w.begin + static_cast<std::int64_t>(i);
        const double t = static_cast<double>(i);
        const double yearly = std::sin(2.0 * M_PI * t / 8766.0);
        const double daily = std::sin(2.0 * M_PI * t / 24.0);
        const bool offday = day_type(h, ds.calendar) == DayType::WeekendOrHoliday;

        double demand = 40000.0 + 8000.0 * yearly + 4000.0 * daily +
                        (offday ? -3000.0 : 0.0) + 1000.0 * gauss(rng);
        double wind = std::max(0.0, 3000.0 + 2500.0 * std::sin(2.0 * M_PI * t / 120.0) +
                                        800.0 * gauss(rng));
        double diurnal = std::max(0.0, std::sin(M_PI * (h.hour_of_day() - 6) / 12.0));
        double solar = std::max(0.0, 4000.0 * diurnal * (0.6 + 0.4 * yearly) +
                                         200.0 * gauss(rng));
        ic_state = 0.95 * ic_state + 300.0 * gauss(rng);

        ds.demand_fc.set(h, demand);
        ds.wind_fc.set(h, wind);
        ds.solar_fc.set(h, solar);
        ds.ic_flow.set(h, ic_state);
        if (ds.hydro_inertia)
            ds.hydro_inertia->set(h, std::max(0.0, 120000.0 + 20000.0 * yearly +
                                                       5000.0 * gauss(rng)));
    }

    // Target: first `lag` hours seed the recursion, the rest follow the model.
    const int lag = cfg.spec.lag_target_hours;
    const TrendRef trend = TrendRef::for_window(w);
    for (std::size_t i = 0; i < n; ++i) {
        Timestamp h = w.begin + static_cast<std::int64_t>(i);
        if (static_cast<int>(i) < lag) {
            ds.target.set(h, cfg.seed_level);
            continue;
        }
        DesignMatrix row = build_design(ds, cfg.spec, {h, h + 1},
                                        {.require_target = false, .trend = trend});
        double value = row.X.row(0).dot(cfg.true_coeffs);
        if (cfg.noise_sd > 0.0)
            value += cfg.noise_sd * gauss(rng);
        ds.target.set(h, value);
    }

    // Actual series: forecasts plus the configured forecast error.
    auto with_error = [&](const HourlySeries& fc, const std::string& name) {
        HourlySeries out(name, Unit::Megawatts, fc.start(), fc.values());
        if (cfg.forecast_error_sd > 0.0)
            for (std::size_t i = 0; i < out.size(); ++i)
                if (out[i])
                    out[i] = *out[i] + cfg.forecast_error_sd * gauss(rng);
        return out;
    };
    ds.demand_actual = with_error(ds.demand_fc, "demand_mw");
    ds.wind_actual = with_error(ds.wind_fc, "wind_mw");
    ds.solar_actual = with_error(ds.solar_fc, "solar_mw");
    return ds;
}

} // namespace inertia
