#pragma once

#include "inertia/dataset.hpp"

#include <cmath>

namespace inertia::testutil {

/// Deterministic little dataset with all series present over `window`.
inline InertiaDataset make_dataset(TimeWindow window, RegionId region = RegionId::NordicTotal) {
    InertiaDataset ds;
    ds.region = region;
    ds.calendar = HolidayCalendar(region, {Date::from_ymd(2018, 1, 1)});
    ds.target = HourlySeries::empty_like("inertia_mvas", Unit::MvaSeconds, window);
    ds.hydro_inertia = HourlySeries::empty_like("hydro_inertia_mvas", Unit::MvaSeconds, window);
    ds.demand_fc = HourlySeries::empty_like("demand_fc_mw", Unit::Megawatts, window);
    ds.wind_fc = HourlySeries::empty_like("wind_fc_mw", Unit::Megawatts, window);
    ds.solar_fc = HourlySeries::empty_like("solar_fc_mw", Unit::Megawatts, window);
    ds.ic_flow = HourlySeries::empty_like("ic_flow_mw", Unit::Megawatts, window);
    ds.demand_actual = HourlySeries::empty_like("demand_mw", Unit::Megawatts, window);
    ds.wind_actual = HourlySeries::empty_like("wind_mw", Unit::Megawatts, window);
    ds.solar_actual = HourlySeries::empty_like("solar_mw", Unit::Megawatts, window);
    for (Timestamp h = window.begin; h < window.end; h += 1) {
        double i = static_cast<double>(h - window.begin);
        ds.target.set(h, 200000.0 + 1000.0 * std::sin(i / 11.0) + 3.0 * i);
        ds.hydro_inertia->set(h, 120000.0 + 500.0 * std::cos(i / 7.0));
        ds.demand_fc.set(h, 40000.0 + 2000.0 * std::sin(i / 5.0));
        ds.wind_fc.set(h, 3000.0 + 1000.0 * std::cos(i / 13.0));
        ds.solar_fc.set(h, std::max(0.0, 2000.0 * std::sin(i / 3.0)));
        ds.ic_flow.set(h, 100.0 * std::sin(i / 17.0));
        ds.demand_actual->set(h, 40000.0 + 2000.0 * std::sin(i / 5.0) + 50.0);
        ds.wind_actual->set(h, 3000.0 + 1000.0 * std::cos(i / 13.0) - 20.0);
        ds.solar_actual->set(h, std::max(0.0, 2000.0 * std::sin(i / 3.0)) + 5.0);
    }
    return ds;
}

} // namespace inertia::testutil
