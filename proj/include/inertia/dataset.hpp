#pragma once

#include "inertia/calendar.hpp"
#include "inertia/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace inertia {

/// Aligned bundle of target and explanatory series for one region (or the
/// whole system). All member series share the same start and length.
/// Immutable after load; all operations are pure reads.
struct InertiaDataset {
    RegionId region = RegionId::NordicTotal;
    HourlySeries target;                      // total inertial energy, MVA·s
    std::optional<HourlySeries> hydro_inertia;
    HourlySeries demand_fc;
    HourlySeries wind_fc;
    HourlySeries solar_fc;
    HourlySeries ic_flow;
    std::optional<HourlySeries> demand_actual;
    std::optional<HourlySeries> wind_actual;
    std::optional<HourlySeries> solar_actual;
    HolidayCalendar calendar;

    TimeWindow range() const { return target.window(); }

    /// Re-slices every member series to `window` (gaps where data runs out).
    InertiaDataset restricted_to(TimeWindow window) const;
};

struct SplitSpec {
    Timestamp train_start, train_end;   // half-open [train_start, train_end)
    Timestamp test_start, test_end;     // half-open [test_start, test_end)

    TimeWindow train() const { return {train_start, train_end}; }
    TimeWindow test() const { return {test_start, test_end}; }

    /// Throws SplitError when intervals are empty, leak, or leave the range.
    void validate(TimeWindow dataset_range) const;
};

std::pair<InertiaDataset, InertiaDataset> split(const InertiaDataset& ds, const SplitSpec& spec);

/// Column-name map for CSV ingestion; keys are the canonical series names,
/// values are the header names in the file. Defaults to the identity schema.
struct CsvSchema {
    std::map<std::string, std::string> columns = {
        {"timestamp", "timestamp"},
        {"inertia_mvas", "inertia_mvas"},
        {"hydro_inertia_mvas", "hydro_inertia_mvas"},
        {"demand_fc_mw", "demand_fc_mw"},
        {"wind_fc_mw", "wind_fc_mw"},
        {"solar_fc_mw", "solar_fc_mw"},
        {"ic_flow_mw", "ic_flow_mw"},
        {"demand_mw", "demand_mw"},
        {"wind_mw", "wind_mw"},
        {"solar_mw", "solar_mw"},
    };
};

/// Loads one wide CSV per region. Rows may be unordered; missing hours in the
/// union range become gaps. Mandatory columns: timestamp, inertia_mvas,
/// demand_fc_mw, wind_fc_mw, solar_fc_mw, ic_flow_mw.
InertiaDataset load_csv(const std::string& path, RegionId region, const HolidayCalendar& cal,
                        const CsvSchema& schema = {});

void write_csv(const InertiaDataset& ds, const std::string& path);

} // namespace inertia
