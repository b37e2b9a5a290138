#pragma once

#include "inertia/timestamp.hpp"

#include <set>
#include <string>
#include <vector>

namespace inertia {

enum class RegionId { NordicTotal, DK2, FI, NO, SE, GB };

std::string region_code(RegionId r);
RegionId region_from_code(const std::string& code);

enum class DayType { Weekday, WeekendOrHoliday };

/// Set of holiday dates for one region. Saturdays/Sundays are handled by the
/// day_type rule, not stored here.
class HolidayCalendar {
public:
    HolidayCalendar() = default;
    HolidayCalendar(RegionId region, std::set<Date> dates)
        : region_(region), dates_(std::move(dates)) {}

    RegionId region() const { return region_; }
    const std::set<Date>& dates() const { return dates_; }
    bool contains(Date d) const { return dates_.count(d) > 0; }
    void add(Date d) { dates_.insert(d); }

    /// Holidays common to every input calendar.
    static HolidayCalendar intersection(RegionId region,
                                        const std::vector<HolidayCalendar>& calendars);

    /// One YYYY-MM-DD per line, '#' comments, blank lines ignored.
    static HolidayCalendar load(RegionId region, const std::string& path);

private:
    RegionId region_ = RegionId::NordicTotal;
    std::set<Date> dates_;
};

DayType day_type(Timestamp ts, const HolidayCalendar& cal);

} // namespace inertia
