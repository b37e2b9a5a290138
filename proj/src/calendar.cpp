#include "inertia/calendar.hpp"

#include "inertia/errors.hpp"

#include <fstream>

namespace inertia {

std::string region_code(RegionId r) {
    switch (r) {
    case RegionId::NordicTotal: return "NORDIC_TOTAL";
    case RegionId::DK2: return "DK2";
    case RegionId::FI: return "FI";
    case RegionId::NO: return "NO";
    case RegionId::SE: return "SE";
    case RegionId::GB: return "GB";
    }
    return "?";
}

RegionId region_from_code(const std::string& code) {
    if (code == "NORDIC_TOTAL") return RegionId::NordicTotal;
    if (code == "DK2") return RegionId::DK2;
    if (code == "FI") return RegionId::FI;
    if (code == "NO") return RegionId::NO;
    if (code == "SE") return RegionId::SE;
    if (code == "GB") return RegionId::GB;
    throw ParseError("unknown region code: '" + code + "'");
}

HolidayCalendar HolidayCalendar::intersection(RegionId region,
                                              const std::vector<HolidayCalendar>& calendars) {
    std::set<Date> common;
    if (!calendars.empty()) {
        common = calendars.front().dates();
        for (std::size_t i = 1; i < calendars.size(); ++i) {
            std::set<Date> next;
            for (Date d : common)
                if (calendars[i].contains(d))
                    next.insert(d);
            common.swap(next);
        }
    }
    return HolidayCalendar(region, std::move(common));
}

HolidayCalendar HolidayCalendar::load(RegionId region, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open holiday file: " + path);
    std::set<Date> dates;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        // trim
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string token = line.substr(first, last - first + 1);
        try {
            dates.insert(Date::parse(token));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return HolidayCalendar(region, std::move(dates));
}

DayType day_type(Timestamp ts, const HolidayCalendar& cal) {
    if (ts.is_weekend() || cal.contains(Date::of(ts)))
        return DayType::WeekendOrHoliday;
    return DayType::Weekday;
}

} // namespace inertia
