#include "inertia/timestamp.hpp"

#include "inertia/errors.hpp"

#include <cstdio>

namespace inertia {

std::string Timestamp::to_iso() const {
    using namespace std::chrono;
    year_month_day d = ymd();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:00:00Z", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()),
                  hour_of_day());
    return buf;
}

Timestamp Timestamp::parse(const std::string& text) {
    int y = 0, mo = 0, da = 0, h = 0, mi = 0, se = 0;
    int n = std::sscanf(text.c_str(), "%d-%d-%d%*1[T ]%d:%d:%d", &y, &mo, &da, &h, &mi, &se);
    if (n < 3)
        throw ParseError("unparseable timestamp: '" + text + "'");
    if (mo < 1 || mo > 12 || da < 1 || da > 31 || h < 0 || h > 23)
        throw ParseError("timestamp field out of range: '" + text + "'");
    if (mi != 0 || se != 0)
        throw ParseError("timestamp not on an hour boundary: '" + text + "'");
    using namespace std::chrono;
    year_month_day d{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(mo)},
                     std::chrono::day{static_cast<unsigned>(da)}};
    if (!d.ok())
        throw ParseError("invalid calendar date: '" + text + "'");
    return Timestamp::from_ymdh(y, static_cast<unsigned>(mo), static_cast<unsigned>(da), h);
}

std::string Date::to_iso() const {
    Timestamp ts{static_cast<std::int64_t>(days_since_epoch) * 24};
    std::string s = ts.to_iso();
    return s.substr(0, 10);
}

Date Date::parse(const std::string& text) {
    int y = 0, mo = 0, da = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d", &y, &mo, &da) != 3)
        throw ParseError("unparseable date: '" + text + "'");
    using namespace std::chrono;
    year_month_day d{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(mo)},
                     std::chrono::day{static_cast<unsigned>(da)}};
    if (!d.ok())
        throw ParseError("invalid calendar date: '" + text + "'");
    return Date::from_ymd(y, static_cast<unsigned>(mo), static_cast<unsigned>(da));
}

} // namespace inertia
