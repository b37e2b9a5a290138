#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>

namespace inertia {

/// UTC wall-clock hour, stored as whole hours since the Unix epoch.
/// Always aligned to an exact hour boundary by construction.
struct Timestamp {
    std::int64_t hours_since_epoch = 0;

    auto operator<=>(const Timestamp&) const = default;

    Timestamp operator+(std::int64_t h) const { return {hours_since_epoch + h}; }
    Timestamp operator-(std::int64_t h) const { return {hours_since_epoch - h}; }
    std::int64_t operator-(Timestamp other) const {
        return hours_since_epoch - other.hours_since_epoch;
    }
    Timestamp& operator+=(std::int64_t h) {
        hours_since_epoch += h;
        return *this;
    }

    std::chrono::sys_days day() const {
        using namespace std::chrono;
        // floor handles pre-epoch hours correctly
        return floor<days>(sys_seconds{seconds{hours_since_epoch * 3600}});
    }

    int hour_of_day() const {
        std::int64_t h = hours_since_epoch % 24;
        return static_cast<int>(h < 0 ? h + 24 : h);
    }

    std::chrono::year_month_day ymd() const { return std::chrono::year_month_day{day()}; }

    /// 1..12, UTC calendar month
    unsigned month() const { return static_cast<unsigned>(ymd().month()); }

    /// true for Saturday/Sunday (UTC)
    bool is_weekend() const {
        std::chrono::weekday wd{day()};
        return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
    }

    static Timestamp from_ymdh(int year, unsigned month, unsigned day, int hour) {
        using namespace std::chrono;
        sys_days sd = year_month_day{std::chrono::year{year}, std::chrono::month{month},
                                     std::chrono::day{day}};
        return {duration_cast<std::chrono::hours>(sd.time_since_epoch()).count() + hour};
    }

    std::string to_iso() const;

    /// Parses ISO-8601 timestamps like "2018-01-31T00:00:00Z" (also accepts
    /// "YYYY-MM-DD HH:MM" and bare dates). Throws ParseError on anything else
    /// or on sub-hour offsets.
    static Timestamp parse(const std::string& text);
};

/// Calendar date as days since epoch; used by holiday calendars.
struct Date {
    std::int32_t days_since_epoch = 0;

    auto operator<=>(const Date&) const = default;

    static Date of(Timestamp ts) {
        return {static_cast<std::int32_t>(ts.day().time_since_epoch().count())};
    }
    static Date from_ymd(int year, unsigned month, unsigned day) {
        return Date::of(Timestamp::from_ymdh(year, month, day, 0));
    }

    std::string to_iso() const;

    /// "YYYY-MM-DD", throws ParseError otherwise
    static Date parse(const std::string& text);
};

} // namespace inertia
