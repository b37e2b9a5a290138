#pragma once

#include "inertia/timestamp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace inertia {

enum class Unit { MvaSeconds, Megawatts };

/// Half-open interval of hours [begin, end).
struct TimeWindow {
    Timestamp begin;
    Timestamp end;

    std::int64_t length() const { return end - begin; }
    bool contains(Timestamp ts) const { return begin <= ts && ts < end; }
    bool empty() const { return end <= begin; }
};

/// Uniformly sampled hourly series. Index i holds the value at start + i hours;
/// a disengaged optional marks a gap, never a skipped index.
class HourlySeries {
public:
    HourlySeries() = default;
    HourlySeries(std::string name, Unit unit, Timestamp start,
                 std::vector<std::optional<double>> values)
        : name_(std::move(name)), unit_(unit), start_(start), values_(std::move(values)) {}

    static HourlySeries empty_like(const std::string& name, Unit unit, TimeWindow window) {
        return HourlySeries(name, unit, window.begin,
                            std::vector<std::optional<double>>(
                                static_cast<std::size_t>(window.length())));
    }

    const std::string& name() const { return name_; }
    Unit unit() const { return unit_; }
    Timestamp start() const { return start_; }
    Timestamp end() const { return start_ + static_cast<std::int64_t>(values_.size()); }
    std::size_t size() const { return values_.size(); }
    TimeWindow window() const { return {start_, end()}; }

    std::optional<double> at(Timestamp ts) const {
        std::int64_t i = ts - start_;
        if (i < 0 || i >= static_cast<std::int64_t>(values_.size()))
            return std::nullopt;
        return values_[static_cast<std::size_t>(i)];
    }

    std::optional<double>& operator[](std::size_t i) { return values_[i]; }
    const std::optional<double>& operator[](std::size_t i) const { return values_[i]; }

    void set(Timestamp ts, double value) {
        std::int64_t i = ts - start_;
        if (i >= 0 && i < static_cast<std::int64_t>(values_.size()))
            values_[static_cast<std::size_t>(i)] = value;
    }

    const std::vector<std::optional<double>>& values() const { return values_; }

    std::size_t gap_count() const {
        std::size_t n = 0;
        for (const auto& v : values_)
            if (!v)
                ++n;
        return n;
    }

    /// Restricts to [window.begin, window.end); hours outside the stored range
    /// come back as gaps.
    HourlySeries slice(TimeWindow window) const {
        std::vector<std::optional<double>> out(static_cast<std::size_t>(window.length()));
        for (std::int64_t i = 0; i < window.length(); ++i)
            out[static_cast<std::size_t>(i)] = at(window.begin + i);
        return HourlySeries(name_, unit_, window.begin, std::move(out));
    }

    /// Pads/crops so the series covers exactly `window`.
    HourlySeries aligned_to(TimeWindow window) const { return slice(window); }

private:
    std::string name_;
    Unit unit_ = Unit::Megawatts;
    Timestamp start_;
    std::vector<std::optional<double>> values_;
};

/// Sub-hourly sample stream, input to resample_to_hourly.
struct SubHourlySample {
    Timestamp hour;      // the hour this sample falls in
    int minute;          // 0..59
    std::optional<double> value;
};

enum class Reducer { Mean, First };

/// Collapses evenly spaced sub-hourly samples to one value per hour.
/// `step_minutes` must divide 60; an hour with no present samples becomes a gap.
HourlySeries resample_to_hourly(const std::string& name, Unit unit,
                                const std::vector<SubHourlySample>& samples, int step_minutes,
                                Reducer reducer);

} // namespace inertia
