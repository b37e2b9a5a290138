#include "inertia/series.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <map>

namespace inertia {

HourlySeries resample_to_hourly(const std::string& name, Unit unit,
                                const std::vector<SubHourlySample>& samples, int step_minutes,
                                Reducer reducer) {
    if (step_minutes <= 0 || 60 % step_minutes != 0)
        throw ResampleError("sample spacing of " + std::to_string(step_minutes) +
                            " minutes does not divide one hour evenly");
    if (samples.empty())
        return HourlySeries(name, unit, Timestamp{0}, {});

    std::map<Timestamp, std::vector<std::optional<double>>> by_hour;
    for (const auto& s : samples) {
        if (s.minute < 0 || s.minute >= 60 || s.minute % step_minutes != 0)
            throw ResampleError("sample at minute " + std::to_string(s.minute) +
                                " is off the declared " + std::to_string(step_minutes) +
                                "-minute grid");
        by_hour[s.hour].push_back(s.value);
    }

    Timestamp start = by_hour.begin()->first;
    Timestamp last = by_hour.rbegin()->first;
    std::vector<std::optional<double>> out(static_cast<std::size_t>(last - start) + 1);

    for (const auto& [hour, vals] : by_hour) {
        std::optional<double> reduced;
        if (reducer == Reducer::First) {
            for (const auto& v : vals)
                if (v) {
                    reduced = v;
                    break;
                }
        } else {
            double sum = 0;
            int n = 0;
            for (const auto& v : vals)
                if (v) {
                    sum += *v;
                    ++n;
                }
            if (n > 0)
                reduced = sum / n;
        }
        out[static_cast<std::size_t>(hour - start)] = reduced;
    }
    return HourlySeries(name, unit, start, std::move(out));
}

} // namespace inertia
