#include "inertia/metrics.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cmath>

namespace inertia {

namespace {

TimeWindow overlap(const HourlySeries& a, const HourlySeries& b) {
    Timestamp begin = std::max(a.start(), b.start());
    Timestamp end = std::min(a.end(), b.end());
    return {begin, end < begin ? begin : end};
}

} // namespace

double mape(const HourlySeries& actual, const HourlySeries& forecast) {
    TimeWindow w = overlap(actual, forecast);
    double sum = 0.0;
    std::size_t n = 0;
    for (Timestamp h = w.begin; h < w.end; h += 1) {
        auto a = actual.at(h);
        auto f = forecast.at(h);
        if (!a || !f || *a == 0.0)
            continue;
        sum += std::abs(*a - *f) / std::abs(*a);
        ++n;
    }
    if (n == 0)
        throw MetricError("MAPE undefined: no overlapping hours with nonzero actuals");
    return 100.0 * sum / static_cast<double>(n);
}

double smape(const HourlySeries& actual, const HourlySeries& forecast) {
    TimeWindow w = overlap(actual, forecast);
    double sum = 0.0;
    std::size_t n = 0;
    for (Timestamp h = w.begin; h < w.end; h += 1) {
        auto a = actual.at(h);
        auto f = forecast.at(h);
        if (!a || !f)
            continue;
        double denom = std::abs(*a) + std::abs(*f);
        if (denom == 0.0)
            continue;
        sum += 2.0 * std::abs(*a - *f) / denom;
        ++n;
    }
    if (n == 0)
        throw MetricError("sMAPE undefined: no overlapping hours with |A|+|F| > 0");
    return 100.0 * sum / static_cast<double>(n);
}

double mae(const HourlySeries& actual, const HourlySeries& forecast) {
    TimeWindow w = overlap(actual, forecast);
    double sum = 0.0;
    std::size_t n = 0;
    for (Timestamp h = w.begin; h < w.end; h += 1) {
        auto a = actual.at(h);
        auto f = forecast.at(h);
        if (!a || !f)
            continue;
        sum += std::abs(*a - *f);
        ++n;
    }
    if (n == 0)
        throw MetricError("MAE undefined: no overlapping hours");
    return sum / static_cast<double>(n);
}

MetricResult evaluate(const HourlySeries& actual, const HourlySeries& forecast) {
    MetricResult r;
    r.mape = mape(actual, forecast);
    r.smape = smape(actual, forecast);
    r.mae = mae(actual, forecast);
    TimeWindow w = overlap(actual, forecast);
    for (Timestamp h = w.begin; h < w.end; h += 1) {
        auto a = actual.at(h);
        auto f = forecast.at(h);
        if (a && f && *a != 0.0)
            ++r.n_points;
    }
    return r;
}

} // namespace inertia
