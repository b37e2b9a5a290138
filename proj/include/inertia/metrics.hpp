#pragma once

#include "inertia/series.hpp"

namespace inertia {

struct MetricResult {
    double mape = 0.0;     // percent
    double smape = 0.0;    // percent, <= 200
    double mae = 0.0;      // MVA·s
    std::size_t n_points = 0;
};

/// 100 * mean(|A - F| / |A|) over hours where both series are present and
/// the actual is nonzero. Throws MetricError when no hour qualifies.
double mape(const HourlySeries& actual, const HourlySeries& forecast);

/// 100 * mean(2|A - F| / (|A| + |F|)) over hours where both are present and
/// |A| + |F| > 0.
double smape(const HourlySeries& actual, const HourlySeries& forecast);

double mae(const HourlySeries& actual, const HourlySeries& forecast);

MetricResult evaluate(const HourlySeries& actual, const HourlySeries& forecast);

} // namespace inertia
