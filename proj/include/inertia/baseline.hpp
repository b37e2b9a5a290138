#pragma once

#include "inertia/calendar.hpp"
#include "inertia/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace inertia {

struct SeasonalBlock {
    double period_hours = 24.0;
    int order = 1;
    std::vector<double> cos_coeffs;   // a_n, n = 1..order
    std::vector<double> sin_coeffs;   // b_n

    double evaluate(double t_hours) const;
};

struct LogisticTrend {
    double capacity = 1.0;      // C, MVA·s
    double rate = 0.0;          // k_g, 1/hour; negative for a decreasing series
    double midpoint = 0.0;      // m, hours since epoch

    double evaluate(double t_hours) const;
};

struct BaselineConfig {
    struct Seasonality {
        double period_hours;
        int order;
    };
    std::vector<Seasonality> seasonalities = {{24.0, 6}, {168.0, 3}, {8766.0, 10}};
    bool auto_disable_yearly = true;    // drop periods needing > half the training span
    double capacity_factor = 1.05;      // C = factor * max(train)
    std::optional<double> capacity_override;
    double rate_bound = 1e-2;           // |k_g| search bound, 1/hour
    int grid_points = 41;
    int descent_rounds = 200;
};

/// Additive decomposition: logistic trend + Fourier seasonalities + per-date
/// holiday offsets. Fitted model is immutable; prediction is fully
/// extrapolative (needs no future inputs).
class TsBaselineModel {
public:
    static TsBaselineModel fit(const HourlySeries& train, const HolidayCalendar& cal,
                               const BaselineConfig& config = {});

    HourlySeries predict(TimeWindow window, const HolidayCalendar& cal) const;

    double trend_at(Timestamp ts) const;
    double seasonal_at(Timestamp ts) const;
    double holiday_at(Timestamp ts, const HolidayCalendar& cal) const;

    const LogisticTrend& trend() const { return trend_; }
    const std::vector<SeasonalBlock>& seasonalities() const { return seasonal_; }
    /// Offsets keyed by "MM-DD" date class.
    const std::map<std::string, double>& holiday_effects() const { return holiday_effects_; }

private:
    LogisticTrend trend_;
    std::vector<SeasonalBlock> seasonal_;
    std::map<std::string, double> holiday_effects_;
};

/// "MM-DD" class key used to tie one offset to each recurring holiday date.
std::string holiday_date_class(Date d);

} // namespace inertia
