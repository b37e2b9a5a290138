#include "inertia/baseline.hpp"

#include "inertia/errors.hpp"
#include "inertia/ols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace inertia {

double SeasonalBlock::evaluate(double t_hours) const {
    double s = 0.0;
    const double w = 2.0 * M_PI / period_hours;
    for (std::size_t n = 0; n < cos_coeffs.size(); ++n) {
        const double a = w * static_cast<double>(n + 1) * t_hours;
        s += cos_coeffs[n] * std::cos(a) + sin_coeffs[n] * std::sin(a);
    }
    return s;
}

double LogisticTrend::evaluate(double t_hours) const {
    double e = rate * (t_hours - midpoint);
    e = std::clamp(e, -500.0, 500.0);
    return capacity / (1.0 + std::exp(-e));
}

std::string holiday_date_class(Date d) {
    std::string iso = d.to_iso();       // YYYY-MM-DD
    return iso.substr(5);               // MM-DD
}

namespace {

// Trend fit works in (u, v) with exponent u*(t - t_start) + v, which stays
// well-behaved as the curve flattens (u -> 0 keeps the level v free).
struct TrendParams {
    double u, v;
};

double trend_sse(const std::vector<double>& t_rel, const std::vector<double>& y, double capacity,
                 TrendParams p) {
    double sse = 0.0;
    for (std::size_t i = 0; i < t_rel.size(); ++i) {
        double e = std::clamp(p.u * t_rel[i] + p.v, -500.0, 500.0);
        double g = capacity / (1.0 + std::exp(-e));
        double r = y[i] - g;
        sse += r * r;
    }
    return sse;
}

TrendParams fit_trend_params_centered(const std::vector<double>& t_rel,
                                      const std::vector<double>& y, double capacity,
                                      const BaselineConfig& cfg) {
    std::vector<double> u_grid{0.0};
    const int half = std::max(cfg.grid_points / 2, 4);
    for (int j = 0; j < half; ++j) {
        double mag = cfg.rate_bound * std::pow(10.0, -6.0 * j / (half - 1));
        u_grid.push_back(mag);
        u_grid.push_back(-mag);
    }
    std::vector<double> v_grid;
    for (int j = 0; j < cfg.grid_points; ++j)
        v_grid.push_back(-8.0 + 16.0 * j / (cfg.grid_points - 1));

    TrendParams best{0.0, 0.0};
    double best_sse = std::numeric_limits<double>::infinity();
    for (double u : u_grid)
        for (double v : v_grid) {
            double sse = trend_sse(t_rel, y, capacity, {u, v});
            if (sse < best_sse) {
                best_sse = sse;
                best = {u, v};
            }
        }

    // Pattern search around the grid optimum, with diagonal moves so the
    // correlated (u, v) valley does not force a slow zigzag.
    double du = cfg.rate_bound / 10.0;
    double dv = 16.0 / (cfg.grid_points - 1);
    for (int round = 0; round < cfg.descent_rounds; ++round) {
        bool improved = false;
        const TrendParams candidates[] = {
            {best.u + du, best.v},      {best.u - du, best.v},
            {best.u, best.v + dv},      {best.u, best.v - dv},
            {best.u + du, best.v + dv}, {best.u + du, best.v - dv},
            {best.u - du, best.v + dv}, {best.u - du, best.v - dv}};
        for (const auto& c : candidates) {
            if (std::abs(c.u) > cfg.rate_bound)
                continue;
            double sse = trend_sse(t_rel, y, capacity, c);
            if (sse < best_sse) {
                best_sse = sse;
                best = c;
                improved = true;
            }
        }
        if (!improved) {
            du *= 0.5;
            dv *= 0.5;
            if (du < 1e-16 && dv < 1e-13)
                break;
        }
    }
    return best;
}

// Centers the time axis before searching: u and the level parameter are close
// to independent at the mean of t, which keeps the pattern search fast.
TrendParams fit_trend_params(const std::vector<double>& t_rel, const std::vector<double>& y,
                             double capacity, const BaselineConfig& cfg) {
    double t_mean = 0.0;
    for (double t : t_rel)
        t_mean += t;
    t_mean /= static_cast<double>(t_rel.size());
    std::vector<double> centered(t_rel.size());
    for (std::size_t i = 0; i < t_rel.size(); ++i)
        centered[i] = t_rel[i] - t_mean;
    TrendParams p = fit_trend_params_centered(centered, y, capacity, cfg);
    return {p.u, p.v - p.u * t_mean};
}

} // namespace

TsBaselineModel TsBaselineModel::fit(const HourlySeries& train, const HolidayCalendar& cal,
                                     const BaselineConfig& config) {
    std::vector<double> t_abs, t_rel, y;
    const double t_start = static_cast<double>(train.start().hours_since_epoch);
    for (std::size_t i = 0; i < train.size(); ++i) {
        if (!train[i])
            continue;
        double t = t_start + static_cast<double>(i);
        t_abs.push_back(t);
        t_rel.push_back(static_cast<double>(i));
        y.push_back(*train[i]);
    }
    if (y.empty())
        throw FitError("baseline fit needs at least one present value");

    TsBaselineModel model;

    // Trend: capacity fixed, (rate, midpoint) from grid + descent.
    double capacity = config.capacity_override
                          ? *config.capacity_override
                          : config.capacity_factor * *std::max_element(y.begin(), y.end());
    if (capacity <= 0)
        throw FitError("logistic capacity must be positive");

    const double span = static_cast<double>(train.size());
    std::vector<BaselineConfig::Seasonality> active;
    for (const auto& s : config.seasonalities) {
        if (s.period_hours <= 0)
            throw FitError("seasonal period must be positive");
        if (config.auto_disable_yearly && span < 2.0 * s.period_hours)
            continue;
        active.push_back(s);
    }

    std::vector<std::string> holiday_classes;
    for (Date d : cal.dates()) {
        Timestamp midnight{static_cast<std::int64_t>(d.days_since_epoch) * 24};
        if (midnight + 24 <= train.start() || midnight >= train.end())
            continue;
        std::string cls = holiday_date_class(d);
        if (std::find(holiday_classes.begin(), holiday_classes.end(), cls) ==
            holiday_classes.end())
            holiday_classes.push_back(cls);
    }
    std::sort(holiday_classes.begin(), holiday_classes.end());

    std::size_t n_cols = 0;
    for (const auto& s : active)
        n_cols += 2 * static_cast<std::size_t>(s.order);
    n_cols += holiday_classes.size();

    // The seasonal/holiday regressors do not change across backfit passes.
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(y.size()),
                                              static_cast<Eigen::Index>(n_cols));
    for (std::size_t i = 0; i < y.size(); ++i) {
        Eigen::Index col = 0;
        for (const auto& s : active) {
            const double w = 2.0 * M_PI / s.period_hours;
            for (int n = 1; n <= s.order; ++n) {
                double a = w * n * t_abs[i];
                X(static_cast<Eigen::Index>(i), col++) = std::cos(a);
                X(static_cast<Eigen::Index>(i), col++) = std::sin(a);
            }
        }
        Timestamp ts{static_cast<std::int64_t>(t_abs[i])};
        Date d = Date::of(ts);
        if (cal.contains(d)) {
            std::string cls = holiday_date_class(d);
            auto it = std::lower_bound(holiday_classes.begin(), holiday_classes.end(), cls);
            if (it != holiday_classes.end() && *it == cls)
                X(static_cast<Eigen::Index>(i), col + (it - holiday_classes.begin())) = 1.0;
        }
    }

    // Two backfit passes: trend on the seasonally adjusted series, then
    // seasonal + holiday terms jointly on the detrended series. A single
    // sequential pass leaves a sliver of the seasonality inside the trend.
    Eigen::VectorXd seasonal_fit = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(y.size()));
    const int passes = n_cols > 0 ? 2 : 1;
    for (int pass = 0; pass < passes; ++pass) {
        std::vector<double> adjusted(y.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            adjusted[i] = y[i] - seasonal_fit(static_cast<Eigen::Index>(i));
        TrendParams p = fit_trend_params(t_rel, adjusted, capacity, config);
        double u = p.u;
        if (std::abs(u) < 1e-12)
            u = u < 0 ? -1e-12 : 1e-12;
        model.trend_ = {capacity, u, t_start - p.v / u};
        if (n_cols == 0)
            break;

        Eigen::VectorXd r(static_cast<Eigen::Index>(y.size()));
        for (std::size_t i = 0; i < y.size(); ++i)
            r(static_cast<Eigen::Index>(i)) = y[i] - model.trend_.evaluate(t_abs[i]);
        LsqSolution sol = solve_lsq(X, r);
        seasonal_fit = X * sol.coefficients;

        model.seasonal_.clear();
        model.holiday_effects_.clear();
        Eigen::Index col = 0;
        for (const auto& s : active) {
            SeasonalBlock block;
            block.period_hours = s.period_hours;
            block.order = s.order;
            for (int n = 1; n <= s.order; ++n) {
                block.cos_coeffs.push_back(sol.coefficients(col++));
                block.sin_coeffs.push_back(sol.coefficients(col++));
            }
            model.seasonal_.push_back(std::move(block));
        }
        for (std::size_t k = 0; k < holiday_classes.size(); ++k)
            model.holiday_effects_[holiday_classes[k]] =
                sol.coefficients(col + static_cast<Eigen::Index>(k));
    }
    return model;
}

double TsBaselineModel::trend_at(Timestamp ts) const {
    return trend_.evaluate(static_cast<double>(ts.hours_since_epoch));
}

double TsBaselineModel::seasonal_at(Timestamp ts) const {
    double t = static_cast<double>(ts.hours_since_epoch);
    double s = 0.0;
    for (const auto& block : seasonal_)
        s += block.evaluate(t);
    return s;
}

double TsBaselineModel::holiday_at(Timestamp ts, const HolidayCalendar& cal) const {
    Date d = Date::of(ts);
    if (!cal.contains(d))
        return 0.0;
    auto it = holiday_effects_.find(holiday_date_class(d));
    return it == holiday_effects_.end() ? 0.0 : it->second;
}

HourlySeries TsBaselineModel::predict(TimeWindow window, const HolidayCalendar& cal) const {
    HourlySeries out = HourlySeries::empty_like("inertia_forecast_mvas", Unit::MvaSeconds, window);
    for (Timestamp h = window.begin; h < window.end; h += 1)
        out.set(h, trend_at(h) + seasonal_at(h) + holiday_at(h, cal));
    return out;
}

} // namespace inertia
