#include "inertia/explanatory.hpp"

#include "inertia/errors.hpp"

#include <json.hpp>

#include <cmath>

namespace inertia {

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

namespace {

// Acklam's rational approximation for the probit function.
double normal_quantile_approx(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        double q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > 1 - plow) {
        double q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

} // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw NumericError("quantile probability must lie in (0, 1)");
    double z = normal_quantile_approx(p);
    // Halley refinement pushes the approximation to machine precision.
    for (int i = 0; i < 2; ++i) {
        double e = normal_cdf(z) - p;
        double u = e * std::sqrt(2 * M_PI) * std::exp(z * z / 2);
        z = z - u / (1 + z * u / 2);
    }
    return z;
}

std::optional<double> ProbabilisticForecast::cdf(Timestamp ts, double level) const {
    auto m = mean.at(ts);
    if (!m)
        return std::nullopt;
    if (sigma == 0.0)
        return level < *m ? 0.0 : (level > *m ? 1.0 : 0.5);
    return normal_cdf((level - *m) / sigma);
}

std::optional<double> ProbabilisticForecast::quantile(Timestamp ts, double p) const {
    auto m = mean.at(ts);
    if (!m)
        return std::nullopt;
    if (sigma == 0.0)
        return *m;
    return *m + sigma * normal_quantile(p);
}

ExplanatoryModel ExplanatoryModel::fit(const InertiaDataset& ds, const FeatureSpec& spec,
                                       TimeWindow train_window, SigmaSource sigma_source) {
    DesignMatrix dm = build_design(ds, spec, train_window);
    ExplanatoryModel model;
    model.spec_ = spec;
    model.solution_ = solve_lsq(dm);
    model.trend_ = dm.trend;
    model.n_train_ = static_cast<std::size_t>(dm.y.size());
    model.train_mu_ = dm.y.mean();
    // Population SD (divisor N) of the raw training target.
    const double n = static_cast<double>(dm.y.size());
    model.sigma_hat_ = std::sqrt((dm.y.array() - model.train_mu_).square().sum() / n);
    model.residual_sd_ = std::sqrt(model.solution_.residuals.squaredNorm() / n);
    if (sigma_source == SigmaSource::ResidualSd)
        model.sigma_hat_ = model.residual_sd_;
    return model;
}

HourlySeries ExplanatoryModel::predict(const InertiaDataset& ds, TimeWindow window) const {
    HourlySeries out = HourlySeries::empty_like("inertia_forecast_mvas", Unit::MvaSeconds, window);
    DesignMatrix dm;
    try {
        dm = build_design(ds, spec_, window, {.require_target = false, .trend = trend_});
    } catch (const EmptyDesignError&) {
        return out;   // all gaps
    }
    if (dm.column_names != solution_.column_names)
        throw NumericError("prediction design layout differs from the training layout");
    Eigen::VectorXd yhat = dm.X * solution_.coefficients;
    for (std::size_t i = 0; i < dm.row_times.size(); ++i)
        out.set(dm.row_times[i], yhat(static_cast<Eigen::Index>(i)));
    return out;
}

ProbabilisticForecast ExplanatoryModel::predict_distribution(const InertiaDataset& ds,
                                                             TimeWindow window) const {
    return {predict(ds, window), sigma_hat_};
}

namespace {

nlohmann::json spec_to_json(const FeatureSpec& s) {
    return {
        {"lag_target_hours", s.lag_target_hours},
        {"use_demand_fc", s.use_demand_fc},
        {"use_wind_fc", s.use_wind_fc},
        {"use_solar_fc", s.use_solar_fc},
        {"use_ic_flow", s.use_ic_flow},
        {"time_trend", s.time_trend == TimeTrend::None       ? "none"
                       : s.time_trend == TimeTrend::Linear   ? "linear"
                                                             : "quadratic"},
        {"daytype_interaction", s.daytype_interaction},
        {"monthly_interaction_on", s.monthly_interaction_on},
        {"hydro_lag", s.hydro_lag},
        {"include_intercept", s.include_intercept},
    };
}

FeatureSpec spec_from_json(const nlohmann::json& j) {
    FeatureSpec s;
    s.lag_target_hours = j.at("lag_target_hours").get<int>();
    s.use_demand_fc = j.at("use_demand_fc").get<bool>();
    s.use_wind_fc = j.at("use_wind_fc").get<bool>();
    s.use_solar_fc = j.at("use_solar_fc").get<bool>();
    s.use_ic_flow = j.at("use_ic_flow").get<bool>();
    std::string trend = j.at("time_trend").get<std::string>();
    s.time_trend = trend == "none"     ? TimeTrend::None
                   : trend == "linear" ? TimeTrend::Linear
                                       : TimeTrend::Quadratic;
    s.daytype_interaction = j.at("daytype_interaction").get<bool>();
    for (const auto& f : j.at("monthly_interaction_on"))
        s.monthly_interaction_on.insert(f.get<std::string>());
    s.hydro_lag = j.at("hydro_lag").get<bool>();
    s.include_intercept = j.at("include_intercept").get<bool>();
    return s;
}

} // namespace

std::string ExplanatoryModel::to_json() const {
    nlohmann::json j;
    j["spec"] = spec_to_json(spec_);
    j["column_names"] = solution_.column_names;
    std::vector<double> coeffs(solution_.coefficients.data(),
                               solution_.coefficients.data() + solution_.coefficients.size());
    j["coefficients"] = coeffs;
    j["rank"] = solution_.rank;
    j["sigma_hat"] = sigma_hat_;
    j["residual_sd"] = residual_sd_;
    j["train_mu"] = train_mu_;
    j["n_train"] = n_train_;
    j["t0_hours"] = trend_.t0.hours_since_epoch;
    j["t_scale_hours"] = trend_.t_scale;
    return j.dump(2);
}

ExplanatoryModel ExplanatoryModel::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExplanatoryModel m;
    m.spec_ = spec_from_json(j.at("spec"));
    m.solution_.column_names = j.at("column_names").get<std::vector<std::string>>();
    std::vector<double> coeffs = j.at("coefficients").get<std::vector<double>>();
    m.solution_.coefficients =
        Eigen::Map<Eigen::VectorXd>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
    m.solution_.rank = j.at("rank").get<Eigen::Index>();
    m.sigma_hat_ = j.at("sigma_hat").get<double>();
    m.residual_sd_ = j.at("residual_sd").get<double>();
    m.train_mu_ = j.at("train_mu").get<double>();
    m.n_train_ = j.at("n_train").get<std::size_t>();
    m.trend_.t0 = Timestamp{j.at("t0_hours").get<std::int64_t>()};
    m.trend_.t_scale = j.at("t_scale_hours").get<double>();
    return m;
}

RegionalModelSet RegionalModelSet::fit(const std::map<RegionId, InertiaDataset>& regions,
                                       const FeatureSpec& spec, TimeWindow train_window,
                                       SigmaSource sigma_source) {
    RegionalModelSet set;
    for (const auto& [region, ds] : regions) {
        try {
            set.per_region_.emplace(region,
                                    ExplanatoryModel::fit(ds, spec, train_window, sigma_source));
        } catch (const std::exception& e) {
            throw FitError("regional fit failed for " + region_code(region) + ": " + e.what());
        }
    }
    return set;
}

HourlySeries RegionalModelSet::predict_aggregate(const std::map<RegionId, InertiaDataset>& regions,
                                                 TimeWindow window) const {
    HourlySeries out = HourlySeries::empty_like("inertia_forecast_mvas", Unit::MvaSeconds, window);
    std::vector<HourlySeries> parts;
    for (const auto& [region, model] : per_region_) {
        auto it = regions.find(region);
        if (it == regions.end())
            throw MissingSeriesError("no dataset provided for region " + region_code(region));
        parts.push_back(model.predict(it->second, window));
    }
    for (Timestamp h = window.begin; h < window.end; h += 1) {
        double sum = 0.0;
        bool complete = !parts.empty();
        for (const auto& p : parts) {
            auto v = p.at(h);
            if (!v) {
                complete = false;
                break;
            }
            sum += *v;
        }
        if (complete)
            out.set(h, sum);
    }
    return out;
}

const ExplanatoryModel& RegionalModelSet::model(RegionId r) const {
    auto it = per_region_.find(r);
    if (it == per_region_.end())
        throw MissingSeriesError("no model for region " + region_code(r));
    return it->second;
}

} // namespace inertia
