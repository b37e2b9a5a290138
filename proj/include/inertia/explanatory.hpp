#pragma once

#include "inertia/dataset.hpp"
#include "inertia/features.hpp"
#include "inertia/ols.hpp"

#include <map>
#include <string>

namespace inertia {

enum class SigmaSource { TargetSd, ResidualSd };

/// Per-hour Gaussian forecast distribution with a constant standard deviation.
struct ProbabilisticForecast {
    HourlySeries mean;     // MVA·s; gaps where the point forecast has gaps
    double sigma = 0.0;    // MVA·s

    /// P(E <= level) at hour ts. Returns nullopt where the mean has a gap.
    std::optional<double> cdf(Timestamp ts, double level) const;

    /// Inverse cdf at probability p in (0, 1).
    std::optional<double> quantile(Timestamp ts, double p) const;
};

/// Standard normal cdf and its inverse (accurate to ~1e-15 after refinement).
double normal_cdf(double z);
double normal_quantile(double p);

/// Fitted day-ahead regression with day-type interaction; immutable after fit.
class ExplanatoryModel {
public:
    static ExplanatoryModel fit(const InertiaDataset& ds, const FeatureSpec& spec,
                                TimeWindow train_window,
                                SigmaSource sigma_source = SigmaSource::TargetSd);

    /// Point forecast over `window`; hours with missing inputs become gaps.
    HourlySeries predict(const InertiaDataset& ds, TimeWindow window) const;

    ProbabilisticForecast predict_distribution(const InertiaDataset& ds, TimeWindow window) const;

    const FeatureSpec& spec() const { return spec_; }
    const LsqSolution& solution() const { return solution_; }
    double sigma_hat() const { return sigma_hat_; }
    double train_mu() const { return train_mu_; }
    std::size_t train_size() const { return n_train_; }
    const TrendRef& trend() const { return trend_; }

    std::string to_json() const;
    static ExplanatoryModel from_json(const std::string& text);

private:
    ExplanatoryModel() = default;

    FeatureSpec spec_;
    LsqSolution solution_;
    double sigma_hat_ = 0.0;    // constant forecast SD, MVA·s
    double residual_sd_ = 0.0;  // alternative SD from training residuals
    double train_mu_ = 0.0;
    std::size_t n_train_ = 0;
    TrendRef trend_;
};

/// One model per Nordic region sharing a common FeatureSpec shape.
class RegionalModelSet {
public:
    static RegionalModelSet fit(const std::map<RegionId, InertiaDataset>& regions,
                                const FeatureSpec& spec, TimeWindow train_window,
                                SigmaSource sigma_source = SigmaSource::TargetSd);

    /// Sum of regional point forecasts; any regional gap invalidates the hour.
    HourlySeries predict_aggregate(const std::map<RegionId, InertiaDataset>& regions,
                                   TimeWindow window) const;

    const ExplanatoryModel& model(RegionId r) const;
    const std::map<RegionId, ExplanatoryModel>& models() const { return per_region_; }

private:
    std::map<RegionId, ExplanatoryModel> per_region_;
};

} // namespace inertia
