#include "inertia/bench.hpp"

#include "inertia/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

namespace inertia {

bool BenchmarkReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.ok; });
}

namespace {

struct StageGuard {
    const char* stage;
};

HolidayCalendar load_calendar_or_empty(RegionId region, const std::string& path) {
    if (path.empty())
        return HolidayCalendar(region, {});
    return HolidayCalendar::load(region, path);
}

InertiaDataset load_input(const ExperimentConfig& cfg) {
    if (cfg.synthetic)
        return generate_synthetic(*cfg.synthetic);
    return load_csv(cfg.dataset_path, cfg.region,
                    load_calendar_or_empty(cfg.region, cfg.holidays_path));
}

void score(ReportRow& row, const HourlySeries& target, const HourlySeries& train_fc,
           const HourlySeries& test_fc) {
    MetricResult train = evaluate(target, train_fc);
    MetricResult test = evaluate(target, test_fc);
    row.train_mape = train.mape;
    row.train_smape = train.smape;
    row.train_mae = train.mae;
    row.n_train = train.n_points;
    row.test_mape = test.mape;
    row.test_smape = test.smape;
    row.test_mae = test.mae;
    row.n_test = test.n_points;
}

} // namespace

ReportRow run_experiment(const ExperimentConfig& cfg) {
    ReportRow row;
    row.id = cfg.id;
    const char* stage = "config";
    try {
        cfg.features.validate();
        TimeWindow train_w{cfg.split.train_start, cfg.split.train_end};
        TimeWindow test_w{cfg.split.test_start, cfg.split.test_end};

        if (cfg.model == ModelKind::Regional) {
            stage = "load";
            std::map<RegionId, InertiaDataset> regions;
            InertiaDataset total = load_input(cfg);   // actuals/aggregation target
            if (cfg.synthetic) {
                throw ConfigError("regional experiments need per-region dataset files");
            }
            for (const auto& [region, input] : cfg.regions) {
                InertiaDataset ds = load_csv(input.dataset_path, region,
                                             load_calendar_or_empty(region,
                                                                    input.holidays_path));
                stage = "substitute";
                regions.emplace(region, substitute_actuals(ds, cfg.substitutions));
                stage = "load";
            }
            stage = "split";
            cfg.split.validate(total.range());
            stage = "fit";
            RegionalModelSet set =
                RegionalModelSet::fit(regions, cfg.features, train_w, cfg.sigma_source);
            stage = "predict";
            HourlySeries train_fc = set.predict_aggregate(regions, train_w);
            HourlySeries test_fc = set.predict_aggregate(regions, test_w);
            stage = "score";
            score(row, total.target, train_fc, test_fc);
        } else {
            stage = "load";
            InertiaDataset ds = load_input(cfg);
            stage = "substitute";
            ds = substitute_actuals(ds, cfg.substitutions);
            stage = "split";
            cfg.split.validate(ds.range());
            if (cfg.model == ModelKind::Explanatory) {
                stage = "fit";
                ExplanatoryModel model =
                    ExplanatoryModel::fit(ds, cfg.features, train_w, cfg.sigma_source);
                stage = "predict";
                HourlySeries train_fc = model.predict(ds, train_w);
                HourlySeries test_fc = model.predict(ds, test_w);
                stage = "score";
                score(row, ds.target, train_fc, test_fc);
            } else {
                stage = "fit";
                HourlySeries train_series = ds.target.slice(train_w);
                TsBaselineModel model =
                    TsBaselineModel::fit(train_series, ds.calendar, cfg.baseline);
                stage = "predict";
                HourlySeries train_fc = model.predict(train_w, ds.calendar);
                HourlySeries test_fc = model.predict(test_w, ds.calendar);
                stage = "score";
                score(row, ds.target, train_fc, test_fc);
            }
        }
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = std::string(stage) + ": " + e.what();
    }
    return row;
}

BenchmarkReport run_suite(const SuiteConfig& suite, int jobs) {
    std::set<std::string> ids;
    for (const auto& cfg : suite.experiments)
        if (!ids.insert(cfg.id).second)
            throw ConfigError("duplicate experiment id '" + cfg.id + "'");

    BenchmarkReport report;
    report.rows.resize(suite.experiments.size());

    if (jobs <= 1 || suite.experiments.size() <= 1) {
        for (std::size_t i = 0; i < suite.experiments.size(); ++i)
            report.rows[i] = run_experiment(suite.experiments[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= suite.experiments.size())
                    return;
                report.rows[i] = run_experiment(suite.experiments[i]);
            }
        };
        std::vector<std::future<void>> pool;
        int n = std::min<int>(jobs, static_cast<int>(suite.experiments.size()));
        for (int i = 0; i < n; ++i)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool)
            f.get();
    }

    if (!suite.base_case_id.empty()) {
        const ReportRow* base = nullptr;
        for (const auto& r : report.rows)
            if (r.id == suite.base_case_id && r.ok)
                base = &r;
        if (base)
            for (auto& r : report.rows)
                if (r.ok)
                    r.delta_mae_mvas = r.test_mae - base->test_mae;
    }
    return report;
}

std::string format_report(const BenchmarkReport& report, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "id,status,train_mape_pct,test_mape_pct,train_smape_pct,test_smape_pct,"
               "train_mae_mvas,test_mae_mvas,delta_mae_mvas,n_train,n_test,error\n";
        char buf[64];
        auto pct = [&](double v) {
            std::snprintf(buf, sizeof(buf), "%.3f", v);
            return std::string(buf);
        };
        for (const auto& r : report.rows) {
            out << r.id << ',' << (r.ok ? "ok" : "error") << ',';
            if (r.ok) {
                out << pct(r.train_mape) << ',' << pct(r.test_mape) << ',' << pct(r.train_smape)
                    << ',' << pct(r.test_smape) << ',' << pct(r.train_mae) << ','
                    << pct(r.test_mae) << ',';
                if (r.delta_mae_mvas)
                    out << pct(*r.delta_mae_mvas);
                out << ',' << r.n_train << ',' << r.n_test << ',';
            } else {
                out << ",,,,,,,,," << '"' << r.error << '"';
            }
            out << '\n';
        }
        return out.str();
    }

    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row{{"id", r.id}, {"status", r.ok ? "ok" : "error"}};
        if (r.ok) {
            row["train_mape_pct"] = r.train_mape;
            row["test_mape_pct"] = r.test_mape;
            row["train_smape_pct"] = r.train_smape;
            row["test_smape_pct"] = r.test_smape;
            row["train_mae_mvas"] = r.train_mae;
            row["test_mae_mvas"] = r.test_mae;
            row["n_train"] = r.n_train;
            row["n_test"] = r.n_test;
            if (r.delta_mae_mvas)
                row["delta_mae_mvas"] = *r.delta_mae_mvas;
        } else {
            row["error"] = r.error;
        }
        j.push_back(row);
    }
    return j.dump(2) + "\n";
}

void emit_report(const BenchmarkReport& report, ReportFormat format, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write report to " + path);
    out << format_report(report, format);
}

namespace {

std::string join_path(const std::string& base, const std::string& rel) {
    if (rel.empty() || rel.front() == '/' || base.empty())
        return rel;
    return base + "/" + rel;
}

FeatureSpec parse_features(const toml::Table& t, const std::string& prefix) {
    FeatureSpec s;
    s.lag_target_hours = static_cast<int>(t.get_int(prefix + "lag_target_hours", 24));
    s.use_demand_fc = t.get_bool(prefix + "use_demand_fc", true);
    s.use_wind_fc = t.get_bool(prefix + "use_wind_fc", true);
    s.use_solar_fc = t.get_bool(prefix + "use_solar_fc", true);
    s.use_ic_flow = t.get_bool(prefix + "use_ic_flow", true);
    std::string trend = t.get_string(prefix + "time_trend", "quadratic");
    if (trend == "none")
        s.time_trend = TimeTrend::None;
    else if (trend == "linear")
        s.time_trend = TimeTrend::Linear;
    else if (trend == "quadratic")
        s.time_trend = TimeTrend::Quadratic;
    else
        throw ConfigError("unknown time_trend '" + trend + "'");
    s.daytype_interaction = t.get_bool(prefix + "daytype_interaction", true);
    for (const auto& f : t.get_string_array(prefix + "monthly_interaction_on"))
        s.monthly_interaction_on.insert(f);
    s.hydro_lag = t.get_bool(prefix + "hydro_lag", false);
    s.include_intercept = t.get_bool(prefix + "include_intercept", false);
    return s;
}

BaselineConfig parse_baseline(const toml::Table& t, const std::string& prefix) {
    BaselineConfig b;
    if (t.has(prefix + "periods")) {
        const auto& periods = t.at(prefix + "periods").as_array();
        const auto& orders = t.at(prefix + "orders").as_array();
        if (periods.size() != orders.size())
            throw ConfigError("baseline periods and orders must have equal length");
        b.seasonalities.clear();
        for (std::size_t i = 0; i < periods.size(); ++i)
            b.seasonalities.push_back(
                {periods[i].as_double(), static_cast<int>(orders[i].as_int())});
    }
    b.auto_disable_yearly = t.get_bool(prefix + "auto_disable_yearly", true);
    b.capacity_factor = t.get_double(prefix + "capacity_factor", 1.05);
    b.rate_bound = t.get_double(prefix + "rate_bound", 1e-2);
    b.grid_points = static_cast<int>(t.get_int(prefix + "grid_points", 41));
    b.descent_rounds = static_cast<int>(t.get_int(prefix + "descent_rounds", 200));
    return b;
}

ForecastKind forecast_kind(const std::string& s) {
    if (s == "demand")
        return ForecastKind::Demand;
    if (s == "wind")
        return ForecastKind::Wind;
    if (s == "solar")
        return ForecastKind::Solar;
    throw ConfigError("unknown substitution '" + s + "' (expected demand|wind|solar)");
}

} // namespace

SuiteConfig parse_suite_config(const toml::Table& root, const std::string& base_dir) {
    SuiteConfig suite;
    suite.base_case_id = root.get_string("suite.base_case");
    suite.seed = static_cast<std::uint64_t>(root.get_int("suite.seed", 0));

    auto it = root.table_arrays.find("experiment");
    if (it == root.table_arrays.end())
        return suite;
    for (const auto& t : it->second) {
        ExperimentConfig cfg;
        cfg.id = t.get_string("id");
        if (cfg.id.empty())
            throw ConfigError("experiment without an id");
        std::string model = t.get_string("model", "explanatory");
        if (model == "explanatory")
            cfg.model = ModelKind::Explanatory;
        else if (model == "baseline")
            cfg.model = ModelKind::Baseline;
        else if (model == "regional")
            cfg.model = ModelKind::Regional;
        else
            throw ConfigError(cfg.id + ": unknown model '" + model + "'");
        cfg.region = region_from_code(t.get_string("region", "NORDIC_TOTAL"));
        cfg.dataset_path = join_path(base_dir, t.get_string("dataset"));
        cfg.holidays_path = join_path(base_dir, t.get_string("holidays"));
        for (RegionId r : {RegionId::DK2, RegionId::FI, RegionId::NO, RegionId::SE}) {
            std::string key = "regions." + region_code(r);
            std::transform(key.begin(), key.end(), key.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            if (t.has(key + ".dataset"))
                cfg.regions[r] = {join_path(base_dir, t.get_string(key + ".dataset")),
                                  join_path(base_dir, t.get_string(key + ".holidays"))};
        }
        cfg.split.train_start = Timestamp::parse(t.at("train_start").as_string());
        cfg.split.train_end = Timestamp::parse(t.at("train_end").as_string());
        cfg.split.test_start = Timestamp::parse(t.at("test_start").as_string());
        cfg.split.test_end = Timestamp::parse(t.at("test_end").as_string());
        for (const auto& s : t.get_string_array("substitutions"))
            cfg.substitutions.insert(forecast_kind(s));
        std::string sigma = t.get_string("sigma", "target");
        cfg.sigma_source = sigma == "residual" ? SigmaSource::ResidualSd : SigmaSource::TargetSd;
        cfg.features = parse_features(t, "features.");
        cfg.baseline = parse_baseline(t, "baseline.");

        if (t.has("synthetic.noise_sd") || t.has("synthetic.span_start")) {
            SyntheticConfig syn;
            syn.spec = cfg.features;
            std::vector<double> coeffs;
            for (const auto& v : t.at("synthetic.true_coeffs").as_array())
                coeffs.push_back(v.as_double());
            syn.true_coeffs = Eigen::Map<Eigen::VectorXd>(
                coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
            syn.noise_sd = t.get_double("synthetic.noise_sd", 0.0);
            syn.forecast_error_sd = t.get_double("synthetic.forecast_error_sd", 0.0);
            syn.span = {Timestamp::parse(t.at("synthetic.span_start").as_string()),
                        Timestamp::parse(t.at("synthetic.span_end").as_string())};
            syn.seed = suite.seed;
            cfg.synthetic = std::move(syn);
        } else if (cfg.dataset_path.empty() && cfg.model != ModelKind::Regional) {
            throw ConfigError(cfg.id + ": needs either a dataset path or a synthetic block");
        }
        suite.experiments.push_back(std::move(cfg));
    }
    return suite;
}

SuiteConfig load_suite_config(const std::string& path) {
    std::string dir;
    auto slash = path.find_last_of('/');
    if (slash != std::string::npos)
        dir = path.substr(0, slash);
    return parse_suite_config(toml::parse_file(path), dir);
}

SuiteConfig canned_table_suite(const std::string& dataset_dir) {
    SuiteConfig suite;
    suite.base_case_id = "table3_1yr";

    auto make = [&](const std::string& id, int train_years) {
        ExperimentConfig cfg;
        cfg.id = id;
        cfg.model = ModelKind::Explanatory;
        cfg.dataset_path = dataset_dir + "/nordic_total.csv";
        cfg.holidays_path = dataset_dir + "/holidays/nordic_total.txt";
        cfg.split = {Timestamp::from_ymdh(2020 - train_years, 1, 1, 0),
                     Timestamp::from_ymdh(2020, 1, 1, 0), Timestamp::from_ymdh(2020, 1, 1, 0),
                     Timestamp::from_ymdh(2020, 9, 1, 0)};
        return cfg;
    };

    // Table I: direct comparison on 31 Jan 2018 (one-year training window).
    {
        ExperimentConfig cfg = make("table1_explanatory", 1);
        cfg.split = {Timestamp::from_ymdh(2017, 1, 31, 0), Timestamp::from_ymdh(2018, 1, 31, 0),
                     Timestamp::from_ymdh(2018, 1, 31, 0), Timestamp::from_ymdh(2018, 2, 1, 0)};
        suite.experiments.push_back(cfg);
        cfg.id = "table1_baseline";
        cfg.model = ModelKind::Baseline;
        suite.experiments.push_back(cfg);
    }

    // Table III: training-duration sweep.
    for (int years = 1; years <= 4; ++years)
        suite.experiments.push_back(make("table3_" + std::to_string(years) + "yr", years));

    // Table IV: monthly interaction on the demand forecast.
    for (int years = 1; years <= 4; ++years) {
        ExperimentConfig cfg = make("table4_" + std::to_string(years) + "yr", years);
        cfg.features.monthly_interaction_on = {"demand_fc"};
        suite.experiments.push_back(cfg);
    }

    // Spatial granularity: per-region fits aggregated to the Nordic total.
    {
        ExperimentConfig cfg = make("spatial_regional", 1);
        cfg.model = ModelKind::Regional;
        for (RegionId r : {RegionId::DK2, RegionId::FI, RegionId::NO, RegionId::SE}) {
            std::string code = region_code(r);
            std::transform(code.begin(), code.end(), code.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            cfg.regions[r] = {dataset_dir + "/" + code + ".csv",
                              dataset_dir + "/holidays/" + code + ".txt"};
        }
        suite.experiments.push_back(cfg);
    }

    // Perfect-forecast substitutions.
    for (const auto& [suffix, subs] :
         std::vector<std::pair<std::string, std::set<ForecastKind>>>{
             {"demand", {ForecastKind::Demand}},
             {"wind", {ForecastKind::Wind}},
             {"solar", {ForecastKind::Solar}},
             {"all", {ForecastKind::Demand, ForecastKind::Wind, ForecastKind::Solar}}}) {
        ExperimentConfig cfg = make("perfect_" + suffix, 1);
        cfg.substitutions = subs;
        suite.experiments.push_back(cfg);
    }

    // Hydropower-lag feature.
    {
        ExperimentConfig cfg = make("hydro_lag", 1);
        cfg.features.hydro_lag = true;
        suite.experiments.push_back(cfg);
    }
    return suite;
}

} // namespace inertia
