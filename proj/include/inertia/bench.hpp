#pragma once

#include "inertia/baseline.hpp"
#include "inertia/dataset.hpp"
#include "inertia/explanatory.hpp"
#include "inertia/metrics.hpp"
#include "inertia/synthetic.hpp"
#include "inertia/toml.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inertia {

enum class ModelKind { Explanatory, Baseline, Regional };

struct RegionalInput {
    std::string dataset_path;
    std::string holidays_path;
};

/// Everything needed to run one benchmark experiment. Either `dataset_path`
/// (plus `regions` for the regional model) or `synthetic` must be set.
struct ExperimentConfig {
    std::string id;
    ModelKind model = ModelKind::Explanatory;
    RegionId region = RegionId::NordicTotal;
    std::string dataset_path;
    std::string holidays_path;
    std::map<RegionId, RegionalInput> regions;
    FeatureSpec features;
    SplitSpec split;
    std::set<ForecastKind> substitutions;
    SigmaSource sigma_source = SigmaSource::TargetSd;
    BaselineConfig baseline;
    std::optional<SyntheticConfig> synthetic;
};

struct SuiteConfig {
    std::vector<ExperimentConfig> experiments;
    std::string base_case_id;   // empty: no MVA·s deltas
    std::uint64_t seed = 0;
};

struct ReportRow {
    std::string id;
    bool ok = false;
    std::string error;          // stage-prefixed message when !ok
    double train_mape = 0.0, test_mape = 0.0;
    double train_smape = 0.0, test_smape = 0.0;
    double train_mae = 0.0, test_mae = 0.0;
    std::size_t n_train = 0, n_test = 0;
    std::optional<double> delta_mae_mvas;   // test MAE minus the base case's
};

struct BenchmarkReport {
    std::vector<ReportRow> rows;

    bool all_ok() const;
};

/// Runs one experiment end to end (load, substitute, fit, predict, score).
/// Deterministic given config + data; errors are captured in the row, not
/// thrown.
ReportRow run_experiment(const ExperimentConfig& cfg);

/// Runs every experiment (optionally across `jobs` worker threads) and
/// assembles rows in config order. Throws ConfigError on duplicate ids.
BenchmarkReport run_suite(const SuiteConfig& suite, int jobs = 1);

enum class ReportFormat { Csv, Json };

/// CSV uses 3-decimal percentages (table precision); JSON keeps full
/// precision.
void emit_report(const BenchmarkReport& report, ReportFormat format, const std::string& path);
std::string format_report(const BenchmarkReport& report, ReportFormat format);

/// Parses the TOML experiment config (see README for the schema).
SuiteConfig load_suite_config(const std::string& path);
SuiteConfig parse_suite_config(const toml::Table& root, const std::string& base_dir);

/// Canned experiment suites reproducing the published benchmark tables from
/// a dataset directory laid out as nordic_total.csv, dk2.csv, fi.csv, no.csv,
/// se.csv plus holidays/<region>.txt.
SuiteConfig canned_table_suite(const std::string& dataset_dir);

} // namespace inertia
