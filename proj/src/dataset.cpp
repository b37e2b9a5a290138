#include "inertia/dataset.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace inertia {

InertiaDataset InertiaDataset::restricted_to(TimeWindow window) const {
    InertiaDataset out = *this;
    out.target = target.slice(window);
    out.demand_fc = demand_fc.slice(window);
    out.wind_fc = wind_fc.slice(window);
    out.solar_fc = solar_fc.slice(window);
    out.ic_flow = ic_flow.slice(window);
    if (hydro_inertia)
        out.hydro_inertia = hydro_inertia->slice(window);
    if (demand_actual)
        out.demand_actual = demand_actual->slice(window);
    if (wind_actual)
        out.wind_actual = wind_actual->slice(window);
    if (solar_actual)
        out.solar_actual = solar_actual->slice(window);
    return out;
}

void SplitSpec::validate(TimeWindow dataset_range) const {
    if (train_end <= train_start)
        throw SplitError("empty training interval");
    if (test_end <= test_start)
        throw SplitError("empty test interval");
    if (test_start < train_end)
        throw SplitError("test interval starts before training interval ends (leakage)");
    if (train_start < dataset_range.begin || test_end > dataset_range.end)
        throw SplitError("split intervals fall outside the dataset range");
}

std::pair<InertiaDataset, InertiaDataset> split(const InertiaDataset& ds, const SplitSpec& spec) {
    spec.validate(ds.range());
    return {ds.restricted_to(spec.train()), ds.restricted_to(spec.test())};
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream iss(line);
    while (std::getline(iss, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct SeriesCol {
    std::string canonical;
    Unit unit;
    bool mandatory;
};

const std::vector<SeriesCol> kSeriesCols = {
    {"inertia_mvas", Unit::MvaSeconds, true},
    {"hydro_inertia_mvas", Unit::MvaSeconds, false},
    {"demand_fc_mw", Unit::Megawatts, true},
    {"wind_fc_mw", Unit::Megawatts, true},
    {"solar_fc_mw", Unit::Megawatts, true},
    {"ic_flow_mw", Unit::Megawatts, true},
    {"demand_mw", Unit::Megawatts, false},
    {"wind_mw", Unit::Megawatts, false},
    {"solar_mw", Unit::Megawatts, false},
};

} // namespace

InertiaDataset load_csv(const std::string& path, RegionId region, const HolidayCalendar& cal,
                        const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open CSV file: " + path);

    std::string header_line;
    if (!std::getline(in, header_line))
        throw SchemaError(path + ": empty file");
    std::vector<std::string> header = split_line(header_line);
    for (auto& h : header)
        h = trim(h);

    auto column_index = [&](const std::string& canonical) -> int {
        auto it = schema.columns.find(canonical);
        std::string wanted = it != schema.columns.end() ? it->second : canonical;
        auto pos = std::find(header.begin(), header.end(), wanted);
        if (pos == header.end())
            return -1;
        return static_cast<int>(pos - header.begin());
    };

    int ts_idx = column_index("timestamp");
    if (ts_idx < 0)
        throw SchemaError(path + ": missing mandatory column 'timestamp'");
    std::map<std::string, int> col_idx;
    for (const auto& col : kSeriesCols) {
        int idx = column_index(col.canonical);
        if (idx < 0 && col.mandatory)
            throw SchemaError(path + ": missing mandatory column '" + col.canonical + "'");
        col_idx[col.canonical] = idx;
    }

    // canonical name -> (timestamp -> value); duplicates with conflicting
    // values are an integrity error
    std::map<std::string, std::map<Timestamp, double>> cells;
    Timestamp lo{0}, hi{0};
    bool any = false;
    std::string line;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty())
            continue;
        std::vector<std::string> fields = split_line(line);
        if (static_cast<int>(fields.size()) <= ts_idx)
            throw ParseError(path + ": row " + std::to_string(row) + ": too few fields");
        Timestamp ts;
        try {
            ts = Timestamp::parse(trim(fields[static_cast<std::size_t>(ts_idx)]));
        } catch (const ParseError& e) {
            throw ParseError(path + ": row " + std::to_string(row) + ": " + e.what());
        }
        if (!any || ts < lo)
            lo = ts;
        if (!any || ts > hi)
            hi = ts;
        any = true;
        for (const auto& col : kSeriesCols) {
            int idx = col_idx[col.canonical];
            if (idx < 0 || idx >= static_cast<int>(fields.size()))
                continue;
            std::string cell = trim(fields[static_cast<std::size_t>(idx)]);
            if (cell.empty())
                continue;
            char* endp = nullptr;
            double v = std::strtod(cell.c_str(), &endp);
            if (endp == cell.c_str() || *endp != '\0' || !std::isfinite(v))
                throw ParseError(path + ": row " + std::to_string(row) + ": bad numeric value '" +
                                 cell + "' in column " + col.canonical);
            auto [it, inserted] = cells[col.canonical].emplace(ts, v);
            if (!inserted && it->second != v)
                throw IntegrityError(path + ": row " + std::to_string(row) +
                                     ": duplicate timestamp " + ts.to_iso() +
                                     " with conflicting values in column " + col.canonical);
        }
    }
    if (!any)
        throw SchemaError(path + ": no data rows");

    TimeWindow range{lo, hi + 1};
    auto make_series = [&](const std::string& canonical, Unit unit) {
        HourlySeries s = HourlySeries::empty_like(canonical, unit, range);
        auto it = cells.find(canonical);
        if (it != cells.end())
            for (const auto& [ts, v] : it->second)
                s.set(ts, v);
        return s;
    };

    InertiaDataset ds;
    ds.region = region;
    ds.calendar = cal;
    ds.target = make_series("inertia_mvas", Unit::MvaSeconds);
    ds.demand_fc = make_series("demand_fc_mw", Unit::Megawatts);
    ds.wind_fc = make_series("wind_fc_mw", Unit::Megawatts);
    ds.solar_fc = make_series("solar_fc_mw", Unit::Megawatts);
    ds.ic_flow = make_series("ic_flow_mw", Unit::Megawatts);
    auto optional_series = [&](const std::string& canonical, Unit unit)
        -> std::optional<HourlySeries> {
        if (col_idx[canonical] < 0)
            return std::nullopt;
        return make_series(canonical, unit);
    };
    ds.hydro_inertia = optional_series("hydro_inertia_mvas", Unit::MvaSeconds);
    ds.demand_actual = optional_series("demand_mw", Unit::Megawatts);
    ds.wind_actual = optional_series("wind_mw", Unit::Megawatts);
    ds.solar_actual = optional_series("solar_mw", Unit::Megawatts);
    return ds;
}

void write_csv(const InertiaDataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open for writing: " + path);

    std::vector<std::pair<std::string, const HourlySeries*>> cols;
    cols.emplace_back("inertia_mvas", &ds.target);
    if (ds.hydro_inertia)
        cols.emplace_back("hydro_inertia_mvas", &*ds.hydro_inertia);
    cols.emplace_back("demand_fc_mw", &ds.demand_fc);
    cols.emplace_back("wind_fc_mw", &ds.wind_fc);
    cols.emplace_back("solar_fc_mw", &ds.solar_fc);
    cols.emplace_back("ic_flow_mw", &ds.ic_flow);
    if (ds.demand_actual)
        cols.emplace_back("demand_mw", &*ds.demand_actual);
    if (ds.wind_actual)
        cols.emplace_back("wind_mw", &*ds.wind_actual);
    if (ds.solar_actual)
        cols.emplace_back("solar_mw", &*ds.solar_actual);

    out << "timestamp";
    for (const auto& [name, _] : cols)
        out << ',' << name;
    out << '\n';

    TimeWindow range = ds.range();
    char buf[32];
    for (Timestamp ts = range.begin; ts < range.end; ts += 1) {
        out << ts.to_iso();
        for (const auto& [name, series] : cols) {
            out << ',';
            if (auto v = series->at(ts)) {
                std::snprintf(buf, sizeof(buf), "%.17g", *v);
                out << buf;
            }
        }
        out << '\n';
    }
}

} // namespace inertia
