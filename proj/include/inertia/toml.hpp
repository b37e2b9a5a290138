#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace inertia::toml {

/// Minimal TOML reader covering the subset the experiment config uses:
/// [tables], [[arrays of tables]], dotted table headers, basic strings,
/// integers, floats, booleans, and homogeneous arrays. Values are looked up
/// by dotted path.
struct Value;
using Array = std::vector<Value>;

struct Value {
    std::variant<std::string, std::int64_t, double, bool, Array> data;

    bool is_string() const { return std::holds_alternative<std::string>(data); }
    const std::string& as_string() const { return std::get<std::string>(data); }
    std::int64_t as_int() const { return std::get<std::int64_t>(data); }
    double as_double() const {
        if (auto* i = std::get_if<std::int64_t>(&data))
            return static_cast<double>(*i);
        return std::get<double>(data);
    }
    bool as_bool() const { return std::get<bool>(data); }
    const Array& as_array() const { return std::get<Array>(data); }
};

/// One table: dotted key -> value. Keys inside [section] headers are stored
/// as "section.key".
class Table {
public:
    std::map<std::string, Value> entries;
    // array-of-tables groups, in file order, keyed by header name
    std::map<std::string, std::vector<Table>> table_arrays;

    bool has(const std::string& key) const { return entries.count(key) > 0; }
    const Value& at(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback = "") const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback = 0) const;
    double get_double(const std::string& key, double fallback = 0.0) const;
    bool get_bool(const std::string& key, bool fallback = false) const;
    std::vector<std::string> get_string_array(const std::string& key) const;
};

/// Throws ConfigError on malformed input or unsupported syntax.
Table parse(const std::string& text);
Table parse_file(const std::string& path);

} // namespace inertia::toml
