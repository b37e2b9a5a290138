#include "inertia/toml.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace inertia::toml {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Strips a trailing comment that is not inside a string literal.
std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '"' && (i == 0 || line[i - 1] != '\\'))
            in_str = !in_str;
        else if (c == '#' && !in_str)
            return line.substr(0, i);
    }
    return line;
}

Value parse_scalar(const std::string& raw, int lineno) {
    std::string s = trim(raw);
    if (s.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": empty value");
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"')
            throw ConfigError("line " + std::to_string(lineno) + ": unterminated string");
        std::string out;
        for (std::size_t i = 1; i + 1 < s.size(); ++i) {
            if (s[i] == '\\' && i + 2 < s.size()) {
                ++i;
                switch (s[i]) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                default: out += s[i];
                }
            } else {
                out += s[i];
            }
        }
        return {out};
    }
    if (s == "true")
        return {true};
    if (s == "false")
        return {false};
    // integer or float
    bool is_float = s.find_first_of(".eE") != std::string::npos &&
                    s.find_first_not_of("+-0123456789.eE_") == std::string::npos;
    std::string digits = s;
    digits.erase(std::remove(digits.begin(), digits.end(), '_'), digits.end());
    char* endp = nullptr;
    if (!is_float) {
        long long v = std::strtoll(digits.c_str(), &endp, 10);
        if (endp && *endp == '\0')
            return {static_cast<std::int64_t>(v)};
    }
    double d = std::strtod(digits.c_str(), &endp);
    if (endp && *endp == '\0')
        return {d};
    // bare dates/times pass through as strings
    if (s.find_first_not_of("0123456789-:TZ.") == std::string::npos)
        return {s};
    throw ConfigError("line " + std::to_string(lineno) + ": cannot parse value '" + s + "'");
}

Value parse_value(const std::string& raw, int lineno) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw ConfigError("line " + std::to_string(lineno) +
                              ": arrays must close on the same line");
        Array arr;
        std::string inner = s.substr(1, s.size() - 2);
        std::string item;
        bool in_str = false;
        int depth = 0;
        for (char c : inner) {
            if (c == '"')
                in_str = !in_str;
            if (!in_str) {
                if (c == '[')
                    ++depth;
                if (c == ']')
                    --depth;
                if (c == ',' && depth == 0) {
                    if (!trim(item).empty())
                        arr.push_back(parse_value(item, lineno));
                    item.clear();
                    continue;
                }
            }
            item += c;
        }
        if (!trim(item).empty())
            arr.push_back(parse_value(item, lineno));
        return {arr};
    }
    return parse_scalar(s, lineno);
}

} // namespace

const Value& Table::at(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end())
        throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

std::string Table::get_string(const std::string& key, const std::string& fallback) const {
    auto it = entries.find(key);
    return it == entries.end() ? fallback : it->second.as_string();
}

std::int64_t Table::get_int(const std::string& key, std::int64_t fallback) const {
    auto it = entries.find(key);
    return it == entries.end() ? fallback : it->second.as_int();
}

double Table::get_double(const std::string& key, double fallback) const {
    auto it = entries.find(key);
    return it == entries.end() ? fallback : it->second.as_double();
}

bool Table::get_bool(const std::string& key, bool fallback) const {
    auto it = entries.find(key);
    return it == entries.end() ? fallback : it->second.as_bool();
}

std::vector<std::string> Table::get_string_array(const std::string& key) const {
    std::vector<std::string> out;
    auto it = entries.find(key);
    if (it == entries.end())
        return out;
    for (const auto& v : it->second.as_array())
        out.push_back(v.as_string());
    return out;
}

Table parse(const std::string& text) {
    Table root;
    Table* current = &root;
    std::string prefix;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(strip_comment(line));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            bool is_array = line.size() > 1 && line[1] == '[';
            std::string name = trim(line.substr(is_array ? 2 : 1,
                                                line.size() - (is_array ? 4 : 2)));
            if (name.empty())
                throw ConfigError("line " + std::to_string(lineno) + ": empty table header");
            if (is_array) {
                // array-of-tables entries always attach to the root
                root.table_arrays[name].emplace_back();
                current = &root.table_arrays[name].back();
                prefix.clear();
            } else if (auto dot = name.find('.');
                       dot != std::string::npos &&
                       root.table_arrays.count(name.substr(0, dot)) &&
                       !root.table_arrays[name.substr(0, dot)].empty()) {
                // sub-table of the most recent array element, e.g.
                // [experiment.features] after [[experiment]]
                current = &root.table_arrays[name.substr(0, dot)].back();
                prefix = name.substr(dot + 1) + ".";
            } else {
                current = &root;
                prefix = name + ".";
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (key.front() == '"' && key.back() == '"')
            key = key.substr(1, key.size() - 2);
        current->entries[prefix + key] = parse_value(line.substr(eq + 1), lineno);
    }
    return root;
}

Table parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace inertia::toml
