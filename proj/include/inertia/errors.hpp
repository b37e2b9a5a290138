#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SplitError : std::runtime_error {
    explicit SplitError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResampleError : std::runtime_error {
    explicit ResampleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyDesignError : std::runtime_error {
    explicit EmptyDesignError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingSeriesError : std::runtime_error {
    explicit MissingSeriesError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MetricError : std::runtime_error {
    explicit MetricError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FitError : std::runtime_error {
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace inertia
