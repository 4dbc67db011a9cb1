#pragma once

#include <stdexcept>
#include <string>

namespace serostack {

// Bad configuration or malformed input documents. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// CSV parse failures; message carries the 1-based row number.
class CsvError : public ConfigError {
public:
    CsvError(std::size_t row, const std::string& msg)
        : ConfigError("row " + std::to_string(row) + ": " + msg), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

// Filesystem failures. CLI exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures surfaced by training or evaluation. CLI exit code 4.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace serostack
