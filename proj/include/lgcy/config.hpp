#pragma once

// Run configuration shared by the CLI and its tests.

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lgcy {

struct RunConfig {
    std::string command;
    unsigned tOrder = 60;
    unsigned qOrder = 12;
    double tolerance = 1e-10;
    std::string format = "pretty";  // json | csv | pretty
    std::string outputPath;         // empty: stdout
    std::string polynomial;
    unsigned hMax = 3;

    void validate() const {
        if (tOrder < 5) throw std::invalid_argument("order must be at least 5");
        if (qOrder < 5) throw std::invalid_argument("q-order must be at least 5");
        if (!(tolerance > 0.0) || tolerance > 1e-6)
            throw std::invalid_argument("tolerance must lie in (0, 1e-6]");
        if (format != "json" && format != "csv" && format != "pretty")
            throw std::invalid_argument("format must be json, csv or pretty");
    }
};

// LGCY_ORDER overrides the default t-order when set to a positive integer.
inline unsigned order_from_env(unsigned fallback) {
    const char* v = std::getenv("LGCY_ORDER");
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == nullptr || *end != '\0' || parsed <= 0) return fallback;
    return static_cast<unsigned>(parsed);
}

}  // namespace lgcy
