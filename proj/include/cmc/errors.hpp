#pragma once

#include <stdexcept>
#include <string>

namespace cmc {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed input: bad file, bad config, inconsistent flags.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// No rotational graph exists for the requested boundary height.
// Carries the attainable height interval so callers can report it.
struct NoRadialGraph : std::runtime_error {
    double h_lo, h_hi;
    NoRadialGraph(const std::string& what, double lo, double hi)
        : std::runtime_error(what), h_lo(lo), h_hi(hi) {}
};

// Iteration failed to converge (Newton stagnation, root not bracketed, ...).
struct ConvergenceError : std::runtime_error {
    double last_residual;
    int iterations;
    ConvergenceError(const std::string& what, double res = 0.0, int it = 0)
        : std::runtime_error(what), last_residual(res), iterations(it) {}
};

}  // namespace cmc
