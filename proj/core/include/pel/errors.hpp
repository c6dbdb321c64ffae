#pragma once

#include <stdexcept>
#include <string>

namespace pel {

// Thrown for mathematical domain violations: p = 2, division by zero,
// characters that cannot be embedded into Z_p, arguments outside Z_p, ...
// The CLI maps this to exit code 3.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a result cannot be certified to the requested number of
// digits; callers should retry with more guard digits.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a limit of partial sums fails to stabilize within the cap,
// which signals a violated continuity contract. CLI exit code 4.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pel
