// Error taxonomy shared by the library and the command-line front end.
#ifndef SPHCOX_ERRORS_HPP
#define SPHCOX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphcox {

// Malformed or self-inconsistent user input (bad file, bad polynomial text,
// dimension mismatches in the data as given).  CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Input that parses fine but is mathematically inconsistent with the theory
// (ray outside the valuation cone, inhomogeneous relation, dependent roots...).
// CLI exit code 3.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Valid input outside the supported fragment of the theory.  CLI exit code 4.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sphcox

#endif
