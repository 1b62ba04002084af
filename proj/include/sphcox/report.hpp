// Deterministic text / JSON reports for each CLI command, decoupled from the
// executable so tests can exercise them in-process.
#ifndef SPHCOX_REPORT_HPP
#define SPHCOX_REPORT_HPP

#include <string>

#include <json.hpp>

#include "sphcox/input.hpp"

namespace sphcox {

struct Report {
    std::string text;
    nlohmann::json data;
    int exit_code = 0;  // 3 for soft failures (fan-check FAIL, brion DISAGREE)
};

struct ReportOptions {
    bool allow_outside_valuation_cone = false;
    bool parallel = true;
};

// command in {cox, valcone, roots, fan-check, clgroup, lift, brion-compare};
// throws InputError / MathError / UnsupportedError.
Report run_command(const std::string& command, const Problem& p,
                   const ReportOptions& opts = {});

// "a + 2*b - c" over the labels; "0" when all coefficients vanish.
std::string linear_combo(const Vec& coeffs, const std::vector<std::string>& labels);

// Half-space of an outward normal: "combo <= 0", flipped to ">= 0" when the
// leading coefficient is negative.
std::string halfspace_line(const Vec& outward, const std::vector<std::string>& labels);

} // namespace sphcox

#endif
