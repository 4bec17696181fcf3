#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cca::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Run the full verification suite: closed-form unitarity and symmetries,
/// spectral results against dense diagonalization, the transcendental roots
/// against plain bisection, wavepacket transport against the stationary
/// coefficients, and the hardware limit cases. Every tolerance is fixed here.
/// `progress`, when given, receives one pass/fail line per criterion.
std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

/// "PASS criterion-name (0.12 s): detail" formatting used by the CLI and the
/// acceptance test binary.
std::string format_line(const CriterionResult& r);

}  // namespace cca::verify
