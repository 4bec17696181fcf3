#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cca/lattice.hpp"
#include "cca/spectral.hpp"

namespace cca::io {

inline constexpr int kSchemaVersion = 1;

/// 17-significant-digit decimal rendering; identical input bits give
/// identical text.
std::string format_double(double value);

/// RFC-style field quoting: fields containing comma, quote, or newline are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(std::string_view raw);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Writes "# schema_version=N", the header row, then the data rows.
void write_csv(std::ostream& os, const CsvTable& table);

/// Parse "pi", "2pi", "pi/8", "0.3pi", "2pi/5" or a plain decimal into
/// radians. Throws std::invalid_argument on malformed input.
double parse_angle(std::string_view text);

struct SweepSpec {
    double from = 0.0;
    double to = 0.0;
    int count = 0;
};

/// Parse "from:to:count"; from/to accept angle literals.
SweepSpec parse_sweep(std::string_view text);

/// Relative output paths are resolved against the CCA_OUTPUT_DIR environment
/// variable when it is set.
std::filesystem::path resolve_output(const std::filesystem::path& path);

/// One exported eigenstate: {schema_version, parity, energy, decay, x,
/// profile: [{j, re, im, prob}]} with stable key order.
nlohmann::ordered_json state_to_json(spectral::Parity parity, double energy, double decay,
                                     double x, const lattice::AmplitudeVector& profile);

struct ParsedState {
    spectral::Parity parity = spectral::Parity::even;
    double energy = 0.0;
    double decay = 0.0;
    double x = 0.0;
    lattice::AmplitudeVector profile;
};

/// Inverse of state_to_json; round-trips exactly.
ParsedState state_from_json(const nlohmann::json& j);

}  // namespace cca::io
