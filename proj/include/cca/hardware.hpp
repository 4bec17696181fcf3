#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace cca::hardware {

/// Magnetic flux quantum h / (2e) in Wb (CODATA).
inline constexpr double kFluxQuantum = 2.067833848e-15;

/// Exact rational arithmetic for frequency ratios; detuning ranges computed
/// this way avoid the rounding of a double-precision omega / omega_ref - 1.
using Rational = boost::rational<std::int64_t>;

/// Parse a plain decimal literal ("4", "-0.125", "4.8e9") into an exact
/// rational. Throws std::invalid_argument on malformed input or overflow.
Rational parse_decimal(std::string_view text);

/// Circuit parameters of a SQUID-terminated transmission-line resonator and
/// of the current-biased SQUID inductance model.
struct HardwareParams {
    // resonator + boundary SQUID
    double josephson_energy = 0.0;  // E_J of one junction
    double reduced_flux = 0.0;      // f = 2 pi Phi_x / Phi_0
    double junction_capacitance = 0.0;  // C_s
    double length = 0.0;                // l_0
    double capacitance_per_length = 0.0;  // C_0
    double inductance_per_length = 0.0;   // L_0
    // current-biased SQUID
    double critical_current = 0.0;  // I_c of one junction
    double squid_reduced_flux = 0.0;  // phi_x
    double bias_current = 0.0;        // I
    double flux_quantum = kFluxQuantum;

    double c_cav() const { return capacitance_per_length * length; }
    double l_cav() const { return inductance_per_length * length; }

    /// Positivity checks for every length/capacitance/inductance/energy used.
    void validate_resonator() const;
};

struct JosephsonEnergy {
    double value = 0.0;
    bool harmonic_regime = true;  // false when 2 E_J cos(f/2) < 0
};

/// Flux-tunable effective Josephson energy E_J(f) = 2 E_J cos(f/2).
JosephsonEnergy effective_josephson_energy(double josephson_energy, double reduced_flux);

struct DispersionRoot {
    int branch = 0;     // tan branch index m, root in ((m-1/2) pi, (m+1/2) pi)
    double u = 0.0;     // scaled wave vector k * l_0
    double k = 0.0;
    double residual = 0.0;  // |u tan u - rhs(u)|
};

struct DispersionResult {
    std::vector<DispersionRoot> roots;
    std::vector<int> empty_branches;  // branches scanned without a root
    std::optional<std::string> regime_warning;
};

/// First n_modes positive roots of
///   u tan u = (2 pi / Phi_0)^2 E_J(f) L_cav - (2 C_s / C_cav) u^2,
/// solved branch by branch in the smooth form
///   u sin u - rhs(u) cos u = 0.
/// A negative E_J(f) is outside the harmonic approximation: no roots are
/// reported, only a regime warning.
DispersionResult dispersion_roots(const HardwareParams& params, int n_modes);

/// Flux-dependent SQUID critical current I_c(phi_x) = 2 I_c cos(phi_x / 2).
double squid_critical_current(double critical_current, double squid_reduced_flux);

/// Effective SQUID inductance
///   L_eff = (Phi_0 / 2 pi I) arcsin(I / I_c(phi_x)),
/// with the removable I -> 0 singularity evaluated by series below
/// |I / I_c(phi_x)| < 1e-6. Throws std::domain_error when |I| >= |I_c(phi_x)|
/// (junction switching) and std::runtime_error when I_c(phi_x) = 0.
double effective_inductance(double bias_current, double critical_current,
                            double squid_reduced_flux, double flux_quantum = kFluxQuantum);

struct DetuningRange {
    Rational lo;
    Rational hi;
};

/// lambda = omega / omega_ref - 1 applied to both window ends, exactly.
/// Throws std::invalid_argument unless 0 < omega_min <= omega_max and
/// omega_ref > 0.
DetuningRange detuning_range(const Rational& omega_min, const Rational& omega_max,
                             const Rational& omega_ref);

struct HoppingScale {
    double ratio = 0.0;
    bool reference_regime = false;  // J / omega_c within [0.005, 0.02]
};

/// J / omega_c with a flag for the weak-hopping reference window.
HoppingScale hopping_scale_check(double hopping, double omega_c);

}  // namespace cca::hardware
