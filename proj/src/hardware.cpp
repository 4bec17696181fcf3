#include "cca/hardware.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cca/rootfind.hpp"

namespace cca::hardware {

namespace {

std::int64_t checked_mul10(std::int64_t v, int digit) {
    if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
        throw std::invalid_argument("parse_decimal: value overflows 64-bit rational");
    return v * 10 + digit;
}

std::int64_t pow10_checked(int exponent) {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) v = checked_mul10(v, 0);
    return v;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
    std::size_t pos = 0;
    const auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };

    bool negative = false;
    if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos;
    }

    std::int64_t mantissa = 0;
    int frac_digits = 0;
    bool any_digit = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
        mantissa = checked_mul10(mantissa, peek() - '0');
        any_digit = true;
        ++pos;
    }
    if (peek() == '.') {
        ++pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            mantissa = checked_mul10(mantissa, peek() - '0');
            ++frac_digits;
            any_digit = true;
            ++pos;
        }
    }
    if (!any_digit)
        throw std::invalid_argument("parse_decimal: no digits in '" + std::string(text) + "'");

    int exponent = 0;
    if (peek() == 'e' || peek() == 'E') {
        ++pos;
        bool exp_negative = false;
        if (peek() == '+' || peek() == '-') {
            exp_negative = peek() == '-';
            ++pos;
        }
        bool exp_digit = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            exponent = exponent * 10 + (peek() - '0');
            if (exponent > 18)
                throw std::invalid_argument("parse_decimal: exponent out of range");
            exp_digit = true;
            ++pos;
        }
        if (!exp_digit) throw std::invalid_argument("parse_decimal: malformed exponent");
        if (exp_negative) exponent = -exponent;
    }
    if (pos != text.size())
        throw std::invalid_argument("parse_decimal: trailing characters in '" +
                                    std::string(text) + "'");

    const int net = exponent - frac_digits;
    Rational value(negative ? -mantissa : mantissa, 1);
    if (net > 0)
        value *= Rational(pow10_checked(net), 1);
    else if (net < 0)
        value /= Rational(pow10_checked(-net), 1);
    return value;
}

void HardwareParams::validate_resonator() const {
    const auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw std::invalid_argument(std::string("hardware: ") + name + " must be positive");
    };
    positive(josephson_energy, "josephson_energy");
    positive(length, "length");
    positive(capacitance_per_length, "capacitance_per_length");
    positive(inductance_per_length, "inductance_per_length");
    positive(flux_quantum, "flux_quantum");
    if (junction_capacitance < 0.0)
        throw std::invalid_argument("hardware: junction_capacitance must be nonnegative");
}

JosephsonEnergy effective_josephson_energy(double josephson_energy, double reduced_flux) {
    JosephsonEnergy out;
    out.value = 2.0 * josephson_energy * std::cos(reduced_flux / 2.0);
    out.harmonic_regime = out.value >= 0.0;
    return out;
}

DispersionResult dispersion_roots(const HardwareParams& params, int n_modes) {
    params.validate_resonator();
    if (n_modes < 1) throw std::invalid_argument("dispersion_roots: n_modes must be >= 1");

    DispersionResult out;
    const JosephsonEnergy ej = effective_josephson_energy(params.josephson_energy,
                                                          params.reduced_flux);
    if (!ej.harmonic_regime) {
        out.regime_warning =
            "effective Josephson energy is negative at this flux; outside the harmonic "
            "approximation, no roots reported";
        return out;
    }

    const double two_pi = 2.0 * std::numbers::pi;
    const double a = (two_pi / params.flux_quantum) * (two_pi / params.flux_quantum) *
                     ej.value * params.l_cav();
    const double b = 2.0 * params.junction_capacitance / params.c_cav();

    const auto rhs = [&](double u) { return a - b * u * u; };
    // u tan u = rhs(u), recast as u sin u - rhs(u) cos u = 0: smooth through
    // the tan poles, one sign change per branch.
    const auto h = [&](double u) { return u * std::sin(u) - rhs(u) * std::cos(u); };

    const double pi = std::numbers::pi;
    for (int m = 0; static_cast<int>(out.roots.size()) < n_modes && m <= n_modes + 8; ++m) {
        const double lo = m == 0 ? 0.0 : (m - 0.5) * pi;
        const double hi = (m + 0.5) * pi;
        const double eps = 1e-12 * pi * std::max(1, m);
        double u;
        try {
            u = rootfind::brent(h, lo + eps, hi - eps);
        } catch (const rootfind::BracketError&) {
            out.empty_branches.push_back(m);  // e.g. branch 0 when a = 0
            continue;
        }
        DispersionRoot root;
        root.branch = m;
        root.u = u;
        root.k = u / params.length;
        root.residual = std::abs(u * std::tan(u) - rhs(u));
        out.roots.push_back(root);
    }
    return out;
}

double squid_critical_current(double critical_current, double squid_reduced_flux) {
    return 2.0 * critical_current * std::cos(squid_reduced_flux / 2.0);
}

double effective_inductance(double bias_current, double critical_current,
                            double squid_reduced_flux, double flux_quantum) {
    const double ic = squid_critical_current(critical_current, squid_reduced_flux);
    // cos(phi_x / 2) never lands on exact zero in floating point; treat a
    // suppression below 1e-12 as the diverging fully-frustrated point
    if (std::abs(ic) <= 2.0 * std::abs(critical_current) * 1e-12)
        throw std::runtime_error("effective_inductance: I_c(phi_x) = 0, inductance diverges");
    const double z = bias_current / ic;
    if (std::abs(z) >= 1.0)
        throw std::domain_error("effective_inductance: |I| >= |I_c(phi_x)|, junction switches");

    const double two_pi = 2.0 * std::numbers::pi;
    if (std::abs(z) < 1e-6) {
        // arcsin(z)/z = 1 + z^2/6 + 3 z^4/40 + O(z^6)
        const double z2 = z * z;
        return flux_quantum / (two_pi * ic) * (1.0 + z2 / 6.0 + 3.0 * z2 * z2 / 40.0);
    }
    return flux_quantum / (two_pi * bias_current) * std::asin(z);
}

DetuningRange detuning_range(const Rational& omega_min, const Rational& omega_max,
                             const Rational& omega_ref) {
    if (!(omega_min > Rational(0)) || !(omega_ref > Rational(0)))
        throw std::invalid_argument("detuning_range: frequencies must be positive");
    if (omega_max < omega_min)
        throw std::invalid_argument("detuning_range: omega_min must not exceed omega_max");
    return {omega_min / omega_ref - Rational(1), omega_max / omega_ref - Rational(1)};
}

HoppingScale hopping_scale_check(double hopping, double omega_c) {
    if (!(hopping >= 0.0) || !(omega_c > 0.0))
        throw std::invalid_argument("hopping_scale_check: need J >= 0 and omega_c > 0");
    HoppingScale out;
    out.ratio = hopping / omega_c;
    out.reference_regime = out.ratio >= 0.005 && out.ratio <= 0.02;
    return out;
}

}  // namespace cca::hardware
