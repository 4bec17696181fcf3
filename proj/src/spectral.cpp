#include "cca/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cca/rootfind.hpp"

namespace cca::spectral {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kTailTarget = 1e-12;
constexpr int kWindowCap = 100000;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

/// Window half-width so the truncated wing mass e^{-2y(W-d)} relative to the
/// kept mass stays below the tail target.
int auto_window(double decay_rate, int d) {
    if (decay_rate <= 0.0) return kWindowCap;
    const double needed = -std::log(kTailTarget) / (2.0 * decay_rate);
    const int w = d + 4 + static_cast<int>(std::ceil(needed));
    return std::min(w, kWindowCap);
}

}  // namespace

StateKind classify(const QuantizationBranch& branch, double lambda0) {
    const int s = sign_of(lambda0);
    switch (branch.x_class) {
        case XClass::y_zero:
            return branch.root_sign == RootSign::positive ? StateKind::odd_resonant
                                                          : StateKind::even_resonant;
        case XClass::x_even_pi:
            if (s >= 0) return StateKind::no_state;
            return branch.root_sign == RootSign::positive ? StateKind::odd_bound
                                                          : StateKind::even_bound;
        case XClass::x_odd_pi:
            if (s <= 0) return StateKind::no_state;
            return branch.root_sign == RootSign::positive ? StateKind::odd_bound
                                                          : StateKind::even_bound;
    }
    return StateKind::no_state;
}

double band_pole_function(double omega, double lambda, const lattice::LatticeSpec& spec) {
    const auto ks = lattice::k_grid(spec);
    double acc = 0.0;
    for (double k : ks) acc += 1.0 / (omega - lattice::dispersion(k, spec));
    return lambda * spec.omega_c * acc / spec.n_sites;
}

std::vector<double> band_pole_roots(double lambda, const lattice::LatticeSpec& spec) {
    spec.validate();
    if (lambda == 0.0) throw std::invalid_argument("band_pole_roots: lambda must be nonzero");

    std::vector<double> poles;
    for (double k : lattice::k_grid(spec)) poles.push_back(lattice::dispersion(k, spec));
    std::sort(poles.begin(), poles.end());
    // +/- k give the same pole; collapse duplicates
    std::vector<double> distinct;
    const double dup_tol = 8.0 * 1e-16 * spec.omega_c;
    for (double p : poles) {
        if (distinct.empty() || p - distinct.back() > dup_tol) distinct.push_back(p);
    }

    const double eps = 1e-12 * spec.omega_c;
    const auto g = [&](double w) { return band_pole_function(w, lambda, spec) - 1.0; };

    std::vector<double> roots;
    const auto solve_bracket = [&](double a, double b) {
        try {
            roots.push_back(rootfind::brent(g, a, b));
        } catch (const rootfind::BracketError& err) {
            std::ostringstream msg;
            msg << "band_pole_roots: bracket [" << a << ", " << b << "] failed for lambda="
                << lambda << ", N=" << spec.n_sites << ": " << err.what();
            throw std::runtime_error(msg.str());
        }
    };

    for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
        solve_bracket(distinct[i] + eps, distinct[i + 1] - eps);
    const double reach = std::abs(lambda) * spec.omega_c + 2.0 * spec.hopping;
    if (lambda > 0.0)
        solve_bracket(distinct.back() + eps, distinct.back() + reach);
    else
        solve_bracket(distinct.front() - reach, distinct.front() - eps);

    std::sort(roots.begin(), roots.end());
    return roots;
}

BoundStateSolution bound_state_single(double lambda, const lattice::LatticeSpec& spec,
                                      int window) {
    spec.validate();
    if (lambda == 0.0)
        throw std::invalid_argument("bound_state_single: no bound state for lambda = 0");
    if (spec.hopping == 0.0)
        throw std::domain_error("bound_state_single: J = 0 is degenerate");

    const double lw = lambda * spec.omega_c;
    const double root = std::sqrt(4.0 * spec.hopping * spec.hopping + lw * lw);
    // mu_+ for lambda > 0 (negative value, staggered sign), mu_- for lambda < 0
    const double mu = lambda > 0.0 ? (-lw + root) / (-2.0 * spec.hopping)
                                   : (-lw - root) / (-2.0 * spec.hopping);

    BoundStateSolution out;
    out.mu = mu;
    out.decay = std::abs(mu);
    out.parity = Parity::even;
    out.location = lambda > 0.0 ? BandSide::above_band : BandSide::below_band;
    out.energy = lambda > 0.0 ? spec.omega_c + root : spec.omega_c - root;

    const int w = window >= 0 ? window : auto_window(-std::log(out.decay), 0);
    lattice::AmplitudeVector profile(-w, 2 * w + 1);
    for (int j = -w; j <= w; ++j) profile.at(j) = std::pow(mu, std::abs(j));
    profile.normalize();
    out.profile = std::move(profile);
    return out;
}

lattice::AmplitudeVector bound_profile_double(double y, int d, Parity parity, int window,
                                              bool staggered) {
    if (y <= 0.0) throw std::invalid_argument("bound_profile_double: decay y must be positive");
    if (d < 1) throw std::invalid_argument("bound_profile_double: d must be >= 1");
    if (window <= d) throw std::invalid_argument("bound_profile_double: window must exceed d");

    const double wing = parity == Parity::odd ? std::exp(2.0 * d * y) - 1.0
                                              : std::exp(2.0 * d * y) + 1.0;
    lattice::AmplitudeVector c(-window, 2 * window + 1);
    // fill j >= 0 and mirror, so parity holds bit-exactly
    for (int j = 0; j <= window; ++j) {
        double v;
        if (j > d)
            v = (parity == Parity::odd ? -wing : wing) * std::exp(-y * j);
        else
            v = parity == Parity::odd ? -2.0 * std::sinh(y * j) : 2.0 * std::cosh(y * j);
        if (staggered && (j & 1)) v = -v;
        c.at(j) = v;
        c.at(-j) = parity == Parity::odd ? -v : v;
    }
    c.normalize();
    return c;
}

QuantizationResult quantization_solve(const QuantizationBranch& branch, double lambda0,
                                      int d, const lattice::LatticeSpec& spec, int window) {
    spec.validate();
    if (branch.x_class == XClass::y_zero)
        throw std::invalid_argument("quantization_solve: y = 0 states come from resonant_state");
    if (d < 1) throw std::invalid_argument("quantization_solve: d must be >= 1");
    if (lambda0 == 0.0)
        throw std::invalid_argument("quantization_solve: lambda0 must be nonzero");
    if (spec.hopping == 0.0)
        throw std::domain_error("quantization_solve: J = 0 is degenerate");

    const StateKind kind = classify(branch, lambda0);
    if (kind == StateKind::no_state)
        return NoState{NoState::Reason::zero_only_wrong_sign};

    // The branch equation is  sgn * e^{-2dy} = 1 + q sinh y  with
    // q = +/- 2J / (lambda0 omega_c); solvable branches all have q < 0.
    const double sgn = branch.root_sign == RootSign::positive ? 1.0 : -1.0;
    const double q_raw = 2.0 * spec.hopping / (lambda0 * spec.omega_c);
    const double q = branch.x_class == XClass::x_even_pi ? q_raw : -q_raw;

    const auto f = [&](double y) {
        if (sgn > 0.0) return std::expm1(-2.0 * d * y) - q * std::sinh(y);
        return -std::exp(-2.0 * d * y) - 1.0 - q * std::sinh(y);
    };

    const double y_hi = std::asinh(std::abs(lambda0) * spec.omega_c / spec.hopping) + 1.0;
    const double y_lo = 1e-8;
    if (sgn > 0.0) {
        // y = 0 solves the equation; a second root needs f to dip negative,
        // which requires |q| < 2d (i.e. d |lambda0| omega_c > J). A root below
        // y_lo (decay length beyond any workable window) counts as none.
        if (-q >= 2.0 * d || f(y_lo) >= 0.0)
            return NoState{NoState::Reason::zero_only_weak_detuning};
    }

    double y;
    try {
        y = rootfind::brent(f, y_lo, y_hi);
    } catch (const rootfind::BracketError& err) {
        std::ostringstream msg;
        msg << "quantization_solve: bracket [" << y_lo << ", " << y_hi
            << "] failed for lambda0=" << lambda0 << ", d=" << d << ": " << err.what();
        throw std::runtime_error(msg.str());
    }
    if (std::abs(f(y)) > 1e-12) {
        std::ostringstream msg;
        msg << "quantization_solve: root defect " << std::abs(f(y)) << " exceeds 1e-12 at y=" << y;
        throw std::runtime_error(msg.str());
    }

    BoundStateSolution out;
    out.decay = y;
    out.parity = branch.root_sign == RootSign::positive ? Parity::odd : Parity::even;
    const bool above = branch.x_class == XClass::x_odd_pi;
    out.location = above ? BandSide::above_band : BandSide::below_band;
    out.energy = above ? spec.omega_c + 2.0 * spec.hopping * std::cosh(y)
                       : spec.omega_c - 2.0 * spec.hopping * std::cosh(y);
    const int w = window >= 0 ? window : auto_window(y, d);
    out.profile = bound_profile_double(y, d, out.parity, w, above);
    return out;
}

ResonantStateSolution resonant_state(int m, int d, Parity parity,
                                     const lattice::LatticeSpec& spec) {
    spec.validate();
    if (m < 1) throw std::invalid_argument("resonant_state: mode index m must be >= 1");
    if (d < 1) throw std::invalid_argument("resonant_state: d must be >= 1");
    if (parity == Parity::odd && m % d == 0)
        throw std::invalid_argument("resonant_state: sin(m pi j / d) vanishes identically for m divisible by d");

    ResonantStateSolution out;
    out.mode_index = m;
    out.parity = parity;
    out.x = parity == Parity::odd ? m * std::numbers::pi / d
                                  : (2 * m + 1) * std::numbers::pi / (2.0 * d);
    out.energy = spec.omega_c - 2.0 * spec.hopping * std::cos(out.x);

    const int w = d + 5;  // pad with explicit zeros outside the confinement region
    lattice::AmplitudeVector c(-w, 2 * w + 1);
    for (int j = 0; j <= d - 1; ++j) {  // fill j >= 0 and mirror for exact parity
        const std::complex<double> v =
            parity == Parity::odd
                ? kI * std::sin(m * std::numbers::pi * j / d)
                : std::complex<double>(std::cos((2 * m + 1) * std::numbers::pi * j / (2.0 * d)), 0.0);
        c.at(j) = v;
        c.at(-j) = parity == Parity::odd ? -v : v;
    }
    c.normalize();
    out.profile = std::move(c);
    return out;
}

ResonantStateSolution resonant_state(int m, int d, Parity parity,
                                     const lattice::LatticeSpec& spec, double lambda0,
                                     double threshold) {
    auto out = resonant_state(m, d, parity, spec);
    if (spec.hopping == 0.0) {
        out.regime_ratio = std::numeric_limits<double>::infinity();
        out.regime_ok = true;
        return out;
    }
    out.regime_ratio = lambda0 * spec.omega_c / (2.0 * spec.hopping);
    out.regime_ok = *out.regime_ratio >= threshold;
    return out;
}

CoefficientRatios coefficient_ratios(std::complex<double> k, double lambda0, int d,
                                     const lattice::LatticeSpec& spec) {
    spec.validate();
    if (lambda0 == 0.0)
        throw std::invalid_argument("coefficient_ratios: lambda0 must be nonzero");
    const double lw = lambda0 * spec.omega_c;
    const std::complex<double> two_ij_sin = 2.0 * kI * spec.hopping * std::sin(k);

    CoefficientRatios out;
    out.a_over_b = two_ij_sin / lw * std::exp(-2.0 * kI * k * static_cast<double>(d));
    out.c_over_b = (two_ij_sin - lw) / lw * std::exp(-2.0 * kI * k * static_cast<double>(d));
    out.d_over_b = -two_ij_sin / (two_ij_sin - lw);
    out.quantization_residual = std::abs(
        lw * lw * std::exp(4.0 * kI * k * static_cast<double>(d)) -
        (lw - two_ij_sin) * (lw - two_ij_sin));
    return out;
}

}  // namespace cca::spectral
