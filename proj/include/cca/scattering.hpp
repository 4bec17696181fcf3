#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "cca/lattice.hpp"

namespace cca::scattering {

/// Stationary plane-wave scattering data at wave vector k: reflection and
/// transmission amplitudes r, s with coefficients R = |r|^2, T = |s|^2.
/// For a pair of detuned cavities at sites -d and d, `interior` holds the
/// (A, B) amplitudes of the A e^{ikj} + B e^{-ikj} solution between them
/// and `impurity_amplitudes` the wave function evaluated at the two sites.
struct ScatteringSolution {
    double k = 0.0;
    std::complex<double> r{0.0, 0.0};
    std::complex<double> s{1.0, 0.0};
    double R = 0.0;
    double T = 1.0;
    int half_separation = 0;  // 0 for the single-cavity problem
    std::optional<std::pair<std::complex<double>, std::complex<double>>> interior;
    std::optional<std::pair<std::complex<double>, std::complex<double>>> impurity_amplitudes;
};

/// Reflection off one detuned cavity at the origin:
///   r = lambda omega_c / (2 i J sin k - lambda omega_c),  s = 1 + r.
/// Throws std::domain_error for J = 0 with lambda != 0 (no propagation).
ScatteringSolution reflect_single(double k, double lambda, const lattice::LatticeSpec& spec);

/// Reflection off two equal detuned cavities at sites -d and d, obtained by
/// solving the 4x4 linear system of the two continuity conditions and the
/// two impurity-site recurrences for (r, A, B, s).
ScatteringSolution reflect_double(double k, double lambda0, int d,
                                  const lattice::LatticeSpec& spec);

/// Closed-form r for the two-cavity problem; used to cross-check the
/// linear-system solve, which is the primary route.
std::complex<double> reflect_double_closed_form(double k, double lambda0, int d,
                                                const lattice::LatticeSpec& spec);

/// Materialize the piecewise scattering amplitudes on sites [-window, window]:
/// incident + reflected wave to the left of the impurity region, interior
/// superposition between the cavities, transmitted wave to the right.
lattice::AmplitudeVector scattering_profile(const ScatteringSolution& sol, int window);

enum class SweepVariable { detuning, wave_vector };

struct SweepAxis {
    SweepVariable variable = SweepVariable::detuning;
    double from = 0.0;
    double to = 1.0;
    int count = 2;
};

struct SweepRequest {
    enum class Mode { single, two_impurity };
    Mode mode = Mode::single;
    SweepAxis axis;
    double k = 0.0;        // fixed wave vector when detuning is swept
    double lambda = 0.0;   // fixed detuning when k is swept
    int d = 1;             // two-impurity half separation
};

struct SweepRow {
    double swept = 0.0;
    double lambda = 0.0;
    ScatteringSolution solution;
};

/// Evenly spaced parameter sweep with deterministic row order.
/// Throws std::invalid_argument for count < 2 or from >= to.
std::vector<SweepRow> sweep(const SweepRequest& req, const lattice::LatticeSpec& spec);

}  // namespace cca::scattering
