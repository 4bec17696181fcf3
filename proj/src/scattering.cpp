#include "cca/scattering.hpp"

#include <cmath>
#include <stdexcept>

namespace cca::scattering {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> cis(double phase) { return std::exp(kI * phase); }

}  // namespace

ScatteringSolution reflect_single(double k, double lambda, const lattice::LatticeSpec& spec) {
    spec.validate();
    ScatteringSolution sol;
    sol.k = k;
    if (lambda == 0.0) return sol;  // r = 0, s = 1 identically
    if (spec.hopping == 0.0)
        throw std::domain_error("reflect_single: J = 0 with a detuned cavity has no propagating solution");

    const double lw = lambda * spec.omega_c;
    sol.r = lw / (2.0 * kI * spec.hopping * std::sin(k) - lw);
    sol.s = 1.0 + sol.r;
    sol.R = std::norm(sol.r);
    sol.T = std::norm(sol.s);
    return sol;
}

ScatteringSolution reflect_double(double k, double lambda0, int d,
                                  const lattice::LatticeSpec& spec) {
    spec.validate();
    if (d < 1) throw std::invalid_argument("reflect_double: half separation d must be >= 1");
    ScatteringSolution sol;
    sol.k = k;
    sol.half_separation = d;
    if (lambda0 == 0.0) {
        sol.interior = {std::complex<double>{1.0, 0.0}, std::complex<double>{0.0, 0.0}};
        sol.impurity_amplitudes = {cis(-k * d), cis(k * d)};
        return sol;
    }
    if (spec.hopping == 0.0)
        throw std::domain_error("reflect_double: J = 0 with detuned cavities has no propagating solution");

    const double J = spec.hopping;
    const double onsite = dispersion(k, spec) - (1.0 + lambda0) * spec.omega_c;

    // Unknowns (r, A, B, s). Rows: continuity at -d and +d, then the
    // eigen-equation at the two impurity sites with the wave function there
    // taken from either adjacent branch (equal by continuity).
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();

    // e^{-ikd} + r e^{ikd} = A e^{-ikd} + B e^{ikd}
    m(0, 0) = cis(k * d);
    m(0, 1) = -cis(-k * d);
    m(0, 2) = -cis(k * d);
    rhs(0) = -cis(-k * d);

    // A e^{ikd} + B e^{-ikd} = s e^{ikd}
    m(1, 1) = cis(k * d);
    m(1, 2) = cis(-k * d);
    m(1, 3) = -cis(k * d);

    // -J (c_{-d-1} + c_{-d+1}) = onsite * c_{-d}
    m(2, 0) = -J * cis(k * (d + 1)) - onsite * cis(k * d);
    m(2, 1) = -J * cis(k * (-d + 1));
    m(2, 2) = -J * cis(k * (d - 1));
    rhs(2) = J * cis(k * (-d - 1)) + onsite * cis(-k * d);

    // -J (c_{d-1} + c_{d+1}) = onsite * c_d with c_d = s e^{ikd}
    m(3, 1) = -J * cis(k * (d - 1));
    m(3, 2) = -J * cis(-k * (d - 1));
    m(3, 3) = -J * cis(k * (d + 1)) - onsite * cis(k * d);

    const Eigen::Vector4cd x = m.fullPivLu().solve(rhs);
    sol.r = x(0);
    sol.s = x(3);
    sol.interior = {x(1), x(2)};
    sol.R = std::norm(sol.r);
    sol.T = std::norm(sol.s);
    sol.impurity_amplitudes = {cis(-k * d) + sol.r * cis(k * d), sol.s * cis(k * d)};
    return sol;
}

std::complex<double> reflect_double_closed_form(double k, double lambda0, int d,
                                                const lattice::LatticeSpec& spec) {
    spec.validate();
    if (d < 1) throw std::invalid_argument("reflect_double_closed_form: d must be >= 1");
    if (lambda0 == 0.0) return {0.0, 0.0};
    if (spec.hopping == 0.0)
        throw std::domain_error("reflect_double_closed_form: J = 0 is degenerate");

    const double J = spec.hopping;
    const double lw = lambda0 * spec.omega_c;
    const std::complex<double> e2k = cis(2.0 * k);
    const std::complex<double> e4kd = cis(4.0 * k * d);

    const std::complex<double> numerator =
        lw * cis(-(2.0 * d - 1.0) * k) *
        (J * (1.0 + e4kd) * (e2k - 1.0) + lw * (e4kd - 1.0) * cis(k));
    const std::complex<double> denominator =
        J * (e2k - 1.0) * (J * (e2k - 1.0) - 2.0 * lw * cis(k)) - lw * lw * (e4kd - 1.0) * e2k;
    return numerator / denominator;
}

lattice::AmplitudeVector scattering_profile(const ScatteringSolution& sol, int window) {
    const int d = sol.half_separation;
    if (window <= d) throw std::invalid_argument("scattering_profile: window must exceed the impurity region");
    lattice::AmplitudeVector c(-window, 2 * window + 1);
    for (int j = -window; j <= window; ++j) {
        if (j < -d) {
            c.at(j) = cis(sol.k * j) + sol.r * cis(-sol.k * j);
        } else if (j > d) {
            c.at(j) = sol.s * cis(sol.k * j);
        } else if (d == 0) {
            c.at(j) = sol.s;  // j = 0, both branches agree through s = 1 + r
        } else if (j == -d) {
            c.at(j) = sol.impurity_amplitudes ? sol.impurity_amplitudes->first
                                              : cis(sol.k * j) + sol.r * cis(-sol.k * j);
        } else if (j == d) {
            c.at(j) = sol.impurity_amplitudes ? sol.impurity_amplitudes->second
                                              : sol.s * cis(sol.k * j);
        } else {
            const auto [a, b] = sol.interior.value();
            c.at(j) = a * cis(sol.k * j) + b * cis(-sol.k * j);
        }
    }
    return c;
}

std::vector<SweepRow> sweep(const SweepRequest& req, const lattice::LatticeSpec& spec) {
    if (req.axis.count < 2) throw std::invalid_argument("sweep: count must be >= 2");
    if (!(req.axis.from < req.axis.to)) throw std::invalid_argument("sweep: require from < to");

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(req.axis.count));
    const double step = (req.axis.to - req.axis.from) / (req.axis.count - 1);
    for (int i = 0; i < req.axis.count; ++i) {
        const double value = (i + 1 == req.axis.count) ? req.axis.to : req.axis.from + i * step;
        const double k = req.axis.variable == SweepVariable::wave_vector ? value : req.k;
        const double lam = req.axis.variable == SweepVariable::detuning ? value : req.lambda;
        SweepRow row;
        row.swept = value;
        row.lambda = lam;
        row.solution = req.mode == SweepRequest::Mode::single
                           ? reflect_single(k, lam, spec)
                           : reflect_double(k, lam, req.d, spec);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cca::scattering
