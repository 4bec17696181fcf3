#include "cca/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

#include "cca/hardware.hpp"
#include "cca/lattice.hpp"
#include "cca/oracle.hpp"
#include "cca/scattering.hpp"
#include "cca/spectral.hpp"

namespace cca::verify {

namespace {

constexpr double kPi = std::numbers::pi;

/// Deterministic uniform doubles in [0, 1) independent of the standard
/// library's distribution implementation.
struct Uniform {
    std::mt19937_64 gen;
    explicit Uniform(std::uint64_t seed) : gen(seed) {}
    double next() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
    int integer(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

struct Check {
    bool ok = true;
    double worst = 0.0;
    std::string note;

    void bound(double value, double limit, const std::string& what) {
        worst = std::max(worst, value);
        if (!(value <= limit)) {
            ok = false;
            if (!note.empty()) note += "; ";
            std::ostringstream os;
            os << what << " = " << value << " > " << limit;
            note += os.str();
        }
    }
    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (!note.empty()) note += "; ";
            note += what;
        }
    }
};

lattice::LatticeSpec base_spec(int n, lattice::Boundary boundary = lattice::Boundary::periodic) {
    lattice::LatticeSpec spec;
    spec.n_sites = n;
    spec.omega_c = 1.0;
    spec.hopping = 0.01;
    spec.boundary = boundary;
    return spec;
}

CriterionResult unitarity_suite(std::uint64_t seed) {
    CriterionResult r{1, "unitarity of closed-form scattering", false, "", 0.0};
    Uniform rng(seed);
    const auto spec = base_spec(21);
    Check check;
    for (int trial = 0; trial < 1000; ++trial) {
        const double k = rng.in(0.02, kPi - 0.02);
        const double lam = rng.in(-1.0, 3.0);
        const auto single = scattering::reflect_single(k, lam, spec);
        check.bound(std::abs(single.R + single.T - 1.0), 1e-10, "single |R+T-1|");

        const double lam0 = rng.in(-0.5, 0.5);
        const int d = rng.integer(1, 8);
        const auto twin = scattering::reflect_double(k, lam0, d, spec);
        check.bound(std::abs(twin.R + twin.T - 1.0), 1e-10, "double |R+T-1|");
        const auto closed = scattering::reflect_double_closed_form(k, lam0, d, spec);
        check.bound(std::abs(twin.r - closed), 1e-10, "|r_system - r_closed|");
    }
    r.pass = check.ok;
    std::ostringstream os;
    os << "1000 random (k, lambda) and (k, lambda0, d) draws, worst defect " << check.worst;
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

CriterionResult symmetry_suite() {
    CriterionResult r{2, "reflection-coefficient symmetries", false, "", 0.0};
    const auto spec = base_spec(21);
    Check check;
    for (int i = 0; i < 100; ++i) {
        const double k = 0.01 + (kPi - 0.02) * i / 99.0;
        for (int j = 0; j < 100; ++j) {
            const double lam = -1.0 + 4.0 * j / 99.0;
            const double base = scattering::reflect_single(k, lam, spec).R;
            check.bound(std::abs(base - scattering::reflect_single(-k, lam, spec).R), 1e-12,
                        "|R(k)-R(-k)|");
            check.bound(std::abs(scattering::reflect_single(kPi / 2 - k, lam, spec).R -
                                 scattering::reflect_single(kPi / 2 + k, lam, spec).R),
                        1e-12, "|R(pi/2-k)-R(pi/2+k)|");
            check.bound(std::abs(base - scattering::reflect_single(k, -lam, spec).R), 1e-12,
                        "|R(lam)-R(-lam)|");
        }
    }
    r.pass = check.ok;
    std::ostringstream os;
    os << "three relations on a 100x100 (k, lambda) grid, worst defect " << check.worst;
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

CriterionResult band_pole_suite() {
    CriterionResult r{3, "pole-condition roots vs dense spectrum (N=21)", false, "", 0.0};
    Check check;
    double worst_match = 0.0;
    for (const double lam : {0.2, -0.2}) {
        auto spec = base_spec(21);
        spec.impurities = {{0, lam}};
        const auto roots = spectral::band_pole_roots(lam, spec);
        const auto spectrum = oracle::diagonalize(spec);

        int out_of_band = 0;
        for (const double root : roots) {
            if (root > spec.omega_c + 2.0 * spec.hopping ||
                root < spec.omega_c - 2.0 * spec.hopping)
                ++out_of_band;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
                best = std::min(best, std::abs(spectrum.eigenvalues[i] - root));
            worst_match = std::max(worst_match, best);
            check.bound(best, 1e-9, "|root - eigenvalue|");
        }
        check.require(out_of_band == 1, "expected exactly one out-of-band root");
        const double extreme = lam > 0.0 ? roots.back() : roots.front();
        check.require(lam > 0.0 ? extreme > spec.omega_c + 2.0 * spec.hopping
                                : extreme < spec.omega_c - 2.0 * spec.hopping,
                      "out-of-band root on the wrong side");
    }
    r.pass = check.ok;
    std::ostringstream os;
    os << "lambda = +/-0.2: one out-of-band root each, worst eigenvalue match " << worst_match;
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

CriterionResult analytic_bound_state_suite() {
    CriterionResult r{4, "single-cavity bound state vs N=201 spectrum", false, "", 0.0};
    Check check;
    auto spec = base_spec(201);
    spec.impurities = {{0, 0.2}};

    const auto state = spectral::bound_state_single(0.2, spec, (spec.n_sites - 1) / 2);
    const auto spectrum = oracle::diagonalize(spec);
    const auto report = oracle::match_bound_states(spectrum, {state});

    check.require(report.entries.size() == 1 && report.entries.front().matched,
                  "bound state not matched to an eigenvalue");
    const auto& entry = report.entries.front();
    check.bound(entry.energy_error, 1e-9, "energy error");
    check.require(entry.fidelity > 1.0 - 1e-6, "fidelity below 1 - 1e-6");

    double peak = 0.0;
    int peak_site = spec.j_min();
    for (int j = state.profile.j_min; j <= state.profile.j_max(); ++j) {
        const double p = std::norm(state.profile.at(j));
        if (p > peak) {
            peak = p;
            peak_site = j;
        }
    }
    check.require(peak_site == 0, "probability peak not at the detuned cavity");

    r.pass = check.ok;
    std::ostringstream os;
    os << "energy error " << entry.energy_error << ", fidelity " << entry.fidelity
       << ", peak at j=" << peak_site;
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

CriterionResult quantization_suite() {
    CriterionResult r{5, "two-cavity quantization roots and parities", false, "", 0.0};
    Check check;
    const double lam0 = -0.2;
    const int d = 5;
    auto spec = base_spec(201);
    spec.impurities = {{-d, lam0}, {d, lam0}};

    const auto odd_result = spectral::quantization_solve(
        {spectral::RootSign::positive, spectral::XClass::x_even_pi}, lam0, d, spec,
        (spec.n_sites - 1) / 2);
    const auto even_result = spectral::quantization_solve(
        {spectral::RootSign::negative, spectral::XClass::x_even_pi}, lam0, d, spec,
        (spec.n_sites - 1) / 2);
    check.require(std::holds_alternative<spectral::BoundStateSolution>(odd_result) &&
                      std::holds_alternative<spectral::BoundStateSolution>(even_result),
                  "expected bound states on both root branches");
    if (!check.ok) {
        r.detail = check.note;
        return r;
    }
    const auto& odd = std::get<spectral::BoundStateSolution>(odd_result);
    const auto& even = std::get<spectral::BoundStateSolution>(even_result);

    check.bound(std::abs(odd.decay - 2.998), 1e-3, "|y0 - 2.998|");

    // independent oracle: plain bisection of  e^{-2dy} = 1 - 0.1 sinh y
    // and  -e^{-2dy} = 1 - 0.1 sinh y  (J=0.01, omega_c=1, |lambda0|=0.2)
    const double ratio = 2.0 * spec.hopping / (std::abs(lam0) * spec.omega_c);
    const auto bisect = [](auto&& f, double a, double b) {
        double fa = f(a);
        for (int i = 0; i < 200; ++i) {
            const double m = 0.5 * (a + b);
            const double fm = f(m);
            if (fa * fm <= 0.0)
                b = m;
            else {
                a = m;
                fa = fm;
            }
        }
        return 0.5 * (a + b);
    };
    const double y0_oracle = bisect(
        [&](double y) { return std::exp(-2.0 * d * y) - 1.0 + ratio * std::sinh(y); }, 0.5,
        std::asinh(1.0 / ratio) + 1.0);
    const double y1_oracle = bisect(
        [&](double y) { return -std::exp(-2.0 * d * y) - 1.0 + ratio * std::sinh(y); }, 0.5,
        std::asinh(1.0 / ratio) + 1.0);
    check.bound(std::abs(odd.decay - y0_oracle), 1e-10, "|y0 - bisection|");
    check.bound(std::abs(even.decay - y1_oracle), 1e-10, "|y1 - bisection|");
    check.bound(std::abs(odd.decay - even.decay), 1e-6, "|y0 - y1|");

    const auto spectrum = oracle::diagonalize(spec);
    oracle::MatchTolerances tol;
    tol.energy_abs = 1e-8;
    const auto report = oracle::match_bound_states(spectrum, {odd, even}, tol);
    check.require(report.entries.size() == 2, "match report incomplete");
    for (const auto& entry : report.entries) {
        check.require(entry.matched, "bound energy unmatched in N=201 spectrum");
        check.bound(entry.energy_error, 1e-8, "bound-energy error");
    }

    for (int j = 1; j <= odd.profile.j_max(); ++j) {
        check.require(odd.profile.at(-j) == -odd.profile.at(j), "odd parity not exact");
        check.require(even.profile.at(-j) == even.profile.at(j), "even parity not exact");
    }

    r.pass = check.ok;
    std::ostringstream os;
    os << "y0 = " << odd.decay << ", y1 = " << even.decay << ", |y0-y1| = "
       << std::abs(odd.decay - even.decay);
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

CriterionResult resonant_suite() {
    CriterionResult r{6, "confined resonant states (m=2, d=5)", false, "", 0.0};
    Check check;
    const auto spec = base_spec(21);
    const int d = 5, m = 2;

    const auto odd = spectral::resonant_state(m, d, spectral::Parity::odd, spec);
    const auto even = spectral::resonant_state(m, d, spectral::Parity::even, spec);
    check.bound(std::abs(odd.x - 2.0 * kPi / 5.0), 1e-15, "|x_odd - 2pi/5|");
    check.bound(std::abs(even.x - kPi / 2.0), 1e-15, "|x_even - pi/2|");

    for (const auto* state : {&odd, &even}) {
        for (int j = state->profile.j_min; j <= state->profile.j_max(); ++j) {
            if (std::abs(j) >= d)
                check.require(std::abs(state->profile.at(j)) == 0.0,
                              "amplitude not exactly zero outside the confinement region");
        }
        // interior block with hard walls: tridiagonal on sites |j| < d
        const int nin = 2 * d - 1;
        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(nin, nin);
        for (int i = 0; i < nin; ++i) {
            block(i, i) = spec.omega_c;
            if (i + 1 < nin) block(i, i + 1) = block(i + 1, i) = -spec.hopping;
        }
        Eigen::VectorXcd v(nin);
        for (int j = -d + 1; j <= d - 1; ++j) v[j + d - 1] = state->profile.at(j);
        v /= v.norm();
        const double resid =
            (block.cast<std::complex<double>>() * v - state->energy * v).cwiseAbs().maxCoeff();
        check.bound(resid, 1e-12, "interior-block eigenvector residual");
    }

    r.pass = check.ok;
    std::ostringstream os;
    os << "x_odd = " << odd.x << ", x_even = " << even.x;
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

CriterionResult packet_suite() {
    CriterionResult r{7, "wavepacket transport vs stationary coefficients", false, "", 0.0};
    Check check;
    const double k0 = kPi / 2.0;
    const double sigma = 20.0;
    std::vector<double> measured;
    std::ostringstream os;
    for (const double lam : {0.05, 0.1, 0.2}) {
        auto spec = base_spec(801, lattice::Boundary::open);
        spec.impurities = {{0, lam}};
        const auto run = oracle::evolve_packet(spec, k0, sigma, -250, 25000.0, 400);
        const double expected = scattering::reflect_single(k0, lam, spec).T;
        check.bound(std::abs(run.T_measured - expected), 0.02, "|T_measured - T(k0)|");
        measured.push_back(run.T_measured);
        os << "lambda=" << lam << ": T=" << run.T_measured << " (stationary " << expected
           << ")  ";
    }
    check.require(measured[0] > measured[1] && measured[1] > measured[2],
                  "T not monotonically decreasing in lambda");
    r.pass = check.ok;
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

CriterionResult hardware_suite() {
    CriterionResult r{8, "hardware limit cases", false, "", 0.0};
    Check check;

    // f = pi drives E_J(f) to zero; with C_s = 0 the roots sit at u = m pi
    hardware::HardwareParams params;
    params.josephson_energy = 1.0;
    params.reduced_flux = kPi;
    params.junction_capacitance = 0.0;
    params.length = 1.0;
    params.capacitance_per_length = 1.0;
    params.inductance_per_length = 1.0;
    params.flux_quantum = 1.0;
    const auto roots = hardware::dispersion_roots(params, 5);
    int checked = 0;
    for (const auto& root : roots.roots) {
        if (root.branch == 0) {
            // residual u -> 0 branch of the limit; collapses with the load
            check.bound(root.u, 1e-3, "u -> 0 branch magnitude");
            continue;
        }
        check.bound(std::abs(root.u - root.branch * kPi), 1e-10, "|u - m pi|");
        ++checked;
    }
    check.require(checked >= 4, "expected at least 4 roots at u = m pi");

    const double ic = 1e-6, phix = 0.3;
    const double limit = hardware::kFluxQuantum /
                         (2.0 * kPi * hardware::squid_critical_current(ic, phix));
    const double small = hardware::effective_inductance(
        1e-7 * hardware::squid_critical_current(ic, phix), ic, phix);
    check.bound(std::abs(small - limit) / limit, 1e-12, "L_eff small-current relative error");

    const auto range = hardware::detuning_range(hardware::parse_decimal("4"),
                                                hardware::parse_decimal("4.8"),
                                                hardware::parse_decimal("4"));
    check.require(range.lo == hardware::Rational(0) && range.hi == hardware::Rational(1, 5),
                  "detuning range not exactly [0, 1/5]");
    check.require(boost::rational_cast<double>(range.hi) == 0.2,
                  "detuning upper end does not render as 0.2");

    r.pass = check.ok;
    std::ostringstream os;
    os << "dispersion, inductance and detuning limits";
    if (!check.note.empty()) os << "; " << check.note;
    r.detail = os.str();
    return r;
}

}  // namespace

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
       << r.seconds << " s): " << r.detail;
    return os.str();
}

std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream* progress) {
    using clock = std::chrono::steady_clock;
    std::vector<CriterionResult> results;

    const auto run = [&](auto&& fn, double budget_s) {
        const auto start = clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(clock::now() - start).count();
        if (r.seconds >= budget_s) {
            r.pass = false;
            r.detail += "; runtime " + std::to_string(r.seconds) + " s exceeds budget " +
                        std::to_string(budget_s) + " s";
        }
        if (progress) *progress << format_line(r) << std::endl;
        results.push_back(std::move(r));
    };

    run([&] { return unitarity_suite(seed); }, 1.0);
    run([] { return symmetry_suite(); }, 1.0);
    run([] { return band_pole_suite(); }, 1.0);
    run([] { return analytic_bound_state_suite(); }, 5.0);
    run([] { return quantization_suite(); }, 5.0);
    run([] { return resonant_suite(); }, 1.0);
    run([] { return packet_suite(); }, 60.0);
    run([] { return hardware_suite(); }, 1.0);
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

}  // namespace cca::verify
