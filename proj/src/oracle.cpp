#include "cca/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

namespace cca::oracle {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

SpectrumResult diagonalize(const lattice::LatticeSpec& spec) {
    spec.validate();
    if (spec.n_sites > 10000)
        throw std::invalid_argument("diagonalize: dense path limited to N <= 1e4");

    const Eigen::MatrixXd h = lattice::build_hamiltonian(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "diagonalize: eigensolver failed to converge for N=" << spec.n_sites;
        throw std::runtime_error(msg.str());
    }

    SpectrumResult out;
    out.spec = spec;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    // fix the sign: largest-magnitude component positive
    for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
        Eigen::Index imax = 0;
        out.eigenvectors.col(c).cwiseAbs().maxCoeff(&imax);
        if (out.eigenvectors(imax, c) < 0.0) out.eigenvectors.col(c) = -out.eigenvectors.col(c);
    }
    return out;
}

WavepacketRun evolve_packet(const lattice::LatticeSpec& spec, double k0, double width,
                            int launch_site, double duration, int n_samples) {
    spec.validate();
    if (spec.boundary != lattice::Boundary::open)
        throw std::invalid_argument("evolve_packet: use an open chain so end reflections stay away from the measurement region");
    if (!(k0 > 0.0 && k0 < std::numbers::pi))
        throw std::invalid_argument("evolve_packet: k0 must lie in (0, pi)");
    if (!(width > 0.0)) throw std::invalid_argument("evolve_packet: width must be positive");
    if (!(duration > 0.0)) throw std::invalid_argument("evolve_packet: duration must be positive");
    if (n_samples < 2) throw std::invalid_argument("evolve_packet: need at least 2 samples");
    if (launch_site < spec.j_min() || launch_site > spec.j_max())
        throw std::invalid_argument("evolve_packet: launch site outside the lattice");

    const int n = spec.n_sites;
    Eigen::VectorXcd psi0(n);
    for (int i = 0; i < n; ++i) {
        const int j = spec.j_min() + i;
        const double dj = j - launch_site;
        psi0[i] = std::exp(-dj * dj / (4.0 * width * width)) * std::exp(kI * (k0 * j));
    }
    psi0 /= psi0.norm();

    for (const auto& imp : spec.impurities) {
        const double amp = std::abs(psi0[imp.site - spec.j_min()]);
        if (amp >= 1e-8) {
            std::ostringstream msg;
            msg << "evolve_packet: initial amplitude " << amp << " at detuned site " << imp.site
                << " exceeds 1e-8; move the launch site away";
            throw std::invalid_argument(msg.str());
        }
    }

    int site_lo = 0, site_hi = 0;  // cavity region bounds (site 0 when no impurity)
    for (std::size_t i = 0; i < spec.impurities.size(); ++i) {
        const int s = spec.impurities[i].site;
        if (i == 0) {
            site_lo = site_hi = s;
        } else {
            site_lo = std::min(site_lo, s);
            site_hi = std::max(site_hi, s);
        }
    }
    const int clear_pad = static_cast<int>(std::ceil(1.25 * width));
    const int clear_lo = site_lo - clear_pad;
    const int clear_hi = site_hi + clear_pad;

    const SpectrumResult spectrum = diagonalize(spec);
    const Eigen::MatrixXcd modes = spectrum.eigenvectors.cast<std::complex<double>>();
    const Eigen::VectorXcd coeffs = modes.adjoint() * psi0;

    WavepacketRun run;
    run.k0 = k0;
    run.width = width;
    run.launch_site = launch_site;
    run.duration = duration;

    // the packet must visit the clearance window before "cleared" can trigger
    bool entered = false;
    const double dt = duration / (n_samples - 1);
    Eigen::VectorXcd phased(n);
    for (int s = 0; s < n_samples; ++s) {
        const double t = s * dt;
        for (int i = 0; i < n; ++i)
            phased[i] = std::exp(-kI * (spectrum.eigenvalues[i] * t)) * coeffs[i];
        const Eigen::VectorXcd psi = modes * phased;

        PacketSample sample;
        sample.t = t;
        sample.norm = psi.norm();
        for (int i = 0; i < n; ++i) {
            const int j = spec.j_min() + i;
            const double p = std::norm(psi[i]);
            if (j < site_lo) sample.p_left += p;
            if (j > site_hi) sample.p_right += p;
            if (j >= clear_lo && j <= clear_hi) sample.p_region += p;
        }
        run.record.push_back(sample);

        if (std::abs(sample.norm - 1.0) > 1e-9) {
            std::ostringstream msg;
            msg << "evolve_packet: norm drift " << std::abs(sample.norm - 1.0) << " at t=" << t;
            throw std::runtime_error(msg.str());
        }

        if (sample.p_region > 0.25) entered = true;
        if (!run.completed && entered && sample.p_region < 1e-3) {
            run.T_measured = sample.p_right;
            run.R_measured = sample.p_left;
            run.residual_near_impurity = 1.0 - sample.p_right - sample.p_left;
            run.measured_at = t;
            run.completed = true;
        }
    }

    if (!run.completed) {
        std::ostringstream msg;
        msg << "evolve_packet: packet did not clear the cavity region within duration "
            << duration << " (last region probability "
            << run.record.back().p_region << ")";
        throw IncompleteRun(msg.str(), run);
    }
    return run;
}

bool MatchReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const MatchEntry& e) { return e.pass; });
}

namespace {

/// Restrict a (possibly wider) analytic profile to the lattice sites and
/// renormalize.
Eigen::VectorXcd to_lattice_vector(const lattice::AmplitudeVector& profile,
                                   const lattice::LatticeSpec& spec) {
    Eigen::VectorXcd v(spec.n_sites);
    for (int i = 0; i < spec.n_sites; ++i) v[i] = profile.at_or_zero(spec.j_min() + i);
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("match_bound_states: prediction profile has no support on the lattice");
    return v / n;
}

}  // namespace

MatchReport match_bound_states(const SpectrumResult& spectrum,
                               const std::vector<spectral::BoundStateSolution>& predictions,
                               const MatchTolerances& tol) {
    MatchReport report;
    std::vector<bool> used(static_cast<std::size_t>(spectrum.eigenvalues.size()), false);

    for (const auto& pred : predictions) {
        MatchEntry entry;
        entry.predicted_energy = pred.energy;

        Eigen::Index best = -1;
        double best_err = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            const double err = std::abs(spectrum.eigenvalues[i] - pred.energy);
            if (err < best_err) {
                best_err = err;
                best = i;
            }
        }
        if (best < 0 || best_err > tol.energy_abs) {
            if (best >= 0) {
                entry.matched_energy = spectrum.eigenvalues[best];
                entry.energy_error = best_err;
            }
            report.entries.push_back(entry);  // unmatched: failure entry
            continue;
        }
        used[static_cast<std::size_t>(best)] = true;

        entry.matched = true;
        entry.matched_energy = spectrum.eigenvalues[best];
        entry.energy_error = best_err;

        const Eigen::VectorXcd v = to_lattice_vector(pred.profile, spectrum.spec);
        const double cluster_tol =
            tol.degeneracy_cluster * std::max(1.0, std::abs(spectrum.eigenvalues[best]));
        double fidelity = 0.0;
        for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i) {
            if (std::abs(spectrum.eigenvalues[i] - spectrum.eigenvalues[best]) > cluster_tol)
                continue;
            fidelity += std::norm(spectrum.eigenvectors.col(i).cast<std::complex<double>>().dot(v));
        }
        entry.fidelity = fidelity;
        entry.pass = entry.fidelity >= tol.fidelity_min;
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace cca::oracle
