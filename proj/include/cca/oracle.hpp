#pragma once

#include <stdexcept>
#include <vector>

#include "cca/lattice.hpp"
#include "cca/spectral.hpp"

namespace cca::oracle {

/// Full spectrum of the finite chain: eigenvalues ascending, orthonormal
/// eigenvectors as matrix columns with a deterministic sign convention
/// (largest-magnitude component positive).
struct SpectrumResult {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    lattice::LatticeSpec spec;
};

/// Dense symmetric diagonalization of build_hamiltonian(spec).
/// Throws std::invalid_argument for N > 1e4 and std::runtime_error on
/// eigensolver non-convergence.
SpectrumResult diagonalize(const lattice::LatticeSpec& spec);

struct PacketSample {
    double t = 0.0;
    double norm = 0.0;
    double p_left = 0.0;    // left of the leftmost detuned cavity
    double p_region = 0.0;  // clearance window around the cavities
    double p_right = 0.0;   // right of the rightmost detuned cavity
};

/// Time-domain scattering of a Gaussian packet
///   psi_j(0) ~ exp(-(j - x0)^2 / (4 sigma^2)) exp(i k0 j),
/// evolved exactly by spectral decomposition. The run records probabilities
/// over time and measures T/R once the packet clears the cavity region.
struct WavepacketRun {
    double k0 = 0.0;
    double width = 0.0;
    int launch_site = 0;
    double duration = 0.0;
    std::vector<PacketSample> record;
    double T_measured = 0.0;
    double R_measured = 0.0;
    double residual_near_impurity = 0.0;
    double measured_at = -1.0;
    bool completed = false;
};

/// Thrown when the packet has not cleared the cavity region by `duration`;
/// carries the partial run.
struct IncompleteRun : std::runtime_error {
    IncompleteRun(const std::string& what, WavepacketRun run)
        : std::runtime_error(what), partial(std::move(run)) {}
    WavepacketRun partial;
};

/// Evolve a packet on an open chain. Requires k0 in (0, pi), initial
/// amplitude below 1e-8 at every detuned cavity, and an open boundary.
WavepacketRun evolve_packet(const lattice::LatticeSpec& spec, double k0, double width,
                            int launch_site, double duration, int n_samples = 400);

struct MatchTolerances {
    double energy_abs = 1e-9;
    double fidelity_min = 1.0 - 1e-6;
    // eigenvalues closer than this (relative to max(1, |E|)) are treated as
    // one degenerate cluster when computing fidelity
    double degeneracy_cluster = 1e-10;
};

struct MatchEntry {
    double predicted_energy = 0.0;
    double matched_energy = 0.0;
    double energy_error = 0.0;
    double fidelity = 0.0;
    bool matched = false;
    bool pass = false;
};

struct MatchReport {
    std::vector<MatchEntry> entries;
    bool all_pass() const;
};

/// Greedy nearest-energy matching of predicted bound states against the
/// numerical spectrum; fidelity is the squared overlap with the matched
/// eigenvector (projected onto the eigenspace for degenerate clusters).
/// An unmatched prediction yields a failing entry, not an exception.
MatchReport match_bound_states(const SpectrumResult& spectrum,
                               const std::vector<spectral::BoundStateSolution>& predictions,
                               const MatchTolerances& tol = {});

}  // namespace cca::oracle
