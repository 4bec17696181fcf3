#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace cca::lattice {

enum class Boundary { periodic, open };

/// A detuned cavity: site index j and dimensionless detuning lambda,
/// giving the on-site frequency (1 + lambda) * omega_c.
struct Impurity {
    int site = 0;
    double detuning = 0.0;
};

/// Model definition for a 1D coupled-cavity chain with nearest-neighbor
/// hopping -J and zero or more detuned cavities. Sites carry signed
/// indices j in [-(N-1)/2, (N-1)/2]; the inter-cavity distance is unity.
struct LatticeSpec {
    int n_sites = 21;
    double omega_c = 1.0;
    double hopping = 0.01;
    std::vector<Impurity> impurities;
    Boundary boundary = Boundary::periodic;

    int j_min() const { return -(n_sites - 1) / 2; }
    int j_max() const { return (n_sites - 1) / 2; }

    /// Detuning lambda at site j (0 for undetuned cavities).
    double detuning_at(int j) const;

    /// Throws std::invalid_argument on any violated invariant:
    /// N odd and >= 3, positive omega_c, J >= 0, impurity sites in range
    /// and distinct, every detuning >= -1.
    void validate() const;
};

/// Single-excitation amplitudes c_j on a contiguous window of sites
/// [j_min, j_min + size - 1]. Used both for finite-lattice eigenstates
/// (unit norm) and for scattering solutions (incident amplitude 1).
struct AmplitudeVector {
    int j_min = 0;
    Eigen::VectorXcd values;

    AmplitudeVector() = default;
    AmplitudeVector(int first_site, Eigen::Index n)
        : j_min(first_site), values(Eigen::VectorXcd::Zero(n)) {}

    int j_max() const { return j_min + static_cast<int>(values.size()) - 1; }
    Eigen::Index size() const { return values.size(); }
    bool contains(int j) const { return j >= j_min && j <= j_max(); }

    std::complex<double>& at(int j) { return values[j - j_min]; }
    const std::complex<double>& at(int j) const { return values[j - j_min]; }

    /// Amplitude at j, zero outside the window.
    std::complex<double> at_or_zero(int j) const {
        return contains(j) ? values[j - j_min] : std::complex<double>(0.0, 0.0);
    }

    double norm() const { return values.norm(); }
    void normalize();
};

/// Dense single-excitation Hamiltonian: diagonal (1 + lambda_j) * omega_c,
/// -J on nearest neighbors, and -J corner entries for periodic boundary.
Eigen::MatrixXd build_hamiltonian(const LatticeSpec& spec);

/// Band dispersion Omega_k = omega_c - 2 J cos(k).
double dispersion(double k, const LatticeSpec& spec);

/// Allowed wave vectors k = 2 pi n / N with -N/2 < n <= N/2 (periodic
/// boundary only), ascending. Throws for an open chain.
std::vector<double> k_grid(const LatticeSpec& spec);

/// Per-site magnitude of -J (c_{j+1} + c_{j-1}) - [omega - (1+lambda_j) omega_c] c_j,
/// the eigen-equation defect. Neighbors wrap when the window covers a full
/// periodic lattice; otherwise sites beyond the window contribute zero.
std::vector<double> recurrence_residual(const AmplitudeVector& c, double omega,
                                        const LatticeSpec& spec);

/// Unitary transform to the wave-vector basis over k_grid(spec):
/// c_k = (1/sqrt(N)) sum_j exp(i k j) c_j. Requires a periodic spec and a
/// window that covers the whole lattice.
Eigen::VectorXcd dft_amplitudes(const AmplitudeVector& c, const LatticeSpec& spec);

/// Inverse of dft_amplitudes.
AmplitudeVector inverse_dft(const Eigen::VectorXcd& ck, const LatticeSpec& spec);

}  // namespace cca::lattice
