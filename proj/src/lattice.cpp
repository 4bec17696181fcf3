#include "cca/lattice.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace cca::lattice {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

double LatticeSpec::detuning_at(int j) const {
    for (const auto& imp : impurities) {
        if (imp.site == j) return imp.detuning;
    }
    return 0.0;
}

void LatticeSpec::validate() const {
    if (n_sites < 3 || n_sites % 2 == 0)
        throw std::invalid_argument("lattice: n_sites must be odd and >= 3, got " +
                                    std::to_string(n_sites));
    if (!(omega_c > 0.0))
        throw std::invalid_argument("lattice: omega_c must be positive");
    if (!(hopping >= 0.0))
        throw std::invalid_argument("lattice: hopping J must be nonnegative");
    std::set<int> seen;
    for (const auto& imp : impurities) {
        if (imp.site < j_min() || imp.site > j_max())
            throw std::invalid_argument("lattice: impurity site " + std::to_string(imp.site) +
                                        " outside [" + std::to_string(j_min()) + ", " +
                                        std::to_string(j_max()) + "]");
        if (!seen.insert(imp.site).second)
            throw std::invalid_argument("lattice: duplicate impurity site " +
                                        std::to_string(imp.site));
        if (imp.detuning < -1.0)
            throw std::invalid_argument("lattice: detuning < -1 makes the cavity frequency negative");
    }
}

void AmplitudeVector::normalize() {
    const double n = values.norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero amplitude vector");
    values /= n;
}

Eigen::MatrixXd build_hamiltonian(const LatticeSpec& spec) {
    spec.validate();
    const int n = spec.n_sites;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int j = spec.j_min() + i;
        h(i, i) = (1.0 + spec.detuning_at(j)) * spec.omega_c;
        if (i + 1 < n) {
            h(i, i + 1) = -spec.hopping;
            h(i + 1, i) = -spec.hopping;
        }
    }
    if (spec.boundary == Boundary::periodic) {
        h(0, n - 1) = -spec.hopping;
        h(n - 1, 0) = -spec.hopping;
    }
    return h;
}

double dispersion(double k, const LatticeSpec& spec) {
    return spec.omega_c - 2.0 * spec.hopping * std::cos(k);
}

std::vector<double> k_grid(const LatticeSpec& spec) {
    spec.validate();
    if (spec.boundary != Boundary::periodic)
        throw std::invalid_argument("k_grid: undefined for an open chain");
    std::vector<double> ks;
    ks.reserve(spec.n_sites);
    for (int n = spec.j_min(); n <= spec.j_max(); ++n)
        ks.push_back(2.0 * std::numbers::pi * n / spec.n_sites);
    return ks;
}

std::vector<double> recurrence_residual(const AmplitudeVector& c, double omega,
                                        const LatticeSpec& spec) {
    const bool wrap = spec.boundary == Boundary::periodic &&
                      c.size() == spec.n_sites && c.j_min == spec.j_min();
    std::vector<double> res;
    res.reserve(static_cast<std::size_t>(c.size()));
    for (int j = c.j_min; j <= c.j_max(); ++j) {
        std::complex<double> left, right;
        if (wrap) {
            left = c.at(j - 1 < c.j_min ? c.j_max() : j - 1);
            right = c.at(j + 1 > c.j_max() ? c.j_min : j + 1);
        } else {
            left = c.at_or_zero(j - 1);
            right = c.at_or_zero(j + 1);
        }
        const double onsite = (1.0 + spec.detuning_at(j)) * spec.omega_c;
        const std::complex<double> defect =
            -spec.hopping * (right + left) - (omega - onsite) * c.at(j);
        res.push_back(std::abs(defect));
    }
    return res;
}

Eigen::VectorXcd dft_amplitudes(const AmplitudeVector& c, const LatticeSpec& spec) {
    if (spec.boundary != Boundary::periodic)
        throw std::invalid_argument("dft_amplitudes: undefined for an open chain");
    if (c.size() != spec.n_sites || c.j_min != spec.j_min())
        throw std::invalid_argument("dft_amplitudes: window must cover the full lattice");
    const auto ks = k_grid(spec);
    const double scale = 1.0 / std::sqrt(static_cast<double>(spec.n_sites));
    Eigen::VectorXcd ck(spec.n_sites);
    for (std::size_t ik = 0; ik < ks.size(); ++ik) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = c.j_min; j <= c.j_max(); ++j)
            acc += std::exp(kI * (ks[ik] * j)) * c.at(j);
        ck[static_cast<Eigen::Index>(ik)] = scale * acc;
    }
    return ck;
}

AmplitudeVector inverse_dft(const Eigen::VectorXcd& ck, const LatticeSpec& spec) {
    if (spec.boundary != Boundary::periodic)
        throw std::invalid_argument("inverse_dft: undefined for an open chain");
    if (ck.size() != spec.n_sites)
        throw std::invalid_argument("inverse_dft: expected one amplitude per k");
    const auto ks = k_grid(spec);
    const double scale = 1.0 / std::sqrt(static_cast<double>(spec.n_sites));
    AmplitudeVector c(spec.j_min(), spec.n_sites);
    for (int j = spec.j_min(); j <= spec.j_max(); ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t ik = 0; ik < ks.size(); ++ik)
            acc += std::exp(-kI * (ks[ik] * j)) * ck[static_cast<Eigen::Index>(ik)];
        c.at(j) = scale * acc;
    }
    return c;
}

}  // namespace cca::lattice
