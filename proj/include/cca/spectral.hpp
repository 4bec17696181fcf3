#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "cca/lattice.hpp"

namespace cca::spectral {

enum class Parity { even, odd };
enum class BandSide { above_band, below_band };

/// Normalizable eigenstate outside the band, exponentially localized at the
/// detuned cavities. `decay` is |mu| for the single-cavity state
/// (c_j ~ mu^|j|) and y for the two-cavity states (c_j ~ e^{-y|j|} wings).
struct BoundStateSolution {
    double energy = 0.0;
    double decay = 0.0;
    Parity parity = Parity::even;
    BandSide location = BandSide::above_band;
    lattice::AmplitudeVector profile;  // unit-normalized
    double mu = 0.0;                   // signed mu, single-cavity case only
};

/// Real-wave-vector state confined strictly between two strongly detuned
/// cavities at sites -d and d; the amplitudes vanish for |j| >= d.
struct ResonantStateSolution {
    double x = 0.0;  // wave vector: m pi / d (odd) or (2m+1) pi / (2d) (even)
    Parity parity = Parity::odd;
    int mode_index = 0;
    double energy = 0.0;
    lattice::AmplitudeVector profile;  // unit-normalized
    std::optional<double> regime_ratio;  // lambda0 omega_c / (2J)
    std::optional<bool> regime_ok;
};

enum class RootSign { positive, negative };
enum class XClass { x_even_pi, x_odd_pi, y_zero };

/// One branch of the two-cavity quantization condition
///   e^{2ikd} = +/- (1 - i (2J / lambda0 omega_c) sin k),   k = x + i y,
/// selected by the root sign and by the class of the real part x.
struct QuantizationBranch {
    RootSign root_sign = RootSign::positive;
    XClass x_class = XClass::x_even_pi;
};

enum class StateKind { no_state, odd_bound, even_bound, odd_resonant, even_resonant };

/// Case table mapping (root sign, x class, sign of lambda0) to the kind of
/// state the branch supports.
StateKind classify(const QuantizationBranch& branch, double lambda0);

struct NoState {
    enum class Reason { zero_only_wrong_sign, zero_only_weak_detuning };
    Reason reason;
};

using QuantizationResult = std::variant<BoundStateSolution, NoState>;

/// Solve a bound branch's transcendental equation for the decay y > 0 by
/// bracketed Brent iteration (|f| < 1e-12 at the root) and build the
/// classified state. Branches whose only root is y = 0 (identically zero
/// wave function) come back as NoState with a reason code. The y_zero class
/// is rejected here; use resonant_state for it.
/// window < 0 selects an automatic window (tail mass < 1e-12, capped at 1e5).
QuantizationResult quantization_solve(const QuantizationBranch& branch, double lambda0,
                                      int d, const lattice::LatticeSpec& spec,
                                      int window = -1);

/// Left-hand side of the finite-lattice pole condition
///   (lambda omega_c / N) sum_k 1 / (omega - Omega_k) = 1.
double band_pole_function(double omega, double lambda, const lattice::LatticeSpec& spec);

/// All real roots of the pole condition, bracketed between consecutive
/// distinct poles Omega_k plus one out-of-band bracket on the side set by
/// sign(lambda); ascending. Throws on lambda = 0 or a bracketing failure.
std::vector<double> band_pole_roots(double lambda, const lattice::LatticeSpec& spec);

/// The analytic single-cavity bound state:
///   mu satisfies -J mu^2 + lambda omega_c mu + J = 0,
///   omega = omega_c +/- sqrt(4 J^2 + (lambda omega_c)^2),
///   c_j = A mu^|j| (signed mu; the probability profile is |mu|^{2|j|}).
BoundStateSolution bound_state_single(double lambda, const lattice::LatticeSpec& spec,
                                      int window = -1);

/// Two-cavity bound-state profile for decay y on sites [-window, window]:
/// odd:  (e^{2dy}-1) e^{y j} left wing, -2 sinh(y j) inside, mirrored right;
/// even: (e^{2dy}+1) wings with 2 cosh(y j) inside. `staggered` multiplies
/// by (-1)^j for the above-band states. Unit-normalized, exact parity.
lattice::AmplitudeVector bound_profile_double(double y, int d, Parity parity, int window,
                                              bool staggered = false);

/// Confined state between cavities at -d and d:
/// odd:  c_j ~ sin(m pi j / d),  x = m pi / d       (m mod d != 0);
/// even: c_j ~ cos((2m+1) pi j / (2d)),  x = (2m+1) pi / (2d).
/// Zero outside |j| < d; energy omega_c - 2 J cos x.
ResonantStateSolution resonant_state(int m, int d, Parity parity,
                                     const lattice::LatticeSpec& spec);

/// Same, with the strong-detuning validity flag filled in:
/// regime_ok when lambda0 omega_c / (2J) >= threshold.
ResonantStateSolution resonant_state(int m, int d, Parity parity,
                                     const lattice::LatticeSpec& spec, double lambda0,
                                     double threshold = 50.0);

/// Coefficient ratios of the two-cavity bound ansatz at complex k, and the
/// magnitude of the quantization defect
///   (lambda0 omega_c)^2 e^{4ikd} - (lambda0 omega_c - 2 i J sin k)^2,
/// which vanishes exactly at a quantized wave vector.
struct CoefficientRatios {
    std::complex<double> a_over_b;
    std::complex<double> c_over_b;  // from the left-cavity match
    std::complex<double> d_over_b;
    double quantization_residual = 0.0;
};
CoefficientRatios coefficient_ratios(std::complex<double> k, double lambda0, int d,
                                     const lattice::LatticeSpec& spec);

}  // namespace cca::spectral
