#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <variant>

#include "cca/lattice.hpp"
#include "cca/oracle.hpp"
#include "cca/spectral.hpp"

using namespace cca;
using spectral::BandSide;
using spectral::BoundStateSolution;
using spectral::NoState;
using spectral::Parity;
using spectral::QuantizationBranch;
using spectral::RootSign;
using spectral::StateKind;
using spectral::XClass;

namespace {

constexpr double kPi = std::numbers::pi;

lattice::LatticeSpec ring(int n, std::vector<lattice::Impurity> imps = {}) {
    lattice::LatticeSpec spec;
    spec.n_sites = n;
    spec.omega_c = 1.0;
    spec.hopping = 0.01;
    spec.impurities = std::move(imps);
    return spec;
}

}  // namespace

TEST_CASE("pole-condition roots sit on one side of the band and in the gaps") {
    for (const double lam : {0.2, -0.2}) {
        const auto spec = ring(21, {{0, lam}});
        const auto roots = spectral::band_pole_roots(lam, spec);
        REQUIRE(roots.size() == 11);  // (N+1)/2 states couple to the detuned cavity

        int above = 0, below = 0;
        for (const double r : roots) {
            if (r > 1.02) ++above;
            if (r < 0.98) ++below;
        }
        CHECK(above == (lam > 0 ? 1 : 0));
        CHECK(below == (lam < 0 ? 1 : 0));

        // exact finite-lattice condition: every root is an eigenvalue
        const auto spectrum = oracle::diagonalize(spec);
        for (const double r : roots) {
            double best = 1e9;
            for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
                best = std::min(best, std::abs(spectrum.eigenvalues[i] - r));
            CHECK(best < 1e-9);
        }
    }
}

TEST_CASE("pole condition rejects lambda = 0") {
    CHECK_THROWS_AS(spectral::band_pole_roots(0.0, ring(21)), std::invalid_argument);
}

TEST_CASE("frozen single-cavity bound state at lambda = +/-0.2") {
    const auto spec = ring(201, {{0, 0.2}});
    const auto above = spectral::bound_state_single(0.2, spec);
    CHECK(above.energy == doctest::Approx(1.200997512422418).epsilon(1e-12));
    CHECK(above.decay == doctest::Approx(0.04987562112089006).epsilon(1e-12));
    CHECK(above.mu < 0.0);
    CHECK(above.location == BandSide::above_band);
    CHECK(above.parity == Parity::even);
    CHECK(above.energy > spec.omega_c + 2.0 * spec.hopping);

    const auto below = spectral::bound_state_single(-0.2, spec);
    CHECK(below.energy == doctest::Approx(0.7990024875775822).epsilon(1e-12));
    CHECK(below.mu > 0.0);
    CHECK(below.location == BandSide::below_band);
    CHECK(below.energy < spec.omega_c - 2.0 * spec.hopping);

    // mu_+(|lambda|) = -mu_-(-|lambda|): identical probability profiles
    CHECK(above.mu == -below.mu);
    CHECK(std::abs(above.profile.at(1) / above.profile.at(0)) ==
          doctest::Approx(0.04987562112089006).epsilon(1e-12));

    // localized at the detuned cavity, even parity exact
    for (int j = 1; j <= above.profile.j_max(); ++j) {
        CHECK(above.profile.at(j) == above.profile.at(-j));
        CHECK(std::norm(above.profile.at(j)) < std::norm(above.profile.at(0)));
    }
    CHECK(std::abs(above.profile.norm() - 1.0) < 1e-12);

    CHECK_THROWS_AS(spectral::bound_state_single(0.0, spec), std::invalid_argument);
}

TEST_CASE("analytic bound profile satisfies the recurrence at its energy") {
    for (const double lam : {0.2, -0.2}) {
        lattice::LatticeSpec window_spec;
        window_spec.n_sites = 81;
        window_spec.hopping = 0.01;
        window_spec.boundary = lattice::Boundary::open;
        window_spec.impurities = {{0, lam}};
        const auto state = spectral::bound_state_single(lam, window_spec, 40);
        const auto res =
            lattice::recurrence_residual(state.profile, state.energy, window_spec);
        for (const double r : res) CHECK(r < 1e-10);
    }
}

TEST_CASE("classification table for the quantization branches") {
    CHECK(spectral::classify({RootSign::positive, XClass::x_even_pi}, -0.2) ==
          StateKind::odd_bound);
    CHECK(spectral::classify({RootSign::positive, XClass::x_even_pi}, +0.2) ==
          StateKind::no_state);
    CHECK(spectral::classify({RootSign::positive, XClass::x_odd_pi}, +0.2) ==
          StateKind::odd_bound);
    CHECK(spectral::classify({RootSign::positive, XClass::x_odd_pi}, -0.2) ==
          StateKind::no_state);
    CHECK(spectral::classify({RootSign::negative, XClass::x_even_pi}, -0.2) ==
          StateKind::even_bound);
    CHECK(spectral::classify({RootSign::negative, XClass::x_even_pi}, +0.2) ==
          StateKind::no_state);
    CHECK(spectral::classify({RootSign::negative, XClass::x_odd_pi}, +0.2) ==
          StateKind::even_bound);
    CHECK(spectral::classify({RootSign::negative, XClass::x_odd_pi}, -0.2) ==
          StateKind::no_state);
    CHECK(spectral::classify({RootSign::positive, XClass::y_zero}, 0.2) ==
          StateKind::odd_resonant);
    CHECK(spectral::classify({RootSign::negative, XClass::y_zero}, 0.2) ==
          StateKind::even_resonant);
}

TEST_CASE("frozen quantization roots at |lambda0| = 0.2, d = 5") {
    const auto spec = ring(201, {{-5, -0.2}, {5, -0.2}});

    const auto odd_result = spectral::quantization_solve(
        {RootSign::positive, XClass::x_even_pi}, -0.2, 5, spec);
    REQUIRE(std::holds_alternative<BoundStateSolution>(odd_result));
    const auto& odd = std::get<BoundStateSolution>(odd_result);
    CHECK(odd.decay == doctest::Approx(2.9982229502978752).epsilon(1e-10));
    CHECK(odd.energy == doctest::Approx(0.7990024875776011).epsilon(1e-12));
    CHECK(odd.parity == Parity::odd);
    CHECK(odd.location == BandSide::below_band);
    CHECK(std::abs(odd.decay - std::asinh(10.0)) < 1e-10);  // large-2dy limit

    const auto even_result = spectral::quantization_solve(
        {RootSign::negative, XClass::x_even_pi}, -0.2, 5, spec);
    REQUIRE(std::holds_alternative<BoundStateSolution>(even_result));
    const auto& even = std::get<BoundStateSolution>(even_result);
    CHECK(even.decay == doctest::Approx(2.9982229502980644).epsilon(1e-10));
    CHECK(even.parity == Parity::even);
    CHECK(std::abs(odd.decay - even.decay) < 1e-6);

    const auto none = spectral::quantization_solve(
        {RootSign::positive, XClass::x_even_pi}, +0.2, 5, spec);
    REQUIRE(std::holds_alternative<NoState>(none));
    CHECK(std::get<NoState>(none).reason == NoState::Reason::zero_only_wrong_sign);

    // mirrored branch above the band for positive detuning
    const auto above_result = spectral::quantization_solve(
        {RootSign::positive, XClass::x_odd_pi}, +0.2, 5, spec);
    REQUIRE(std::holds_alternative<BoundStateSolution>(above_result));
    const auto& above = std::get<BoundStateSolution>(above_result);
    CHECK(above.energy == doctest::Approx(1.2009975124223988).epsilon(1e-12));
    CHECK(above.location == BandSide::above_band);
    CHECK(above.parity == Parity::odd);
}

TEST_CASE("weak detuning keeps only the trivial root on the positive branch") {
    const auto spec = ring(21, {{-1, -0.005}, {1, -0.005}});
    const auto result = spectral::quantization_solve(
        {RootSign::positive, XClass::x_even_pi}, -0.005, 1, spec);
    REQUIRE(std::holds_alternative<NoState>(result));
    CHECK(std::get<NoState>(result).reason == NoState::Reason::zero_only_weak_detuning);

    // the even branch has no such threshold
    const auto even = spectral::quantization_solve(
        {RootSign::negative, XClass::x_even_pi}, -0.005, 1, spec);
    CHECK(std::holds_alternative<BoundStateSolution>(even));
}

TEST_CASE("quantization rejects invalid arguments") {
    const auto spec = ring(21);
    CHECK_THROWS_AS(spectral::quantization_solve({RootSign::positive, XClass::y_zero}, -0.2,
                                                 5, spec),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral::quantization_solve({RootSign::positive, XClass::x_even_pi},
                                                 0.0, 5, spec),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral::quantization_solve({RootSign::positive, XClass::x_even_pi},
                                                 -0.2, 0, spec),
                    std::invalid_argument);
}

TEST_CASE("two-cavity bound profiles satisfy the recurrence including the cavities") {
    struct Case {
        RootSign sign;
        double lambda0;
    };
    for (const Case c : {Case{RootSign::positive, -0.2}, Case{RootSign::negative, -0.2}}) {
        lattice::LatticeSpec window_spec;
        window_spec.n_sites = 81;
        window_spec.hopping = 0.01;
        window_spec.boundary = lattice::Boundary::open;
        window_spec.impurities = {{-5, c.lambda0}, {5, c.lambda0}};
        const auto result = spectral::quantization_solve({c.sign, XClass::x_even_pi},
                                                         c.lambda0, 5, window_spec, 40);
        REQUIRE(std::holds_alternative<BoundStateSolution>(result));
        const auto& state = std::get<BoundStateSolution>(result);
        const auto res =
            lattice::recurrence_residual(state.profile, state.energy, window_spec);
        for (const double r : res) CHECK(r < 1e-9);
    }

    // staggered above-band state for positive detuning
    lattice::LatticeSpec window_spec;
    window_spec.n_sites = 81;
    window_spec.hopping = 0.01;
    window_spec.boundary = lattice::Boundary::open;
    window_spec.impurities = {{-5, 0.2}, {5, 0.2}};
    const auto result = spectral::quantization_solve({RootSign::positive, XClass::x_odd_pi},
                                                     0.2, 5, window_spec, 40);
    REQUIRE(std::holds_alternative<BoundStateSolution>(result));
    const auto& state = std::get<BoundStateSolution>(result);
    const auto res = lattice::recurrence_residual(state.profile, state.energy, window_spec);
    for (const double r : res) CHECK(r < 1e-9);
}

TEST_CASE("bound profile peaks at the two detuned cavities") {
    const auto c = spectral::bound_profile_double(2.9982229502978752, 5, Parity::odd, 40);
    double peak = 0.0;
    int peak_site = 0;
    for (int j = -40; j <= 40; ++j) {
        if (std::norm(c.at(j)) > peak) {
            peak = std::norm(c.at(j));
            peak_site = std::abs(j);
        }
    }
    CHECK(peak_site == 5);
    for (int j = 1; j <= 40; ++j) CHECK(c.at(-j) == -c.at(j));
}

TEST_CASE("resonant states carry the quantized wave vectors and hard walls") {
    const auto spec = ring(21);
    const auto odd = spectral::resonant_state(2, 5, Parity::odd, spec);
    CHECK(odd.x == doctest::Approx(2.0 * kPi / 5.0).epsilon(1e-15));
    CHECK(odd.energy == doctest::Approx(0.993819660112501).epsilon(1e-12));
    const auto even = spectral::resonant_state(2, 5, Parity::even, spec);
    CHECK(even.x == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(even.energy == doctest::Approx(1.0).epsilon(1e-12));

    for (const auto* state : {&odd, &even}) {
        for (int j = state->profile.j_min; j <= state->profile.j_max(); ++j)
            if (std::abs(j) >= 5) CHECK(std::abs(state->profile.at(j)) == 0.0);
        CHECK(std::abs(state->profile.norm() - 1.0) < 1e-12);
    }
    for (int j = 1; j <= odd.profile.j_max(); ++j) {
        CHECK(odd.profile.at(-j) == -odd.profile.at(j));
        CHECK(even.profile.at(-j) == even.profile.at(j));
    }

    CHECK_THROWS_AS(spectral::resonant_state(5, 5, Parity::odd, spec), std::invalid_argument);
    CHECK_THROWS_AS(spectral::resonant_state(0, 5, Parity::odd, spec), std::invalid_argument);

    const auto flagged = spectral::resonant_state(2, 5, Parity::odd, spec, 0.2);
    CHECK(flagged.regime_ratio == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(flagged.regime_ok == false);
    const auto strong = spectral::resonant_state(2, 5, Parity::odd, spec, 1.0);
    CHECK(strong.regime_ok == true);
}

TEST_CASE("coefficient ratios at and away from quantized wave vectors") {
    const auto spec = ring(21);

    // at the frozen decay root the quantization defect vanishes
    const auto at_root = spectral::coefficient_ratios({0.0, 2.9982229502978752}, -0.2, 5, spec);
    CHECK(at_root.quantization_residual < 1e-9);
    // A/B = -D/B and C/B = -1 on the positive-root branch
    CHECK(std::abs(at_root.a_over_b + at_root.d_over_b) / std::abs(at_root.a_over_b) < 1e-9);
    CHECK(std::abs(at_root.c_over_b + 1.0) < 1e-9);

    // strong-detuning resonant limit: interior dominates
    const double lam0 = 1000.0 * 2.0 * spec.hopping / spec.omega_c;
    const auto res = spectral::coefficient_ratios({2.0 * kPi / 5.0, 0.0}, lam0, 5, spec);
    CHECK(std::abs(res.a_over_b) < 2e-3);
    CHECK(std::abs(res.d_over_b) < 2e-3);
    CHECK(std::abs(res.c_over_b + 1.0) < 2e-3);

    // generic complex k far from any root
    const auto off = spectral::coefficient_ratios({0.5, 0.3}, 0.1, 5, spec);
    CHECK(off.quantization_residual > 1e-6);
}
