#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cca/hardware.hpp"

using namespace cca;
using hardware::Rational;

namespace {

constexpr double kPi = std::numbers::pi;

hardware::HardwareParams scaled_params(double ej, double flux, double cs) {
    hardware::HardwareParams p;
    p.josephson_energy = ej;
    p.reduced_flux = flux;
    p.junction_capacitance = cs;
    p.length = 1.0;
    p.capacitance_per_length = 1.0;
    p.inductance_per_length = 1.0;
    p.flux_quantum = 1.0;
    return p;
}

}  // namespace

TEST_CASE("effective Josephson energy markers and symmetries") {
    CHECK(hardware::effective_josephson_energy(1.5, 0.0).value == 3.0);
    CHECK(std::abs(hardware::effective_josephson_energy(1.0, kPi).value) < 1e-15);
    CHECK(hardware::effective_josephson_energy(1.0, kPi / 2).value ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const auto negative = hardware::effective_josephson_energy(1.0, 1.5 * kPi);
    CHECK(negative.value < 0.0);
    CHECK_FALSE(negative.harmonic_regime);

    CHECK(hardware::effective_josephson_energy(1.0, 0.7).value ==
          hardware::effective_josephson_energy(1.0, -0.7).value);
    CHECK(hardware::effective_josephson_energy(1.0, 0.7).value ==
          doctest::Approx(hardware::effective_josephson_energy(1.0, 0.7 + 4.0 * kPi).value)
              .epsilon(1e-12));
}

TEST_CASE("dispersion roots reach u = m pi in the unloaded limit") {
    const auto result = hardware::dispersion_roots(scaled_params(1e-300, 0.0, 0.0), 4);
    REQUIRE(result.roots.size() == 4);
    for (const auto& root : result.roots) {
        CHECK(root.branch >= 1);
        CHECK(std::abs(root.u - root.branch * kPi) < 1e-12);
        CHECK(root.residual < 1e-10);
    }
    REQUIRE(!result.empty_branches.empty());
    CHECK(result.empty_branches.front() == 0);  // the u -> 0 branch carries no mode
}

TEST_CASE("large load pushes roots toward the tangent poles") {
    const auto result = hardware::dispersion_roots(scaled_params(1e4, 0.0, 0.0), 3);
    REQUIRE(result.roots.size() == 3);
    for (const auto& root : result.roots) {
        CHECK(root.u > (root.branch + 0.25) * kPi);
        CHECK(root.u < (root.branch + 0.5) * kPi);
    }
}

TEST_CASE("roots interlace the tangent branches and move down with flux") {
    std::vector<double> previous;
    for (const double f : {0.0, 0.3 * kPi, 0.6 * kPi, 0.9 * kPi}) {
        const auto result = hardware::dispersion_roots(scaled_params(1.0, f, 0.1), 4);
        REQUIRE(result.roots.size() == 4);
        std::vector<double> us;
        for (const auto& root : result.roots) {
            const double lo = root.branch == 0 ? 0.0 : (root.branch - 0.5) * kPi;
            CHECK(root.u > lo);
            CHECK(root.u < (root.branch + 0.5) * kPi);
            us.push_back(root.u);
        }
        for (std::size_t i = 0; i + 1 < us.size(); ++i) CHECK(us[i] < us[i + 1]);
        if (!previous.empty()) {
            for (std::size_t i = 0; i < us.size(); ++i) CHECK(us[i] < previous[i]);
        }
        previous = us;
    }
}

TEST_CASE("negative effective energy yields a regime warning instead of roots") {
    const auto result = hardware::dispersion_roots(scaled_params(1.0, 1.5 * kPi, 0.0), 3);
    CHECK(result.roots.empty());
    REQUIRE(result.regime_warning.has_value());
}

TEST_CASE("effective inductance limits, growth, and failure modes") {
    const double ic = 1e-6;

    // small-current limit: Phi_0 / (4 pi I_c) at zero SQUID flux
    const double limit = hardware::kFluxQuantum / (4.0 * kPi * ic);
    const double at_small = hardware::effective_inductance(1e-16, ic, 0.0);
    CHECK(std::abs(at_small - limit) / limit < 1e-12);

    // continuity across the series/arcsine switchover at |z| = 1e-6
    const double ic_eff = hardware::squid_critical_current(ic, 0.3);
    const double below = hardware::effective_inductance(ic_eff * 0.99999999e-6, ic, 0.3);
    const double above = hardware::effective_inductance(ic_eff * 1.00000001e-6, ic, 0.3);
    CHECK(std::abs(below - above) / below < 1e-12);

    // strictly increasing in |I| on (0, I_c(phi_x))
    double last = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double value = hardware::effective_inductance(0.1 * i * ic_eff, ic, 0.3);
        CHECK(value > last);
        last = value;
    }

    CHECK_THROWS_AS(hardware::effective_inductance(3e-6, ic, 0.0), std::domain_error);
    CHECK_THROWS_AS(hardware::effective_inductance(1e-9, ic, kPi), std::runtime_error);
}

TEST_CASE("decimal parsing produces exact rationals") {
    CHECK(hardware::parse_decimal("4.8") == Rational(24, 5));
    CHECK(hardware::parse_decimal("-0.125") == Rational(-1, 8));
    CHECK(hardware::parse_decimal("4.8e9") == Rational(4800000000LL));
    CHECK(hardware::parse_decimal("1e-3") == Rational(1, 1000));
    CHECK(hardware::parse_decimal("+7") == Rational(7));
    CHECK_THROWS_AS(hardware::parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(hardware::parse_decimal("4.8x"), std::invalid_argument);
    CHECK_THROWS_AS(hardware::parse_decimal("12345678901234567890123"), std::invalid_argument);
}

TEST_CASE("detuning range is exact where doubles are not") {
    const auto up = hardware::detuning_range(Rational(4), Rational(24, 5), Rational(4));
    CHECK(up.lo == Rational(0));
    CHECK(up.hi == Rational(1, 5));
    CHECK(boost::rational_cast<double>(up.hi) == 0.2);

    // referencing the top of the window gives exactly -1/6, not a rounded -0.2
    const auto down = hardware::detuning_range(Rational(4), Rational(24, 5), Rational(24, 5));
    CHECK(down.lo == Rational(-1, 6));
    CHECK(down.hi == Rational(0));

    const auto degenerate = hardware::detuning_range(Rational(3), Rational(3), Rational(3));
    CHECK(degenerate.lo == Rational(0));
    CHECK(degenerate.hi == Rational(0));

    CHECK_THROWS_AS(hardware::detuning_range(Rational(0), Rational(1), Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hardware::detuning_range(Rational(2), Rational(1), Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hardware::detuning_range(Rational(1), Rational(2), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("hopping scale flags the weak-coupling reference window") {
    const auto typical = hardware::hopping_scale_check(2.0 * kPi * 44e6, 2.0 * kPi * 4.4e9);
    CHECK(typical.ratio == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(typical.reference_regime);

    CHECK_FALSE(hardware::hopping_scale_check(0.0, 1.0).reference_regime);
    CHECK_FALSE(hardware::hopping_scale_check(0.05, 1.0).reference_regime);
    CHECK(hardware::hopping_scale_check(0.01, 1.0).reference_regime);
    CHECK_THROWS_AS(hardware::hopping_scale_check(1.0, 0.0), std::invalid_argument);
}
