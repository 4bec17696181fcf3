#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cca/lattice.hpp"
#include "cca/oracle.hpp"

using namespace cca;
using lattice::AmplitudeVector;
using lattice::Boundary;
using lattice::LatticeSpec;

namespace {

LatticeSpec spec21(double lambda = 0.0) {
    LatticeSpec spec;
    spec.n_sites = 21;
    spec.omega_c = 1.0;
    spec.hopping = 0.01;
    if (lambda != 0.0) spec.impurities = {{0, lambda}};
    return spec;
}

double uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

TEST_CASE("hamiltonian entries for a 3-site ring") {
    LatticeSpec spec;
    spec.n_sites = 3;
    spec.hopping = 0.01;
    auto h = lattice::build_hamiltonian(spec);
    for (int i = 0; i < 3; ++i) CHECK(h(i, i) == 1.0);
    CHECK(h(0, 1) == -0.01);
    CHECK(h(1, 2) == -0.01);
    CHECK(h(0, 2) == -0.01);  // periodic corner
    CHECK(h == h.transpose().eval());

    spec.boundary = Boundary::open;
    auto h_open = lattice::build_hamiltonian(spec);
    CHECK(h_open(0, 2) == 0.0);
    CHECK(h_open(2, 0) == 0.0);
}

TEST_CASE("detuned cavities land on the right diagonal entries") {
    auto spec = spec21(0.2);
    auto h = lattice::build_hamiltonian(spec);
    CHECK(h(10, 10) == doctest::Approx(1.2).epsilon(1e-15));  // site j=0
    for (int i = 0; i < 21; ++i)
        if (i != 10) CHECK(h(i, i) == 1.0);

    auto pair_spec = spec21();
    pair_spec.impurities = {{-5, 0.2}, {5, 0.2}};
    auto h2 = lattice::build_hamiltonian(pair_spec);
    CHECK(h2(5, 5) == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(h2(15, 15) == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(h2(10, 10) == 1.0);
}

TEST_CASE("spec validation rejects bad input") {
    auto spec = spec21();
    spec.n_sites = 20;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.n_sites = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec = spec21();
    spec.impurities = {{30, 0.1}};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec = spec21();
    spec.impurities = {{3, 0.1}, {3, 0.2}};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec = spec21();
    spec.impurities = {{0, -1.5}};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec = spec21();
    spec.hopping = -0.1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("dispersion at the band markers") {
    const auto spec = spec21();
    CHECK(lattice::dispersion(std::numbers::pi / 2, spec) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(lattice::dispersion(0.0, spec) == doctest::Approx(0.98).epsilon(1e-15));
    CHECK(lattice::dispersion(std::numbers::pi, spec) == doctest::Approx(1.02).epsilon(1e-15));
}

TEST_CASE("k grid has N evenly spaced values") {
    auto spec = spec21();
    spec.n_sites = 3;
    auto ks = lattice::k_grid(spec);
    REQUIRE(ks.size() == 3);
    CHECK(ks[0] == doctest::Approx(-2.0 * std::numbers::pi / 3).epsilon(1e-15));
    CHECK(ks[1] == 0.0);
    CHECK(ks[2] == doctest::Approx(2.0 * std::numbers::pi / 3).epsilon(1e-15));

    spec.n_sites = 21;
    ks = lattice::k_grid(spec);
    REQUIRE(ks.size() == 21);
    bool has_zero = false;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        CHECK(ks[i + 1] - ks[i] ==
              doctest::Approx(2.0 * std::numbers::pi / 21).epsilon(1e-12));
        if (ks[i] == 0.0) has_zero = true;
    }
    CHECK(has_zero);
    CHECK(ks.back() == doctest::Approx(std::numbers::pi * 20.0 / 21.0).epsilon(1e-15));

    spec.boundary = Boundary::open;
    CHECK_THROWS_AS(lattice::k_grid(spec), std::invalid_argument);
}

TEST_CASE("plane waves satisfy the recurrence on the full ring") {
    const auto spec = spec21();
    const auto ks = lattice::k_grid(spec);
    for (const double k : {ks[3], ks[11], ks[20]}) {
        AmplitudeVector c(spec.j_min(), spec.n_sites);
        for (int j = spec.j_min(); j <= spec.j_max(); ++j)
            c.at(j) = std::exp(std::complex<double>(0.0, k * j));
        const auto res = lattice::recurrence_residual(c, lattice::dispersion(k, spec), spec);
        for (const double r : res) CHECK(r < 1e-10);
    }
}

TEST_CASE("random amplitudes at a random frequency do not satisfy the recurrence") {
    const auto spec = spec21();
    std::mt19937_64 gen(12345);
    AmplitudeVector c(spec.j_min(), spec.n_sites);
    for (int j = spec.j_min(); j <= spec.j_max(); ++j)
        c.at(j) = std::complex<double>(uniform(gen) - 0.5, uniform(gen) - 0.5);
    const auto res = lattice::recurrence_residual(c, 1.003, spec);
    double max_res = 0.0;
    for (const double r : res) max_res = std::max(max_res, r);
    CHECK(max_res > 1e-3);
}

TEST_CASE("frozen analytic bound profile satisfies the recurrence away from the edges") {
    // mu and omega for lambda = 0.2, J = 0.01, omega_c = 1
    const double mu = -0.04987562112089006;
    const double omega = 1.200997512422418;
    LatticeSpec spec;
    spec.n_sites = 81;
    spec.hopping = 0.01;
    spec.boundary = Boundary::open;
    spec.impurities = {{0, 0.2}};

    AmplitudeVector c(-40, 81);
    for (int j = -40; j <= 40; ++j) c.at(j) = std::pow(mu, std::abs(j));
    const auto res = lattice::recurrence_residual(c, omega, spec);
    for (const double r : res) CHECK(r < 1e-10);
}

TEST_CASE("empty ring spectrum equals the dispersion multiset") {
    const auto spec = spec21();
    const auto spectrum = oracle::diagonalize(spec);
    std::vector<double> expected;
    for (const double k : lattice::k_grid(spec)) expected.push_back(lattice::dispersion(k, spec));
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < spec.n_sites; ++i)
        CHECK(std::abs(spectrum.eigenvalues[i] - expected[static_cast<std::size_t>(i)]) < 1e-10);
}

TEST_CASE("every numerical eigenvector satisfies the recurrence including the wrap") {
    const auto spec = spec21(0.2);
    const auto spectrum = oracle::diagonalize(spec);
    for (int v = 0; v < spec.n_sites; ++v) {
        AmplitudeVector c(spec.j_min(), spec.n_sites);
        for (int i = 0; i < spec.n_sites; ++i) c.values[i] = spectrum.eigenvectors(i, v);
        const auto res = lattice::recurrence_residual(c, spectrum.eigenvalues[v], spec);
        for (const double r : res) CHECK(r < 1e-9);
    }
}

TEST_CASE("wave-vector transform is unitary with the expected deltas") {
    const auto spec = spec21();
    const auto ks = lattice::k_grid(spec);
    const double root_n = std::sqrt(21.0);

    AmplitudeVector uniform_c(spec.j_min(), spec.n_sites);
    for (int j = spec.j_min(); j <= spec.j_max(); ++j) uniform_c.at(j) = 1.0 / root_n;
    auto ck = lattice::dft_amplitudes(uniform_c, spec);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] == 0.0)
            CHECK(std::abs(ck[static_cast<Eigen::Index>(i)] - 1.0) < 1e-12);
        else
            CHECK(std::abs(ck[static_cast<Eigen::Index>(i)]) < 1e-12);
    }

    const double k0 = ks[15];
    AmplitudeVector plane(spec.j_min(), spec.n_sites);
    for (int j = spec.j_min(); j <= spec.j_max(); ++j)
        plane.at(j) = std::exp(std::complex<double>(0.0, k0 * j)) / root_n;
    ck = lattice::dft_amplitudes(plane, spec);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        // transform convention pairs e^{ikj} rows with the -k grid entry
        if (ks[i] == -k0)
            CHECK(std::abs(ck[static_cast<Eigen::Index>(i)]) > 0.99);
    }

    std::mt19937_64 gen(777);
    AmplitudeVector c(spec.j_min(), spec.n_sites);
    for (int j = spec.j_min(); j <= spec.j_max(); ++j)
        c.at(j) = std::complex<double>(uniform(gen) - 0.5, uniform(gen) - 0.5);
    ck = lattice::dft_amplitudes(c, spec);
    CHECK(std::abs(ck.norm() - c.norm()) < 1e-12);  // Parseval

    const auto back = lattice::inverse_dft(ck, spec);
    for (int j = spec.j_min(); j <= spec.j_max(); ++j)
        CHECK(std::abs(back.at(j) - c.at(j)) < 1e-12);
}
