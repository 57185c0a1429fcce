#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dxxz/spectra.hpp"
#include "dxxz/transfer.hpp"

using namespace dxxz;

namespace {

ChainSpec make_spec(CouplingSet host, ImpurityStrengths imp, double T,
                    Geometry g = ThermodynamicLimit{}) {
    return {host, imp, g, ThermalState::from_temperature(T)};
}

std::mt19937_64 rng_at(unsigned seed) { return std::mt19937_64(seed); }

}  // namespace

TEST_CASE("infinite temperature weights") {
    const auto w =
        boltzmann_weights({1.5, -0.3, 0.7, 0.2}, ThermalState::infinite_temperature());
    CHECK(w.shift == 0.0);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) CHECK(w.entries(i, j) == 4.0);
    }
}

TEST_CASE("weight entries are shifted exponential sums") {
    const CouplingSet c{1, 1, 1, 0};
    const auto t = ThermalState::from_temperature(1.0);
    const auto w = boltzmann_weights(c, t);
    // spectrum at (+,+): {1.25, 0.25, -0.75, -0.75}; global minimum -0.75
    CHECK(w.shift == doctest::Approx(-0.75).epsilon(1e-15));
    const double expected = std::exp(-(1.25 + 0.75)) + std::exp(-(0.25 + 0.75)) +
                            std::exp(0.0) + std::exp(0.0);
    CHECK(w.entries(0, 0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("weight matrix symmetries") {
    auto rng = rng_at(21);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> temp(0.05, 5.0);
    for (int i = 0; i < 50; ++i) {
        const CouplingSet c{u(rng), u(rng), u(rng), u(rng)};
        const auto w = boltzmann_weights(c, ThermalState::from_temperature(temp(rng)));
        CHECK(w.entries.minCoeff() > 0.0);
        CHECK(w.entries(0, 1) == w.entries(1, 0));
        const CouplingSet c0{c.J, c.Delta, c.J1, 0.0};
        const auto w0 = boltzmann_weights(c0, ThermalState::from_temperature(temp(rng)));
        // equal up to summation order of the four exponentials
        CHECK(w0.entries(0, 0) ==
              doctest::Approx(w0.entries(1, 1)).epsilon(1e-14));
    }
}

TEST_CASE("decomposition at infinite temperature") {
    const auto d = decompose(make_spec({1, 1, 1, 0.3}, {0.5, -0.2, 0.1},
                                       std::numeric_limits<double>::infinity()));
    CHECK(d.lambda_plus == doctest::Approx(8.0));
    CHECK(d.lambda_minus == doctest::Approx(0.0));
    CHECK(d.q == doctest::Approx(8.0));
}

TEST_CASE("impurity-free limit collapses the impurity weights") {
    const auto d = decompose(make_spec({0.9, 1.4, -0.6, 0.8}, {0, 0, 0}, 0.7));
    CHECK((d.imp.entries - d.host.entries).norm() == 0.0);
    CHECK(d.imp.shift == d.host.shift);
}

TEST_CASE("decomposition identities") {
    auto rng = rng_at(33);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> temp(0.05, 5.0);
    for (int i = 0; i < 100; ++i) {
        const auto d = decompose(make_spec({u(rng), u(rng), u(rng), u(rng)},
                                           {u(rng) / 2, u(rng) / 2, u(rng) / 2},
                                           temp(rng)));
        const auto& w = d.host.entries;
        CHECK(d.q >= 2.0 * w(0, 1));
        CHECK(d.lambda_plus > std::abs(d.lambda_minus));
        CHECK(d.lambda_plus >= std::max(w(0, 0), w(1, 1)));
        CHECK(d.lambda_plus * d.lambda_minus ==
              doctest::Approx(w.determinant())
                  .epsilon(1e-12));
        const Eigen::Matrix2d diag = d.Uinv * w * d.U;
        const double scale = d.lambda_plus;
        CHECK(std::abs(diag(0, 0) - d.lambda_plus) < 1e-12 * scale);
        CHECK(std::abs(diag(1, 1) - d.lambda_minus) < 1e-12 * scale);
        CHECK(std::abs(diag(0, 1)) < 1e-12 * scale);
        CHECK(std::abs(diag(1, 0)) < 1e-12 * scale);
        // eigenvalues are the characteristic polynomial roots
        const double tr = w.trace(), det = w.determinant();
        CHECK(d.lambda_plus * d.lambda_plus - tr * d.lambda_plus + det ==
              doctest::Approx(0.0).epsilon(1e-10).scale(scale * scale));
    }
}

TEST_CASE("partition function at infinite temperature, N=5") {
    const auto spec = make_spec({1, 1, 1, 0.5}, {0.3, -0.4, 0.9},
                                std::numeric_limits<double>::infinity(),
                                FiniteRing{5});
    CHECK(partition_function(spec).log ==
          doctest::Approx(std::log(32768.0)).epsilon(1e-14));
}

TEST_CASE("homogeneous ring equals the eigenvalue power sum") {
    const auto spec = make_spec({1.1, 0.6, -0.8, 0.4}, {0, 0, 0}, 0.9,
                                FiniteRing{6});
    const auto d = decompose(spec);
    const double direct =
        std::log(std::pow(d.lambda_plus, 6) + std::pow(d.lambda_minus, 6)) -
        6.0 * d.beta * d.host.shift;
    CHECK(partition_function(spec).log == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("ring smaller than three cells is rejected") {
    CHECK_THROWS_AS(
        partition_function(make_spec({1, 1, 1, 0}, {}, 1.0, FiniteRing{2})),
        std::invalid_argument);
}

TEST_CASE("cyclic invariance: the impurity pair position never enters") {
    const auto spec =
        make_spec({0.8, 1.2, 0.5, 0.3}, {0.4, -0.3, 0.6}, 1.2, FiniteRing{7});
    const auto d = decompose(spec);
    const Eigen::Matrix2d w = d.host.entries;
    const Eigen::Matrix2d wt = d.imp.entries;
    const double shift_restore =
        -d.beta * (d.host.shift * 5 + 2.0 * d.imp.shift);
    for (int a = 0; a <= 4; ++a) {
        Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
        for (int i = 0; i < a; ++i) m = m * w;
        m = m * wt * w * wt;
        for (int i = 0; i < 4 - a; ++i) m = m * w;
        CHECK(std::log(m.trace()) + shift_restore ==
              doctest::Approx(partition_function(spec).log).epsilon(1e-13));
    }
}

TEST_CASE("gauge shift multiplies Z by the exact exponential factor") {
    auto rng = rng_at(55);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const auto spec = make_spec({u(rng), u(rng), u(rng), u(rng)},
                                    {u(rng) / 2, u(rng) / 2, u(rng) / 2}, 0.8,
                                    FiniteRing{6});
        const auto d = decompose(spec);
        const double c = 0.37, ct = -0.21;
        WeightMatrix host_g = d.host;
        host_g.entries *= std::exp(-d.beta * c);
        WeightMatrix imp_g = d.imp;
        imp_g.entries *= std::exp(-d.beta * ct);
        const auto dg = decompose_weights(host_g, imp_g, d.beta);
        const double expected = partition_function(d, spec.geometry).log -
                                d.beta * (c * 4 + 2 * ct);
        CHECK(partition_function(dg, spec.geometry).log ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("thermodynamic limit returns log Z per cell") {
    const auto spec = make_spec({1, 1, 1, 0}, {0, 0, 0}, 1.0);
    const auto d = decompose(spec);
    CHECK(partition_function(spec).log ==
          doctest::Approx(std::log(d.lambda_plus) - d.beta * d.host.shift));
}

TEST_CASE("NaN couplings are rejected") {
    CHECK_THROWS_AS(boltzmann_weights({std::nan(""), 1, 1, 1},
                                      ThermalState::from_temperature(1.0)),
                    std::invalid_argument);
}
