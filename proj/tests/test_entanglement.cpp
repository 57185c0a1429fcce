#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dxxz/entanglement.hpp"
#include "dxxz/validate.hpp"

using namespace dxxz;

namespace {

ChainSpec make_spec(CouplingSet host, ImpurityStrengths imp, double T,
                    Geometry g = ThermodynamicLimit{}) {
    return {host, imp, g, ThermalState::from_temperature(T)};
}

DimerState xstate(double r11, double r22, double r23, double r44) {
    DimerState d;
    d.rho11 = r11;
    d.rho22 = d.rho33 = r22;
    d.rho23 = r23;
    d.rho44 = r44;
    return d;
}

}  // namespace

TEST_CASE("Bell state has unit concurrence by both routes") {
    const auto d = xstate(0, 0.5, 0.5, 0);
    CHECK(concurrence_xstate(d).c == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(concurrence_general(d).c == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximally mixed state is separable") {
    const auto d = xstate(0.25, 0.25, 0.0, 0.25);
    CHECK(concurrence_xstate(d).c == 0.0);
    CHECK(concurrence_general(d).c == 0.0);
}

TEST_CASE("zero off-diagonal means zero concurrence") {
    const auto d = xstate(0.4, 0.05, 0.0, 0.5);
    CHECK(concurrence_xstate(d).c == 0.0);
}

TEST_CASE("lambdas are sorted descending and nonnegative") {
    const auto r = concurrence_general(xstate(0.3, 0.2, 0.1, 0.3));
    for (int i = 1; i < 4; ++i) CHECK(r.lambdas[i - 1] >= r.lambdas[i]);
    CHECK(r.lambdas[3] >= 0.0);
    CHECK(r.c >= 0.0);
    CHECK(r.c <= 1.0);
}

TEST_CASE("cross-method equality on random valid X states") {
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        double r11 = u(rng), r22 = u(rng), r44 = u(rng);
        const double norm = r11 + 2 * r22 + r44;
        r11 /= norm;
        r22 /= norm;
        r44 /= norm;
        const double r23 = (2.0 * u(rng) - 1.0) * r22;
        const auto d = xstate(r11, r22, r23, r44);
        CHECK(std::abs(concurrence_general(d).c - concurrence_xstate(d).c) <
              1e-12);
    }
}

TEST_CASE("cross-method equality on chain-produced states") {
    std::mt19937_64 rng(92);
    for (int i = 0; i < 200; ++i) {
        ChainSpec spec = random_spec(rng, 3 + int(rng() % 4));
        if (i % 2 == 0) spec.geometry = ThermodynamicLimit{};
        const auto d = reduced_density(spec);
        CHECK(std::abs(concurrence_general(d).c - concurrence_xstate(d).c) <
              1e-12);
    }
}

TEST_CASE("non-PSD input is rejected") {
    CHECK_THROWS_AS(concurrence_xstate(xstate(0.25, 0.25, 0.4, 0.25)),
                    std::invalid_argument);
    CHECK_THROWS_AS(concurrence_general(xstate(-0.2, 0.35, 0.0, 0.5)),
                    std::invalid_argument);
}

TEST_CASE("concurrence vanishes at infinite temperature") {
    ChainSpec spec{{1, 1, 1, 0.3}, {0, 0.8, -0.8}, ThermodynamicLimit{},
                   ThermalState::infinite_temperature()};
    CHECK(concurrence_at(spec).c == 0.0);
}

TEST_CASE("concurrence is invariant under field reversal") {
    std::mt19937_64 rng(93);
    for (int i = 0; i < 100; ++i) {
        ChainSpec spec = random_spec(rng, 5);
        ChainSpec flipped = spec;
        flipped.host.h = -spec.host.h;
        CHECK(std::abs(concurrence_at(spec).c - concurrence_at(flipped).c) <
              1e-12);
    }
}

TEST_CASE("high temperature always disentangles") {
    std::mt19937_64 rng(94);
    for (int i = 0; i < 30; ++i) {
        ChainSpec spec = random_spec(rng, 4);
        bool zero_tail = false;
        for (double T : {20.0, 50.0, 200.0}) {
            spec.thermal = ThermalState::from_temperature(T);
            if (concurrence_at(spec).c == 0.0) {
                zero_tail = true;
                break;
            }
        }
        CHECK(zero_tail);
    }
}

TEST_CASE("threshold temperature") {
    SUBCASE("reference bracket") {
        const auto spec = make_spec({1, 2, 1, 1.6}, {0, 0, 0}, 1.0);
        const auto res = threshold_temperature(spec, 3.0, 1e-6);
        REQUIRE(res.status == ThresholdStatus::found);
        CHECK(res.t_threshold > 1.0);
        CHECK(res.t_threshold < 1.3);
        CHECK(res.bracket_hi - res.bracket_lo <= 1e-6);

        // self-consistency on both sides of the crossing
        auto conc = [&](double t) {
            ChainSpec s = spec;
            s.thermal = ThermalState::from_temperature(t);
            return concurrence_at(s).c;
        };
        CHECK(conc(res.t_threshold - 1e-5) > 0.0);
        CHECK(conc(res.t_threshold + 1e-5) == 0.0);
    }
    SUBCASE("halving the tolerance moves the root by at most tol") {
        const auto spec = make_spec({1, 2, 1, 1.6}, {0, 0, 0}, 1.0);
        const auto a = threshold_temperature(spec, 3.0, 1e-4);
        const auto b = threshold_temperature(spec, 3.0, 5e-5);
        CHECK(std::abs(a.t_threshold - b.t_threshold) <= 1e-4);
    }
    SUBCASE("never entangled") {
        // J = 0 removes the quantum exchange entirely: rho23 is identically
        // zero, so C = 0 at every temperature.
        const auto spec = make_spec({0, 1, 1, 1.0}, {0, 0, 0}, 1.0);
        const auto res = threshold_temperature(spec, 3.0, 1e-6);
        CHECK(res.status == ThresholdStatus::never_entangled);
        CHECK(std::isnan(res.t_threshold));
    }
    SUBCASE("still entangled at the search bound") {
        const auto spec = make_spec({1, 2, 1, 0}, {0, 0, 0}, 1.0);
        const auto res = threshold_temperature(spec, 0.05, 1e-6);
        CHECK(res.status == ThresholdStatus::entangled_at_tmax);
        CHECK(res.t_threshold == 0.05);
    }
    SUBCASE("invalid tolerances are rejected") {
        const auto spec = make_spec({1, 2, 1, 0}, {0, 0, 0}, 1.0);
        CHECK_THROWS_AS(threshold_temperature(spec, -1.0, 1e-6),
                        std::invalid_argument);
        CHECK_THROWS_AS(threshold_temperature(spec, 1.0, 0.0),
                        std::invalid_argument);
    }
}
