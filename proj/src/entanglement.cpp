#include "dxxz/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace dxxz {

namespace {

constexpr double kPsdTol = 1e-9;
constexpr double kEntangledEps = 1e-12;

void check_state(const DimerState& d) {
    if (d.rho11 < -kPsdTol || d.rho44 < -kPsdTol ||
        d.rho22 * d.rho33 - d.rho23 * d.rho23 < -kPsdTol) {
        throw std::invalid_argument("dimer state is not positive semidefinite");
    }
}

Eigen::Matrix4d spin_flip() {
    // sigma_y x sigma_y in the product basis; real for real rho.
    Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
}

}  // namespace

ConcurrenceResult concurrence_general(const DimerState& d) {
    check_state(d);
    const Eigen::Matrix4d rho = d.matrix();
    const Eigen::Matrix4d f = spin_flip();  // rho* == rho (real entries)

    // R = rho * rho_tilde is similar to the square of the symmetric matrix
    // G = sqrt(rho) * F * sqrt(rho) (rho_tilde = F rho F), so sqrt(lambda_i)
    // = |eig_i(G)|. Working with G instead of R itself skips one squaring
    // and keeps the square roots accurate near defective spectra.
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> rho_es(rho);
    if (rho_es.eigenvalues().minCoeff() < -1e-12) {
        throw std::invalid_argument(
            "concurrence_general: state has a genuinely negative eigenvalue");
    }
    const Eigen::Matrix4d sqrt_rho =
        rho_es.eigenvectors() *
        rho_es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
        rho_es.eigenvectors().transpose();
    const Eigen::Matrix4d g = sqrt_rho * f * sqrt_rho;

    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(
        g, Eigen::EigenvaluesOnly);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        const double s = std::abs(es.eigenvalues()[i]);
        lam[i] = s * s;
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());

    ConcurrenceResult out;
    out.lambdas = lam;
    out.method = ConcurrenceMethod::general;
    out.c = std::max(0.0, std::sqrt(lam[0]) - std::sqrt(lam[1]) -
                              std::sqrt(lam[2]) - std::sqrt(lam[3]));
    return out;
}

ConcurrenceResult concurrence_xstate(const DimerState& d) {
    check_state(d);
    ConcurrenceResult out;
    out.method = ConcurrenceMethod::xstate;
    const double outer = std::sqrt(std::max(0.0, d.rho11 * d.rho44));
    const double inner = std::sqrt(std::max(0.0, d.rho22 * d.rho33));
    out.c = 2.0 * std::max(0.0, std::abs(d.rho23) - outer);
    // Closed-form spectrum of R for the X structure (rho14 = 0): the central
    // block pairs |rho23| with sqrt(rho22 rho33), the outer block is doubly
    // degenerate at rho11 rho44.
    std::array<double, 4> sq = {std::abs(d.rho23) + inner,
                                std::abs(std::abs(d.rho23) - inner), outer,
                                outer};
    std::sort(sq.begin(), sq.end(), std::greater<>());
    for (int i = 0; i < 4; ++i) out.lambdas[i] = sq[i] * sq[i];
    return out;
}

ConcurrenceResult concurrence_at(const ChainSpec& spec) {
    const DimerState d = reduced_density(spec);
    const ConcurrenceResult x = concurrence_xstate(d);
    const ConcurrenceResult g = concurrence_general(d);
    if (std::abs(x.c - g.c) > 1e-10) {
        throw std::runtime_error(
            "concurrence cross-check failed: general and X-state routes "
            "disagree");
    }
    return x;
}

ThresholdResult threshold_temperature(const ChainSpec& spec, double t_max,
                                      double tol) {
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

    const auto conc = [&](double temperature) {
        ChainSpec s = spec;
        s.thermal = ThermalState::from_temperature(temperature);
        return concurrence_at(s).c;
    };

    constexpr int kScanPoints = 128;
    const double t_lo = t_max * 1e-4;
    std::array<double, kScanPoints> ts{};
    std::array<bool, kScanPoints> entangled{};
    for (int i = 0; i < kScanPoints; ++i) {
        ts[i] = t_lo * std::pow(t_max / t_lo,
                                static_cast<double>(i) / (kScanPoints - 1));
        entangled[i] = conc(ts[i]) > kEntangledEps;
    }

    int last_positive = -1;
    int runs = 0;
    for (int i = 0; i < kScanPoints; ++i) {
        if (entangled[i]) {
            if (i == 0 || !entangled[i - 1]) ++runs;
            last_positive = i;
        }
    }

    ThresholdResult out;
    out.reentrant = runs > 1;
    if (last_positive < 0) {
        out.status = ThresholdStatus::never_entangled;
        return out;
    }
    if (last_positive == kScanPoints - 1) {
        out.status = ThresholdStatus::entangled_at_tmax;
        out.t_threshold = t_max;
        out.bracket_lo = out.bracket_hi = t_max;
        return out;
    }

    double lo = ts[last_positive];
    double hi = ts[last_positive + 1];
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (conc(mid) > kEntangledEps) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.status = ThresholdStatus::found;
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.t_threshold = 0.5 * (lo + hi);
    return out;
}

}  // namespace dxxz
