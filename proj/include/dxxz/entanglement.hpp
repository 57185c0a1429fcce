#pragma once

#include <array>

#include "dxxz/rdm.hpp"

namespace dxxz {

enum class ConcurrenceMethod { general, xstate };

struct ConcurrenceResult {
    double c = 0.0;
    /// Eigenvalues of R = rho (sy x sy) rho* (sy x sy), sorted descending,
    /// tiny negatives clamped to zero.
    std::array<double, 4> lambdas{};
    ConcurrenceMethod method = ConcurrenceMethod::xstate;
};

/// Spin-flip construction: builds R explicitly and applies
/// C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).
ConcurrenceResult concurrence_general(const DimerState& d);

/// X-state shortcut: C = 2 max(0, |rho23| - sqrt(rho11 rho44)).
ConcurrenceResult concurrence_xstate(const DimerState& d);

/// Reduced density (finite or limit per geometry) piped into the X-state
/// shortcut, with the general construction asserted equal.
ConcurrenceResult concurrence_at(const ChainSpec& spec);

enum class ThresholdStatus { found, never_entangled, entangled_at_tmax };

struct ThresholdResult {
    double t_threshold = std::numeric_limits<double>::quiet_NaN();
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    ThresholdStatus status = ThresholdStatus::never_entangled;
    /// More than one entangled run showed up in the coarse scan; only the
    /// last zero crossing was bisected.
    bool reentrant = false;
};

/// Largest T in (0, t_max] below which C > 0 and above which C = 0, found by
/// a log-spaced coarse scan (128 points) followed by bisection to tol. The
/// temperature in `spec.thermal` is ignored.
ThresholdResult threshold_temperature(const ChainSpec& spec, double t_max,
                                      double tol);

}  // namespace dxxz
