#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "dxxz/model.hpp"

namespace dxxz {

/// Seeded random-spec battery comparing the transfer-matrix path against the
/// enumeration (and optionally full-Hilbert) oracles.
struct ValidationOptions {
    std::uint64_t seed = 20240817;
    int specs_per_n = 50;
    int n_min = 3;
    int n_max = 6;
    bool full_hilbert = false;  // caps N at 4
    double tol = 1e-10;
    /// Negative control: flips the sign of the transfer-path rho23 so the
    /// battery must fail.
    bool inject_fault = false;
};

struct ValidationReport {
    double max_dlogz = 0.0;
    double max_drho = 0.0;
    double max_drho_full_hilbert = 0.0;
    bool pass = false;
    std::string worst_spec;  // parameter echo of the worst offender
    std::string summary;
};

/// Couplings in [-2,2], T in [0.05,5], impurity strengths in [-1,1].
ChainSpec random_spec(std::mt19937_64& rng, int cells);

ValidationReport run_validation(const ValidationOptions& opts);

}  // namespace dxxz
