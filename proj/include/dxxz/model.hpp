#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

namespace dxxz {

/// Physical parameters of one diamond plaquette. The Hamiltonian carries
/// J*Delta on the zz term, so Delta is dimensionless; everything else is an
/// energy (k_B = 1 throughout).
struct CouplingSet {
    double J = 0.0;      // XXZ exchange
    double Delta = 0.0;  // zz anisotropy (dimensionless)
    double J1 = 0.0;     // Ising-Heisenberg coupling
    double h = 0.0;      // magnetic field along z
};

/// Dimensionless impurity strengths; zero reproduces the homogeneous chain.
struct ImpurityStrengths {
    double alpha = 0.0;
    double gamma = 0.0;
    double eta = 0.0;
};

/// Couplings of an impurity plaquette: (J(1+alpha), Delta(1+gamma),
/// J1(1+eta), h). The field is not modified.
inline CouplingSet effective_couplings(const CouplingSet& host,
                                       const ImpurityStrengths& imp) {
    return {host.J * (1.0 + imp.alpha), host.Delta * (1.0 + imp.gamma),
            host.J1 * (1.0 + imp.eta), host.h};
}

/// Classical Ising spin, value +1/2 or -1/2.
enum class IsingSpin : int { up = +1, down = -1 };

inline double spin_value(IsingSpin s) {
    return s == IsingSpin::up ? 0.5 : -0.5;
}

/// The two nodal Ising spins adjacent to a plaquette.
struct EdgeSpins {
    IsingSpin left = IsingSpin::up;
    IsingSpin right = IsingSpin::up;

    /// mu_left + mu_right, in {-1, 0, +1}. Spectra depend only on this sum.
    double sum() const { return spin_value(left) + spin_value(right); }
};

/// Inverse temperature beta = 1/T with k_B = 1. beta = 0 (infinite
/// temperature) is a first-class value, not a limit.
struct ThermalState {
    double beta = 1.0;
    double T = 1.0;

    static ThermalState from_temperature(double temperature) {
        if (!(temperature > 0.0)) {
            throw std::invalid_argument("temperature must be > 0");
        }
        if (std::isinf(temperature)) return infinite_temperature();
        return {1.0 / temperature, temperature};
    }

    static ThermalState infinite_temperature() {
        return {0.0, std::numeric_limits<double>::infinity()};
    }
};

/// Periodic chain of N >= 3 cells: the isolated plaquette plus its two
/// impurity neighbours leave N-3 host cells.
struct FiniteRing {
    int cells = 3;
};

struct ThermodynamicLimit {};

using Geometry = std::variant<FiniteRing, ThermodynamicLimit>;

struct ChainSpec {
    CouplingSet host;
    ImpurityStrengths imp;
    Geometry geometry = ThermodynamicLimit{};
    ThermalState thermal;
};

inline void require_finite(const CouplingSet& c) {
    if (!(std::isfinite(c.J) && std::isfinite(c.Delta) && std::isfinite(c.J1) &&
          std::isfinite(c.h))) {
        throw std::invalid_argument("couplings must be finite");
    }
}

inline int ring_cells(const Geometry& g) {
    const auto* ring = std::get_if<FiniteRing>(&g);
    if (ring == nullptr) {
        throw std::invalid_argument("finite ring geometry required");
    }
    if (ring->cells < 3) throw std::invalid_argument("ring needs N >= 3 cells");
    return ring->cells;
}

}  // namespace dxxz
