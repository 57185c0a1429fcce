#pragma once

#include <Eigen/Dense>
#include <array>

#include "dxxz/model.hpp"

namespace dxxz {

/// Eigensystem of one diamond plaquette conditioned on its edge Ising spins.
/// Energies are kept in the fixed index order 1..4 (never sorted) so the
/// thermal-operator element formulas map one-to-one. The eigenvectors are
/// parameter independent:
///   |phi1> = |00>, |phi2> = (|01>+|10>)/sqrt2,
///   |phi3> = (|01>-|10>)/sqrt2, |phi4> = |11>.
struct PlaquetteSpectrum {
    std::array<double, 4> energies{};

    /// Columns are |phi1>..|phi4> in the product basis {|00>,|01>,|10>,|11>}.
    static const Eigen::Matrix4d& basis();
};

/// 4x4 plaquette Hamiltonian in the product basis: zz/field terms on the
/// diagonal, one J/2 pair coupling |01> <-> |10>. Includes the Ising-spin
/// field share -(h/2)(mu_l + mu_r).
Eigen::Matrix4d plaquette_hamiltonian(const CouplingSet& c, const EdgeSpins& e);

/// Closed-form eigenvalues paired with PlaquetteSpectrum::basis().
PlaquetteSpectrum closed_form_energies(const CouplingSet& c,
                                       const EdgeSpins& e);

/// Minimum plaquette eigenvalue over all edge-spin configurations; used as
/// the common energy shift for Boltzmann weights of this plaquette type.
double ground_energy(const CouplingSet& c);

/// All four edge configurations, row-major over (left, right) with index
/// 0 = +1/2.
inline EdgeSpins edge_spins(int left_index, int right_index) {
    return {left_index == 0 ? IsingSpin::up : IsingSpin::down,
            right_index == 0 ? IsingSpin::up : IsingSpin::down};
}

}  // namespace dxxz
