#pragma once

#include <Eigen/Dense>

#include "dxxz/transfer.hpp"

namespace dxxz {

/// X-structured matrix elements of the per-plaquette thermal operator
/// rho(mu, mu') = sum_j e^{-beta eps_j} |phi_j><phi_j| for one edge
/// configuration, on the same shifted scale as the plaquette's WeightMatrix.
/// rho33 equals rho22 identically; the trace reproduces the Boltzmann weight.
struct PlaquetteThermalOperator {
    double rho11 = 0.0;
    double rho22 = 0.0;
    double rho23 = 0.0;
    double rho44 = 0.0;
    double shift = 0.0;

    double trace() const { return rho11 + 2.0 * rho22 + rho44; }
};

PlaquetteThermalOperator plaquette_operator(const CouplingSet& c,
                                            const EdgeSpins& e,
                                            const ThermalState& t);

/// P_{k,l}: the 2x2 matrix of rho_{k,l}(mu, mu') over edge configurations.
/// The isolated plaquette carries host couplings, so these share the host
/// weight shift. Valid (k,l): (1,1), (2,2), (2,3), (3,3), (4,4).
Eigen::Matrix2d p_matrix(const CouplingSet& host, const ThermalState& t, int k,
                         int l);

/// All five X-pattern P matrices at once (p33 == p22).
struct XOperatorMatrices {
    Eigen::Matrix2d p11, p22, p23, p44;
    double shift = 0.0;
};

XOperatorMatrices build_p_matrices(const CouplingSet& host,
                                   const ThermalState& t);

/// Thermal reduced density operator of the isolated dimer. X-structured,
/// real, trace one.
struct DimerState {
    double rho11 = 0.0;
    double rho22 = 0.0;
    double rho23 = 0.0;
    double rho33 = 0.0;
    double rho44 = 0.0;
    bool thermodynamic_limit = false;
    int cells = 0;  // 0 when thermodynamic_limit

    Eigen::Matrix4d matrix() const {
        Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
        m(0, 0) = rho11;
        m(1, 1) = rho22;
        m(2, 2) = rho33;
        m(1, 2) = rho23;
        m(2, 1) = rho23;
        m(3, 3) = rho44;
        return m;
    }
};

DimerState reduced_density_finite(const ChainSpec& spec);
DimerState reduced_density_limit(const ChainSpec& spec);

/// Dispatches on spec.geometry.
DimerState reduced_density(const ChainSpec& spec);

/// Core evaluation from prebuilt weights and P matrices; exposed so tests
/// can gauge-transform the inputs directly.
DimerState reduced_density_from(const TransferDecomposition& d,
                                const XOperatorMatrices& p, const Geometry& g);

}  // namespace dxxz
