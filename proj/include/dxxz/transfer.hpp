#pragma once

#include <Eigen/Dense>

#include "dxxz/model.hpp"

namespace dxxz {

/// 2x2 matrix of Boltzmann weights indexed by the adjacent Ising spins
/// (index 0 = +1/2). Entries are stored relative to a common energy shift:
/// the true weight is exp(-beta*shift) * entries(i,j). With the shift at the
/// plaquette ground energy every stored entry lies in (0, 4], so beta up to
/// ~1e3 stays representable.
struct WeightMatrix {
    Eigen::Matrix2d entries = Eigen::Matrix2d::Zero();
    double shift = 0.0;
};

WeightMatrix boltzmann_weights(const CouplingSet& c, const ThermalState& t);

/// Host transfer matrix diagonalization plus the impurity weight matrix.
/// lambda_plus/minus and q live on the host's shifted scale.
struct TransferDecomposition {
    WeightMatrix host;
    WeightMatrix imp;
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double q = 0.0;
    Eigen::Matrix2d U = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d Uinv = Eigen::Matrix2d::Zero();
    double beta = 0.0;

    /// Uinv * Wimp * x * Wimp * U, the sandwich every finite-N and
    /// thermodynamic-limit ratio is built from.
    Eigen::Matrix2d impurity_sandwich(const Eigen::Matrix2d& x) const {
        return Uinv * imp.entries * x * imp.entries * U;
    }
};

TransferDecomposition decompose(const ChainSpec& spec);
TransferDecomposition decompose_weights(const WeightMatrix& host,
                                        const WeightMatrix& imp, double beta);

/// A positive value carried as its natural logarithm.
struct LogValue {
    double log = 0.0;
    double value() const { return std::exp(log); }
};

/// Finite ring: log Z_N = log tr(Wimp W Wimp W^{N-3}), shifts restored.
/// Thermodynamic limit: log Z per cell, log(Lambda+) minus beta*shift.
LogValue partition_function(const ChainSpec& spec);
LogValue partition_function(const TransferDecomposition& d, const Geometry& g);

}  // namespace dxxz
