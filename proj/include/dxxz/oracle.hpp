#pragma once

#include "dxxz/rdm.hpp"
#include "dxxz/transfer.hpp"

namespace dxxz {

/// Brute-force references with no transfer-matrix machinery: exact sums over
/// all 2^N Ising configurations of a finite ring, sharing only the spectra
/// module with the production path. The impurity plaquettes sit at r-1 and
/// r+1 (1-based, mod N); plaquette r is the isolated dimer.

/// log Z_N by configuration enumeration. Requires 3 <= N <= 24.
LogValue oracle_partition(const ChainSpec& spec, int r);

/// Reduced density of dimer r by configuration enumeration.
DimerState oracle_dimer_state(const ChainSpec& spec, int r);

/// Full-Hilbert-space cross-check: dense diagonalization of the complete
/// Hamiltonian on (dimer x Ising)^N followed by a partial trace onto dimer
/// r. Requires 3 <= N <= 4.
DimerState oracle_full_hilbert(const ChainSpec& spec, int r);

}  // namespace dxxz
