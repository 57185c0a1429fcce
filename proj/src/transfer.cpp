#include "dxxz/transfer.hpp"

#include "dxxz/spectra.hpp"

namespace dxxz {

WeightMatrix boltzmann_weights(const CouplingSet& c, const ThermalState& t) {
    require_finite(c);
    if (!(t.beta >= 0.0) || !std::isfinite(t.beta)) {
        throw std::invalid_argument("beta must be finite and >= 0");
    }
    WeightMatrix w;
    w.shift = t.beta == 0.0 ? 0.0 : ground_energy(c);
    for (int l = 0; l < 2; ++l) {
        for (int r = 0; r < 2; ++r) {
            const auto s = closed_form_energies(c, edge_spins(l, r));
            double sum = 0.0;
            for (double e : s.energies) sum += std::exp(-t.beta * (e - w.shift));
            // Floor at the smallest normal double: an entry that underflows
            // to exactly zero would poison Uinv (division by w_{+-}); the
            // floored value keeps every downstream ratio finite and is
            // indistinguishable from the true weight at this beta.
            w.entries(l, r) = std::max(sum, std::numeric_limits<double>::min());
        }
    }
    return w;
}

TransferDecomposition decompose_weights(const WeightMatrix& host,
                                        const WeightMatrix& imp, double beta) {
    TransferDecomposition d;
    d.host = host;
    d.imp = imp;
    d.beta = beta;
    const double wpp = host.entries(0, 0);
    const double wmm = host.entries(1, 1);
    const double wpm = host.entries(0, 1);
    d.q = std::sqrt((wpp - wmm) * (wpp - wmm) + 4.0 * wpm * wpm);
    d.lambda_plus = (wpp + wmm + d.q) / 2.0;
    d.lambda_minus = (wpp + wmm - d.q) / 2.0;
    d.U << d.lambda_plus - wmm, d.lambda_minus - wmm, wpm, wpm;
    d.Uinv << 1.0 / d.q, -(d.lambda_minus - wmm) / (d.q * wpm),
        -1.0 / d.q, (d.lambda_plus - wmm) / (d.q * wpm);
    return d;
}

TransferDecomposition decompose(const ChainSpec& spec) {
    return decompose_weights(
        boltzmann_weights(spec.host, spec.thermal),
        boltzmann_weights(effective_couplings(spec.host, spec.imp),
                          spec.thermal),
        spec.thermal.beta);
}

LogValue partition_function(const TransferDecomposition& d, const Geometry& g) {
    if (std::holds_alternative<ThermodynamicLimit>(g)) {
        return {std::log(d.lambda_plus) - d.beta * d.host.shift};
    }
    const int n = ring_cells(g);
    const Eigen::Matrix2d s = d.impurity_sandwich(d.host.entries);
    const double a = s(0, 0);
    const double dd = s(1, 1);
    const double ratio = d.lambda_minus / d.lambda_plus;
    const double tail = a + dd * std::pow(ratio, n - 3);
    const double restored =
        -d.beta * (d.host.shift * (n - 2) + 2.0 * d.imp.shift);
    return {(n - 3) * std::log(d.lambda_plus) + std::log(tail) + restored};
}

LogValue partition_function(const ChainSpec& spec) {
    return partition_function(decompose(spec), spec.geometry);
}

}  // namespace dxxz
