#include "dxxz/rdm.hpp"

#include "dxxz/spectra.hpp"

namespace dxxz {

PlaquetteThermalOperator plaquette_operator(const CouplingSet& c,
                                            const EdgeSpins& e,
                                            const ThermalState& t) {
    require_finite(c);
    PlaquetteThermalOperator op;
    op.shift = t.beta == 0.0 ? 0.0 : ground_energy(c);
    const auto s = closed_form_energies(c, e);
    const auto f = [&](int j) {
        return std::exp(-t.beta * (s.energies[j] - op.shift));
    };
    op.rho11 = f(0);
    op.rho22 = 0.5 * (f(1) + f(2));
    op.rho23 = 0.5 * (f(1) - f(2));
    op.rho44 = f(3);
    return op;
}

XOperatorMatrices build_p_matrices(const CouplingSet& host,
                                   const ThermalState& t) {
    XOperatorMatrices p;
    for (int l = 0; l < 2; ++l) {
        for (int r = 0; r < 2; ++r) {
            const auto op = plaquette_operator(host, edge_spins(l, r), t);
            p.p11(l, r) = op.rho11;
            p.p22(l, r) = op.rho22;
            p.p23(l, r) = op.rho23;
            p.p44(l, r) = op.rho44;
            p.shift = op.shift;
        }
    }
    return p;
}

Eigen::Matrix2d p_matrix(const CouplingSet& host, const ThermalState& t, int k,
                         int l) {
    const auto p = build_p_matrices(host, t);
    if (k == 1 && l == 1) return p.p11;
    if ((k == 2 && l == 2) || (k == 3 && l == 3)) return p.p22;
    if ((k == 2 && l == 3) || (k == 3 && l == 2)) return p.p23;
    if (k == 4 && l == 4) return p.p44;
    throw std::invalid_argument("p_matrix: (k,l) outside the X pattern");
}

DimerState reduced_density_from(const TransferDecomposition& d,
                                const XOperatorMatrices& p, const Geometry& g) {
    const Eigen::Matrix2d sw = d.impurity_sandwich(d.host.entries);
    const Eigen::Matrix2d s11 = d.impurity_sandwich(p.p11);
    const Eigen::Matrix2d s22 = d.impurity_sandwich(p.p22);
    const Eigen::Matrix2d s23 = d.impurity_sandwich(p.p23);
    const Eigen::Matrix2d s44 = d.impurity_sandwich(p.p44);

    DimerState out;
    if (std::holds_alternative<ThermodynamicLimit>(g)) {
        // Only the Lambda+ channel survives; the Lambda-/Lambda+ ratio is
        // never exponentiated.
        const double denom = sw(0, 0);
        out.thermodynamic_limit = true;
        out.rho11 = s11(0, 0) / denom;
        out.rho22 = s22(0, 0) / denom;
        out.rho23 = s23(0, 0) / denom;
        out.rho44 = s44(0, 0) / denom;
    } else {
        const int n = ring_cells(g);
        const double rpow =
            std::pow(d.lambda_minus / d.lambda_plus, n - 3);
        const double denom = sw(0, 0) + sw(1, 1) * rpow;
        const auto elem = [&](const Eigen::Matrix2d& s) {
            return (s(0, 0) + s(1, 1) * rpow) / denom;
        };
        out.cells = n;
        out.rho11 = elem(s11);
        out.rho22 = elem(s22);
        out.rho23 = elem(s23);
        out.rho44 = elem(s44);
    }
    out.rho33 = out.rho22;
    return out;
}

DimerState reduced_density_finite(const ChainSpec& spec) {
    ring_cells(spec.geometry);
    return reduced_density_from(decompose(spec),
                                build_p_matrices(spec.host, spec.thermal),
                                spec.geometry);
}

DimerState reduced_density_limit(const ChainSpec& spec) {
    return reduced_density_from(decompose(spec),
                                build_p_matrices(spec.host, spec.thermal),
                                ThermodynamicLimit{});
}

DimerState reduced_density(const ChainSpec& spec) {
    return reduced_density_from(decompose(spec),
                                build_p_matrices(spec.host, spec.thermal),
                                spec.geometry);
}

}  // namespace dxxz
