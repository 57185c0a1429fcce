#include "dxxz/spectra.hpp"

#include <algorithm>

namespace dxxz {

const Eigen::Matrix4d& PlaquetteSpectrum::basis() {
    static const Eigen::Matrix4d b = [] {
        const double s = 1.0 / std::sqrt(2.0);
        Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
        m(0, 0) = 1.0;
        m(1, 1) = s;
        m(2, 1) = s;
        m(1, 2) = s;
        m(2, 2) = -s;
        m(3, 3) = 1.0;
        return m;
    }();
    return b;
}

Eigen::Matrix4d plaquette_hamiltonian(const CouplingSet& c,
                                      const EdgeSpins& e) {
    require_finite(c);
    const double m = e.sum();
    const double zz = c.J * c.Delta;
    Eigen::Matrix4d H = Eigen::Matrix4d::Zero();
    H(0, 0) = zz / 4.0 + c.J1 * m - c.h - 0.5 * c.h * m;
    H(1, 1) = -zz / 4.0 - 0.5 * c.h * m;
    H(2, 2) = H(1, 1);
    H(1, 2) = c.J / 2.0;
    H(2, 1) = c.J / 2.0;
    H(3, 3) = zz / 4.0 - c.J1 * m + c.h - 0.5 * c.h * m;
    return H;
}

PlaquetteSpectrum closed_form_energies(const CouplingSet& c,
                                       const EdgeSpins& e) {
    require_finite(c);
    const double m = e.sum();
    const double zz4 = c.J * c.Delta / 4.0;
    PlaquetteSpectrum s;
    s.energies[0] = zz4 + (c.J1 - 0.5 * c.h) * m - c.h;
    s.energies[1] = -zz4 + 0.5 * c.J - 0.5 * c.h * m;
    s.energies[2] = -zz4 - 0.5 * c.J - 0.5 * c.h * m;
    s.energies[3] = zz4 - (c.J1 + 0.5 * c.h) * m + c.h;
    return s;
}

double ground_energy(const CouplingSet& c) {
    double emin = std::numeric_limits<double>::infinity();
    for (int l = 0; l < 2; ++l) {
        for (int r = 0; r < 2; ++r) {
            const auto s = closed_form_energies(c, edge_spins(l, r));
            emin = std::min(emin,
                            *std::min_element(s.energies.begin(),
                                              s.energies.end()));
        }
    }
    return emin;
}

}  // namespace dxxz
