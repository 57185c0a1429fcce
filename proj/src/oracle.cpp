#include "dxxz/oracle.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "dxxz/spectra.hpp"

namespace dxxz {

namespace {

// Per-bond tables on the shifted scale, built straight from the plaquette
// spectra (no transfer-matrix code).
struct BondTables {
    double shift = 0.0;
    double logw[2][2]{};    // log sum_j e^{-beta(eps_j - shift)}
    double w[2][2]{};       // the same sum, linear scale
    double p[4][2][2]{};    // thermal-operator elements 11, 22, 23, 44
};

BondTables bond_tables(const CouplingSet& c, double beta) {
    BondTables t;
    t.shift = beta == 0.0 ? 0.0 : ground_energy(c);
    for (int l = 0; l < 2; ++l) {
        for (int r = 0; r < 2; ++r) {
            const auto s = closed_form_energies(c, edge_spins(l, r));
            std::array<double, 4> f{};
            for (int j = 0; j < 4; ++j) {
                f[j] = std::exp(-beta * (s.energies[j] - t.shift));
            }
            t.w[l][r] = f[0] + f[1] + f[2] + f[3];
            t.logw[l][r] = std::log(t.w[l][r]);
            t.p[0][l][r] = f[0];
            t.p[1][l][r] = 0.5 * (f[1] + f[2]);
            t.p[2][l][r] = 0.5 * (f[1] - f[2]);
            t.p[3][l][r] = f[3];
        }
    }
    return t;
}

struct RingSetup {
    int n = 0;
    int iso_bond = 0;                 // 0-based bond index of the dimer
    std::vector<const BondTables*> bond;  // per-bond table pointer
    BondTables host, imp;
    double shift_total = 0.0;         // sum of per-bond shifts
};

RingSetup setup_ring(const ChainSpec& spec, int r, int n_cap) {
    RingSetup s;
    s.n = ring_cells(spec.geometry);
    if (s.n > n_cap) throw std::invalid_argument("oracle: N exceeds cap");
    if (r < 1 || r > s.n) throw std::invalid_argument("oracle: r out of range");
    s.host = bond_tables(spec.host, spec.thermal.beta);
    s.imp = bond_tables(effective_couplings(spec.host, spec.imp),
                        spec.thermal.beta);
    const int left_imp = (r - 2 + s.n) % s.n;
    const int right_imp = r % s.n;
    s.iso_bond = r - 1;
    s.bond.assign(s.n, &s.host);
    s.bond[left_imp] = &s.imp;
    s.bond[right_imp] = &s.imp;
    s.shift_total = s.host.shift * (s.n - 2) + 2.0 * s.imp.shift;
    return s;
}

// Sequential online log-sum-exp; deterministic by construction.
struct LogSum {
    double max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;

    void add(double l) {
        if (l <= max) {
            sum += std::exp(l - max);
        } else {
            sum = sum * std::exp(max - l) + 1.0;
            max = l;
        }
    }
    double log() const { return max + std::log(sum); }
};

double config_log_weight(const RingSetup& s, unsigned cfg) {
    double lp = 0.0;
    for (int i = 0; i < s.n; ++i) {
        const int a = (cfg >> i) & 1u;
        const int b = (cfg >> ((i + 1) % s.n)) & 1u;
        lp += s.bond[i]->logw[a][b];
    }
    return lp;
}

}  // namespace

LogValue oracle_partition(const ChainSpec& spec, int r) {
    const RingSetup s = setup_ring(spec, r, 24);
    LogSum acc;
    const unsigned count = 1u << s.n;
    for (unsigned cfg = 0; cfg < count; ++cfg) {
        acc.add(config_log_weight(s, cfg));
    }
    return {acc.log() - spec.thermal.beta * s.shift_total};
}

DimerState oracle_dimer_state(const ChainSpec& spec, int r) {
    const RingSetup s = setup_ring(spec, r, 24);
    const unsigned count = 1u << s.n;

    LogSum acc;
    for (unsigned cfg = 0; cfg < count; ++cfg) {
        acc.add(config_log_weight(s, cfg));
    }
    const double ref = acc.max;

    double den = 0.0;
    double num[4] = {0.0, 0.0, 0.0, 0.0};
    for (unsigned cfg = 0; cfg < count; ++cfg) {
        const double scaled = std::exp(config_log_weight(s, cfg) - ref);
        den += scaled;
        const int a = (cfg >> s.iso_bond) & 1u;
        const int b = (cfg >> ((s.iso_bond + 1) % s.n)) & 1u;
        const double w_iso = s.host.w[a][b];
        for (int k = 0; k < 4; ++k) {
            num[k] += scaled * (s.host.p[k][a][b] / w_iso);
        }
    }

    DimerState d;
    d.cells = s.n;
    d.rho11 = num[0] / den;
    d.rho22 = num[1] / den;
    d.rho23 = num[2] / den;
    d.rho44 = num[3] / den;
    d.rho33 = d.rho22;
    return d;
}

DimerState oracle_full_hilbert(const ChainSpec& spec, int r) {
    const int n = ring_cells(spec.geometry);
    if (n > 4) throw std::invalid_argument("oracle_full_hilbert: N > 4");
    if (r < 1 || r > n) throw std::invalid_argument("oracle: r out of range");

    // 3 bits per cell: dimer spins a, b and the Ising spin mu. Bit value 0
    // means spin +1/2.
    const int dim = 1 << (3 * n);
    const auto sz = [](int bit) { return bit == 0 ? 0.5 : -0.5; };

    std::vector<CouplingSet> cell(n, spec.host);
    const CouplingSet imp = effective_couplings(spec.host, spec.imp);
    cell[(r - 2 + n) % n] = imp;
    cell[r % n] = imp;

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    for (int state = 0; state < dim; ++state) {
        double diag = 0.0;
        for (int i = 0; i < n; ++i) {
            const double sa = sz((state >> (3 * i)) & 1);
            const double sb = sz((state >> (3 * i + 1)) & 1);
            const double mu = sz((state >> (3 * i + 2)) & 1);
            const double mu_next = sz((state >> (3 * ((i + 1) % n) + 2)) & 1);
            const CouplingSet& c = cell[i];
            diag += c.J * c.Delta * sa * sb +
                    c.J1 * (sa + sb) * (mu + mu_next) - c.h * (sa + sb) -
                    0.5 * c.h * (mu + mu_next);
            if (((state >> (3 * i)) & 1) != ((state >> (3 * i + 1)) & 1)) {
                const int flipped = state ^ (0b11 << (3 * i));
                H(state, flipped) += c.J / 2.0;
            }
        }
        H(state, state) = diag;
    }

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    const Eigen::VectorXd& evals = es.eigenvalues();
    const double e0 = evals.minCoeff();
    Eigen::VectorXd w(dim);
    for (int i = 0; i < dim; ++i) {
        w[i] = std::exp(-spec.thermal.beta * (evals[i] - e0));
    }

    // rho_full = M M^T with M = V diag(sqrt w); the partial trace keeps the
    // two dimer-r bits and sums the rest.
    Eigen::MatrixXd m = es.eigenvectors() * w.cwiseSqrt().asDiagonal();
    const int bit_a = 3 * (r - 1);
    const int bit_b = 3 * (r - 1) + 1;
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    for (int rest = 0; rest < dim; ++rest) {
        if ((rest >> bit_a) & 1 || (rest >> bit_b) & 1) continue;
        std::array<int, 4> states{};
        for (int i = 0; i < 4; ++i) {
            // dimer basis |ab>: index i = a*2 + b with 0 = up
            states[i] = rest | (((i >> 1) & 1) << bit_a) | ((i & 1) << bit_b);
        }
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                rho(i, j) += m.row(states[i]).dot(m.row(states[j]));
            }
        }
    }
    rho /= rho.trace();

    DimerState d;
    d.cells = n;
    d.rho11 = rho(0, 0);
    d.rho22 = rho(1, 1);
    d.rho33 = rho(2, 2);
    d.rho23 = 0.5 * (rho(1, 2) + rho(2, 1));
    d.rho44 = rho(3, 3);
    return d;
}

}  // namespace dxxz
