#include "dxxz/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dxxz/oracle.hpp"
#include "dxxz/rdm.hpp"
#include "dxxz/transfer.hpp"

namespace dxxz {

namespace {

std::string describe(const ChainSpec& s, int r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "J=%.6g Delta=%.6g J1=%.6g h=%.6g T=%.6g alpha=%.6g "
                  "gamma=%.6g eta=%.6g N=%d r=%d",
                  s.host.J, s.host.Delta, s.host.J1, s.host.h, s.thermal.T,
                  s.imp.alpha, s.imp.gamma, s.imp.eta,
                  std::get<FiniteRing>(s.geometry).cells, r);
    return buf;
}

double rho_distance(const DimerState& a, const DimerState& b) {
    return std::max({std::abs(a.rho11 - b.rho11), std::abs(a.rho22 - b.rho22),
                     std::abs(a.rho23 - b.rho23), std::abs(a.rho33 - b.rho33),
                     std::abs(a.rho44 - b.rho44)});
}

}  // namespace

ChainSpec random_spec(std::mt19937_64& rng, int cells) {
    std::uniform_real_distribution<double> coupling(-2.0, 2.0);
    std::uniform_real_distribution<double> temp(0.05, 5.0);
    std::uniform_real_distribution<double> strength(-1.0, 1.0);
    ChainSpec s;
    s.host = {coupling(rng), coupling(rng), coupling(rng), coupling(rng)};
    s.imp = {strength(rng), strength(rng), strength(rng)};
    s.geometry = FiniteRing{cells};
    s.thermal = ThermalState::from_temperature(temp(rng));
    return s;
}

ValidationReport run_validation(const ValidationOptions& opts) {
    ValidationReport rep;
    std::mt19937_64 rng(opts.seed);
    const int n_max = opts.full_hilbert ? std::min(opts.n_max, 4) : opts.n_max;

    for (int n = opts.n_min; n <= n_max; ++n) {
        for (int k = 0; k < opts.specs_per_n; ++k) {
            ChainSpec spec = random_spec(rng, n);
            const int r = 1 + static_cast<int>(rng() % n);

            const double logz_tm = partition_function(spec).log;
            const double logz_or = oracle_partition(spec, r).log;
            const double dz = std::abs(logz_tm - logz_or) /
                              std::max(1.0, std::abs(logz_or));

            DimerState rho_tm = reduced_density_finite(spec);
            if (opts.inject_fault) rho_tm.rho23 = -rho_tm.rho23;
            const DimerState rho_or = oracle_dimer_state(spec, r);
            const double dr = rho_distance(rho_tm, rho_or);

            double dfh = 0.0;
            if (opts.full_hilbert) {
                const DimerState rho_fh = oracle_full_hilbert(spec, r);
                dfh = std::max(rho_distance(rho_fh, rho_or),
                               rho_distance(rho_fh, rho_tm));
            }

            const double worst = std::max({dz, dr, dfh});
            if (worst > std::max({rep.max_dlogz, rep.max_drho,
                                  rep.max_drho_full_hilbert})) {
                rep.worst_spec = describe(spec, r);
            }
            rep.max_dlogz = std::max(rep.max_dlogz, dz);
            rep.max_drho = std::max(rep.max_drho, dr);
            rep.max_drho_full_hilbert =
                std::max(rep.max_drho_full_hilbert, dfh);
        }
    }

    rep.pass = rep.max_dlogz < opts.tol && rep.max_drho < opts.tol &&
               rep.max_drho_full_hilbert < opts.tol;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "max |dlogZ|=%.3e  max |drho|=%.3e  max |drho_fh|=%.3e  "
                  "tol=%.1e  %s",
                  rep.max_dlogz, rep.max_drho, rep.max_drho_full_hilbert,
                  opts.tol, rep.pass ? "OK" : "FAIL");
    rep.summary = buf;
    return rep;
}

}  // namespace dxxz
