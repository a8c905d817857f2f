#include "dynbarrier/tg_sidebands.hpp"

#include <cmath>

#include "dynbarrier/bessel.hpp"

namespace dynbarrier {

SidebandTable tg_sidebands(const BarrierConfig& cfg, double cutoff_tol) {
    cfg.validate();
    if (!(cutoff_tol > 0.0) || cutoff_tol > 1e-3)
        throw ValidationError("tg.cutoff_tol: must be in (0, 1e-3]");

    SidebandTable table;
    table.argument = cfg.v1 / cfg.alpha();

    // Find the cutoff from the symmetric cumulative weight J0^2 + 2 sum J_k^2.
    int guess = static_cast<int>(std::ceil(table.argument)) + 24;
    std::vector<double> j;
    int cutoff = -1;
    for (;;) {
        j = bessel_j_sequence(guess, table.argument);
        double cumulative = j[0] * j[0];
        if (cumulative >= 1.0 - cutoff_tol) {
            cutoff = 0;
        } else {
            for (int k = 1; k <= guess; ++k) {
                cumulative += 2.0 * j[static_cast<size_t>(k)] * j[static_cast<size_t>(k)];
                if (cumulative >= 1.0 - cutoff_tol) {
                    cutoff = k;
                    break;
                }
            }
        }
        if (cutoff >= 0) break;
        if (guess >= 500)
            throw NumericalError("tg_sidebands: cutoff would exceed order 500");
        guess = std::min(2 * guess, 500);
    }
    table.n_cutoff = cutoff;

    table.rows.reserve(static_cast<size_t>(2 * cutoff + 1));
    table.weight_sum = 0.0;
    for (int n = -cutoff; n <= cutoff; ++n) {
        SidebandRow row;
        row.n = n;
        const double jn = j[static_cast<size_t>(std::abs(n))];
        row.weight = jn * jn; // sign of J_{-n} squares away
        row.energy = cfg.e_incident + n * cfg.alpha();
        row.closed = row.energy <= 0.0;
        row.transmission =
            row.closed ? 0.0
                       : row.weight * transmission_at_energy(row.energy, cfg.v0, cfg.b);
        table.weight_sum += row.weight;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace dynbarrier
