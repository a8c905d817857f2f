#ifndef DYNBARRIER_TG_SIDEBANDS_HPP
#define DYNBARRIER_TG_SIDEBANDS_HPP

#include <vector>

#include "dynbarrier/barrier.hpp"

namespace dynbarrier {

/// One Bessel-weighted sideband of the perturbative comparison baseline.
struct SidebandRow {
    int n = 0;               ///< signed sideband index
    double weight = 0.0;     ///< J_n(V1/alpha)^2
    double energy = 0.0;     ///< E0 + n alpha
    double transmission = 0.0; ///< weight * static transmission at E_n (0 when closed)
    bool closed = false;     ///< E_n <= 0
};

/// Truncated infinite sideband ladder: equally spaced energies E0 + n alpha
/// with Bessel-square weights. The support grows without bound as the
/// cutoff tightens, unlike the finite quantized channel spectrum.
struct SidebandTable {
    double argument = 0.0;   ///< V1 / alpha
    int n_cutoff = 0;        ///< rows retained for |n| <= n_cutoff
    double weight_sum = 0.0; ///< retained sum, in [1 - cutoff_tol, 1]
    std::vector<SidebandRow> rows; ///< n = -n_cutoff .. n_cutoff
};

/// Retains sidebands until the cumulative Bessel weight reaches
/// 1 - cutoff_tol. Requires cutoff_tol in (0, 1e-3].
SidebandTable tg_sidebands(const BarrierConfig& cfg, double cutoff_tol);

} // namespace dynbarrier

#endif
