#ifndef DYNBARRIER_BARRIER_HPP
#define DYNBARRIER_BARRIER_HPP

#include <complex>

#include "dynbarrier/errors.hpp"

namespace dynbarrier {

/// Physical parameters of a (possibly time-modulated) rectangular barrier.
///
/// Natural units throughout: hbar = 1 and 2m = 1, so energies and squared
/// wavenumbers coincide (k^2 = E) and the photon quantum alpha equals omega.
/// To convert from SI, express energies in units of hbar^2 k_ref^2 / (2m),
/// lengths in 1/k_ref and times in 2m / (hbar k_ref^2) for any reference
/// wavenumber k_ref.
struct BarrierConfig {
    double v0 = 0.0;         ///< static barrier height V0
    double b = 0.0;          ///< barrier width
    double v1 = 0.0;         ///< modulation amplitude V1 (0 = static barrier)
    double omega = 1.0;      ///< modulation angular frequency
    double e_incident = 0.0; ///< incident energy (below V0)

    /// Photon quantum of the modulation field (hbar = 1).
    double alpha() const { return omega; }

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

struct Wavenumbers {
    double k;     ///< outer-region wavenumber, k^2 = E
    double kappa; ///< in-barrier decay constant, kappa^2 = V0 - E
};

/// Sub-barrier wavenumber pair. Throws ValidationError unless 0 < e < v0.
Wavenumbers wavenumbers(double e, double v0);

/// Matched amplitudes for a unit-amplitude wave incident on a static barrier.
struct StaticSolution {
    double k0 = 0.0;
    double kappa0 = 0.0;
    std::complex<double> a_minus;  ///< reflected amplitude in region I
    std::complex<double> b_plus;   ///< growing in-barrier amplitude
    std::complex<double> b_minus;  ///< decaying in-barrier amplitude
    std::complex<double> c_plus;   ///< transmitted amplitude in region III
    double transmission = 0.0;     ///< |c_plus|^2
    double reflection = 0.0;       ///< |a_minus|^2
};

/// Solves the 4x4 continuity system at x = +-b/2 numerically.
///
/// This is deliberately a second, independent route to the transmission:
/// it must agree with transmission_static() to machine precision and
/// conserve flux (|a_minus|^2 + |c_plus|^2 = 1).
StaticSolution match_static(const BarrierConfig& cfg);

/// Closed-form static transmission 4k^2 K^2 / (4k^2 K^2 + (k^2+K^2)^2 sinh^2 Kb).
double transmission_static(const BarrierConfig& cfg);

/// Opaque-limit transmission with the exponential in place of sinh^2.
///
/// Accurate for kappa*b >> 1 only; evaluated in log space so extreme
/// barriers underflow to 0 instead of overflowing.
double transmission_opaque(const BarrierConfig& cfg);

/// Equivalent-static transmission at an arbitrary channel energy e > 0.
///
/// Dispatches on the barrier top: tunnelling (e < v0), the kappa -> 0
/// limit 1/(1 + e b^2/4) at e == v0, and the oscillatory over-barrier
/// continuation 4k^2 q^2 / (4k^2 q^2 + (k^2-q^2)^2 sin^2 qb) above it.
double transmission_at_energy(double e, double v0, double b);

} // namespace dynbarrier

#endif
