#ifndef DYNBARRIER_TDSE_HPP
#define DYNBARRIER_TDSE_HPP

#include <complex>
#include <vector>

#include "dynbarrier/barrier.hpp"

namespace dynbarrier::tdse {

/// Uniform spatial grid and time step for the wave-packet propagator.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    int points = 0;  ///< >= 512
    double dt = 0.0;
    int steps = 0;   ///< 0 = derive from packet geometry (suggested_steps)

    double dx() const { return (x_max - x_min) / (points - 1); }

    /// Grid sanity against a barrier: the barrier must sit strictly inside
    /// with at least 10 barrier widths of free space on each side, and
    /// dt * max|V| <= 0.1.
    void validate(const BarrierConfig& cfg) const;
};

/// Initial Gaussian wave packet: position density of standard deviation
/// sigma centred at `center`, mean momentum k_mean (> 0, moving right).
struct GaussianPacket {
    double center = 0.0;
    double sigma = 0.0;
    double k_mean = 0.0;
};

struct WavePacketState {
    GridSpec grid;
    std::vector<std::complex<double>> amplitudes;
    double time = 0.0;
    int steps_taken = 0;
    double norm_drift = 0.0; ///< |norm/norm0 - 1| at the end of the run
};

/// Steps to let the packet centre travel from its start past the barrier
/// plus five sigma of clearance, at group velocity 2 k_mean.
int suggested_steps(const BarrierConfig& cfg, const GridSpec& grid,
                    const GaussianPacket& packet);

/// Propagates the packet through V(x,t) = V0 + V1 sin(omega t) restricted to
/// |x| <= b/2 (free space outside), using the unitary Cayley form of the
/// implicit midpoint rule with the potential evaluated at the step midpoint.
///
/// The packet must start in region I with < 1e-12 overlap with the barrier.
/// Throws GeometryError if probability reaches the grid edges (there are no
/// absorbing boundaries) and StabilityError if norm drift exceeds 1e-8.
WavePacketState propagate(const BarrierConfig& cfg, const GridSpec& grid,
                          const GaussianPacket& packet);

/// Probability on x > b/2.
double transmitted_fraction(const WavePacketState& state, const BarrierConfig& cfg);

struct MomentumSample {
    double k = 0.0;
    double energy = 0.0;  ///< k^2
    double density = 0.0; ///< |psi_t(k)|^2 of the transmitted component
};

/// Discrete momentum density of the x > b/2 part of the state, k > 0 only.
std::vector<MomentumSample> transmitted_momentum_spectrum(
    const WavePacketState& state, const BarrierConfig& cfg);

} // namespace dynbarrier::tdse

#endif
