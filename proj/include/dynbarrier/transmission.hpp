#ifndef DYNBARRIER_TRANSMISSION_HPP
#define DYNBARRIER_TRANSMISSION_HPP

#include <vector>

#include "dynbarrier/barrier.hpp"
#include "dynbarrier/spectrum.hpp"

namespace dynbarrier {

struct ChannelTransmission {
    int n = 0;
    Side side = Side::plus;
    double energy = 0.0;
    double k = 0.0;      ///< channel wavenumber, k^2 = E_n (NaN when closed)
    double kappa = 0.0;  ///< decay/propagation constant, kappa^2 = |V0 - E_n|
    double snapshot_height = 0.0;
    ChannelClass classification = ChannelClass::open_subbarrier;
    double t = 0.0;      ///< channel transmission (0 for closed channels)
};

struct TransmissionResult {
    ChannelSpectrum spectrum;
    std::vector<ChannelTransmission> per_channel; ///< sorted by energy
    double total = 0.0;      ///< sum of t over open channels (may exceed 1)
    double normalized = 0.0; ///< total / open_count, plotting diagnostic only
    int open_count = 0;
    int closed_count = 0;
};

/// Transmission of a single open channel through its equivalent static
/// barrier (unit incident amplitude). Throws on closed channels.
double transmission_channel(const BarrierConfig& cfg, const Channel& channel);

/// Builds the spectrum and sums channel transmissions over open channels.
TransmissionResult transmission_total(const BarrierConfig& cfg);

} // namespace dynbarrier

#endif
