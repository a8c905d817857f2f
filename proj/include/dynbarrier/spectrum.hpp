#ifndef DYNBARRIER_SPECTRUM_HPP
#define DYNBARRIER_SPECTRUM_HPP

#include <string>
#include <vector>

#include "dynbarrier/barrier.hpp"

namespace dynbarrier {

/// Photon-exchange branch of a scattering channel.
enum class Side { plus, minus };

enum class ChannelClass { open_subbarrier, open_overbarrier, closed };

const char* side_label(Side s);                 // "+" / "-"
const char* channel_class_label(ChannelClass c); // "open-subbarrier", ...
ChannelClass channel_class_from_label(const std::string& s);

/// One quantized scattering channel of the modulated barrier.
struct Channel {
    int n = 0;                 ///< channel index in [0, N]
    Side side = Side::plus;    ///< absorption (+) or emission (-) branch
    double energy = 0.0;       ///< E_n = E_N + side * sqrt(N^2 - n^2) * alpha
    double snapshot_height = 0.0; ///< equivalent snapshot barrier height V_n
    ChannelClass classification = ChannelClass::open_subbarrier;
};

/// The finite quantized channel spectrum of a modulated barrier.
///
/// Channels lie on the circle (E - e_elastic)^2 + (n alpha)^2 = (N alpha)^2:
/// one elastic channel at n = N plus a +/- pair for each n in [0, N-1],
/// 2N+1 in total, all within [e_elastic - V1, e_elastic + V1].
struct ChannelSpectrum {
    int n_max = 0;         ///< N = floor(V1 / alpha)
    double alpha = 0.0;    ///< photon quantum (= omega, hbar = 1)
    double omega = 0.0;
    double tau = 0.0;      ///< time quantum 1/(N omega); 0 when degenerate
    double e_elastic = 0.0;
    bool degenerate = false;        ///< N == 0: no sidebands, elastic channel only
    bool nonintegral_ratio = false; ///< V1/alpha not integral; N alpha < V1
    std::vector<Channel> channels;  ///< sorted by energy ascending

    const Channel& channel(int n, Side side) const; // throws if absent
};

/// Builds the quantized spectrum for a valid config (v1 may be 0).
ChannelSpectrum build_spectrum(const BarrierConfig& cfg);

/// Density of states 1/|n alpha omega|; unbounded at the band centre n = 0.
struct StateDensity {
    bool unbounded = false;
    double value = 0.0; ///< meaningless when unbounded
};

StateDensity density_of_states(int n, double alpha, double omega);

/// Principal barrier entry time arccos(n/N)/omega in [0, pi/omega].
///
/// The full solution family is +-t_n + 2 pi k / omega; only the principal
/// branch is returned. Throws for n outside [0, N] or a degenerate spectrum.
double entry_time(int n, const ChannelSpectrum& spectrum);

} // namespace dynbarrier

#endif
