"""Transmission and quantized traversal times of a time-modulated rectangular barrier.

Thin wrapper over the C++ extension module. Natural units throughout:
hbar = 1 and 2m = 1, so k^2 = E and the photon quantum alpha equals omega.
"""

from dynbarrier._core import (  # noqa: F401
    BarrierConfig,
    Channel,
    ChannelClass,
    ChannelSpectrum,
    ChannelTransmission,
    GaussianPacket,
    GridSpec,
    HighFrequencySolution,
    MomentumSample,
    NumericalError,
    SidebandRow,
    SidebandTable,
    Side,
    StateDensity,
    StaticSolution,
    TransmissionResult,
    TraversalTimes,
    WavePacketState,
    Wavenumbers,
    __version__,
    bessel_j,
    bessel_j_sequence,
    build_spectrum,
    density_of_states,
    entry_time,
    high_freq_ratio,
    low_approx_in_domain,
    match_static,
    propagate,
    suggested_steps,
    tg_sidebands,
    transmission_at_energy,
    transmission_channel,
    transmission_opaque,
    transmission_static,
    transmission_total,
    transmitted_fraction,
    transmitted_momentum_spectrum,
    traversal_exact,
    traversal_high,
    traversal_low,
    traversal_low_approx,
    traversal_low_energy,
    wavenumbers,
)
