#include "dynbarrier/transmission.hpp"

#include <cmath>
#include <limits>

namespace dynbarrier {

double transmission_channel(const BarrierConfig& cfg, const Channel& channel) {
    if (channel.classification == ChannelClass::closed)
        throw ValidationError("transmission_channel: channel is closed (E <= 0)");
    return transmission_at_energy(channel.energy, cfg.v0, cfg.b);
}

TransmissionResult transmission_total(const BarrierConfig& cfg) {
    TransmissionResult res;
    res.spectrum = build_spectrum(cfg);

    res.per_channel.reserve(res.spectrum.channels.size());
    for (const auto& ch : res.spectrum.channels) {
        ChannelTransmission ct;
        ct.n = ch.n;
        ct.side = ch.side;
        ct.energy = ch.energy;
        ct.snapshot_height = ch.snapshot_height;
        ct.classification = ch.classification;
        if (ch.classification == ChannelClass::closed) {
            ct.k = std::numeric_limits<double>::quiet_NaN();
            ct.kappa = std::sqrt(cfg.v0 - ch.energy);
            ct.t = 0.0;
            ++res.closed_count;
        } else {
            ct.k = std::sqrt(ch.energy);
            ct.kappa = std::sqrt(std::abs(cfg.v0 - ch.energy));
            ct.t = transmission_channel(cfg, ch);
            res.total += ct.t;
            ++res.open_count;
        }
        res.per_channel.push_back(ct);
    }
    res.normalized = res.open_count > 0 ? res.total / res.open_count : 0.0;
    return res;
}

} // namespace dynbarrier
