#include "dynbarrier/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dynbarrier {

const char* side_label(Side s) { return s == Side::plus ? "+" : "-"; }

const char* channel_class_label(ChannelClass c) {
    switch (c) {
        case ChannelClass::open_subbarrier: return "open-subbarrier";
        case ChannelClass::open_overbarrier: return "open-overbarrier";
        case ChannelClass::closed: return "closed";
    }
    return "?";
}

ChannelClass channel_class_from_label(const std::string& s) {
    if (s == "open-subbarrier") return ChannelClass::open_subbarrier;
    if (s == "open-overbarrier") return ChannelClass::open_overbarrier;
    if (s == "closed") return ChannelClass::closed;
    throw ValidationError("unknown channel classification: " + s);
}

namespace {

ChannelClass classify(double energy, double v0) {
    if (energy <= 0.0) return ChannelClass::closed;
    if (energy >= v0) return ChannelClass::open_overbarrier;
    return ChannelClass::open_subbarrier;
}

} // namespace

const Channel& ChannelSpectrum::channel(int n, Side side) const {
    for (const auto& c : channels) {
        if (c.n == n && (c.side == side || n == n_max)) return c;
    }
    throw ValidationError("spectrum has no channel n=" + std::to_string(n));
}

ChannelSpectrum build_spectrum(const BarrierConfig& cfg) {
    cfg.validate();

    ChannelSpectrum sp;
    sp.alpha = cfg.alpha();
    sp.omega = cfg.omega;
    sp.e_elastic = cfg.e_incident;

    const double ratio = cfg.v1 / sp.alpha;
    const double snapped = std::round(ratio);
    int n_max;
    if (std::abs(ratio - snapped) <= 1e-9 * std::max(1.0, ratio))
        n_max = static_cast<int>(snapped);
    else
        n_max = static_cast<int>(std::floor(ratio));
    if (n_max > 1000000)
        throw NumericalError("build_spectrum: more than 1e6 channels (v1/omega too large)");

    sp.n_max = n_max;
    sp.degenerate = (n_max == 0);
    sp.tau = sp.degenerate ? 0.0 : 1.0 / (n_max * cfg.omega);
    sp.nonintegral_ratio =
        !sp.degenerate && std::abs(n_max * sp.alpha - cfg.v1) > 1e-9 * cfg.v1;

    if (sp.degenerate) {
        Channel elastic{0, Side::plus, sp.e_elastic, cfg.v0, classify(sp.e_elastic, cfg.v0)};
        sp.channels.push_back(elastic);
        return sp;
    }

    const double nn = static_cast<double>(n_max) * n_max;
    sp.channels.reserve(2 * n_max + 1);
    for (int n = 0; n < n_max; ++n) {
        const double shift = std::sqrt(nn - static_cast<double>(n) * n) * sp.alpha;
        sp.channels.push_back({n, Side::plus, sp.e_elastic + shift, cfg.v0 + shift,
                               classify(sp.e_elastic + shift, cfg.v0)});
        sp.channels.push_back({n, Side::minus, sp.e_elastic - shift, cfg.v0 - shift,
                               classify(sp.e_elastic - shift, cfg.v0)});
    }
    // elastic channel: zero shift, assigned exactly
    sp.channels.push_back(
        {n_max, Side::plus, sp.e_elastic, cfg.v0, classify(sp.e_elastic, cfg.v0)});

    std::sort(sp.channels.begin(), sp.channels.end(), [](const Channel& a, const Channel& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        if (a.n != b.n) return a.n < b.n;
        return a.side == Side::minus && b.side == Side::plus;
    });
    return sp;
}

StateDensity density_of_states(int n, double alpha, double omega) {
    if (!(alpha > 0.0) || !(omega > 0.0))
        throw ValidationError("density_of_states: alpha and omega must be > 0");
    if (n == 0) return {true, 0.0}; // band centre: levels are dense beyond measure
    return {false, 1.0 / std::abs(n * alpha * omega)};
}

double entry_time(int n, const ChannelSpectrum& spectrum) {
    if (spectrum.degenerate)
        throw ValidationError("entry_time: degenerate spectrum has no time quantization");
    if (n < 0 || n > spectrum.n_max)
        throw ValidationError("entry_time: channel index must be in [0, N]");
    const double x = static_cast<double>(n) / spectrum.n_max;
    return std::acos(x) / spectrum.omega;
}

} // namespace dynbarrier
