#include "dynbarrier/tdse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace dynbarrier::tdse {

namespace {

constexpr double kEdgeProbabilityLimit = 1e-8;
constexpr double kNormDriftLimit = 1e-8;
constexpr int kEdgeCells = 4;

void validate_potential(const BarrierConfig& cfg) {
    // The propagator also serves free-space and over-barrier checks, so it
    // accepts v0 = 0 and ignores e_incident (the packet sets the energy).
    if (!(cfg.v0 >= 0.0)) throw ValidationError("barrier.v0: must be >= 0");
    if (!(cfg.b > 0.0)) throw ValidationError("barrier.b: must be > 0");
    if (!(cfg.v1 >= 0.0)) throw ValidationError("barrier.v1: must be >= 0");
    if (cfg.v1 > cfg.v0)
        throw ValidationError("barrier.v1: must be <= v0 (snapshot heights stay positive)");
    if (cfg.v1 > 0.0 && !(cfg.omega > 0.0))
        throw ValidationError("barrier.omega: must be > 0 when v1 > 0");
}

// Fraction of the cell [x - dx/2, x + dx/2] covered by [-b/2, b/2]; keeps
// the effective barrier width exact instead of quantized to whole cells.
double barrier_coverage(double x, double dx, double b) {
    const double lo = std::max(x - dx / 2.0, -b / 2.0);
    const double hi = std::min(x + dx / 2.0, b / 2.0);
    return hi > lo ? (hi - lo) / dx : 0.0;
}

double discrete_norm(const std::vector<std::complex<double>>& psi, double dx) {
    double s = 0.0;
    for (const auto& a : psi) s += std::norm(a);
    return s * dx;
}

// Thomas solve for the constant-offdiagonal tridiagonal CN system.
void solve_tridiagonal(const std::vector<std::complex<double>>& diag,
                       std::complex<double> off,
                       std::vector<std::complex<double>>& rhs,
                       std::vector<std::complex<double>>& scratch) {
    const size_t n = diag.size();
    scratch.resize(n);
    std::complex<double> beta = diag[0];
    rhs[0] /= beta;
    for (size_t i = 1; i < n; ++i) {
        scratch[i] = off / beta;
        beta = diag[i] - off * scratch[i];
        rhs[i] = (rhs[i] - off * rhs[i - 1]) / beta;
    }
    for (size_t i = n - 1; i-- > 0;) rhs[i] -= scratch[i + 1] * rhs[i + 1];
}

} // namespace

void GridSpec::validate(const BarrierConfig& cfg) const {
    validate_potential(cfg);
    if (points < 512) throw ValidationError("grid.points: must be >= 512");
    if (!(x_min < x_max)) throw ValidationError("grid.x_min: must be < x_max");
    const double margin = 10.0 * cfg.b;
    if (!(x_min <= -cfg.b / 2.0 - margin) || !(x_max >= cfg.b / 2.0 + margin))
        throw ValidationError(
            "grid: barrier must sit >= 10 barrier widths inside [x_min, x_max]");
    if (!(dt > 0.0)) throw ValidationError("grid.dt: must be > 0");
    const double vmax = cfg.v0 + cfg.v1;
    if (vmax > 0.0 && dt * vmax > 0.1)
        throw ValidationError("grid.dt: dt * max|V| must be <= 0.1");
    if (steps < 0) throw ValidationError("grid.steps: must be >= 0");
}

int suggested_steps(const BarrierConfig& cfg, const GridSpec& grid,
                    const GaussianPacket& packet) {
    const double travel =
        (cfg.b / 2.0 + 5.0 * packet.sigma + 5.0) - packet.center;
    const double t_end = travel / (2.0 * packet.k_mean);
    return static_cast<int>(std::ceil(t_end / grid.dt));
}

WavePacketState propagate(const BarrierConfig& cfg, const GridSpec& grid,
                          const GaussianPacket& packet) {
    grid.validate(cfg);
    if (!(packet.sigma > 0.0)) throw ValidationError("packet.sigma: must be > 0");
    if (!(packet.k_mean > 0.0)) throw ValidationError("packet.k_mean: must be > 0");

    // Region-I localization: Gaussian mass beyond -b/2 must be < 1e-12.
    const double gap = (-cfg.b / 2.0 - packet.center) / (packet.sigma * std::numbers::sqrt2);
    if (!(packet.center < -cfg.b / 2.0) || 0.5 * std::erfc(gap) >= 1e-12)
        throw ValidationError("packet.center: overlap with the barrier exceeds 1e-12");
    const double edge_gap =
        std::min(packet.center - grid.x_min, grid.x_max - packet.center);
    if (edge_gap < 8.0 * packet.sigma)
        throw ValidationError("packet.center: initial packet too close to a grid edge");

    const int n = grid.points;
    const double dx = grid.dx();
    const int steps = grid.steps > 0 ? grid.steps : suggested_steps(cfg, grid, packet);
    if (steps < 1) throw ValidationError("grid.steps: derived step count is empty");

    std::vector<double> x(static_cast<size_t>(n));
    std::vector<double> coverage(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        x[static_cast<size_t>(j)] = grid.x_min + j * dx;
        coverage[static_cast<size_t>(j)] = barrier_coverage(x[static_cast<size_t>(j)], dx, cfg.b);
    }

    std::vector<std::complex<double>> psi(static_cast<size_t>(n));
    const std::complex<double> I(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
        const double d = x[static_cast<size_t>(j)] - packet.center;
        psi[static_cast<size_t>(j)] =
            std::exp(-d * d / (4.0 * packet.sigma * packet.sigma) +
                     I * packet.k_mean * x[static_cast<size_t>(j)]);
    }
    const double norm0_raw = discrete_norm(psi, dx);
    const double renorm = 1.0 / std::sqrt(norm0_raw);
    for (auto& a : psi) a *= renorm;

    // Cayley step: (1 + i dt H/2) psi' = (1 - i dt H/2) psi with
    // H = -d2/dx2 + V(x, t + dt/2) on a central-difference stencil.
    const double a_off = grid.dt / (2.0 * dx * dx);
    const std::complex<double> off = -I * a_off;
    std::vector<std::complex<double>> diag(static_cast<size_t>(n));
    std::vector<std::complex<double>> rhs(static_cast<size_t>(n));
    std::vector<std::complex<double>> scratch;

    double t = 0.0;
    const auto edge_probability = [&]() {
        double p = 0.0;
        for (int j = 0; j < kEdgeCells; ++j) {
            p += std::norm(psi[static_cast<size_t>(j)]);
            p += std::norm(psi[static_cast<size_t>(n - 1 - j)]);
        }
        return p * dx;
    };

    for (int s = 0; s < steps; ++s) {
        const double v_t = cfg.v0 + cfg.v1 * std::sin(cfg.omega * (t + grid.dt / 2.0));
        for (int j = 0; j < n; ++j) {
            const double v = coverage[static_cast<size_t>(j)] * v_t;
            diag[static_cast<size_t>(j)] =
                1.0 + I * (grid.dt / 2.0) * (2.0 / (dx * dx) + v);
        }
        // rhs = (2 - diag) psi + i a (psi_{j+1} + psi_{j-1})
        for (int j = 0; j < n; ++j)
            rhs[static_cast<size_t>(j)] =
                (2.0 - diag[static_cast<size_t>(j)]) * psi[static_cast<size_t>(j)];
        for (int j = 0; j + 1 < n; ++j) {
            rhs[static_cast<size_t>(j)] += I * a_off * psi[static_cast<size_t>(j + 1)];
            rhs[static_cast<size_t>(j + 1)] += I * a_off * psi[static_cast<size_t>(j)];
        }
        solve_tridiagonal(diag, off, rhs, scratch);
        psi.swap(rhs);
        t += grid.dt;

        if ((s & 63) == 0 && edge_probability() > kEdgeProbabilityLimit)
            throw GeometryError("propagate: packet reached the grid edge at t=" +
                                std::to_string(t));
    }
    if (edge_probability() > kEdgeProbabilityLimit)
        throw GeometryError("propagate: packet reached the grid edge at t=" +
                            std::to_string(t));

    WavePacketState state;
    state.grid = grid;
    state.grid.steps = steps;
    state.time = t;
    state.steps_taken = steps;
    state.norm_drift = std::abs(discrete_norm(psi, dx) - 1.0);
    state.amplitudes = std::move(psi);
    if (state.norm_drift > kNormDriftLimit)
        throw StabilityError("propagate: norm drift " + std::to_string(state.norm_drift) +
                             " exceeds 1e-8");
    return state;
}

double transmitted_fraction(const WavePacketState& state, const BarrierConfig& cfg) {
    const double dx = state.grid.dx();
    double s = 0.0;
    for (int j = 0; j < state.grid.points; ++j) {
        const double xj = state.grid.x_min + j * dx;
        if (xj > cfg.b / 2.0) s += std::norm(state.amplitudes[static_cast<size_t>(j)]);
    }
    return s * dx;
}

std::vector<MomentumSample> transmitted_momentum_spectrum(
    const WavePacketState& state, const BarrierConfig& cfg) {
    const double dx = state.grid.dx();
    const int n = state.grid.points;
    const double span = state.grid.x_max - state.grid.x_min;

    // Direct transform of the masked tail on the natural k grid 2 pi m / L.
    std::vector<double> xs;
    std::vector<std::complex<double>> tail;
    for (int j = 0; j < n; ++j) {
        const double xj = state.grid.x_min + j * dx;
        if (xj > cfg.b / 2.0) {
            xs.push_back(xj);
            tail.push_back(state.amplitudes[static_cast<size_t>(j)]);
        }
    }

    std::vector<MomentumSample> spectrum;
    const int m_max = n / 2;
    spectrum.reserve(static_cast<size_t>(m_max));
    const std::complex<double> I(0.0, 1.0);
    const double norm = dx / std::sqrt(2.0 * std::numbers::pi);
    for (int m = 1; m <= m_max; ++m) {
        const double k = 2.0 * std::numbers::pi * m / span;
        // e^{-ik x_j} by phase recurrence along the uniform tail grid
        const std::complex<double> step = std::exp(-I * k * dx);
        std::complex<double> phase = xs.empty() ? 0.0 : std::exp(-I * k * xs[0]);
        std::complex<double> acc(0.0, 0.0);
        for (size_t j = 0; j < tail.size(); ++j) {
            acc += tail[j] * phase;
            phase *= step;
        }
        acc *= norm;
        spectrum.push_back({k, k * k, std::norm(acc)});
    }
    return spectrum;
}

} // namespace dynbarrier::tdse
