#include "dynbarrier/traversal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace dynbarrier {

namespace {

void check_indices(int n, int m, int n_max, bool n_strictly_below) {
    if (n_max < 1) throw ValidationError("traversal: N must be >= 1");
    if (m < 0 || n <= m)
        throw ValidationError("traversal: indices must satisfy 0 <= m < n");
    const int hi = n_strictly_below ? n_max - 1 : n_max;
    if (n > hi)
        throw ValidationError("traversal: n=" + std::to_string(n) + " out of range (N=" +
                              std::to_string(n_max) + ")");
}

} // namespace

std::vector<double> traversal_exact(int n, int m, int n_max, double omega) {
    check_indices(n, m, n_max, false);
    if (!(omega > 0.0)) throw ValidationError("traversal_exact: omega must be > 0");
    // cos(w t_n + w T) = m/N with cos(w t_n) = n/N, sin(w t_n) = +sqrt(1-(n/N)^2):
    // w T = +-arccos(m/N) - arccos(n/N) (mod 2 pi)
    const double an = std::acos(static_cast<double>(n) / n_max);
    const double am = std::acos(static_cast<double>(m) / n_max);
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> roots{(am - an) / omega, (two_pi - am - an) / omega};
    std::sort(roots.begin(), roots.end());
    return roots;
}

TraversalTimes traversal_low(int n, int m, int n_max, double tau) {
    check_indices(n, m, n_max, true);
    if (!(tau > 0.0)) throw ValidationError("traversal_low: tau must be > 0");
    const double t = (n - m) * n_max * tau /
                     (std::sqrt(static_cast<double>(n_max) + n) *
                      std::sqrt(static_cast<double>(n_max) - n));
    return {t, t};
}

double traversal_low_approx(int n, int m, int n_max, double tau) {
    check_indices(n, m, n_max, true);
    if (!(tau > 0.0)) throw ValidationError("traversal_low_approx: tau must be > 0");
    const double nn = static_cast<double>(n_max) * n_max;
    return (n - m) * (1.0 + static_cast<double>(n) * n / (2.0 * nn)) * tau;
}

bool low_approx_in_domain(int n, int n_max) { return 4 * n <= n_max; }

TraversalTimes traversal_low_energy(int n, int m, const ChannelSpectrum& spectrum) {
    check_indices(n, m, spectrum.n_max, true);
    const Channel& up = spectrum.channel(n, Side::plus);
    const Channel& down = spectrum.channel(n, Side::minus);
    const double dn = n - m;
    // +-|n-m| / (E_n^+- - E_N): the emission branch pairs the - sign with the
    // negative energy offset, so both durations come out positive.
    return {dn / (up.energy - spectrum.e_elastic),
            -dn / (down.energy - spectrum.e_elastic)};
}

double high_freq_ratio(int n, int m, int n_max) {
    check_indices(n, m, n_max, true);
    if (m == 0) throw ValidationError("high_freq_ratio: requires m >= 1");
    const double nn = static_cast<double>(n_max) * n_max;
    const double bn = n * std::sqrt(nn - static_cast<double>(n) * n);
    const double dm = m * std::sqrt(nn - static_cast<double>(m) * m);
    return (bn - dm) / (bn + dm);
}

HighFrequencySolution traversal_high(int n, int m, int n_max, double omega, int branch) {
    check_indices(n, m, n_max, true);
    if (m == 0) throw ValidationError("traversal_high: requires m >= 1");
    if (!(omega > 0.0)) throw ValidationError("traversal_high: omega must be > 0");
    if (branch < 1)
        throw ValidationError("traversal_high: branch must be >= 1 for positive durations");

    HighFrequencySolution sol;
    sol.n = n;
    sol.m = m;
    sol.n_max = n_max;
    sol.omega = omega;
    sol.branch = branch;

    const double nn = static_cast<double>(n_max) * n_max;
    sol.a_coeff = nn - static_cast<double>(n) * n - static_cast<double>(m) * m;
    sol.b_coeff = n * std::sqrt(nn - static_cast<double>(n) * n);
    sol.c_coeff = static_cast<double>(n) * n - static_cast<double>(m) * m;
    sol.ratio = high_freq_ratio(n, m, n_max);

    const double pi = std::numbers::pi;
    if (sol.a_coeff == 0.0) {
        // N^2 = n^2 + m^2: the quadratic degenerates to 2B tan(theta) + C = 0
        sol.degenerate = true;
        sol.tan_theta_plus = -sol.c_coeff / (2.0 * sol.b_coeff);
        sol.tan_theta_minus = std::numeric_limits<double>::quiet_NaN();
        sol.theta_plus = std::atan(sol.tan_theta_plus);
        sol.theta_minus = std::numeric_limits<double>::quiet_NaN();
        sol.t_plus = (sol.theta_plus + branch * pi) / omega;
        sol.t_minus = std::numeric_limits<double>::quiet_NaN();
        sol.ratio_from_roots = std::numeric_limits<double>::quiet_NaN();
        return sol;
    }

    const double disc = sol.b_coeff * sol.b_coeff - sol.a_coeff * sol.c_coeff;
    const double root = std::sqrt(disc);
    sol.tan_theta_plus = (-sol.b_coeff + root) / sol.a_coeff;
    sol.tan_theta_minus = (-sol.b_coeff - root) / sol.a_coeff;
    sol.theta_plus = std::atan(sol.tan_theta_plus);
    sol.theta_minus = std::atan(sol.tan_theta_minus);
    sol.t_plus = (sol.theta_plus + branch * pi) / omega;
    sol.t_minus = (sol.theta_minus + branch * pi) / omega;
    sol.ratio_from_roots = sol.tan_theta_plus / sol.tan_theta_minus;
    return sol;
}

} // namespace dynbarrier
