#ifndef DYNBARRIER_TRAVERSAL_HPP
#define DYNBARRIER_TRAVERSAL_HPP

#include <vector>

#include "dynbarrier/spectrum.hpp"

namespace dynbarrier {

/// Absorption/emission traversal durations. Both are positive magnitudes;
/// the +/- distinction is the photon-exchange direction, not a sign of time.
struct TraversalTimes {
    double t_plus = 0.0;
    double t_minus = 0.0;
};

/// All principal solutions T of cos(arccos(n/N) + omega T) = m/N in
/// [0, 2 pi / omega), sorted ascending. The full family adds 2 pi k / omega.
/// Requires 0 <= m < n <= N.
std::vector<double> traversal_exact(int n, int m, int n_max, double omega);

/// Low-frequency (omega T << 1) traversal time |n-m| N tau / sqrt(N^2-n^2).
/// Absorption and emission times are identical in this regime; requires
/// 0 <= m < n < N (the expression is singular at n = N).
TraversalTimes traversal_low(int n, int m, int n_max, double tau);

/// Small-n expansion |n-m| (1 + n^2/2N^2) tau of the low-frequency time.
/// Accuracy degrades above n ~ N/4; see low_approx_in_domain().
double traversal_low_approx(int n, int m, int n_max, double tau);

/// Soft validity gate for traversal_low_approx.
bool low_approx_in_domain(int n, int n_max);

/// Low-frequency time written against the channel energies,
/// +-|n-m| / (E_n^+- - E_N); equals traversal_low identically.
TraversalTimes traversal_low_energy(int n, int m, const ChannelSpectrum& spectrum);

/// High-frequency (omega T >> 1) traversal solution: the roots of
/// A tan^2(theta) + 2B tan(theta) + C = 0 with theta = omega T and
///   A = N^2 - n^2 - m^2, B = n sqrt(N^2 - n^2), C = n^2 - m^2.
struct HighFrequencySolution {
    int n = 0, m = 0, n_max = 0;
    double omega = 0.0;
    double a_coeff = 0.0, b_coeff = 0.0, c_coeff = 0.0;
    bool degenerate = false;      ///< A == 0: single root of the linear equation
    double tan_theta_plus = 0.0;  ///< (-B + sqrt(B^2 - AC)) / A
    double tan_theta_minus = 0.0; ///< (-B - sqrt(B^2 - AC)) / A (NaN when degenerate)
    double theta_plus = 0.0;      ///< principal arctangent in (-pi/2, pi/2)
    double theta_minus = 0.0;
    int branch = 1;               ///< k in T = (theta + k pi) / omega
    double t_plus = 0.0;          ///< duration on the requested branch
    double t_minus = 0.0;
    double ratio = 0.0;            ///< closed-form tan(theta+)/tan(theta-) route
    double ratio_from_roots = 0.0; ///< the same ratio from the computed roots
};

/// Requires 0 < m < n < N; the branch must be >= 1 so durations stay
/// positive (the regime condition omega T >> 1 is the caller's business).
HighFrequencySolution traversal_high(int n, int m, int n_max, double omega,
                                     int branch = 1);

/// [n sqrt(N^2-n^2) - m sqrt(N^2-m^2)] / [n sqrt(N^2-n^2) + m sqrt(N^2-m^2)],
/// strictly below 1 for 0 < m < n < N.
double high_freq_ratio(int n, int m, int n_max);

} // namespace dynbarrier

#endif
