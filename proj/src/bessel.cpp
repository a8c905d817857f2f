#include "dynbarrier/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "dynbarrier/errors.hpp"

namespace dynbarrier {

namespace {

constexpr int kMaxOrder = 500;
constexpr double kMaxArgument = 2000.0;

// Power series J_n(x) = sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!), n >= 0.
// Adequate for small x where the leading term does not underflow badly.
double series_jn(int n, double x) {
    const double half = x / 2.0;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= half / i;
    if (term == 0.0) return 0.0;
    double sum = term;
    const double q = -half * half;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (n + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Downward (Miller) recurrence from a start order well above both n and x,
// normalized with J_0 + 2 sum_k J_{2k} = 1. Fills J_0..J_top.
std::vector<double> miller_sequence(int top, double x) {
    const double scale_limit = 1e250;
    const double big = std::max(static_cast<double>(top), x);
    int start = top + 40 + static_cast<int>(3.0 * std::sqrt(big + 1.0)) +
                static_cast<int>(x);
    if (start % 2 != 0) ++start; // even start keeps the norm accumulator aligned

    std::vector<double> out(static_cast<size_t>(top) + 1, 0.0);
    double jp = 0.0; // J_{m+1}
    double jc = 1.0; // J_m (arbitrary seed; normalized away)
    double norm = 0.0;
    for (int m = start; m >= 1; --m) {
        double jm = (2.0 * m / x) * jc - jp; // J_{m-1}
        jp = jc;
        jc = jm;
        if (m - 1 <= top) out[static_cast<size_t>(m - 1)] = jc;
        if ((m - 1) % 2 == 0) norm += (m - 1 == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > scale_limit) {
            jp /= scale_limit;
            jc /= scale_limit;
            norm /= scale_limit;
            for (auto& v : out) v /= scale_limit;
        }
    }
    if (norm == 0.0 || !std::isfinite(norm))
        throw NumericalError("bessel_j: normalization failed (extreme order/argument)");
    for (auto& v : out) v /= norm;
    return out;
}

} // namespace

std::vector<double> bessel_j_sequence(int n_max, double x) {
    if (n_max < 0 || n_max > kMaxOrder)
        throw ValidationError("bessel_j_sequence: order must be in [0, 500]");
    if (!(x >= 0.0)) throw ValidationError("bessel_j_sequence: argument must be >= 0");
    if (x > kMaxArgument)
        throw NumericalError("bessel_j_sequence: argument beyond supported range");

    std::vector<double> out(static_cast<size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (x < 0.5) {
        for (int n = 0; n <= n_max; ++n) out[static_cast<size_t>(n)] = series_jn(n, x);
        return out;
    }
    return miller_sequence(n_max, x);
}

double bessel_j(int n, double x) {
    const int a = std::abs(n);
    if (a > kMaxOrder) throw ValidationError("bessel_j: |order| must be <= 500");
    const double jn = bessel_j_sequence(a, x)[static_cast<size_t>(a)];
    return (n < 0 && a % 2 != 0) ? -jn : jn;
}

} // namespace dynbarrier
