#ifndef DYNBARRIER_BESSEL_HPP
#define DYNBARRIER_BESSEL_HPP

#include <vector>

namespace dynbarrier {

/// Bessel function of the first kind, integer order.
///
/// Downward (Miller) recurrence normalized by J0 + 2 sum J_{2k} = 1, with a
/// power-series fallback at small argument. Negative orders use
/// J_{-n} = (-1)^n J_n. Supported domain: x in [0, 2000], |n| <= 500.
double bessel_j(int n, double x);

/// J_0(x) .. J_{n_max}(x) in one downward pass.
std::vector<double> bessel_j_sequence(int n_max, double x);

} // namespace dynbarrier

#endif
