#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dynbarrier/traversal.hpp"

using namespace dynbarrier;

namespace {

ChannelSpectrum spectrum_for(int n_max, double omega, double e_elastic = 100.0) {
    BarrierConfig c;
    c.v0 = 2.0 * e_elastic;
    c.e_incident = e_elastic;
    c.b = 1.0;
    c.omega = omega;
    c.v1 = n_max * omega;
    return build_spectrum(c);
}

} // namespace

TEST_CASE("exact roots at the reference transition") {
    const auto roots = traversal_exact(2, 1, 10, 1.0);
    REQUIRE(roots.size() == 2);
    // frozen: arccos(0.1) - arccos(0.2) and 2 pi - arccos(0.1) - arccos(0.2)
    CHECK(roots[0] == doctest::Approx(0.10119049962877099511).epsilon(1e-13));
    CHECK(roots[1] == doctest::Approx(3.4431179955416838263).epsilon(1e-13));
    for (double r : roots) CHECK(r > 0.0);
}

TEST_CASE("band-edge-to-centre transit is a quarter period") {
    const auto roots = traversal_exact(10, 0, 10, 1.0);
    CHECK(roots[0] == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
}

TEST_CASE("exact solver scales with omega") {
    const auto unit = traversal_exact(2, 1, 10, 1.0);
    const auto slow = traversal_exact(2, 1, 10, 0.25);
    CHECK(slow[0] == doctest::Approx(4.0 * unit[0]).epsilon(1e-15));
}

TEST_CASE("index preconditions") {
    CHECK_THROWS_AS(traversal_exact(2, 2, 10, 1.0), ValidationError);
    CHECK_THROWS_AS(traversal_exact(11, 1, 10, 1.0), ValidationError);
    CHECK_THROWS_AS(traversal_exact(2, -1, 10, 1.0), ValidationError);
    CHECK_THROWS_AS(traversal_low(10, 1, 10, 1.0), ValidationError); // singular at n = N
    CHECK_THROWS_AS(traversal_high(2, 0, 10, 1.0), ValidationError); // needs m >= 1
    CHECK_THROWS_AS(traversal_high(2, 1, 10, 1.0, 0), ValidationError);
}

TEST_CASE("low-frequency time at the reference transition") {
    const TraversalTimes t = traversal_low(2, 1, 10, 1.0);
    // frozen: 10/sqrt(96)
    CHECK(t.t_plus == doctest::Approx(1.0206207261596575409).epsilon(1e-14));
    CHECK(t.t_plus == t.t_minus); // same expression, bit-identical
}

TEST_CASE("low vs exact at the reference point: sub-percent agreement") {
    const double tau = 0.1; // omega = 1, N = 10
    const TraversalTimes low = traversal_low(2, 1, 10, tau);
    const auto roots = traversal_exact(2, 1, 10, 1.0);
    const double gap = std::abs(low.t_plus - roots[0]) / roots[0];
    CHECK(gap < 0.01);
    CHECK(gap > 0.007); // frozen reference: ~0.86%
}

TEST_CASE("binomial expansion of the low-frequency time") {
    CHECK(traversal_low_approx(2, 1, 10, 1.0) == doctest::Approx(1.02).epsilon(1e-15));
    const double gap = std::abs(traversal_low_approx(2, 1, 10, 1.0) -
                                traversal_low(2, 1, 10, 1.0).t_plus);
    CHECK(gap < 7e-4); // O(n^4/N^4) residual, ~6.2e-4 here
    CHECK(gap > 5e-4);
    // one-quantum transition costs one time quantum as N grows
    CHECK(traversal_low_approx(1, 0, 10000, 1.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(low_approx_in_domain(2, 10));
    CHECK(!low_approx_in_domain(5, 10));
}

TEST_CASE("energy-level form equals the channel form to 1e-12") {
    for (double omega : {0.1, 0.25, 1.0, 2.0}) {
        for (int n_max : {5, 10, 37}) {
            const ChannelSpectrum sp = spectrum_for(n_max, omega);
            for (int n = 1; n < n_max; n += 3) {
                for (int m = 0; m < n; m += 2) {
                    const TraversalTimes a = traversal_low(n, m, n_max, sp.tau);
                    const TraversalTimes b = traversal_low_energy(n, m, sp);
                    CHECK(b.t_plus == doctest::Approx(a.t_plus).epsilon(1e-12));
                    CHECK(b.t_minus == doctest::Approx(a.t_minus).epsilon(1e-12));
                    CHECK(b.t_plus > 0.0);
                    CHECK(b.t_minus > 0.0);
                }
            }
        }
    }
}

TEST_CASE("low-frequency gap vanishes as the band edge recedes") {
    double prev = 1.0;
    for (int n_max : {10, 20, 40, 80}) {
        const auto roots = traversal_exact(2, 1, n_max, 1.0);
        const TraversalTimes low = traversal_low(2, 1, n_max, 1.0 / n_max);
        const double gap = std::abs(low.t_plus - roots[0]) / roots[0];
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 2e-4);
}

TEST_CASE("high-frequency roots at (2,1,3)") {
    const HighFrequencySolution sol = traversal_high(2, 1, 3, 1.0);
    CHECK(sol.a_coeff == 4.0);
    CHECK(sol.c_coeff == 3.0);
    CHECK(!sol.degenerate);
    // frozen: (-2 sqrt5 +- 2 sqrt2) / 4
    CHECK(sol.tan_theta_plus == doctest::Approx(-0.4109272075633473238).epsilon(1e-13));
    CHECK(sol.tan_theta_minus == doctest::Approx(-1.8251407699364423726).epsilon(1e-13));
    // frozen ratio, both routes
    CHECK(sol.ratio == doctest::Approx(0.22514822655441377867).epsilon(1e-13));
    CHECK(sol.ratio_from_roots == doctest::Approx(sol.ratio).epsilon(1e-12));
    CHECK(sol.t_plus > 0.0);
    CHECK(sol.t_minus > 0.0);
    // branch k = 1 keeps omega T >= pi/2 > 1
    CHECK(sol.t_plus * sol.omega > 1.0);
}

TEST_CASE("degenerate quadratic at (4,3,5)") {
    const HighFrequencySolution sol = traversal_high(4, 3, 5, 1.0);
    CHECK(sol.degenerate);
    CHECK(sol.a_coeff == 0.0);
    CHECK(sol.tan_theta_plus == doctest::Approx(-7.0 / 24.0).epsilon(1e-15));
    CHECK(std::isnan(sol.tan_theta_minus));
    CHECK(high_freq_ratio(4, 3, 5) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("ratio stays below one and can go negative") {
    // frozen: (9 sqrt19 - 7 sqrt51) / (9 sqrt19 + 7 sqrt51)
    CHECK(high_freq_ratio(9, 7, 10) ==
          doctest::Approx(-0.12059961572823757111).epsilon(1e-12));
    for (int n_max = 3; n_max <= 50; ++n_max)
        for (int n = 2; n < n_max; ++n)
            for (int m = 1; m < n; ++m) CHECK(high_freq_ratio(n, m, n_max) < 1.0);
}

TEST_CASE("discriminant identity and root residuals up to N = 50") {
    double worst_disc = 0.0;
    double worst_resid = 0.0;
    for (int n_max = 3; n_max <= 50; ++n_max) {
        for (int n = 2; n < n_max; ++n) {
            for (int m = 1; m < n; ++m) {
                const HighFrequencySolution sol = traversal_high(n, m, n_max, 1.0);
                const double disc =
                    sol.b_coeff * sol.b_coeff - sol.a_coeff * sol.c_coeff;
                const double expected =
                    static_cast<double>(m) * m *
                    (static_cast<double>(n_max) * n_max - static_cast<double>(m) * m);
                worst_disc = std::max(worst_disc, std::abs(disc - expected) / expected);
                const double scale = std::max(
                    {std::abs(sol.a_coeff), std::abs(sol.b_coeff), std::abs(sol.c_coeff)});
                for (double tan :
                     {sol.tan_theta_plus, sol.degenerate ? sol.tan_theta_plus
                                                         : sol.tan_theta_minus}) {
                    const double resid = sol.degenerate
                                             ? 2.0 * sol.b_coeff * tan + sol.c_coeff
                                             : sol.a_coeff * tan * tan +
                                                   2.0 * sol.b_coeff * tan + sol.c_coeff;
                    worst_resid = std::max(worst_resid, std::abs(resid) / scale);
                }
            }
        }
    }
    CHECK(worst_disc <= 1e-9);
    CHECK(worst_resid <= 1e-9);
}
