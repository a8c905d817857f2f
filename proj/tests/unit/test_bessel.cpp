#include "doctest.h"

#include <cmath>

#include "dynbarrier/bessel.hpp"
#include "dynbarrier/errors.hpp"

using namespace dynbarrier;

namespace {

// independent oracle: direct power-series summation to 1e-15
double series_oracle(int n, double x) {
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= (x / 2.0) / i;
    double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -(x / 2.0) * (x / 2.0) / (static_cast<double>(k) * (n + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

} // namespace

TEST_CASE("values at the origin") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    for (int n : {1, 2, 5, 100}) CHECK(bessel_j(n, 0.0) == 0.0);
}

TEST_CASE("J1(1) against the series oracle and its frozen value") {
    CHECK(bessel_j(1, 1.0) == doctest::Approx(series_oracle(1, 1.0)).epsilon(1e-12));
    // frozen: arbitrary-precision value
    CHECK(bessel_j(1, 1.0) == doctest::Approx(0.44005058574493351596).epsilon(1e-12));
}

TEST_CASE("frozen spot values across the argument range") {
    CHECK(bessel_j(0, 2.5) == doctest::Approx(-0.048383776468197996327).epsilon(1e-12));
    CHECK(bessel_j(3, 2.5) == doctest::Approx(0.21660039103911352477).epsilon(1e-12));
    CHECK(bessel_j(5, 0.5) == doctest::Approx(8.053627241357474086e-6).epsilon(1e-10));
    CHECK(bessel_j(10, 5.0) == doctest::Approx(0.0014678026473104741311).epsilon(1e-11));
    CHECK(bessel_j(2, 1.0) == doctest::Approx(0.11490348493190048047).epsilon(1e-12));
}

TEST_CASE("agreement with the series oracle over a grid") {
    for (double x : {0.1, 0.4, 0.9, 2.0, 4.5, 7.0}) {
        for (int n = 0; n <= 12; ++n) {
            const double expected = series_oracle(n, x);
            CHECK(bessel_j(n, x) == doctest::Approx(expected).epsilon(1e-11));
        }
    }
}

TEST_CASE("negative order parity") {
    for (int n : {1, 2, 3, 6}) {
        const double direct = bessel_j(n, 2.5);
        const double mirrored = bessel_j(-n, 2.5);
        CHECK(mirrored == ((n % 2 == 0) ? direct : -direct));
    }
}

TEST_CASE("completeness sum over the sideband ladder") {
    for (double x : {0.5, 1.0, 2.5, 5.0}) {
        const auto j = bessel_j_sequence(30, x);
        double sum = j[0] * j[0];
        for (int k = 1; k <= 30; ++k) sum += 2.0 * j[static_cast<size_t>(k)] * j[static_cast<size_t>(k)];
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(bessel_j(501, 1.0), ValidationError);
    CHECK_THROWS_AS(bessel_j(0, -0.5), ValidationError);
    CHECK_THROWS_AS(bessel_j(0, 2500.0), NumericalError);
}
