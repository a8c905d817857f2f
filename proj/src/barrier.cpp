#include "dynbarrier/barrier.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace dynbarrier {

void BarrierConfig::validate() const {
    if (!(v0 > 0.0)) throw ValidationError("barrier.v0: must be > 0");
    if (!(b >= 0.0)) throw ValidationError("barrier.b: must be >= 0");
    if (!(omega > 0.0)) throw ValidationError("barrier.omega: must be > 0");
    if (!(e_incident > 0.0)) throw ValidationError("barrier.e_incident: must be > 0");
    if (!(e_incident < v0))
        throw ValidationError("barrier.e_incident: must be < v0 (sub-barrier incidence)");
    if (!(v1 >= 0.0)) throw ValidationError("barrier.v1: must be >= 0");
    if (!(v1 <= v0))
        throw ValidationError("barrier.v1: must be <= v0 (snapshot heights stay positive)");
}

Wavenumbers wavenumbers(double e, double v0) {
    if (!(e > 0.0)) throw ValidationError("wavenumbers: energy must be > 0");
    if (!(e < v0)) throw ValidationError("wavenumbers: energy must be < v0");
    return {std::sqrt(e), std::sqrt(v0 - e)};
}

StaticSolution match_static(const BarrierConfig& cfg) {
    cfg.validate();
    const auto [k, kappa] = wavenumbers(cfg.e_incident, cfg.v0);

    // Continuity of psi and psi' at x = +-b/2 with unit incident amplitude.
    // Unknowns x = (A-, B+, B-, C+). Solved in extended precision: the
    // matrix condition grows like exp(kappa b), and flux conservation is
    // expected to hold to 1e-12 even for fairly thick barriers.
    using Cx = std::complex<long double>;
    const long double h = static_cast<long double>(cfg.b) / 2.0L;
    const long double kl = static_cast<long double>(k);
    const long double ql = static_cast<long double>(kappa);
    const Cx I(0.0L, 1.0L);
    const Cx eikh = std::exp(I * kl * h);
    const Cx emikh = std::exp(-I * kl * h);
    const long double ep = std::exp(ql * h);
    const long double em = std::exp(-ql * h);

    Eigen::Matrix<Cx, 4, 4> M;
    Eigen::Matrix<Cx, 4, 1> rhs;
    // psi continuity at -b/2
    M(0, 0) = eikh;           M(0, 1) = -em;  M(0, 2) = -ep;  M(0, 3) = Cx(0);
    rhs(0) = -emikh;
    // psi' continuity at -b/2
    M(1, 0) = -I * kl * eikh; M(1, 1) = -ql * em; M(1, 2) = ql * ep; M(1, 3) = Cx(0);
    rhs(1) = -I * kl * emikh;
    // psi continuity at +b/2
    M(2, 0) = Cx(0); M(2, 1) = ep;      M(2, 2) = em;       M(2, 3) = -eikh;
    rhs(2) = Cx(0);
    // psi' continuity at +b/2
    M(3, 0) = Cx(0); M(3, 1) = ql * ep; M(3, 2) = -ql * em; M(3, 3) = -I * kl * eikh;
    rhs(3) = Cx(0);

    Eigen::Matrix<Cx, 4, 1> x = M.partialPivLu().solve(rhs);
    if (!x.allFinite())
        throw NumericalError("match_static: amplitude system is numerically degenerate");

    StaticSolution sol;
    sol.k0 = k;
    sol.kappa0 = kappa;
    sol.a_minus = std::complex<double>(static_cast<double>(x(0).real()),
                                       static_cast<double>(x(0).imag()));
    sol.b_plus = std::complex<double>(static_cast<double>(x(1).real()),
                                      static_cast<double>(x(1).imag()));
    sol.b_minus = std::complex<double>(static_cast<double>(x(2).real()),
                                       static_cast<double>(x(2).imag()));
    sol.c_plus = std::complex<double>(static_cast<double>(x(3).real()),
                                      static_cast<double>(x(3).imag()));
    sol.transmission = static_cast<double>(std::norm(x(3)));
    sol.reflection = static_cast<double>(std::norm(x(0)));
    return sol;
}

double transmission_at_energy(double e, double v0, double b) {
    if (!(e > 0.0))
        throw ValidationError("transmission_at_energy: channel energy must be > 0 (closed)");
    if (e < v0) {
        const double k2 = e;
        const double kap2 = v0 - e;
        const double s = std::sinh(std::sqrt(kap2) * b);
        const double num = 4.0 * k2 * kap2;
        return num / (num + (k2 + kap2) * (k2 + kap2) * s * s);
    }
    if (e == v0) {
        // kappa -> 0 limit of the sub-barrier form
        return 1.0 / (1.0 + e * b * b / 4.0);
    }
    const double k2 = e;
    const double q2 = e - v0;
    const double s = std::sin(std::sqrt(q2) * b);
    const double num = 4.0 * k2 * q2;
    return num / (num + (k2 - q2) * (k2 - q2) * s * s);
}

double transmission_static(const BarrierConfig& cfg) {
    cfg.validate();
    return transmission_at_energy(cfg.e_incident, cfg.v0, cfg.b);
}

double transmission_opaque(const BarrierConfig& cfg) {
    cfg.validate();
    const auto [k, kappa] = wavenumbers(cfg.e_incident, cfg.v0);
    const double k2 = k * k;
    const double kap2 = kappa * kappa;
    // T = 1 / (1 + (k^2+K^2)^2 e^{2Kb} / (16 k^2 K^2)); log-space keeps
    // thick barriers from overflowing e^{2Kb}.
    const double log_ratio =
        2.0 * kappa * cfg.b + std::log((k2 + kap2) * (k2 + kap2) / (16.0 * k2 * kap2));
    if (log_ratio > 700.0) return std::exp(-log_ratio); // underflows to 0 gracefully
    return 1.0 / (1.0 + std::exp(log_ratio));
}

} // namespace dynbarrier
