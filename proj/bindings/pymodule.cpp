#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynbarrier/barrier.hpp"
#include "dynbarrier/bessel.hpp"
#include "dynbarrier/spectrum.hpp"
#include "dynbarrier/tdse.hpp"
#include "dynbarrier/tg_sidebands.hpp"
#include "dynbarrier/transmission.hpp"
#include "dynbarrier/traversal.hpp"

namespace py = pybind11;
using namespace dynbarrier;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Transmission and quantized traversal times of a time-modulated "
              "rectangular barrier (natural units: hbar = 1, 2m = 1)";

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<BarrierConfig>(m, "BarrierConfig")
        .def(py::init([](double v0, double b, double e_incident, double v1, double omega) {
                 BarrierConfig c{v0, b, v1, omega, e_incident};
                 return c;
             }),
             py::arg("v0"), py::arg("b"), py::arg("e_incident"), py::arg("v1") = 0.0,
             py::arg("omega") = 1.0)
        .def_readwrite("v0", &BarrierConfig::v0)
        .def_readwrite("b", &BarrierConfig::b)
        .def_readwrite("v1", &BarrierConfig::v1)
        .def_readwrite("omega", &BarrierConfig::omega)
        .def_readwrite("e_incident", &BarrierConfig::e_incident)
        .def_property_readonly("alpha", &BarrierConfig::alpha)
        .def("validate", &BarrierConfig::validate);

    py::class_<Wavenumbers>(m, "Wavenumbers")
        .def_readonly("k", &Wavenumbers::k)
        .def_readonly("kappa", &Wavenumbers::kappa);
    m.def("wavenumbers", &wavenumbers, py::arg("e"), py::arg("v0"),
          "Sub-barrier wavenumber pair (k, kappa) with k^2 = E, kappa^2 = V0 - E");

    py::class_<StaticSolution>(m, "StaticSolution")
        .def_readonly("k0", &StaticSolution::k0)
        .def_readonly("kappa0", &StaticSolution::kappa0)
        .def_readonly("a_minus", &StaticSolution::a_minus)
        .def_readonly("b_plus", &StaticSolution::b_plus)
        .def_readonly("b_minus", &StaticSolution::b_minus)
        .def_readonly("c_plus", &StaticSolution::c_plus)
        .def_readonly("transmission", &StaticSolution::transmission)
        .def_readonly("reflection", &StaticSolution::reflection);
    m.def("match_static", &match_static, py::arg("cfg"),
          "Amplitudes from the 4x4 continuity system at x = +-b/2");
    m.def("transmission_static", &transmission_static, py::arg("cfg"));
    m.def("transmission_opaque", &transmission_opaque, py::arg("cfg"));
    m.def("transmission_at_energy", &transmission_at_energy, py::arg("e"), py::arg("v0"),
          py::arg("b"),
          "Equivalent-static transmission at any channel energy (sub/top/over barrier)");

    py::enum_<Side>(m, "Side").value("plus", Side::plus).value("minus", Side::minus);
    py::enum_<ChannelClass>(m, "ChannelClass")
        .value("open_subbarrier", ChannelClass::open_subbarrier)
        .value("open_overbarrier", ChannelClass::open_overbarrier)
        .value("closed", ChannelClass::closed);

    py::class_<Channel>(m, "Channel")
        .def_readonly("n", &Channel::n)
        .def_readonly("side", &Channel::side)
        .def_readonly("energy", &Channel::energy)
        .def_readonly("snapshot_height", &Channel::snapshot_height)
        .def_readonly("classification", &Channel::classification);

    py::class_<ChannelSpectrum>(m, "ChannelSpectrum")
        .def_readonly("n_max", &ChannelSpectrum::n_max)
        .def_readonly("alpha", &ChannelSpectrum::alpha)
        .def_readonly("omega", &ChannelSpectrum::omega)
        .def_readonly("tau", &ChannelSpectrum::tau)
        .def_readonly("e_elastic", &ChannelSpectrum::e_elastic)
        .def_readonly("degenerate", &ChannelSpectrum::degenerate)
        .def_readonly("nonintegral_ratio", &ChannelSpectrum::nonintegral_ratio)
        .def_readonly("channels", &ChannelSpectrum::channels)
        .def("channel", &ChannelSpectrum::channel, py::arg("n"), py::arg("side"),
             py::return_value_policy::reference_internal);
    m.def("build_spectrum", &build_spectrum, py::arg("cfg"),
          "Finite quantized channel spectrum on the energy circle");

    py::class_<StateDensity>(m, "StateDensity")
        .def_readonly("unbounded", &StateDensity::unbounded)
        .def_readonly("value", &StateDensity::value);
    m.def("density_of_states", &density_of_states, py::arg("n"), py::arg("alpha"),
          py::arg("omega"));
    m.def("entry_time", &entry_time, py::arg("n"), py::arg("spectrum"),
          "Principal barrier entry time arccos(n/N)/omega");

    py::class_<ChannelTransmission>(m, "ChannelTransmission")
        .def_readonly("n", &ChannelTransmission::n)
        .def_readonly("side", &ChannelTransmission::side)
        .def_readonly("energy", &ChannelTransmission::energy)
        .def_readonly("k", &ChannelTransmission::k)
        .def_readonly("kappa", &ChannelTransmission::kappa)
        .def_readonly("snapshot_height", &ChannelTransmission::snapshot_height)
        .def_readonly("classification", &ChannelTransmission::classification)
        .def_readonly("t", &ChannelTransmission::t);
    py::class_<TransmissionResult>(m, "TransmissionResult")
        .def_readonly("spectrum", &TransmissionResult::spectrum)
        .def_readonly("per_channel", &TransmissionResult::per_channel)
        .def_readonly("total", &TransmissionResult::total)
        .def_readonly("normalized", &TransmissionResult::normalized)
        .def_readonly("open_count", &TransmissionResult::open_count)
        .def_readonly("closed_count", &TransmissionResult::closed_count);
    m.def("transmission_channel", &transmission_channel, py::arg("cfg"), py::arg("channel"));
    m.def("transmission_total", &transmission_total, py::arg("cfg"),
          "Per-channel transmissions and their sum over open channels");

    py::class_<TraversalTimes>(m, "TraversalTimes")
        .def_readonly("t_plus", &TraversalTimes::t_plus)
        .def_readonly("t_minus", &TraversalTimes::t_minus);
    m.def("traversal_exact", &traversal_exact, py::arg("n"), py::arg("m"), py::arg("n_max"),
          py::arg("omega"), "All principal roots of the exact transit condition");
    m.def("traversal_low", &traversal_low, py::arg("n"), py::arg("m"), py::arg("n_max"),
          py::arg("tau"));
    m.def("traversal_low_approx", &traversal_low_approx, py::arg("n"), py::arg("m"),
          py::arg("n_max"), py::arg("tau"));
    m.def("low_approx_in_domain", &low_approx_in_domain, py::arg("n"), py::arg("n_max"));
    m.def("traversal_low_energy", &traversal_low_energy, py::arg("n"), py::arg("m"),
          py::arg("spectrum"));

    py::class_<HighFrequencySolution>(m, "HighFrequencySolution")
        .def_readonly("n", &HighFrequencySolution::n)
        .def_readonly("m", &HighFrequencySolution::m)
        .def_readonly("n_max", &HighFrequencySolution::n_max)
        .def_readonly("omega", &HighFrequencySolution::omega)
        .def_readonly("a_coeff", &HighFrequencySolution::a_coeff)
        .def_readonly("b_coeff", &HighFrequencySolution::b_coeff)
        .def_readonly("c_coeff", &HighFrequencySolution::c_coeff)
        .def_readonly("degenerate", &HighFrequencySolution::degenerate)
        .def_readonly("tan_theta_plus", &HighFrequencySolution::tan_theta_plus)
        .def_readonly("tan_theta_minus", &HighFrequencySolution::tan_theta_minus)
        .def_readonly("theta_plus", &HighFrequencySolution::theta_plus)
        .def_readonly("theta_minus", &HighFrequencySolution::theta_minus)
        .def_readonly("branch", &HighFrequencySolution::branch)
        .def_readonly("t_plus", &HighFrequencySolution::t_plus)
        .def_readonly("t_minus", &HighFrequencySolution::t_minus)
        .def_readonly("ratio", &HighFrequencySolution::ratio)
        .def_readonly("ratio_from_roots", &HighFrequencySolution::ratio_from_roots);
    m.def("traversal_high", &traversal_high, py::arg("n"), py::arg("m"), py::arg("n_max"),
          py::arg("omega"), py::arg("branch") = 1);
    m.def("high_freq_ratio", &high_freq_ratio, py::arg("n"), py::arg("m"), py::arg("n_max"));

    m.def("bessel_j", &bessel_j, py::arg("n"), py::arg("x"),
          "Integer-order Bessel function of the first kind");
    m.def("bessel_j_sequence", &bessel_j_sequence, py::arg("n_max"), py::arg("x"));

    py::class_<SidebandRow>(m, "SidebandRow")
        .def_readonly("n", &SidebandRow::n)
        .def_readonly("weight", &SidebandRow::weight)
        .def_readonly("energy", &SidebandRow::energy)
        .def_readonly("transmission", &SidebandRow::transmission)
        .def_readonly("closed", &SidebandRow::closed);
    py::class_<SidebandTable>(m, "SidebandTable")
        .def_readonly("argument", &SidebandTable::argument)
        .def_readonly("n_cutoff", &SidebandTable::n_cutoff)
        .def_readonly("weight_sum", &SidebandTable::weight_sum)
        .def_readonly("rows", &SidebandTable::rows);
    m.def("tg_sidebands", &tg_sidebands, py::arg("cfg"), py::arg("cutoff_tol") = 1e-6,
          "Bessel-weighted sideband ladder of the perturbative baseline");

    py::class_<tdse::GridSpec>(m, "GridSpec")
        .def(py::init([](double x_min, double x_max, int points, double dt, int steps) {
                 return tdse::GridSpec{x_min, x_max, points, dt, steps};
             }),
             py::arg("x_min"), py::arg("x_max"), py::arg("points"), py::arg("dt"),
             py::arg("steps") = 0)
        .def_readwrite("x_min", &tdse::GridSpec::x_min)
        .def_readwrite("x_max", &tdse::GridSpec::x_max)
        .def_readwrite("points", &tdse::GridSpec::points)
        .def_readwrite("dt", &tdse::GridSpec::dt)
        .def_readwrite("steps", &tdse::GridSpec::steps)
        .def("dx", &tdse::GridSpec::dx);
    py::class_<tdse::GaussianPacket>(m, "GaussianPacket")
        .def(py::init([](double center, double sigma, double k_mean) {
                 return tdse::GaussianPacket{center, sigma, k_mean};
             }),
             py::arg("center"), py::arg("sigma"), py::arg("k_mean"))
        .def_readwrite("center", &tdse::GaussianPacket::center)
        .def_readwrite("sigma", &tdse::GaussianPacket::sigma)
        .def_readwrite("k_mean", &tdse::GaussianPacket::k_mean);
    py::class_<tdse::WavePacketState>(m, "WavePacketState")
        .def_readonly("grid", &tdse::WavePacketState::grid)
        .def_readonly("amplitudes", &tdse::WavePacketState::amplitudes)
        .def_readonly("time", &tdse::WavePacketState::time)
        .def_readonly("steps_taken", &tdse::WavePacketState::steps_taken)
        .def_readonly("norm_drift", &tdse::WavePacketState::norm_drift);
    py::class_<tdse::MomentumSample>(m, "MomentumSample")
        .def_readonly("k", &tdse::MomentumSample::k)
        .def_readonly("energy", &tdse::MomentumSample::energy)
        .def_readonly("density", &tdse::MomentumSample::density);
    m.def("suggested_steps", &tdse::suggested_steps, py::arg("cfg"), py::arg("grid"),
          py::arg("packet"));
    m.def("propagate", &tdse::propagate, py::arg("cfg"), py::arg("grid"), py::arg("packet"),
          "Unitary Cayley-form propagation of a Gaussian packet");
    m.def("transmitted_fraction", &tdse::transmitted_fraction, py::arg("state"),
          py::arg("cfg"));
    m.def("transmitted_momentum_spectrum", &tdse::transmitted_momentum_spectrum,
          py::arg("state"), py::arg("cfg"));

#ifdef DYNBARRIER_VERSION
    m.attr("__version__") = DYNBARRIER_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
