#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <json.hpp>

#include "polsplit/config.hpp"
#include "polsplit/dispersion.hpp"
#include "polsplit/experiments.hpp"
#include "polsplit/propagation.hpp"
#include "polsplit/susceptibility.hpp"

namespace py = pybind11;
using namespace polsplit;

PYBIND11_MODULE(polsplit, m) {
    m.doc() = "Temporal splitting of the circular polarization components of a "
              "probe pulse in a driven four-level medium";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<Polarization>(m, "Polarization")
        .value("SigmaPlus", Polarization::SigmaPlus)
        .value("SigmaMinus", Polarization::SigmaMinus);

    py::class_<AtomicMedium>(m, "AtomicMedium")
        .def(py::init<>())
        .def_readwrite("alpha", &AtomicMedium::alpha)
        .def_readwrite("gamma_big", &AtomicMedium::gamma_big)
        .def_readwrite("gamma_e1", &AtomicMedium::gamma_e1)
        .def_readwrite("gamma_e3", &AtomicMedium::gamma_e3)
        .def_readwrite("gamma_12", &AtomicMedium::gamma_12)
        .def_readwrite("gamma_23", &AtomicMedium::gamma_23)
        .def_readwrite("length", &AtomicMedium::length)
        .def_readwrite("carrier_omega", &AtomicMedium::carrier_omega)
        .def_readwrite("number_density", &AtomicMedium::number_density)
        .def_readwrite("lambda_cm", &AtomicMedium::lambda);

    py::class_<DriveConfig>(m, "DriveConfig")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("g_rabi"),
             py::arg("delta_pump") = 0.0, py::arg("b_zeeman") = 0.0)
        .def_readwrite("g_rabi", &DriveConfig::g_rabi)
        .def_readwrite("delta_pump", &DriveConfig::delta_pump)
        .def_readwrite("b_zeeman", &DriveConfig::b_zeeman);

    m.def("default_sodium_medium", &default_sodium_medium);
    m.def("default_drive", &default_drive);
    m.def("calibrate_alpha", &calibrate_alpha, py::arg("target_group_index"),
          py::arg("drive"), py::arg("medium"));

    py::class_<ComplexChi>(m, "ComplexChi")
        .def_readonly("value", &ComplexChi::value)
        .def_readonly("delta", &ComplexChi::delta);

    m.def("chi_bare", &chi_bare, py::arg("delta"), py::arg("pol"), py::arg("medium"),
          py::arg("b_zeeman"));
    m.def("chi_eit", &chi_eit, py::arg("delta"), py::arg("pol"), py::arg("medium"),
          py::arg("drive"));

    py::class_<GroupIndexResult>(m, "GroupIndexResult")
        .def_readonly("n_g", &GroupIndexResult::n_g)
        .def_readonly("v_g", &GroupIndexResult::v_g)
        .def_readonly("transit_time", &GroupIndexResult::transit_time)
        .def_readonly("pol", &GroupIndexResult::pol)
        .def_readonly("delta0", &GroupIndexResult::delta0);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("ng_plus", &SweepRow::ng_plus)
        .def_readonly("ng_minus", &SweepRow::ng_minus)
        .def_readonly("sep_seconds", &SweepRow::sep_seconds)
        .def_readonly("im_chi_plus", &SweepRow::im_chi_plus)
        .def_readonly("im_chi_minus", &SweepRow::im_chi_minus);

    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("axis", &SweepTable::axis)
        .def_readonly("rows", &SweepTable::rows)
        .def("to_csv", &SweepTable::to_csv);

    m.def("chi_derivative", &chi_derivative, py::arg("delta0"), py::arg("pol"),
          py::arg("medium"), py::arg("drive"), py::arg("use_eit") = true);
    m.def("group_index", &group_index, py::arg("delta0"), py::arg("pol"),
          py::arg("medium"), py::arg("drive"), py::arg("use_eit") = true);
    m.def("separation", &separation, py::arg("delta0"), py::arg("medium"),
          py::arg("drive"));
    m.def("sweep_ng_vs_pump_detuning", &sweep_ng_vs_pump_detuning,
          py::arg("pump_detunings"), py::arg("medium"), py::arg("drive_template"));
    m.def("sweep_separation_vs_probe_detuning", &sweep_separation_vs_probe_detuning,
          py::arg("probe_detunings"), py::arg("medium"), py::arg("drive"));

    py::class_<GaussianPulseSpec>(m, "GaussianPulseSpec")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("sigma"),
             py::arg("amplitude") = 1.0, py::arg("center_delta") = 0.0)
        .def_readwrite("sigma", &GaussianPulseSpec::sigma)
        .def_readwrite("amplitude", &GaussianPulseSpec::amplitude)
        .def_readwrite("center_delta", &GaussianPulseSpec::center_delta);

    py::class_<SpectralGrid>(m, "SpectralGrid")
        .def(py::init<>())
        .def(py::init<std::size_t, double>(), py::arg("n_points"), py::arg("span"))
        .def_readwrite("n_points", &SpectralGrid::n_points)
        .def_readwrite("span", &SpectralGrid::span)
        .def("domega", &SpectralGrid::domega)
        .def("dt", &SpectralGrid::dt)
        .def("freq", &SpectralGrid::freq)
        .def("time", &SpectralGrid::time);

    m.def("default_grid", &default_grid, py::arg("spec"));

    py::class_<FieldEnvelope>(m, "FieldEnvelope")
        .def_readonly("pol", &FieldEnvelope::pol)
        .def_readonly("samples", &FieldEnvelope::samples)
        .def_readonly("dt", &FieldEnvelope::dt)
        .def_readonly("retarded", &FieldEnvelope::retarded)
        .def_readonly("t0", &FieldEnvelope::t0)
        .def("time", &FieldEnvelope::time);

    py::class_<PropagationResult>(m, "PropagationResult")
        .def_readonly("envelope_plus", &PropagationResult::envelope_plus)
        .def_readonly("envelope_minus", &PropagationResult::envelope_minus)
        .def_readonly("peak_time_plus", &PropagationResult::peak_time_plus)
        .def_readonly("peak_time_minus", &PropagationResult::peak_time_minus)
        .def_readonly("separation_measured", &PropagationResult::separation_measured)
        .def_readonly("peak_intensity_ratio_plus",
                      &PropagationResult::peak_intensity_ratio_plus)
        .def_readonly("peak_intensity_ratio_minus",
                      &PropagationResult::peak_intensity_ratio_minus)
        .def_readonly("input_peak_intensity", &PropagationResult::input_peak_intensity)
        .def_readonly("lc_delay", &PropagationResult::lc_delay)
        .def("to_csv", &PropagationResult::to_csv);

    py::class_<KappaResult>(m, "KappaResult")
        .def_readonly("kappa", &KappaResult::kappa)
        .def_readonly("sigma_prime", &KappaResult::sigma_prime);

    m.def("gaussian_spectrum", &gaussian_spectrum, py::arg("spec"), py::arg("grid"));
    m.def("spectrum_to_time", &spectrum_to_time, py::arg("spectrum"), py::arg("grid"));
    m.def("time_to_spectrum", &time_to_spectrum, py::arg("envelope"), py::arg("grid"));
    m.def("propagate_spectral", &propagate_spectral, py::arg("spec"), py::arg("grid"),
          py::arg("medium"), py::arg("drive"));
    m.def("compute_kappa", &compute_kappa, py::arg("spec"), py::arg("medium"),
          py::arg("drive"));
    m.def("propagate_gaussian_analytic", &propagate_gaussian_analytic, py::arg("spec"),
          py::arg("grid"), py::arg("medium"), py::arg("drive"));

    py::class_<ReproduceOptions>(m, "ReproduceOptions")
        .def(py::init<>())
        .def_readwrite("sweep_min", &ReproduceOptions::sweep_min)
        .def_readwrite("sweep_max", &ReproduceOptions::sweep_max)
        .def_readwrite("sweep_points", &ReproduceOptions::sweep_points)
        .def_readwrite("chi_min", &ReproduceOptions::chi_min)
        .def_readwrite("chi_max", &ReproduceOptions::chi_max)
        .def_readwrite("chi_step", &ReproduceOptions::chi_step)
        .def_readwrite("grid_points", &ReproduceOptions::grid_points)
        .def_readwrite("span_sigmas", &ReproduceOptions::span_sigmas)
        .def_readwrite("tau_gamma_window", &ReproduceOptions::tau_gamma_window)
        .def_readwrite("sigma", &ReproduceOptions::sigma)
        .def_readwrite("amplitude", &ReproduceOptions::amplitude)
        .def_readwrite("center_delta", &ReproduceOptions::center_delta);

    py::class_<FigureDataset>(m, "FigureDataset")
        .def_readonly("figure_id", &FigureDataset::figure_id)
        .def_readonly("column_names", &FigureDataset::column_names)
        .def_readonly("columns", &FigureDataset::columns)
        .def_property_readonly("params_json", [](const FigureDataset& ds) {
            return ds.params_echo.dump();
        });

    m.def(
        "reproduce",
        [](const std::string& figure, const AtomicMedium& medium,
           const DriveConfig& drive, const ReproduceOptions& options) {
            return reproduce(figure_from_string(figure), medium, drive, options);
        },
        py::arg("figure"), py::arg("medium"), py::arg("drive"),
        py::arg("options") = ReproduceOptions{});
    m.def("reproduce_from_params", [](const std::string& params_json) {
        return reproduce_from_params(nlohmann::json::parse(params_json));
    });
    m.def("write_dataset", &write_dataset, py::arg("dataset"), py::arg("csv_path"));

    py::class_<SimulationConfig>(m, "SimulationConfig")
        .def(py::init<>())
        .def_readwrite("gamma_big_per_s", &SimulationConfig::gamma_big_per_s)
        .def_readwrite("lambda_angstrom", &SimulationConfig::lambda_angstrom)
        .def_readwrite("number_density_per_cm3", &SimulationConfig::number_density_per_cm3)
        .def_readwrite("length_cm", &SimulationConfig::length_cm)
        .def_readwrite("alpha", &SimulationConfig::alpha)
        .def_readwrite("G_over_gamma", &SimulationConfig::g_over_gamma)
        .def_readwrite("Delta_over_gamma", &SimulationConfig::delta_over_gamma)
        .def_readwrite("B_over_gamma", &SimulationConfig::b_over_gamma)
        .def_readwrite("gamma12_over_gamma", &SimulationConfig::gamma12_over_gamma)
        .def_readwrite("gamma23_over_gamma", &SimulationConfig::gamma23_over_gamma)
        .def("medium", &SimulationConfig::medium)
        .def("drive", &SimulationConfig::drive)
        .def("resolved_alpha", &SimulationConfig::resolved_alpha)
        .def("to_json", [](const SimulationConfig& c) { return c.to_json().dump(); });

    m.def("load_config", &load_config, py::arg("path"));
}
