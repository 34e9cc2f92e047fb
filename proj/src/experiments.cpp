#include "polsplit/experiments.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "polsplit/config.hpp"
#include "polsplit/dispersion.hpp"
#include "format.hpp"

namespace polsplit {

using nlohmann::json;
using detail::append_g12;

std::string to_string(FigureId id) {
    switch (id) {
        case FigureId::Fig2: return "fig2";
        case FigureId::Fig3: return "fig3";
        case FigureId::Fig4: return "fig4";
        case FigureId::Fig5a: return "fig5a";
        case FigureId::Fig5b: return "fig5b";
        case FigureId::Li7SignFlip: return "li7_signflip";
    }
    throw std::invalid_argument("unknown figure id");
}

FigureId figure_from_string(const std::string& name) {
    for (FigureId id : all_figures())
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown figure id '" + name + "'");
}

const std::vector<FigureId>& all_figures() {
    static const std::vector<FigureId> ids = {
        FigureId::Fig2,  FigureId::Fig3,  FigureId::Fig4,
        FigureId::Fig5a, FigureId::Fig5b, FigureId::Li7SignFlip};
    return ids;
}

namespace {

// Endpoint-anchored so that with a symmetric range and an odd count the
// midpoint lands exactly on zero.
std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) throw std::invalid_argument("linspace: empty range");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

std::size_t step_count(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi > lo))
        throw std::invalid_argument("range: need hi > lo and step > 0");
    const double count = (hi - lo) / step;
    if (count > 2e7) throw std::invalid_argument("range resolves to more than 2e7 points");
    return static_cast<std::size_t>(std::llround(count)) + 1;
}

SimulationConfig config_from(const AtomicMedium& m, const DriveConfig& d) {
    SimulationConfig c;
    c.gamma_big_per_s = m.gamma_big;
    c.lambda_angstrom = m.lambda * 1e8;
    c.number_density_per_cm3 = m.number_density;
    c.length_cm = m.length;
    c.alpha = m.alpha;
    c.g_over_gamma = d.g_rabi;
    c.delta_over_gamma = d.delta_pump;
    c.b_over_gamma = d.b_zeeman;
    c.gamma12_over_gamma = m.gamma_12;
    c.gamma23_over_gamma = m.gamma_23;
    return c;
}

json options_to_json(const ReproduceOptions& o) {
    json j;
    j["sweep_min"] = o.sweep_min;
    j["sweep_max"] = o.sweep_max;
    j["sweep_points"] = o.sweep_points;
    j["chi_min"] = o.chi_min;
    j["chi_max"] = o.chi_max;
    j["chi_step"] = o.chi_step;
    j["grid_points"] = o.grid_points;
    j["span_sigmas"] = o.span_sigmas;
    j["tau_gamma_window"] = o.tau_gamma_window;
    j["sigma_rad_per_s"] = o.sigma;
    j["amplitude"] = o.amplitude;
    j["center_delta"] = o.center_delta;
    return j;
}

ReproduceOptions options_from_json(const json& j) {
    ReproduceOptions o;
    o.sweep_min = j.at("sweep_min").get<double>();
    o.sweep_max = j.at("sweep_max").get<double>();
    o.sweep_points = j.at("sweep_points").get<std::size_t>();
    o.chi_min = j.at("chi_min").get<double>();
    o.chi_max = j.at("chi_max").get<double>();
    o.chi_step = j.at("chi_step").get<double>();
    o.grid_points = j.at("grid_points").get<std::size_t>();
    o.span_sigmas = j.at("span_sigmas").get<double>();
    o.tau_gamma_window = j.at("tau_gamma_window").get<double>();
    o.sigma = j.at("sigma_rad_per_s").get<double>();
    o.amplitude = j.at("amplitude").get<double>();
    o.center_delta = j.at("center_delta").get<double>();
    return o;
}

FigureDataset make_dataset(FigureId id, std::vector<std::string> names,
                           std::vector<std::vector<double>> columns,
                           const AtomicMedium& m, const DriveConfig& d,
                           const ReproduceOptions& o) {
    FigureDataset ds;
    ds.figure_id = to_string(id);
    ds.column_names = std::move(names);
    ds.columns = std::move(columns);
    ds.params_echo = json{{"figure_id", ds.figure_id},
                          {"config", config_from(m, d).to_json()},
                          {"overrides", options_to_json(o)}};
    return ds;
}

FigureDataset chi_spectra(FigureId id, const AtomicMedium& m, const DriveConfig& d,
                          const ReproduceOptions& o) {
    const auto axis =
        linspace(o.chi_min, o.chi_max, step_count(o.chi_min, o.chi_max, o.chi_step));
    std::vector<double> re_p, im_p, re_m, im_m;
    re_p.reserve(axis.size());
    im_p.reserve(axis.size());
    re_m.reserve(axis.size());
    im_m.reserve(axis.size());
    for (double delta : axis) {
        const auto plus = chi_eit(delta, Polarization::SigmaPlus, m, d).value;
        const auto minus = chi_eit(delta, Polarization::SigmaMinus, m, d).value;
        re_p.push_back(plus.real());
        im_p.push_back(plus.imag());
        re_m.push_back(minus.real());
        im_m.push_back(minus.imag());
    }
    return make_dataset(id,
                        {"delta_over_gamma", "re_chi_plus", "im_chi_plus",
                         "re_chi_minus", "im_chi_minus"},
                        {axis, re_p, im_p, re_m, im_m}, m, d, o);
}

FigureDataset pump_sweep(FigureId id, const AtomicMedium& m, const DriveConfig& d,
                         const ReproduceOptions& o) {
    const auto axis = linspace(o.sweep_min, o.sweep_max, o.sweep_points);
    const SweepTable t = sweep_ng_vs_pump_detuning(axis, m, d);
    std::vector<double> ng_p, ng_m, sep, im_p, im_m;
    for (const SweepRow& r : t.rows) {
        ng_p.push_back(r.ng_plus);
        ng_m.push_back(r.ng_minus);
        sep.push_back(r.sep_seconds);
        im_p.push_back(r.im_chi_plus);
        im_m.push_back(r.im_chi_minus);
    }
    return make_dataset(id,
                        {"delta_pump_over_gamma", "ng_plus", "ng_minus",
                         "sep_seconds", "im_chi_plus", "im_chi_minus"},
                        {axis, ng_p, ng_m, sep, im_p, im_m}, m, d, o);
}

FigureDataset probe_sweep(FigureId id, const AtomicMedium& m, const DriveConfig& d,
                          const ReproduceOptions& o) {
    const auto axis = linspace(o.sweep_min, o.sweep_max, o.sweep_points);
    const SweepTable t = sweep_separation_vs_probe_detuning(axis, m, d);
    std::vector<double> gsep, sep, ng_p, ng_m, im_p, im_m;
    for (const SweepRow& r : t.rows) {
        gsep.push_back(r.sep_seconds * m.gamma_big);
        sep.push_back(r.sep_seconds);
        ng_p.push_back(r.ng_plus);
        ng_m.push_back(r.ng_minus);
        im_p.push_back(r.im_chi_plus);
        im_m.push_back(r.im_chi_minus);
    }
    return make_dataset(id,
                        {"delta_over_gamma", "gamma_sep", "sep_seconds", "ng_plus",
                         "ng_minus", "im_chi_plus", "im_chi_minus"},
                        {axis, gsep, sep, ng_p, ng_m, im_p, im_m}, m, d, o);
}

FigureDataset input_pulse(FigureId id, const AtomicMedium& m, const DriveConfig& d,
                          const ReproduceOptions& o) {
    const SpectralGrid grid{o.grid_points, o.span_sigmas * o.sigma};
    std::vector<double> tau_gamma, intensity;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double tau = grid.time(j);
        const double tg = tau * m.gamma_big;
        if (std::abs(tg) > o.tau_gamma_window) continue;
        const double field = o.amplitude * std::exp(-o.sigma * o.sigma * tau * tau / 4.0);
        tau_gamma.push_back(tg);
        intensity.push_back(field * field);
    }
    return make_dataset(id, {"tau_gamma", "intensity"}, {tau_gamma, intensity}, m, d,
                        o);
}

FigureDataset output_pulses(FigureId id, const AtomicMedium& m, DriveConfig d,
                            const ReproduceOptions& o) {
    if (id == FigureId::Li7SignFlip) d.b_zeeman = -d.b_zeeman;
    const GaussianPulseSpec spec{o.sigma, o.amplitude, o.center_delta};
    const SpectralGrid grid{o.grid_points, o.span_sigmas * o.sigma};
    const PropagationResult r = propagate_spectral(spec, grid, m, d);
    const double scale = 1.0 / r.input_peak_intensity;
    std::vector<double> tau_gamma, inten_p, inten_m;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double tg = r.envelope_plus.time(j) * m.gamma_big;
        if (std::abs(tg) > o.tau_gamma_window) continue;
        tau_gamma.push_back(tg);
        inten_p.push_back(std::norm(r.envelope_plus.samples[j]) * scale);
        inten_m.push_back(std::norm(r.envelope_minus.samples[j]) * scale);
    }
    // params echo keeps the configured field; the sign flip is implied by the
    // figure id and reapplied on reproduction
    if (id == FigureId::Li7SignFlip) d.b_zeeman = -d.b_zeeman;
    return make_dataset(id, {"tau_gamma", "intensity_plus", "intensity_minus"},
                        {tau_gamma, inten_p, inten_m}, m, d, o);
}

}  // namespace

FigureDataset reproduce(FigureId id, const AtomicMedium& medium,
                        const DriveConfig& drive, const ReproduceOptions& options) {
    validate(medium);
    validate(drive);
    switch (id) {
        case FigureId::Fig2: return chi_spectra(id, medium, drive, options);
        case FigureId::Fig3: return pump_sweep(id, medium, drive, options);
        case FigureId::Fig4: return probe_sweep(id, medium, drive, options);
        case FigureId::Fig5a: return input_pulse(id, medium, drive, options);
        case FigureId::Fig5b:
        case FigureId::Li7SignFlip: return output_pulses(id, medium, drive, options);
    }
    throw std::invalid_argument("unknown figure id");
}

FigureDataset reproduce_from_params(const json& params_echo) {
    const FigureId id = figure_from_string(params_echo.at("figure_id").get<std::string>());
    const SimulationConfig cfg = SimulationConfig::from_json(params_echo.at("config"));
    const ReproduceOptions opts = options_from_json(params_echo.at("overrides"));
    return reproduce(id, cfg.medium(), cfg.drive(), opts);
}

namespace {

void write_file_atomic(const std::filesystem::path& path, const std::string& body) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw std::runtime_error("cannot create directory '" +
                                     path.parent_path().string() + "': " + ec.message());
    }
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << body;
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, path, ec);
    if (ec)
        throw std::runtime_error("cannot move '" + tmp.string() + "' to '" +
                                 path.string() + "': " + ec.message());
}

}  // namespace

void write_dataset(const FigureDataset& dataset, const std::filesystem::path& csv_path) {
    if (dataset.columns.empty() || dataset.columns.size() != dataset.column_names.size())
        throw std::invalid_argument("write_dataset: malformed dataset");
    const std::size_t rows = dataset.columns.front().size();
    for (const auto& col : dataset.columns)
        if (col.size() != rows)
            throw std::invalid_argument("write_dataset: ragged columns");

    std::string body;
    for (std::size_t c = 0; c < dataset.column_names.size(); ++c) {
        if (c) body += ',';
        body += dataset.column_names[c];
    }
    body += '\n';
    for (std::size_t rr = 0; rr < rows; ++rr) {
        for (std::size_t c = 0; c < dataset.columns.size(); ++c) {
            if (c) body += ',';
            append_g12(body, dataset.columns[c][rr]);
        }
        body += '\n';
    }

    std::filesystem::path params_path = csv_path;
    params_path.replace_extension(".params.json");
    write_file_atomic(params_path, dataset.params_echo.dump(2) + "\n");
    write_file_atomic(csv_path, body);
}

}  // namespace polsplit
