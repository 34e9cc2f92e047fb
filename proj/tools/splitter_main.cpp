#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polsplit/config.hpp"
#include "polsplit/dispersion.hpp"
#include "polsplit/experiments.hpp"
#include "polsplit/propagation.hpp"
#include "polsplit/susceptibility.hpp"

namespace {

using namespace polsplit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct GlobalOptions {
    std::string config_path;
    std::string out_path;
    std::optional<double> alpha, g, delta, b, length, lambda, density, gamma12, gamma23;
    bool flip_b = false;
    bool no_control = false;
};

struct Range {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

Range parse_range(const std::string& text) {
    Range r;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.lo, &r.hi, &r.step, &extra) != 3)
        throw ConfigError("range must be min:max:step, got '" + text + "'");
    if (!(r.step > 0.0) || !(r.hi > r.lo))
        throw ConfigError("range needs max > min and step > 0");
    return r;
}

std::vector<double> range_axis(const Range& r) {
    const double count = (r.hi - r.lo) / r.step;
    if (count > 2e7) throw ConfigError("range resolves to more than 2e7 points");
    const auto n = static_cast<std::size_t>(std::llround(count)) + 1;
    if (n < 2) return {r.lo};
    std::vector<double> axis(n);
    for (std::size_t i = 0; i < n; ++i)
        axis[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return axis;
}

SimulationConfig effective_config(const GlobalOptions& g) {
    SimulationConfig cfg;
    if (!g.config_path.empty()) cfg = load_config(g.config_path);
    if (g.alpha) cfg.alpha = *g.alpha;
    if (g.g) cfg.g_over_gamma = *g.g;
    if (g.delta) cfg.delta_over_gamma = *g.delta;
    if (g.b) cfg.b_over_gamma = *g.b;
    if (g.length) cfg.length_cm = *g.length;
    if (g.lambda) cfg.lambda_angstrom = *g.lambda;
    if (g.density) cfg.number_density_per_cm3 = *g.density;
    if (g.gamma12) cfg.gamma12_over_gamma = *g.gamma12;
    if (g.gamma23) cfg.gamma23_over_gamma = *g.gamma23;
    if (g.flip_b) cfg.b_over_gamma = -cfg.b_over_gamma;
    // Pin alpha before --no-control zeroes the drive, so switching the
    // control field off keeps the calibrated medium.
    if (!cfg.alpha) cfg.alpha = cfg.resolved_alpha();
    if (g.no_control) cfg.g_over_gamma = 0.0;
    std::cerr << "config: " << cfg.to_json().dump() << "\n";
    return cfg;
}

void emit(const GlobalOptions& g, const std::string& body) {
    if (g.out_path.empty()) {
        std::cout << body;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path path(g.out_path);
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
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "'");
        out << body;
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, path, ec);
    if (ec)
        throw std::runtime_error("cannot move '" + tmp.string() + "' to '" +
                                 path.string() + "': " + ec.message());
}

std::string format12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
    return buf;
}

int cmd_chi(const GlobalOptions& g, const std::string& range_text) {
    const SimulationConfig cfg = effective_config(g);
    const AtomicMedium medium = cfg.medium();
    const DriveConfig drive = cfg.drive();
    const auto axis = range_axis(parse_range(range_text));
    std::string body = "delta_over_gamma,re_chi_plus,im_chi_plus,re_chi_minus,im_chi_minus\n";
    for (double delta : axis) {
        const auto plus = chi_eit(delta, Polarization::SigmaPlus, medium, drive).value;
        const auto minus = chi_eit(delta, Polarization::SigmaMinus, medium, drive).value;
        body += format12(delta) + ',' + format12(plus.real()) + ',' +
                format12(plus.imag()) + ',' + format12(minus.real()) + ',' +
                format12(minus.imag()) + '\n';
    }
    emit(g, body);
    return kExitOk;
}

int cmd_groupindex(const GlobalOptions& g, double delta0, const std::string& pol,
                   bool bare) {
    const SimulationConfig cfg = effective_config(g);
    const AtomicMedium medium = cfg.medium();
    const DriveConfig drive = cfg.drive();
    std::vector<Polarization> pols;
    if (pol == "plus") pols = {Polarization::SigmaPlus};
    else if (pol == "minus") pols = {Polarization::SigmaMinus};
    else if (pol == "both") pols = {Polarization::SigmaPlus, Polarization::SigmaMinus};
    else throw ConfigError("--pol must be plus, minus or both");
    std::string body = "pol,delta0_over_gamma,n_g,v_g_cm_per_s,transit_seconds\n";
    for (Polarization p : pols) {
        const auto r = group_index(delta0, p, medium, drive, !bare);
        body += std::string(p == Polarization::SigmaPlus ? "plus" : "minus") + ',' +
                format12(r.delta0) + ',' + format12(r.n_g) + ',' + format12(r.v_g) +
                ',' + format12(r.transit_time) + '\n';
    }
    emit(g, body);
    return kExitOk;
}

int cmd_sweep(const GlobalOptions& g, const std::string& mode,
              const std::string& range_text) {
    const SimulationConfig cfg = effective_config(g);
    const AtomicMedium medium = cfg.medium();
    const DriveConfig drive = cfg.drive();
    const auto axis = range_axis(parse_range(range_text));
    SweepTable table;
    if (mode == "pump") table = sweep_ng_vs_pump_detuning(axis, medium, drive);
    else if (mode == "probe") table = sweep_separation_vs_probe_detuning(axis, medium, drive);
    else throw ConfigError("--mode must be pump or probe");
    emit(g, table.to_csv());
    return kExitOk;
}

int cmd_propagate(const GlobalOptions& g, const GaussianPulseSpec& spec,
                  std::size_t n_points, double span_sigmas) {
    const SimulationConfig cfg = effective_config(g);
    const AtomicMedium medium = cfg.medium();
    const DriveConfig drive = cfg.drive();
    const SpectralGrid grid{n_points, span_sigmas * spec.sigma};
    const PropagationResult r = propagate_spectral(spec, grid, medium, drive);
    json summary;
    summary["peak_time_plus_s"] = r.peak_time_plus;
    summary["peak_time_minus_s"] = r.peak_time_minus;
    summary["separation_s"] = r.separation_measured;
    summary["separation_gamma"] = r.separation_measured * medium.gamma_big;
    summary["peak_intensity_ratio_plus"] = r.peak_intensity_ratio_plus;
    summary["peak_intensity_ratio_minus"] = r.peak_intensity_ratio_minus;
    summary["lc_delay_s"] = r.lc_delay;
    std::cerr << "summary: " << summary.dump() << "\n";
    emit(g, r.to_csv());
    return kExitOk;
}

int cmd_reproduce(const GlobalOptions& g, const std::string& figure,
                  const std::string& outdir, const ReproduceOptions& options) {
    const SimulationConfig cfg = effective_config(g);
    const AtomicMedium medium = cfg.medium();
    const DriveConfig drive = cfg.drive();
    std::vector<FigureId> figures;
    if (figure == "all") figures = all_figures();
    else figures = {figure_from_string(figure)};
    for (FigureId id : figures) {
        const FigureDataset ds = reproduce(id, medium, drive, options);
        const std::filesystem::path path =
            std::filesystem::path(outdir) / (to_string(id) + ".csv");
        write_dataset(ds, path);
        std::cerr << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal splitting of the circular polarization components of a "
                 "probe pulse in a driven four-level medium"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--config", g.config_path, "JSON config file")
        ->envname("SPLITTER_CONFIG");
    app.add_option("--out", g.out_path, "write the primary output to this file");
    app.add_option("--alpha", g.alpha, "override the medium prefactor alpha");
    app.add_option("--G", g.g, "control Rabi frequency, units of gamma");
    app.add_option("--Delta", g.delta, "pump detuning, units of gamma");
    app.add_option("--B", g.b, "Zeeman splitting, units of gamma");
    app.add_option("--length", g.length, "cell length, cm");
    app.add_option("--lambda", g.lambda, "probe wavelength, Angstrom");
    app.add_option("--density", g.density, "number density, atoms/cm^3");
    app.add_option("--gamma12", g.gamma12, "ground coherence decay, units of gamma");
    app.add_option("--gamma23", g.gamma23, "ground coherence decay, units of gamma");
    app.add_flag("--flip-b", g.flip_b, "negate the Zeeman splitting");
    app.add_flag("--no-control", g.no_control, "switch the control field off");

    auto* chi = app.add_subcommand("chi", "susceptibility spectra as CSV");
    chi->fallthrough();
    std::string chi_range = "-25:25:0.01";
    chi->add_option("--delta", chi_range, "probe detuning range min:max:step");

    auto* gi = app.add_subcommand("groupindex", "group index at one detuning");
    gi->fallthrough();
    double gi_delta0 = 0.0;
    std::string gi_pol = "both";
    bool gi_bare = false;
    gi->add_option("--delta0", gi_delta0, "evaluation detuning, units of gamma");
    gi->add_option("--pol", gi_pol, "plus, minus or both");
    gi->add_flag("--bare", gi_bare, "use the undressed susceptibility");

    auto* sweep = app.add_subcommand("sweep", "group index / separation sweeps");
    sweep->fallthrough();
    std::string sweep_mode = "probe";
    std::string sweep_range = "-20:20:0.1";
    sweep->add_option("--mode", sweep_mode, "pump (locked probe) or probe");
    sweep->add_option("--range", sweep_range, "sweep range min:max:step");

    auto* prop = app.add_subcommand("propagate", "spectral pulse propagation");
    prop->fallthrough();
    GaussianPulseSpec spec;
    std::size_t prop_n = std::size_t{1} << 14;
    double prop_span = 64.0;
    prop->add_option("--sigma", spec.sigma, "pulse spectral width, rad/s");
    prop->add_option("--amplitude", spec.amplitude, "input peak field");
    prop->add_option("--center-delta", spec.center_delta,
                     "carrier detuning, units of gamma");
    prop->add_option("--n-points", prop_n, "grid points (power of two)");
    prop->add_option("--span-sigmas", prop_span, "frequency span in units of sigma");

    auto* rep = app.add_subcommand("reproduce", "emit reference datasets");
    rep->fallthrough();
    std::string rep_figure;
    std::string rep_outdir = "out";
    ReproduceOptions rep_opts;
    rep->add_option("figure", rep_figure,
                    "fig2, fig3, fig4, fig5a, fig5b, li7_signflip or all")
        ->required();
    rep->add_option("--outdir", rep_outdir, "output directory");
    rep->add_option("--sweep-min", rep_opts.sweep_min, "sweep range start");
    rep->add_option("--sweep-max", rep_opts.sweep_max, "sweep range end");
    rep->add_option("--sweep-points", rep_opts.sweep_points, "sweep sample count");
    rep->add_option("--chi-min", rep_opts.chi_min, "susceptibility scan start");
    rep->add_option("--chi-max", rep_opts.chi_max, "susceptibility scan end");
    rep->add_option("--chi-step", rep_opts.chi_step, "susceptibility scan step");
    rep->add_option("--n-points", rep_opts.grid_points, "pulse grid points");
    rep->add_option("--span-sigmas", rep_opts.span_sigmas, "pulse grid span / sigma");
    rep->add_option("--tau-window", rep_opts.tau_gamma_window,
                    "keep |tau * gamma| below this in pulse datasets");
    rep->add_option("--sigma", rep_opts.sigma, "pulse spectral width, rad/s");
    rep->add_option("--center-delta", rep_opts.center_delta,
                    "carrier detuning, units of gamma");
    rep->add_option("--amplitude", rep_opts.amplitude, "input peak field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (chi->parsed()) return cmd_chi(g, chi_range);
        if (gi->parsed()) return cmd_groupindex(g, gi_delta0, gi_pol, gi_bare);
        if (sweep->parsed()) return cmd_sweep(g, sweep_mode, sweep_range);
        if (prop->parsed()) return cmd_propagate(g, spec, prop_n, prop_span);
        if (rep->parsed()) return cmd_reproduce(g, rep_figure, rep_outdir, rep_opts);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
