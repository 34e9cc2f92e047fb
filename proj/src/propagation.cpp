#include "polsplit/propagation.hpp"

#include <cmath>
#include <stdexcept>

#include "polsplit/dispersion.hpp"
#include "polsplit/fft.hpp"
#include "format.hpp"

namespace polsplit {

using cd = std::complex<double>;
using detail::append_g12;

double SpectralGrid::freq(std::size_t k) const {
    return (static_cast<double>(k) - 0.5 * static_cast<double>(n_points)) * domega();
}

double SpectralGrid::time(std::size_t j) const {
    return (static_cast<double>(j) - 0.5 * static_cast<double>(n_points)) * dt();
}

double FieldEnvelope::time(std::size_t j) const {
    return (static_cast<double>(j) - 0.5 * static_cast<double>(samples.size())) * dt;
}

SpectralGrid default_grid(const GaussianPulseSpec& spec) {
    return SpectralGrid{std::size_t{1} << 14, 64.0 * spec.sigma};
}

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_grid(const SpectralGrid& grid) {
    if (!power_of_two(grid.n_points) || grid.n_points < 1024)
        throw std::domain_error("grid: n_points must be a power of two >= 1024");
    if (!(grid.span > 0.0) || !std::isfinite(grid.span))
        throw std::domain_error("grid: span must be positive");
}

void check_pulse(const GaussianPulseSpec& spec) {
    if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma))
        throw std::domain_error("pulse: sigma must be positive");
    if (!std::isfinite(spec.amplitude) || !std::isfinite(spec.center_delta))
        throw std::domain_error("pulse: amplitude and center_delta must be finite");
}

struct Peak {
    double time = 0.0;
    double intensity = 0.0;
};

// Parabola through the three samples around the discrete intensity maximum.
Peak find_peak(const std::vector<cd>& samples, double dt) {
    const std::size_t n = samples.size();
    std::size_t jmax = 0;
    double imax = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double inten = std::norm(samples[j]);
        if (inten > imax) {
            imax = inten;
            jmax = j;
        }
    }
    const double center = static_cast<double>(jmax) - 0.5 * static_cast<double>(n);
    if (jmax == 0 || jmax + 1 == n) return {center * dt, imax};
    const double left = std::norm(samples[jmax - 1]);
    const double right = std::norm(samples[jmax + 1]);
    const double curv = left - 2.0 * imax + right;
    if (!(curv < 0.0)) return {center * dt, imax};
    const double offset = 0.5 * (left - right) / curv;
    return {(center + offset) * dt, imax - 0.25 * (left - right) * offset};
}

}  // namespace

std::vector<cd> gaussian_spectrum(const GaussianPulseSpec& spec,
                                  const SpectralGrid& grid) {
    check_pulse(spec);
    check_grid(grid);
    if (grid.span < 8.0 * spec.sigma)
        throw std::domain_error("gaussian_spectrum: span < 8 sigma truncates the spectrum");
    std::vector<cd> spectrum(grid.n_points);
    const double norm = spec.amplitude / (spec.sigma * std::sqrt(kPi));
    for (std::size_t k = 0; k < grid.n_points; ++k) {
        const double nu = grid.freq(k);
        spectrum[k] = norm * std::exp(-nu * nu / (spec.sigma * spec.sigma));
    }
    return spectrum;
}

// E(tau_j) = domega sum_k S_k exp(-i nu_k tau_j) over the centered grid.
// With raw DFT indices the centering contributes (-1)^(j+k) (n is a
// multiple of four, so the constant phase is unity).
std::vector<cd> spectrum_to_time(const std::vector<cd>& spectrum,
                                 const SpectralGrid& grid) {
    if (spectrum.size() != grid.n_points)
        throw std::invalid_argument("spectrum_to_time: size mismatch with grid");
    check_grid(grid);
    std::vector<cd> work = spectrum;
    for (std::size_t k = 1; k < work.size(); k += 2) work[k] = -work[k];
    fft::forward(work);
    const double dom = grid.domega();
    for (std::size_t j = 0; j < work.size(); ++j)
        work[j] *= (j & 1) ? -dom : dom;
    return work;
}

std::vector<cd> time_to_spectrum(const std::vector<cd>& envelope,
                                 const SpectralGrid& grid) {
    if (envelope.size() != grid.n_points)
        throw std::invalid_argument("time_to_spectrum: size mismatch with grid");
    check_grid(grid);
    std::vector<cd> work = envelope;
    for (std::size_t j = 1; j < work.size(); j += 2) work[j] = -work[j];
    fft::inverse(work);
    const double scale = grid.dt() / (2.0 * kPi);
    for (std::size_t k = 0; k < work.size(); ++k)
        work[k] *= (k & 1) ? -scale : scale;
    return work;
}

PropagationResult propagate_spectral(const GaussianPulseSpec& spec,
                                     const SpectralGrid& grid,
                                     const AtomicMedium& medium,
                                     const DriveConfig& drive) {
    validate(medium);
    validate(drive);
    check_pulse(spec);
    check_grid(grid);
    if (grid.span < 16.0 * spec.sigma)
        throw std::domain_error("propagate_spectral: span must be >= 16 sigma");
    if (drive.g_rabi > 0.0) {
        const double window = drive.g_rabi * drive.g_rabi * medium.gamma_big;
        if (grid.domega() > 0.1 * window)
            throw std::domain_error(
                "propagate_spectral: frequency step too coarse to resolve the "
                "transparency window");
    }

    const std::vector<cd> spectrum = gaussian_spectrum(spec, grid);
    const double phase_scale = 2.0 * kPi * medium.length / kSpeedOfLight;

    PropagationResult result;
    result.lc_delay = medium.length / kSpeedOfLight;
    result.input_peak_intensity = 0.5 * spec.amplitude * spec.amplitude;

    const double input_peak = result.input_peak_intensity;
    const double split = 1.0 / std::sqrt(2.0);

    for (Polarization pol : {Polarization::SigmaPlus, Polarization::SigmaMinus}) {
        std::vector<cd> filtered(grid.n_points);
        for (std::size_t k = 0; k < grid.n_points; ++k) {
            const double nu = grid.freq(k);
            const double omega = medium.carrier_omega + nu;
            const double delta = spec.center_delta + nu / medium.gamma_big;
            const cd chi = chi_eit(delta, pol, medium, drive).value;
            filtered[k] = split * spectrum[k] *
                          std::exp(cd(0.0, phase_scale * omega) * chi);
        }
        FieldEnvelope env;
        env.pol = pol;
        env.samples = spectrum_to_time(filtered, grid);
        env.dt = grid.dt();
        env.retarded = true;
        env.t0 = result.lc_delay;
        const Peak peak = find_peak(env.samples, env.dt);
        if (pol == Polarization::SigmaPlus) {
            result.envelope_plus = std::move(env);
            result.peak_time_plus = peak.time;
            result.peak_intensity_ratio_plus = peak.intensity / input_peak;
        } else {
            result.envelope_minus = std::move(env);
            result.peak_time_minus = peak.time;
            result.peak_intensity_ratio_minus = peak.intensity / input_peak;
        }
    }
    result.separation_measured = result.peak_time_plus - result.peak_time_minus;
    return result;
}

KappaResult compute_kappa(const GaussianPulseSpec& spec, const AtomicMedium& medium,
                          const DriveConfig& drive) {
    validate(medium);
    validate(drive);
    check_pulse(spec);
    const double gamma = medium.gamma_big;
    // omega [1 + 2 pi chi]: the affine part has no curvature, so the stencil
    // acts on omega * chi alone.
    auto f = [&](double nu_gamma) {
        const double omega = medium.carrier_omega + nu_gamma * gamma;
        return omega *
               chi_eit(spec.center_delta + nu_gamma, Polarization::SigmaMinus,
                       medium, drive)
                   .value;
    };
    const double h = 1e-4;  // units of gamma_big
    auto stencil = [&](double hh) {
        return (-f(2.0 * hh) + 16.0 * f(hh) - 30.0 * f(0.0) + 16.0 * f(-hh) -
                f(-2.0 * hh)) /
               (12.0 * hh * hh);
    };
    const cd second = (16.0 * stencil(0.5 * h) - stencil(h)) / 15.0 / (gamma * gamma);
    KappaResult r;
    r.kappa = spec.sigma * spec.sigma * medium.length / (2.0 * kSpeedOfLight) *
              2.0 * kPi * second;
    r.sigma_prime = spec.sigma / std::sqrt(cd(1.0, 0.0) - cd(0.0, 1.0) * r.kappa);
    return r;
}

FieldEnvelope propagate_gaussian_analytic(const GaussianPulseSpec& spec,
                                          const SpectralGrid& grid,
                                          const AtomicMedium& medium,
                                          const DriveConfig& drive) {
    validate(medium);
    validate(drive);
    check_pulse(spec);
    check_grid(grid);
    if (medium.gamma_12 != 0.0)
        throw std::domain_error(
            "propagate_gaussian_analytic: requires gamma_12 = 0 (exact "
            "transparency point)");
    if (std::abs(spec.center_delta - drive.delta_pump) > 1e-9)
        throw std::domain_error(
            "propagate_gaussian_analytic: pulse must be centered on the "
            "transparency window (center_delta = delta_pump)");

    const KappaResult kr = compute_kappa(spec, medium, drive);
    const double n_g =
        group_index(spec.center_delta, Polarization::SigmaMinus, medium, drive, true)
            .n_g;
    const double tau_g = medium.length * (n_g - 1.0) / kSpeedOfLight;
    const cd sp = kr.sigma_prime;
    const cd amp = spec.amplitude * sp / spec.sigma;

    FieldEnvelope env;
    env.pol = Polarization::SigmaMinus;
    env.samples.resize(grid.n_points);
    env.dt = grid.dt();
    env.retarded = true;
    env.t0 = medium.length / kSpeedOfLight;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double u = grid.time(j) - tau_g;
        env.samples[j] = amp * std::exp(-0.25 * sp * sp * u * u);
    }
    return env;
}

std::string PropagationResult::to_csv() const {
    const double scale =
        input_peak_intensity > 0.0 ? 1.0 / input_peak_intensity : 1.0;
    std::string out = "tau_seconds,intensity_plus,intensity_minus\n";
    const std::size_t n = envelope_plus.samples.size();
    for (std::size_t j = 0; j < n; ++j) {
        append_g12(out, envelope_plus.time(j));
        out += ',';
        append_g12(out, std::norm(envelope_plus.samples[j]) * scale);
        out += ',';
        append_g12(out, std::norm(envelope_minus.samples[j]) * scale);
        out += '\n';
    }
    return out;
}

}  // namespace polsplit
