#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "polsplit/medium.hpp"
#include "polsplit/susceptibility.hpp"

namespace polsplit {

/// Gaussian input pulse, field envelope E0 exp(-sigma^2 t^2 / 4) with
/// spectrum E0 / (sigma sqrt(pi)) exp(-nu^2 / sigma^2) around the carrier.
struct GaussianPulseSpec {
    double sigma = 2.0 * kPi * 4775.0;  ///< spectral width, rad/s
    double amplitude = 1.0;             ///< peak field, arbitrary units
    double center_delta = 0.0;          ///< carrier detuning, units of gamma_big
};

/// Uniform frequency/time grid for the spectral propagator. Frequencies are
/// offsets nu_k = (k - n/2) domega from the carrier, times are
/// tau_j = (j - n/2) dt, and dt * domega * n_points = 2 pi.
struct SpectralGrid {
    std::size_t n_points = std::size_t{1} << 14;
    double span = 0.0;  ///< total angular frequency span, rad/s

    double domega() const { return span / static_cast<double>(n_points); }
    double dt() const { return 2.0 * kPi / span; }
    double freq(std::size_t k) const;
    double time(std::size_t j) const;
};

/// n_points = 2^14, span = 64 sigma.
SpectralGrid default_grid(const GaussianPulseSpec& spec);

/// Complex envelope samples on the time grid. For outputs of the medium the
/// time axis is the retarded time tau = t - L/c and t0 carries the removed
/// vacuum transit L/c; for the input pulse t0 = 0.
struct FieldEnvelope {
    Polarization pol = Polarization::SigmaMinus;
    std::vector<std::complex<double>> samples;
    double dt = 0.0;      ///< sample spacing, seconds
    bool retarded = false;
    double t0 = 0.0;      ///< absolute time of tau = 0, seconds

    double time(std::size_t j) const;
};

struct PropagationResult {
    FieldEnvelope envelope_plus;
    FieldEnvelope envelope_minus;
    double peak_time_plus = 0.0;    ///< retarded frame, seconds
    double peak_time_minus = 0.0;
    double separation_measured = 0.0;  ///< peak_time_plus - peak_time_minus
    double peak_intensity_ratio_plus = 0.0;   ///< output/input peak |E|^2
    double peak_intensity_ratio_minus = 0.0;
    double input_peak_intensity = 0.0;  ///< per-component input peak |E|^2 / 2
    double lc_delay = 0.0;          ///< vacuum transit L/c, seconds

    /// header: tau_seconds,intensity_plus,intensity_minus with intensities
    /// normalized to the input per-component peak |E|^2 / 2.
    std::string to_csv() const;
};

/// Broadening parameter of the near-resonant component and the effective
/// spectral width sigma' = sigma / sqrt(1 - i kappa) of its output envelope.
struct KappaResult {
    std::complex<double> kappa;
    std::complex<double> sigma_prime;
};

/// Samples the pulse spectrum on the grid. Throws std::domain_error when
/// span < 8 sigma (spectrum truncation).
std::vector<std::complex<double>> gaussian_spectrum(const GaussianPulseSpec& spec,
                                                    const SpectralGrid& grid);

/// Synthesis E(tau_j) = sum_k S_k exp(-i nu_k tau_j) domega on the centered
/// grid, and its inverse. Round-tripping is the identity up to rounding.
std::vector<std::complex<double>> spectrum_to_time(
    const std::vector<std::complex<double>>& spectrum, const SpectralGrid& grid);
std::vector<std::complex<double>> time_to_spectrum(
    const std::vector<std::complex<double>>& envelope, const SpectralGrid& grid);

/// Propagates both circular components through the medium by multiplying
/// each spectral sample at omega = carrier + nu by
/// exp{ 2 pi i omega L chi(omega) / c } and transforming back; the vacuum
/// phase is removed by working in the retarded frame. The input splits
/// evenly, E_pm = E / sqrt(2). Peak times use parabolic interpolation
/// through the three samples around the intensity maximum.
///
/// Throws std::domain_error when the grid violates span >= 16 sigma, when
/// n_points is not a power of two >= 1024, or when the frequency step is too
/// coarse to resolve the transparency window (domega > G^2 gamma_big / 10
/// with G > 0).
PropagationResult propagate_spectral(const GaussianPulseSpec& spec,
                                     const SpectralGrid& grid,
                                     const AtomicMedium& medium,
                                     const DriveConfig& drive);

/// kappa = sigma^2 L / (2c) * d^2/domega^2 { omega [1 + 2 pi chi_minus] } at
/// the pulse carrier, by five-point central differences with one Richardson
/// step.
KappaResult compute_kappa(const GaussianPulseSpec& spec,
                          const AtomicMedium& medium, const DriveConfig& drive);

/// Closed-form output envelope of the sigma- component,
///   E(tau) = E0 (sigma'/sigma) exp[ -(sigma'^2/4)(tau - tau_g)^2 ],
/// tau_g = L (n_g - 1) / c, valid for a pulse centered on the transparency
/// window. `spec.amplitude` is taken as the sigma- component's own input
/// peak amplitude. Requires gamma_12 = 0 and center_delta = delta_pump;
/// throws std::domain_error otherwise.
FieldEnvelope propagate_gaussian_analytic(const GaussianPulseSpec& spec,
                                          const SpectralGrid& grid,
                                          const AtomicMedium& medium,
                                          const DriveConfig& drive);

}  // namespace polsplit
