#pragma once

#include <stdexcept>

namespace polsplit {

inline constexpr double kSpeedOfLight = 2.99792458e10;  // cm/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Group index the default sodium medium is calibrated to at the
/// transparency point of the near-resonant circular component.
inline constexpr double kSodiumGroupIndexTarget = 3.92e6;

/// Static properties of the four-level medium.
///
/// The overall coupling strength enters only through the dimensionless
/// prefactor `alpha`; decay rates of the optical and ground coherences are
/// stored in units of `gamma_big`, the rate of the |e>-|j> optical
/// coherences. Detunings and Rabi frequencies elsewhere in the API follow
/// the same unit convention and are converted to rad/s only inside the
/// propagation code.
struct AtomicMedium {
    double alpha = 0.0;           ///< dimensionless strength prefactor
    double gamma_big = 0.0;       ///< optical coherence decay rate, rad/s
    double gamma_e1 = 1.0;        ///< |e>-|1> decay, units of gamma_big
    double gamma_e3 = 1.0;        ///< |e>-|3> decay, units of gamma_big
    double gamma_12 = 0.0;        ///< |1>-|2> ground coherence decay, units of gamma_big
    double gamma_23 = 0.0;        ///< |2>-|3> ground coherence decay, units of gamma_big
    double length = 0.0;          ///< cell length, cm
    double carrier_omega = 0.0;   ///< probe carrier angular frequency, rad/s
    double number_density = 0.0;  ///< atoms/cm^3, informational
    double lambda = 0.0;          ///< probe wavelength, cm, informational
};

/// Control field configuration, all values in units of the medium's
/// gamma_big. `b_zeeman` is signed: flipping its sign models a level
/// ordering reversed by an opposite Lande factor.
struct DriveConfig {
    double g_rabi = 0.0;      ///< control Rabi frequency G
    double delta_pump = 0.0;  ///< pump detuning Delta
    double b_zeeman = 0.0;    ///< Zeeman splitting B
};

/// Throws std::invalid_argument when a field is out of range or the carrier
/// frequency disagrees with the stored wavelength.
void validate(const AtomicMedium& medium);
void validate(const DriveConfig& drive);

/// Sodium vapor cell parameters with alpha calibrated against
/// kSodiumGroupIndexTarget under the default drive.
AtomicMedium default_sodium_medium();

/// G = 0.15, Delta = 0, B = 10 (units of gamma_big).
DriveConfig default_drive();

/// Inverts the transparency-point group index
///   n_g = 1 + 2*pi*omega0 * alpha * Gamma / (2 G^2)
/// for alpha. The static susceptibility term is absent because the
/// susceptibility vanishes exactly at the transparency point.
/// Throws std::invalid_argument for G <= 0 or target <= 1.
double calibrate_alpha(double target_group_index, const DriveConfig& drive,
                       const AtomicMedium& medium);

}  // namespace polsplit
