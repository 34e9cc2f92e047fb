#pragma once

#include <complex>

#include "polsplit/medium.hpp"

namespace polsplit {

enum class Polarization { SigmaPlus, SigmaMinus };

/// A dimensionless complex susceptibility sample together with the probe
/// detuning (units of gamma_big) it was evaluated at.
struct ComplexChi {
    std::complex<double> value;
    double delta = 0.0;
};

/// Detuning offset the Zeeman splitting imposes on one circular component.
///
/// For b >= 0 the sigma- component addresses the near transition and the
/// sigma+ transition sits 2B away; a negative b reverses the level ordering
/// (opposite Lande factor, lasers left untouched) so the roles of the two
/// components swap while each keeps the decay rates of its own transition.
double zeeman_shift(Polarization pol, double b_zeeman);

/// Susceptibility of one circular component with the control field off:
///   chi = alpha * (-i) / (2 [i(delta + shift) - gamma_e])
/// with everything in units of gamma_big.
ComplexChi chi_bare(double delta, Polarization pol, const AtomicMedium& medium,
                    double b_zeeman);

/// Susceptibility of one circular component dressed by the control field:
///   chi = alpha/2 * (-i) [i(d - Delta) - gamma_g]
///         / { [i d - gamma_e][i(d - Delta) - gamma_g] + G^2 },  d = delta + shift.
/// Vanishes exactly at the two-photon resonance d = Delta when gamma_g = 0
/// (the transparency point). At G = 0 the ground-coherence factor cancels
/// and the bare line is returned. Throws std::domain_error when the
/// denominator modulus falls below 1e-30 (undamped parameter sets evaluated
/// at a dressed-state pole).
ComplexChi chi_eit(double delta, Polarization pol, const AtomicMedium& medium,
                   const DriveConfig& drive);

}  // namespace polsplit
