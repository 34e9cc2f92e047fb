#include "polsplit/susceptibility.hpp"

#include <cmath>
#include <stdexcept>

namespace polsplit {

using cd = std::complex<double>;

double zeeman_shift(Polarization pol, double b) {
    return pol == Polarization::SigmaPlus ? b + std::abs(b) : std::abs(b) - b;
}

namespace {

double line_decay(Polarization pol, const AtomicMedium& m) {
    return pol == Polarization::SigmaPlus ? m.gamma_e3 : m.gamma_e1;
}

double ground_decay(Polarization pol, const AtomicMedium& m) {
    return pol == Polarization::SigmaPlus ? m.gamma_23 : m.gamma_12;
}

}  // namespace

ComplexChi chi_bare(double delta, Polarization pol, const AtomicMedium& m,
                    double b_zeeman) {
    const double d = delta + zeeman_shift(pol, b_zeeman);
    const cd line(-line_decay(pol, m), d);  // i d - gamma_e
    return {m.alpha * cd(0.0, -1.0) / (2.0 * line), delta};
}

ComplexChi chi_eit(double delta, Polarization pol, const AtomicMedium& m,
                   const DriveConfig& drive) {
    if (drive.g_rabi == 0.0) {
        // The ground-coherence factor cancels between numerator and
        // denominator once |G|^2 = 0, leaving the bare line.
        return chi_bare(delta, pol, m, drive.b_zeeman);
    }
    const double d = delta + zeeman_shift(pol, drive.b_zeeman);
    const cd raman(-ground_decay(pol, m), d - drive.delta_pump);  // i(d - Delta) - gamma_g
    const cd line(-line_decay(pol, m), d);                        // i d - gamma_e
    const cd den = line * raman + drive.g_rabi * drive.g_rabi;
    if (std::abs(den) < 1e-30)
        throw std::domain_error(
            "chi_eit: dressed-state pole; parameter set has no damping");
    return {m.alpha * 0.5 * cd(0.0, -1.0) * raman / den, delta};
}

}  // namespace polsplit
