#include "polsplit/medium.hpp"

#include <cmath>
#include <string>

namespace polsplit {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid medium/drive: ") + what);
}

}  // namespace

void validate(const AtomicMedium& m) {
    require(std::isfinite(m.alpha) && m.alpha >= 0.0, "alpha must be >= 0");
    require(std::isfinite(m.gamma_big) && m.gamma_big > 0.0, "gamma_big must be > 0");
    require(std::isfinite(m.gamma_e1) && m.gamma_e1 > 0.0, "gamma_e1 must be > 0");
    require(std::isfinite(m.gamma_e3) && m.gamma_e3 > 0.0, "gamma_e3 must be > 0");
    require(std::isfinite(m.gamma_12) && m.gamma_12 >= 0.0, "gamma_12 must be >= 0");
    require(std::isfinite(m.gamma_23) && m.gamma_23 >= 0.0, "gamma_23 must be >= 0");
    require(std::isfinite(m.length) && m.length > 0.0, "length must be > 0");
    require(std::isfinite(m.carrier_omega) && m.carrier_omega > 0.0,
            "carrier_omega must be > 0");
    if (m.lambda > 0.0) {
        const double from_lambda = 2.0 * kPi * kSpeedOfLight / m.lambda;
        require(std::abs(m.carrier_omega - from_lambda) <= 1e-12 * from_lambda,
                "carrier_omega disagrees with 2 pi c / lambda");
    }
}

void validate(const DriveConfig& d) {
    require(std::isfinite(d.g_rabi) && d.g_rabi >= 0.0, "g_rabi must be >= 0");
    require(std::isfinite(d.delta_pump), "delta_pump must be finite");
    require(std::isfinite(d.b_zeeman), "b_zeeman must be finite");
}

DriveConfig default_drive() {
    return DriveConfig{0.15, 0.0, 10.0};
}

AtomicMedium default_sodium_medium() {
    AtomicMedium m;
    m.gamma_big = 3.1e7;
    m.lambda = 5890e-8;
    m.carrier_omega = 2.0 * kPi * kSpeedOfLight / m.lambda;
    m.number_density = 2.2e11;
    m.length = 1.0;
    m.gamma_e1 = 1.0;
    m.gamma_e3 = 1.0;
    m.gamma_12 = 0.0;
    m.gamma_23 = 0.0;
    m.alpha = calibrate_alpha(kSodiumGroupIndexTarget, default_drive(), m);
    return m;
}

double calibrate_alpha(double target_group_index, const DriveConfig& drive,
                       const AtomicMedium& medium) {
    if (!(drive.g_rabi > 0.0))
        throw std::invalid_argument(
            "calibrate_alpha: control Rabi frequency must be > 0 "
            "(transparency-point slope diverges at G = 0)");
    if (!(target_group_index > 1.0))
        throw std::invalid_argument("calibrate_alpha: target group index must be > 1");
    const double g_rad = drive.g_rabi * medium.gamma_big;
    return (target_group_index - 1.0) * g_rad * g_rad /
           (kPi * medium.carrier_omega * medium.gamma_big);
}

}  // namespace polsplit
