#include "polsplit/dispersion.hpp"

#include <cmath>
#include <stdexcept>

#include "format.hpp"

namespace polsplit {

using cd = std::complex<double>;
using detail::append_g12;

namespace {

cd chi_at(double delta, Polarization pol, const AtomicMedium& m,
          const DriveConfig& drive, bool use_eit) {
    return use_eit ? chi_eit(delta, pol, m, drive).value
                   : chi_bare(delta, pol, m, drive.b_zeeman).value;
}

}  // namespace

std::complex<double> chi_derivative(double delta0, Polarization pol,
                                    const AtomicMedium& m, const DriveConfig& drive,
                                    bool use_eit) {
    const double h = 1e-4;  // units of gamma_big
    auto stencil = [&](double hh) {
        return (-chi_at(delta0 + 2.0 * hh, pol, m, drive, use_eit) +
                8.0 * chi_at(delta0 + hh, pol, m, drive, use_eit) -
                8.0 * chi_at(delta0 - hh, pol, m, drive, use_eit) +
                chi_at(delta0 - 2.0 * hh, pol, m, drive, use_eit)) /
               (12.0 * hh);
    };
    const cd d_delta = (16.0 * stencil(0.5 * h) - stencil(h)) / 15.0;
    return d_delta / m.gamma_big;
}

GroupIndexResult group_index(double delta0, Polarization pol,
                             const AtomicMedium& m, const DriveConfig& drive,
                             bool use_eit) {
    validate(m);
    validate(drive);
    if (!std::isfinite(delta0))
        throw std::invalid_argument("group_index: delta0 must be finite");
    const double omega = m.carrier_omega + delta0 * m.gamma_big;
    const cd chi = chi_at(delta0, pol, m, drive, use_eit);
    const cd dchi = chi_derivative(delta0, pol, m, drive, use_eit);
    const double n_g = 1.0 + 2.0 * kPi * chi.real() + 2.0 * kPi * omega * dchi.real();
    GroupIndexResult r;
    r.n_g = n_g;
    r.v_g = kSpeedOfLight / n_g;
    r.transit_time = m.length * n_g / kSpeedOfLight;
    r.pol = pol;
    r.delta0 = delta0;
    return r;
}

double separation(double delta0, const AtomicMedium& m, const DriveConfig& drive) {
    const auto plus = group_index(delta0, Polarization::SigmaPlus, m, drive, true);
    const auto minus = group_index(delta0, Polarization::SigmaMinus, m, drive, true);
    return m.length * (plus.n_g - minus.n_g) / kSpeedOfLight;
}

namespace {

void check_axis(const std::vector<double>& axis) {
    if (axis.empty()) throw std::invalid_argument("sweep: empty axis");
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (!(axis[i] > axis[i - 1]))
            throw std::invalid_argument("sweep: axis must be strictly increasing");
}

SweepRow row_at(double delta, const AtomicMedium& m, const DriveConfig& drive) {
    SweepRow row;
    const auto plus = group_index(delta, Polarization::SigmaPlus, m, drive, true);
    const auto minus = group_index(delta, Polarization::SigmaMinus, m, drive, true);
    row.ng_plus = plus.n_g;
    row.ng_minus = minus.n_g;
    row.sep_seconds = m.length * (plus.n_g - minus.n_g) / kSpeedOfLight;
    row.im_chi_plus = chi_eit(delta, Polarization::SigmaPlus, m, drive).value.imag();
    row.im_chi_minus = chi_eit(delta, Polarization::SigmaMinus, m, drive).value.imag();
    return row;
}

}  // namespace

SweepTable sweep_ng_vs_pump_detuning(const std::vector<double>& pump_detunings,
                                     const AtomicMedium& m,
                                     const DriveConfig& drive_template) {
    check_axis(pump_detunings);
    validate(m);
    validate(drive_template);
    SweepTable table;
    table.axis = pump_detunings;
    table.rows.reserve(pump_detunings.size());
    for (double pump : pump_detunings) {
        DriveConfig drive = drive_template;
        drive.delta_pump = pump;
        // probe locked to the two-photon resonance of the near component
        table.rows.push_back(row_at(pump, m, drive));
    }
    return table;
}

SweepTable sweep_separation_vs_probe_detuning(
    const std::vector<double>& probe_detunings, const AtomicMedium& m,
    const DriveConfig& drive) {
    check_axis(probe_detunings);
    validate(m);
    validate(drive);
    SweepTable table;
    table.axis = probe_detunings;
    table.rows.reserve(probe_detunings.size());
    for (double delta : probe_detunings) table.rows.push_back(row_at(delta, m, drive));
    return table;
}

std::string SweepTable::to_csv() const {
    if (rows.size() != axis.size())
        throw std::invalid_argument("SweepTable: rows and axis lengths differ");
    std::string out = "sweep_param,ng_plus,ng_minus,sep_seconds,im_chi_plus,im_chi_minus\n";
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const SweepRow& r = rows[i];
        append_g12(out, axis[i]);
        for (double v : {r.ng_plus, r.ng_minus, r.sep_seconds, r.im_chi_plus,
                         r.im_chi_minus}) {
            out += ',';
            append_g12(out, v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace polsplit
