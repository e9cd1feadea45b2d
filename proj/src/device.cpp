#include "swapdd/device.hpp"

#include "swapdd/errors.hpp"
#include "swapdd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swapdd {

using num::pi;

FluxMap FluxMap::analytic_symmetric(double f_max_ghz, double flux_scale,
                                    double phi_window_lo, double phi_window_hi) {
    if (!(f_max_ghz > 0.0)) throw ArgumentError("FluxMap: f_max must be positive");
    if (!(phi_window_hi > phi_window_lo)) throw ArgumentError("FluxMap: empty flux window");
    FluxMap m;
    m.kind_ = Kind::AnalyticSymmetric;
    m.f_max_ = f_max_ghz;
    m.scale_ = flux_scale;
    m.phi_lo_ = phi_window_lo;
    m.phi_hi_ = phi_window_hi;
    // the sqrt(cos) form must stay real and nonzero over the window
    const double worst = std::max(std::abs(phi_window_lo), std::abs(phi_window_hi));
    if (!(std::abs(flux_scale) * worst < 0.5))
        throw ArgumentError("FluxMap: window reaches the cos zero of the analytic map");
    return m;
}

FluxMap FluxMap::through_anchors(double f_max_ghz, double phi_anchor, double f_anchor_ghz,
                                 double phi_window_lo, double phi_window_hi) {
    if (!(f_anchor_ghz > 0.0) || !(f_anchor_ghz < f_max_ghz))
        throw ArgumentError("FluxMap: anchor frequency must lie in (0, f_max)");
    if (phi_anchor == 0.0) throw ArgumentError("FluxMap: anchor flux must be nonzero");
    const double r = f_anchor_ghz / f_max_ghz;
    const double scale = std::acos(r * r) / (pi * std::abs(phi_anchor));
    return analytic_symmetric(f_max_ghz, scale, phi_window_lo, phi_window_hi);
}

FluxMap FluxMap::tabulated(std::vector<double> phi, std::vector<double> freq_ghz) {
    if (phi.size() != freq_ghz.size() || phi.size() < 2)
        throw ArgumentError("FluxMap: table needs >= 2 matching samples");
    for (std::size_t i = 1; i < phi.size(); ++i)
        if (!(phi[i] > phi[i - 1]))
            throw ArgumentError("FluxMap: table flux column must be strictly increasing");
    const bool inc = freq_ghz.back() > freq_ghz.front();
    for (std::size_t i = 1; i < freq_ghz.size(); ++i) {
        const bool step_inc = freq_ghz[i] > freq_ghz[i - 1];
        if (step_inc != inc)
            throw ArgumentError("FluxMap: table frequency column must be strictly monotone");
    }
    FluxMap m;
    m.kind_ = Kind::Tabulated;
    m.phi_lo_ = phi.front();
    m.phi_hi_ = phi.back();
    m.tab_phi_ = std::move(phi);
    m.tab_f_ = std::move(freq_ghz);
    m.f_max_ = *std::max_element(m.tab_f_.begin(), m.tab_f_.end());
    return m;
}

double FluxMap::frequency_ghz(double phi) const {
    if (phi < phi_lo_ || phi > phi_hi_)
        throw DomainError("FluxMap: flux outside operating window");
    if (kind_ == Kind::AnalyticSymmetric)
        return f_max_ * std::sqrt(std::cos(pi * scale_ * phi));
    const auto it = std::upper_bound(tab_phi_.begin(), tab_phi_.end(), phi);
    std::size_t i = static_cast<std::size_t>(it - tab_phi_.begin());
    if (i == 0) i = 1;
    if (i >= tab_phi_.size()) i = tab_phi_.size() - 1;
    const double t = (phi - tab_phi_[i - 1]) / (tab_phi_[i] - tab_phi_[i - 1]);
    return tab_f_[i - 1] + t * (tab_f_[i] - tab_f_[i - 1]);
}

double FluxMap::dfreq_dphi_ghz(double phi) const {
    if (phi < phi_lo_ || phi > phi_hi_)
        throw DomainError("FluxMap: flux outside operating window");
    if (kind_ == Kind::AnalyticSymmetric) {
        const double x = pi * scale_ * phi;
        return -f_max_ * pi * scale_ * std::sin(x) / (2.0 * std::sqrt(std::cos(x)));
    }
    const auto it = std::upper_bound(tab_phi_.begin(), tab_phi_.end(), phi);
    std::size_t i = static_cast<std::size_t>(it - tab_phi_.begin());
    if (i == 0) i = 1;
    if (i >= tab_phi_.size()) i = tab_phi_.size() - 1;
    return (tab_f_[i] - tab_f_[i - 1]) / (tab_phi_[i] - tab_phi_[i - 1]);
}

double FluxMap::phi_for_frequency(double f_ghz) const {
    if (kind_ == Kind::AnalyticSymmetric) {
        const double lo = std::max(0.0, phi_lo_);
        const double hi = phi_hi_;
        const double f_lo = frequency_ghz(lo), f_hi = frequency_ghz(hi);
        if (f_ghz > f_lo || f_ghz < f_hi)
            throw DomainError("FluxMap: frequency not reachable on the positive branch");
        const double c = (f_ghz / f_max_) * (f_ghz / f_max_);
        return std::acos(c) / (pi * scale_);
    }
    const double f0 = tab_f_.front(), f1 = tab_f_.back();
    const double flo = std::min(f0, f1), fhi = std::max(f0, f1);
    if (f_ghz < flo || f_ghz > fhi)
        throw DomainError("FluxMap: frequency outside table range");
    auto f = [this, f_ghz](double p) { return frequency_ghz(p) - f_ghz; };
    return num::brent_root(f, phi_lo_, phi_hi_);
}

CouplingModel CouplingModel::from_zero_anchor(double g12_eff_ghz, double omega_q_ghz,
                                              double omega_c_zero_ghz) {
    CouplingModel m;
    m.g12_eff_ghz = g12_eff_ghz;
    m.omega_q_ghz = omega_q_ghz;
    // 0 = g_eff/(wq - wc0) + g12  =>  g_eff = g12 (wc0 - wq)
    m.g_eff_product_ghz2 = g12_eff_ghz * (omega_c_zero_ghz - omega_q_ghz);
    return m;
}

double CouplingModel::net_coupling_ghz(double omega_c_ghz, double tol_ghz) const {
    const double delta = omega_q_ghz - omega_c_ghz;
    if (std::abs(delta) < tol_ghz)
        throw SingularityError("net_coupling: coupler resonant with qubits");
    return g_eff_product_ghz2 / delta + g12_eff_ghz;
}

double CouplingModel::omega_c_zero_ghz() const {
    return omega_q_ghz + g_eff_product_ghz2 / g12_eff_ghz;
}

DeviceModel DeviceModel::paper_defaults() {
    DeviceModel m;
    m.params = DeviceParams{};
    m.coupler_map = FluxMap::through_anchors(m.params.omegac_max_ghz, m.params.phic_idle,
                                             6.15, -0.24, 0.24);
    m.q1_map = FluxMap::analytic_symmetric(m.params.omega1_max_ghz, 1.0, -0.30, 0.30);
    m.coupling = CouplingModel::from_zero_anchor(m.params.g12_ghz, m.params.omega2_ghz, 6.15);
    return m;
}

double DeviceModel::coupler_frequency_ghz(double phi_c) const {
    return coupler_map.frequency_ghz(phi_c);
}

double DeviceModel::qubit_frequency_ghz(double phi_1) const {
    return q1_map.frequency_ghz(phi_1);
}

double DeviceModel::swap_rate_mhz(double phi_c) const {
    return 2.0e3 * coupling.net_coupling_ghz(coupler_frequency_ghz(phi_c));
}

double DeviceModel::flux_sensitivity_mhz_per_mphi0(double phi_c, double step_phi0) const {
    if (!(step_phi0 > 0.0)) throw ArgumentError("flux_sensitivity: step must be positive");
    if (phi_c - step_phi0 < coupler_map.window_lo() || phi_c + step_phi0 > coupler_map.window_hi())
        throw DomainError("flux_sensitivity: query too close to the window edge");
    const double om_p = swap_rate_mhz(phi_c + step_phi0);
    const double om_m = swap_rate_mhz(phi_c - step_phi0);
    // MHz per Phi0 -> MHz per mPhi0
    return (om_p - om_m) / (2.0 * step_phi0) * 1e-3;
}

double DeviceModel::flux_sensitivity_analytic_mhz_per_mphi0(double phi_c) const {
    const double wc = coupler_frequency_ghz(phi_c);
    const double delta = coupling.omega_q_ghz - wc;
    const double dg_dwc = coupling.g_eff_product_ghz2 / (delta * delta); // GHz per GHz
    const double dwc_dphi = coupler_map.dfreq_dphi_ghz(phi_c);           // GHz per Phi0
    return 2.0e3 * dg_dwc * dwc_dphi * 1e-3;
}

double DeviceModel::phi_for_swap_rate(double target_mhz, double phi_lo, double phi_hi) const {
    auto f = [this, target_mhz](double p) { return swap_rate_mhz(p) - target_mhz; };
    return num::brent_root(f, phi_lo, phi_hi);
}

double DeviceModel::phi1_for_qubit_frequency(double target_ghz) const {
    return q1_map.phi_for_frequency(target_ghz);
}

} // namespace swapdd
