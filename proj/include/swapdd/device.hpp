#pragma once

#include <optional>
#include <string>
#include <vector>

namespace swapdd {

// Static chip parameters. Frequencies are ordinary frequencies (omega/2pi) in
// GHz, couplings in GHz, fluxes in flux quanta, relaxation rates in 1/s.
struct DeviceParams {
    double omega1_max_ghz = 5.27;
    double omega2_ghz = 4.62;
    double omegac_max_ghz = 8.8;
    double alpha1_ghz = -0.210;
    double alpha2_ghz = -0.240;
    double alphac_ghz = -0.370;
    double g1c_ghz = 0.122;
    double g2c_ghz = 0.105;
    double g12_ghz = 0.012;
    double phic_idle = 0.17;       // flux quanta
    double gamma1_q1 = 1.0 / 9.68e-6;
    double gamma1_q2 = 1.0 / 12.78e-6;
};

// Flux-to-frequency map for a tunable element.
//
// analytic-symmetric: f(phi) = f_max * sqrt(cos(pi * scale * phi)).
// The flux-axis scale factor is free so that two measured anchors
// (f(0) = f_max, f(phi_a) = f_a) can both be honored; the textbook
// single-junction curve cannot satisfy the device's anchor pair.
// tabulated: monotone sample table, monotone-safe linear interpolation.
class FluxMap {
public:
    enum class Kind { AnalyticSymmetric, Tabulated };

    static FluxMap analytic_symmetric(double f_max_ghz, double flux_scale,
                                      double phi_window_lo, double phi_window_hi);
    // Solve the flux-axis scale factor from the anchor pair.
    static FluxMap through_anchors(double f_max_ghz, double phi_anchor, double f_anchor_ghz,
                                   double phi_window_lo, double phi_window_hi);
    static FluxMap tabulated(std::vector<double> phi, std::vector<double> freq_ghz);

    Kind kind() const { return kind_; }
    double frequency_ghz(double phi) const;   // DomainError outside window
    // analytic derivative for the analytic kind, table slope for tabulated
    double dfreq_dphi_ghz(double phi) const;
    double window_lo() const { return phi_lo_; }
    double window_hi() const { return phi_hi_; }
    double flux_scale() const { return scale_; }
    double f_max_ghz() const { return f_max_; }

    // Invert frequency -> flux on the branch phi >= 0 (analytic) or on the
    // table range (tabulated). DomainError if target unreachable.
    double phi_for_frequency(double f_ghz) const;

private:
    Kind kind_ = Kind::AnalyticSymmetric;
    double f_max_ = 0.0;
    double scale_ = 1.0;
    double phi_lo_ = 0.0, phi_hi_ = 0.0;
    std::vector<double> tab_phi_, tab_f_;
};

// Net qubit-qubit coupling g~(wc) = g_eff_product / (omega_q - omega_c) + g12_eff,
// the omega1 = omega2 = omega_q case of
// 1/Delta = [1/(omega1-omega_c) + 1/(omega2-omega_c)]/2.
// g_eff_product is anchor-calibrated so g~(omega_c_zero) = 0 exactly.
struct CouplingModel {
    double g_eff_product_ghz2 = 0.0;
    double g12_eff_ghz = 0.012;
    double omega_q_ghz = 4.62;

    static CouplingModel from_zero_anchor(double g12_eff_ghz, double omega_q_ghz,
                                          double omega_c_zero_ghz);

    // SingularityError when omega_c is within tol of omega_q.
    double net_coupling_ghz(double omega_c_ghz, double tol_ghz = 1e-6) const;
    double omega_c_zero_ghz() const;
};

// Everything needed to go from coupler flux to swap rate.
struct DeviceModel {
    DeviceParams params;
    FluxMap coupler_map;
    FluxMap q1_map;
    CouplingModel coupling;

    static DeviceModel paper_defaults();

    double coupler_frequency_ghz(double phi_c) const;
    double qubit_frequency_ghz(double phi_1) const;

    // Omega(phi_c) = 2 g~(wc(phi_c)), in MHz. Sign as in the coupling model:
    // positive when the coupler is far above the qubits, negative near them.
    double swap_rate_mhz(double phi_c) const;

    // dOmega/dPhi_c in MHz per mPhi0. Central finite difference with the given
    // step (flux quanta); agrees with the chain-rule derivative to 1e-6
    // relative for analytic maps (see swap_rate_sensitivity_analytic).
    double flux_sensitivity_mhz_per_mphi0(double phi_c, double step_phi0 = 1e-5) const;
    double flux_sensitivity_analytic_mhz_per_mphi0(double phi_c) const;

    // Solve Omega(phi) = target on [phi_lo, phi_hi] (must bracket).
    double phi_for_swap_rate(double target_mhz, double phi_lo, double phi_hi) const;
    // Solve omega1(phi) = target on the positive branch.
    double phi1_for_qubit_frequency(double target_ghz) const;
};

} // namespace swapdd
