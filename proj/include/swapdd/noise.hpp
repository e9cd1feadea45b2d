#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace swapdd {

struct LorentzianFeature {
    double amplitude = 0.0;     // flux_quanta^2
    double center_rad_s = 1.0;  // mu
    double width_rad_s = 1.0;   // sigma
};

// Flux-noise spectral density S(omega), flux_quanta^2 per (rad/s), evaluated on
// omega in [2 pi f_min, 2 pi f_max].
//
// Instrument part (five features, attenuable):
//   a1/w + a2/w^2 + Al sl/((w-mul)^2 + sl^2) + Ah sh/((w-muh)^2 + sh^2) + a_white
// plus a non-attenuable ground-loop power law a_gl / w^alpha_gl.
//
// Convention: S enters the coherence integral as
//   chi(t) = t^2 (dOmega/dPhi)^2 (1/2pi) Int_0^inf S(w) F(w,t) dw
// with no extra factor of 1/2, i.e. S plays the role of the symmetric
// (two-sided) density evaluated at positive frequencies. Consistently, a
// trajectory realizing this S carries total variance (1/pi) Int S(w) dw over
// the represented band. Both sides of the Monte-Carlo/filter-function
// comparison use this pairing.
struct NoisePsdModel {
    double a1 = 0.0;      // flux_quanta^2  (1/w amplitude)
    double a2 = 0.0;      // flux_quanta^2 * rad/s  (1/w^2 amplitude)
    LorentzianFeature lor_low;
    LorentzianFeature lor_high;
    double a_white = 0.0; // flux_quanta^2 / (rad/s)
    double a_gl = 0.0;    // flux_quanta^2 * (rad/s)^(alpha_gl - 1)
    double alpha_gl = 1.1;
    double f_min_hz = 1e-2;
    double f_max_hz = 1e8;
    double atten_db = 0.0; // applied to the instrument features only

    double omega_min() const;
    double omega_max() const;

    // DomainError outside [omega_min, omega_max].
    double psd(double omega_rad_s) const;

    // Same model with extra attenuation (dB add) on the instrument part.
    NoisePsdModel with_attenuation_db(double db) const;
    NoisePsdModel instrument_only() const;
    NoisePsdModel ground_loop_only() const;

    // (1/pi) Int_a^b S dw  -- process variance carried by [a, b].
    double band_variance(double omega_a, double omega_b) const;
};

struct NoiseTrajectory {
    double dt_s = 0.0;
    std::vector<double> samples; // flux offsets, flux_quanta
    uint64_t seed = 0;
};

// Frequency-domain synthesis of a Gaussian, zero-mean, stationary realization
// whose spectral content matches `model` on the representable band. Power below
// the synthesis window (down to f_min) is folded into a per-realization random
// offset so that slow free-induction dephasing is represented; content above
// f_max is clipped. Deterministic for fixed (model, dt, n, seed).
NoiseTrajectory synthesize_trajectory(const NoisePsdModel& model, double dt_s,
                                      std::size_t n, uint64_t seed);

// Welch-averaged one-sided PSD estimate (Hann window, 50% overlap).
// Returns (frequency grid in Hz, estimate in flux_quanta^2/Hz), normalized so
// that the integral of the estimate over the band approximates the sample
// variance. Relative to NoisePsdModel units: S_hat(f) ~= 2 * S(2 pi f).
std::pair<std::vector<double>, std::vector<double>>
periodogram(const NoiseTrajectory& traj, int n_segments);

} // namespace swapdd
