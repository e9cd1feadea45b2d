#pragma once

#include "swapdd/noise.hpp"

#include <optional>
#include <vector>

namespace swapdd {

enum class Family { X, Y, XY };

// Periodic DD sequence: the free evolution is split into n_periods equal
// sections by n_periods - 1 interior pi pulses at t_k = k t / N.
// N = 1 is Ramsey (no pulses), N = 2 spin echo (one midpoint pulse).
// The XY family alternates pulse axes starting with Y and needs even N.
struct SequenceKind {
    Family family = Family::Y;
    int n_periods = 1;
};

SequenceKind parse_sequence_name(const std::string& name); // "Y-1", "XY-8", ...
std::string sequence_name(const SequenceKind& kind);

// Sign function f(t; t') in {+1, -1}: starts at +1, flips at each pi-pulse time.
struct SignFunction {
    std::vector<double> flip_times_s;
    double total_time_s = 0.0;
};

SignFunction sign_function(const SequenceKind& kind, double t_s);

// Dimensionless filter F(w, t) = |f~(w)|^2 / t^2 from the closed forms:
//   N=1:    (4/(w t)^2)  sin^2(wt/2)
//   N=2:    (16/(w t)^2) sin^4(wt/4)
//   even N: (4/(w t)^2)  tan^2(wt/2N) sin^2(wt/2)
// The tan form's 0/0 points are evaluated through a stable sin(Nu)/sin(u)
// ratio; queries within 1e-9 of a tan pole raise PoleError (quadrature grids
// must split there).
double filter_closed_form(int n_periods, double omega_rad_s, double t_s);

// |f~(w)|^2 / t^2 from exact per-segment integrals of the sign function.
double filter_numeric(const SignFunction& sf, double omega_rad_s);

// Tan-pole frequencies of the even-N closed form inside [w_lo, w_hi].
std::vector<double> filter_pole_frequencies(int n_periods, double t_s,
                                            double w_lo, double w_hi);

struct DephasingPrediction {
    double gamma_phi = 0.0;          // 1/s
    double a_of_n_per_mhz_mphi0 = 0.0; // Gamma_phi per (MHz/mPhi0)
    double a_of_n_rad = 0.0;         // Gamma_phi per (rad/s per flux quantum)
    double tau_star_s = 0.0;
    bool converged = true;
};

// chi(t) = t^2 lambda^2 (1/2pi) Int S(w) F(w, tau*) dw over the model band,
// lambda = 2pi*1e9 * sensitivity(MHz/mPhi0).
double coherence_integral(const NoisePsdModel& model, double sens_mhz_per_mphi0,
                          const SequenceKind& kind, double t_s, double tau_star_s);

// Gaussian pure-dephasing rate: Gamma_phi = |dOmega/dPhi| A(N) with
// A(N) = sqrt((1/2pi) Int S(w) F(w, tau*) dw).
//
// tau* is the self-consistent duration chi(tau*) = 1 solved at
// `ref_sens_mhz_per_mphi0` (paper procedure: one tau* per sequence, fitted at
// a reference bias). With the reference fixed, Gamma_phi is exactly
// proportional to the sensitivity. Pass ref = query sensitivity (or leave
// unset) to solve the fixed point at the query itself.
DephasingPrediction dephasing_rate(const NoisePsdModel& model,
                                   double sens_mhz_per_mphi0,
                                   const SequenceKind& kind,
                                   std::optional<double> ref_sens_mhz_per_mphi0 = {},
                                   std::optional<double> tau_star_override_s = {});

// A(N) at unit sensitivity (rad/s per flux quantum), tau* solved at the
// reference sensitivity (default 5 MHz/mPhi0).
double sequence_coefficient(const NoisePsdModel& model, const SequenceKind& kind,
                            double ref_sens_mhz_per_mphi0 = 5.0);

} // namespace swapdd
