#pragma once

#include "swapdd/filterfn.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace swapdd {

// One g-frame gate. Omega rotations are Z-axis, Delta rotations X-axis
// (Bell-state basis). Rotation angle and duration satisfy
// angle = 2 pi * rate * duration. Y_pi is always the composite
// [OmegaRot(pi), DeltaRot(~pi)], never a primitive.
struct GFrameGate {
    enum class Kind { OmegaRot, DeltaRot, FreeEvolution };
    Kind kind = Kind::FreeEvolution;
    double angle_rad = 0.0;
    double rate_mhz = 0.0;
    double duration_s = 0.0;

    static GFrameGate rotation(Kind kind, double rate_mhz, double duration_s);
    static GFrameGate free_evolution(double rate_mhz, double duration_s);
};

struct GFrameCircuit {
    std::vector<GFrameGate> gates;
    double total_free_time_s = 0.0;
    SequenceKind kind;
};

// Amplitude (instrument units, e.g. mV) -> rate (MHz), invertible.
struct LinearTransfer {
    double mhz_per_unit = 1.0;
    double rate_mhz(double amplitude) const { return mhz_per_unit * amplitude; }
    double amplitude(double rate_mhz) const { return rate_mhz / mhz_per_unit; }
};

struct Calibration {
    LinearTransfer amp_to_omega{-25.0 / 229.0};
    LinearTransfer amp_to_delta{(250.0 / 3.0) / 68.0}; // 83.33 MHz at 68 mV
    Eigen::Matrix2d crosstalk = Eigen::Matrix2d::Identity(); // rows: (q1_z, coupler_z)
    double omega_pi_rate_mhz = -25.0;
    double omega_pi_width_s = 20e-9;
    double delta_pi_rate_mhz = 83.0;
    double delta_pi_width_s = 6e-9;
    double grid_s = 0.5e-9; // 0 disables alignment

    double omega_pi_amp() const { return amp_to_omega.amplitude(omega_pi_rate_mhz); }
    double delta_pi_amp() const { return amp_to_delta.amplitude(delta_pi_rate_mhz); }
};

struct PulsePoint {
    double start_s = 0.0;
    double width_s = 0.0;
    double amplitude = 0.0;
};

// Two-channel square-pulse timeline. Delta rotations appear only on q1_z,
// Omega rotations and the free-evolution bias only on coupler_z; with a
// non-identity crosstalk matrix the correction introduces compensation
// segments on the other channel.
struct PulseSchedule {
    std::vector<PulsePoint> q1_z;
    std::vector<PulsePoint> coupler_z;
    double total_time_s = 0.0;
    double grid_s = 0.0;
    double max_alignment_phase_err_rad = 0.0;
};

// DD circuit with N-1 interior pi pulses centered at k*t/N; free segments
// absorb the pulse widths symmetrically so pulse centers stay periodic.
GFrameCircuit build_dd_circuit(const SequenceKind& kind, double total_free_time_s,
                               double omega_free_mhz, const Calibration& calib);

PulseSchedule compile(const GFrameCircuit& circuit, const Calibration& calib);

// Invert a compiled schedule back to per-segment (rate, duration) using the
// calibration maps; used by round-trip checks.
struct ScheduleSegment {
    enum class Channel { Q1Z, CouplerZ };
    Channel channel;
    double rate_mhz;
    double start_s, width_s;
};
std::vector<ScheduleSegment> read_back(const PulseSchedule& schedule, const Calibration& calib);

// Ordered product of exp(-i angle/2 sigma_axis) over the gates (free evolution
// rotates about Z by 2 pi Omega tau).
Eigen::Matrix2cd ideal_unitary(const GFrameCircuit& circuit);

// Phase-insensitive distance between 2x2 unitaries: min_phi ||U - e^{i phi} V||_F / 2.
double unitary_distance(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v);

// Noiseless propagator of a schedule; supplied by the dynamics module.
using SchedulePropagator = std::function<Eigen::Matrix2cd(const PulseSchedule&, const Calibration&)>;

enum class PiPulseKind { OmegaPi, YPi };

// Pulse-train amplitude calibration: n_pulses (even) pulses, 2 ns spacing,
// fixed square widths, initial state |01>; returns the swept amplitude that
// maximizes the final |01> population (ties -> lowest amplitude).
double calibrate_pi_amplitude(PiPulseKind kind, const SchedulePropagator& propagate,
                              const Calibration& calib, const std::vector<double>& sweep,
                              int n_pulses);

// Pulse-train schedule used by the calibration (exposed for tests).
PulseSchedule pulse_train_schedule(PiPulseKind kind, double swept_amplitude,
                                   const Calibration& calib, int n_pulses);

} // namespace swapdd
