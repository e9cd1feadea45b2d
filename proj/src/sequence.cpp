#include "swapdd/sequence.hpp"

#include "swapdd/errors.hpp"
#include "swapdd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace swapdd {

using num::pi;
using num::two_pi;
using cplx = std::complex<double>;

GFrameGate GFrameGate::rotation(Kind kind, double rate_mhz, double duration_s) {
    if (!(duration_s > 0.0)) throw ArgumentError("GFrameGate: duration must be positive");
    if (kind == Kind::FreeEvolution) throw ArgumentError("GFrameGate: use free_evolution()");
    GFrameGate g;
    g.kind = kind;
    g.rate_mhz = rate_mhz;
    g.duration_s = duration_s;
    g.angle_rad = two_pi * rate_mhz * 1e6 * duration_s;
    return g;
}

GFrameGate GFrameGate::free_evolution(double rate_mhz, double duration_s) {
    if (!(duration_s > 0.0)) throw ArgumentError("GFrameGate: duration must be positive");
    GFrameGate g;
    g.kind = Kind::FreeEvolution;
    g.rate_mhz = rate_mhz;
    g.duration_s = duration_s;
    g.angle_rad = two_pi * rate_mhz * 1e6 * duration_s;
    return g;
}

namespace {

double composite_width(const Calibration& c) {
    return c.omega_pi_width_s + c.delta_pi_width_s;
}

// Emit the pi pulse(s) for one refocusing slot. Y is the composite Z then X.
void emit_pulse(std::vector<GFrameGate>& gates, bool is_y, const Calibration& c) {
    if (is_y)
        gates.push_back(GFrameGate::rotation(GFrameGate::Kind::OmegaRot,
                                             c.omega_pi_rate_mhz, c.omega_pi_width_s));
    gates.push_back(GFrameGate::rotation(GFrameGate::Kind::DeltaRot,
                                         c.delta_pi_rate_mhz, c.delta_pi_width_s));
}

} // namespace

GFrameCircuit build_dd_circuit(const SequenceKind& kind, double total_free_time_s,
                               double omega_free_mhz, const Calibration& calib) {
    if (!(total_free_time_s > 0.0))
        throw ArgumentError("build_dd_circuit: need total_free_time > 0");
    if (omega_free_mhz == 0.0)
        throw ArgumentError("build_dd_circuit: free-evolution rate must be nonzero");
    if (kind.family == Family::XY && kind.n_periods % 2 != 0)
        throw ArgumentError("build_dd_circuit: XY family requires even N");

    GFrameCircuit circuit;
    circuit.kind = kind;
    circuit.total_free_time_s = total_free_time_s;

    const int n = kind.n_periods;
    // pulse axis per slot: X family -> all Delta; Y -> all composite;
    // XY alternates starting with Y
    std::vector<bool> is_y;
    for (int k = 1; k < n; ++k) {
        switch (kind.family) {
            case Family::X: is_y.push_back(false); break;
            case Family::Y: is_y.push_back(true); break;
            case Family::XY: is_y.push_back(k % 2 == 1); break;
        }
    }
    double widths_sum = 0.0;
    for (bool y : is_y) widths_sum += y ? composite_width(calib) : calib.delta_pi_width_s;
    if (!(total_free_time_s > static_cast<double>(n) * widths_sum) && n > 1)
        throw ScheduleError("build_dd_circuit: free time too short to host the pulses");

    double cursor = 0.0;
    for (int k = 1; k < n; ++k) {
        const double w = is_y[static_cast<std::size_t>(k - 1)] ? composite_width(calib)
                                                               : calib.delta_pi_width_s;
        const double center = total_free_time_s * k / n;
        const double free_len = center - 0.5 * w - cursor;
        if (!(free_len > 0.0))
            throw ScheduleError("build_dd_circuit: pulses overlap at this free time");
        circuit.gates.push_back(GFrameGate::free_evolution(omega_free_mhz, free_len));
        emit_pulse(circuit.gates, is_y[static_cast<std::size_t>(k - 1)], calib);
        cursor = center + 0.5 * w;
    }
    const double tail = total_free_time_s - cursor;
    if (!(tail > 0.0)) throw ScheduleError("build_dd_circuit: no room for the final section");
    circuit.gates.push_back(GFrameGate::free_evolution(omega_free_mhz, tail));
    return circuit;
}

namespace {

struct IntendedSegment {
    double start, end;
    double q1_rate_mhz;      // Delta on q1_z
    double coupler_rate_mhz; // Omega on coupler_z
};

double align(double t, double grid) {
    if (grid <= 0.0) return t;
    return std::round(t / grid) * grid;
}

} // namespace

PulseSchedule compile(const GFrameCircuit& circuit, const Calibration& calib) {
    // intended piecewise-constant rate timeline
    std::vector<IntendedSegment> segs;
    double cursor = 0.0;
    for (const auto& g : circuit.gates) {
        IntendedSegment s{cursor, cursor + g.duration_s, 0.0, 0.0};
        switch (g.kind) {
            case GFrameGate::Kind::FreeEvolution:
            case GFrameGate::Kind::OmegaRot:
                s.coupler_rate_mhz = g.rate_mhz;
                break;
            case GFrameGate::Kind::DeltaRot:
                s.q1_rate_mhz = g.rate_mhz;
                break;
        }
        segs.push_back(s);
        cursor = s.end;
    }

    PulseSchedule sched;
    sched.total_time_s = align(cursor, calib.grid_s);
    sched.grid_s = calib.grid_s;

    const Eigen::Matrix2d inv = calib.crosstalk.inverse();
    if (!inv.allFinite())
        throw CalibrationError("compile: crosstalk matrix is not invertible");

    double max_phase_err = 0.0;
    double aligned_cursor = 0.0;
    for (const auto& s : segs) {
        const double a_start = align(s.start, calib.grid_s);
        const double a_end = align(s.end, calib.grid_s);
        const double width = a_end - a_start;
        const double intended_width = s.end - s.start;
        // rate stays as requested; alignment phase error is reported
        const double rate = std::abs(s.q1_rate_mhz) > 0.0 ? s.q1_rate_mhz : s.coupler_rate_mhz;
        max_phase_err = std::max(max_phase_err,
                                 std::abs(two_pi * rate * 1e6 * (width - intended_width)));
        if (width <= 0.0) {
            aligned_cursor = a_end;
            continue;
        }
        // intended amplitudes, then crosstalk correction
        Eigen::Vector2d intended(calib.amp_to_delta.amplitude(s.q1_rate_mhz),
                                 calib.amp_to_omega.amplitude(s.coupler_rate_mhz));
        if (s.q1_rate_mhz == 0.0) intended(0) = 0.0;
        if (s.coupler_rate_mhz == 0.0) intended(1) = 0.0;
        const Eigen::Vector2d emitted = inv * intended;
        if (emitted(0) != 0.0)
            sched.q1_z.push_back({a_start, width, emitted(0)});
        if (emitted(1) != 0.0)
            sched.coupler_z.push_back({a_start, width, emitted(1)});
        aligned_cursor = a_end;
    }
    (void)aligned_cursor;
    sched.max_alignment_phase_err_rad = max_phase_err;
    return sched;
}

std::vector<ScheduleSegment> read_back(const PulseSchedule& schedule, const Calibration& calib) {
    std::vector<ScheduleSegment> out;
    for (const auto& p : schedule.q1_z)
        out.push_back({ScheduleSegment::Channel::Q1Z,
                       calib.amp_to_delta.rate_mhz(p.amplitude), p.start_s, p.width_s});
    for (const auto& p : schedule.coupler_z)
        out.push_back({ScheduleSegment::Channel::CouplerZ,
                       calib.amp_to_omega.rate_mhz(p.amplitude), p.start_s, p.width_s});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.start_s < b.start_s; });
    return out;
}

Eigen::Matrix2cd ideal_unitary(const GFrameCircuit& circuit) {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (const auto& g : circuit.gates) {
        const double half = 0.5 * g.angle_rad;
        Eigen::Matrix2cd step;
        if (g.kind == GFrameGate::Kind::DeltaRot) {
            // exp(-i half sigma_x)
            step << cplx(std::cos(half), 0.0), cplx(0.0, -std::sin(half)),
                    cplx(0.0, -std::sin(half)), cplx(std::cos(half), 0.0);
        } else {
            // exp(-i half sigma_z)
            step << std::exp(cplx(0.0, -half)), cplx(0.0, 0.0),
                    cplx(0.0, 0.0), std::exp(cplx(0.0, half));
        }
        u = step * u;
    }
    return u;
}

double unitary_distance(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v) {
    const cplx tr = (u.adjoint() * v).trace();
    const double inner = std::min(std::abs(tr), 2.0);
    return 0.5 * std::sqrt(std::max(0.0, 4.0 - 2.0 * inner - 2.0 * inner)) ;
}

PulseSchedule pulse_train_schedule(PiPulseKind kind, double swept_amplitude,
                                   const Calibration& calib, int n_pulses) {
    if (n_pulses < 2 || n_pulses % 2 != 0)
        throw ArgumentError("pulse_train_schedule: n_pulses must be even and >= 2");
    PulseSchedule sched;
    sched.grid_s = 0.0;
    const double spacing = 2e-9;
    double cursor = spacing;
    for (int i = 0; i < n_pulses; ++i) {
        if (kind == PiPulseKind::OmegaPi) {
            sched.coupler_z.push_back({cursor, calib.omega_pi_width_s, swept_amplitude});
            cursor += calib.omega_pi_width_s + spacing;
        } else {
            // composite Y: calibrated Omega_pi then the swept Delta pulse
            sched.coupler_z.push_back({cursor, calib.omega_pi_width_s, calib.omega_pi_amp()});
            cursor += calib.omega_pi_width_s;
            sched.q1_z.push_back({cursor, calib.delta_pi_width_s, swept_amplitude});
            cursor += calib.delta_pi_width_s + spacing;
        }
    }
    sched.total_time_s = cursor;
    return sched;
}

double calibrate_pi_amplitude(PiPulseKind kind, const SchedulePropagator& propagate,
                              const Calibration& calib, const std::vector<double>& sweep,
                              int n_pulses) {
    if (sweep.size() < 3) throw ArgumentError("calibrate_pi_amplitude: sweep too short");
    if (n_pulses % 2 != 0) throw ArgumentError("calibrate_pi_amplitude: n_pulses must be even");

    // |01> = (e+ - e-)/sqrt(2) in the g-frame basis
    Eigen::Vector2cd psi0;
    psi0 << cplx(1.0 / std::sqrt(2.0), 0.0), cplx(-1.0 / std::sqrt(2.0), 0.0);

    std::vector<double> population(sweep.size());
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const auto sched = pulse_train_schedule(kind, sweep[i], calib, n_pulses);
        const Eigen::Matrix2cd u = propagate(sched, calib);
        const Eigen::Vector2cd psi = u * psi0;
        const cplx amp01 = (psi(0) - psi(1)) / std::sqrt(2.0);
        population[i] = std::norm(amp01);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i)
        if (population[i] > population[best]) best = i;
    if (best == 0 || best + 1 == population.size())
        throw CalibrationError("calibrate_pi_amplitude: no interior maximum in sweep range");
    return sweep[best];
}

} // namespace swapdd
