#include "swapdd/filterfn.hpp"

#include "swapdd/errors.hpp"
#include "swapdd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace swapdd {

using num::pi;
using num::two_pi;

SequenceKind parse_sequence_name(const std::string& name) {
    const auto dash = name.find('-');
    if (dash == std::string::npos)
        throw ArgumentError("sequence name must look like Y-1, X-2, XY-4: " + name);
    const std::string fam = name.substr(0, dash);
    SequenceKind k;
    if (fam == "X") k.family = Family::X;
    else if (fam == "Y") k.family = Family::Y;
    else if (fam == "XY") k.family = Family::XY;
    else throw ArgumentError("unknown sequence family: " + fam);
    k.n_periods = std::stoi(name.substr(dash + 1));
    if (k.n_periods < 1) throw ArgumentError("sequence N must be >= 1");
    if (k.family == Family::XY && k.n_periods % 2 != 0)
        throw ArgumentError("XY family requires even N");
    return k;
}

std::string sequence_name(const SequenceKind& kind) {
    std::string fam = kind.family == Family::X ? "X" : kind.family == Family::Y ? "Y" : "XY";
    return fam + "-" + std::to_string(kind.n_periods);
}

SignFunction sign_function(const SequenceKind& kind, double t_s) {
    if (!(t_s > 0.0)) throw ArgumentError("sign_function: need t > 0");
    SignFunction sf;
    sf.total_time_s = t_s;
    for (int k = 1; k < kind.n_periods; ++k)
        sf.flip_times_s.push_back(t_s * k / kind.n_periods);
    return sf;
}

double filter_closed_form(int n_periods, double omega_rad_s, double t_s) {
    if (!(t_s > 0.0)) throw ArgumentError("filter_closed_form: need t > 0");
    if (omega_rad_s < 0.0) throw ArgumentError("filter_closed_form: need omega >= 0");
    const int n = n_periods;
    const double x = omega_rad_s * t_s;
    if (n == 1) {
        if (x < 1e-6) {
            const double h = 0.5 * x;
            return 1.0 - h * h / 3.0; // sinc^2 series
        }
        const double s = std::sin(0.5 * x);
        return 4.0 * s * s / (x * x);
    }
    if (n == 2) {
        if (x < 1e-6) return x * x / 16.0 * (1.0 - x * x / 24.0);
        const double s = std::sin(0.25 * x);
        const double s2 = s * s;
        return 16.0 * s2 * s2 / (x * x);
    }
    if (n % 2 != 0)
        throw ArgumentError("filter_closed_form: closed form exists for N=1,2 and even N");
    // even N: (4/x^2) tan^2(x/2N) sin^2(x/2); written through
    // r = sin(N u)/sin(u) with theta = x/(2N) to keep the removable
    // points at theta = (m+1/2) pi finite.
    const double theta = x / (2.0 * n);
    if (x < 1e-6) {
        // leading order (omega -> 0): x^2 (N^2-...)/(4 N^2) * ... -> series of
        // tan(theta) ~ theta: F ~ (4/x^2) theta^2 (x/2)^2 = x^2/(4N^2) * ...
        const double v = x * x / (4.0 * n * n);
        return v; // O(x^2), F -> 0 as omega^2
    }
    const double c = std::cos(theta);
    const double m_half = std::round(theta / pi - 0.5);
    const double u = theta - (m_half + 0.5) * pi;
    if (std::abs(u) < 1e-9)
        throw PoleError("filter_closed_form: query within 1e-9 of a tan pole");
    double ratio2;
    if (std::abs(c) < 1e-3) {
        // near the pole of tan: sin(x/2)/cos(theta) == +-sin(N u)/sin(u)
        const double r = std::sin(n * u) / std::sin(u);
        ratio2 = r * r;
    } else {
        const double tn = std::tan(theta);
        const double s = std::sin(0.5 * x);
        ratio2 = tn * tn * s * s;
        return 4.0 * ratio2 / (x * x);
    }
    const double st = std::sin(theta);
    return 4.0 * (st * st) * ratio2 / (x * x);
}

double filter_numeric(const SignFunction& sf, double omega_rad_s) {
    const double t = sf.total_time_s;
    if (!(t > 0.0)) throw ArgumentError("filter_numeric: invalid sign function");
    const double w = omega_rad_s;
    // segment boundaries
    std::vector<double> edges;
    edges.reserve(sf.flip_times_s.size() + 2);
    edges.push_back(0.0);
    for (double ft : sf.flip_times_s) edges.push_back(ft);
    edges.push_back(t);
    if (w == 0.0) {
        double area = 0.0;
        double sign = 1.0;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            area += sign * (edges[i + 1] - edges[i]);
            sign = -sign;
        }
        return (area / t) * (area / t);
    }
    // f~(w) = sum_j s_j (e^{-i w a_j} - e^{-i w b_j}) / (i w), exact per segment
    std::complex<double> acc(0.0, 0.0);
    double sign = 1.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const std::complex<double> ea(std::cos(w * edges[i]), -std::sin(w * edges[i]));
        const std::complex<double> eb(std::cos(w * edges[i + 1]), -std::sin(w * edges[i + 1]));
        acc += sign * (ea - eb);
        sign = -sign;
    }
    acc /= std::complex<double>(0.0, w);
    return std::norm(acc) / (t * t);
}

std::vector<double> filter_pole_frequencies(int n_periods, double t_s,
                                            double w_lo, double w_hi) {
    std::vector<double> poles;
    if (n_periods < 3 || n_periods % 2 != 0) return poles;
    // theta = w t / 2N = (m + 1/2) pi
    for (int m = 0;; ++m) {
        const double w = (2.0 * m + 1.0) * n_periods * pi / t_s;
        if (w > w_hi) break;
        if (w > w_lo) poles.push_back(w);
    }
    return poles;
}

namespace {

constexpr double kSensToRad = two_pi * 1e9; // (MHz/mPhi0) -> (rad/s)/Phi0

// (1/2pi) Int S(w) F(w, tau*) dw over the model band.
double spectral_weight(const NoisePsdModel& model, const SequenceKind& kind,
                       double tau_star_s, bool* converged) {
    const double a = model.omega_min();
    const double b = model.omega_max();
    const auto poles = filter_pole_frequencies(kind.n_periods, tau_star_s, a, b);
    auto f = [&](double w) {
        return model.psd(w) * filter_closed_form(kind.n_periods, w, tau_star_s);
    };
    const auto q = num::integrate_log_adaptive(f, a, b, poles, 1e-8, 6);
    if (converged) *converged = q.converged;
    return q.value / two_pi;
}

} // namespace

double coherence_integral(const NoisePsdModel& model, double sens_mhz_per_mphi0,
                          const SequenceKind& kind, double t_s, double tau_star_s) {
    if (!(tau_star_s > 0.0)) throw ArgumentError("coherence_integral: need tau* > 0");
    if (sens_mhz_per_mphi0 < 0.0) throw ArgumentError("coherence_integral: sensitivity < 0");
    if (t_s == 0.0 || sens_mhz_per_mphi0 == 0.0) return 0.0;
    bool ok = true;
    const double weight = spectral_weight(model, kind, tau_star_s, &ok);
    if (!ok) throw NumericError("coherence_integral: quadrature did not converge");
    const double lambda = sens_mhz_per_mphi0 * kSensToRad;
    return t_s * t_s * lambda * lambda * weight;
}

DephasingPrediction dephasing_rate(const NoisePsdModel& model,
                                   double sens_mhz_per_mphi0,
                                   const SequenceKind& kind,
                                   std::optional<double> ref_sens_mhz_per_mphi0,
                                   std::optional<double> tau_star_override_s) {
    DephasingPrediction out;
    if (sens_mhz_per_mphi0 < 0.0)
        throw ArgumentError("dephasing_rate: sensitivity < 0");
    const double ref_sens = ref_sens_mhz_per_mphi0.value_or(
        sens_mhz_per_mphi0 > 0.0 ? sens_mhz_per_mphi0 : 1.0);
    const double lambda_ref = ref_sens * kSensToRad;

    double tau = tau_star_override_s.value_or(1e-6);
    bool converged = tau_star_override_s.has_value();
    if (!tau_star_override_s) {
        // fixed point Gamma = 1/tau*, chi(tau*) = 1 at the reference sensitivity
        for (int it = 0; it < 50; ++it) {
            bool ok = true;
            const double weight = spectral_weight(model, kind, tau, &ok);
            if (!ok) throw NumericError("dephasing_rate: quadrature did not converge");
            const double gamma_ref = lambda_ref * std::sqrt(std::max(weight, 0.0));
            if (gamma_ref <= 0.0) { // no spectral weight at all
                out.tau_star_s = tau;
                out.converged = true;
                return out;
            }
            const double tau_next = 1.0 / gamma_ref;
            const double rel = std::abs(tau_next - tau) / tau_next;
            tau = tau_next;
            if (rel < 1e-4) { converged = true; break; }
        }
    }
    bool ok = true;
    const double weight = spectral_weight(model, kind, tau, &ok);
    if (!ok) throw NumericError("dephasing_rate: quadrature did not converge");
    const double a_rad = std::sqrt(std::max(weight, 0.0));
    out.gamma_phi = sens_mhz_per_mphi0 * kSensToRad * a_rad;
    out.a_of_n_rad = a_rad;
    out.a_of_n_per_mhz_mphi0 = a_rad * kSensToRad;
    out.tau_star_s = tau;
    out.converged = converged;
    return out;
}

double sequence_coefficient(const NoisePsdModel& model, const SequenceKind& kind,
                            double ref_sens_mhz_per_mphi0) {
    const auto p = dephasing_rate(model, ref_sens_mhz_per_mphi0, kind,
                                  ref_sens_mhz_per_mphi0);
    return p.a_of_n_rad;
}

} // namespace swapdd
