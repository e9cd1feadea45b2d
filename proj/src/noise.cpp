#include "swapdd/noise.hpp"

#include "swapdd/errors.hpp"
#include "swapdd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace swapdd {

using num::pi;
using num::two_pi;

double NoisePsdModel::omega_min() const { return two_pi * f_min_hz; }
double NoisePsdModel::omega_max() const { return two_pi * f_max_hz; }

namespace {

double lorentzian(const LorentzianFeature& l, double w) {
    if (l.amplitude == 0.0) return 0.0;
    const double d = w - l.center_rad_s;
    return l.amplitude * l.width_rad_s / (d * d + l.width_rad_s * l.width_rad_s);
}

} // namespace

double NoisePsdModel::psd(double omega_rad_s) const {
    const double w = omega_rad_s;
    if (w < omega_min() * (1.0 - 1e-12) || w > omega_max() * (1.0 + 1e-12))
        throw DomainError("psd: frequency outside [f_min, f_max] band");
    const double atten = std::pow(10.0, -atten_db / 10.0);
    double instr = a_white;
    if (a1 != 0.0) instr += a1 / w;
    if (a2 != 0.0) instr += a2 / (w * w);
    instr += lorentzian(lor_low, w) + lorentzian(lor_high, w);
    double s = atten * instr;
    if (a_gl != 0.0) s += a_gl / std::pow(w, alpha_gl);
    return s;
}

NoisePsdModel NoisePsdModel::with_attenuation_db(double db) const {
    NoisePsdModel m = *this;
    m.atten_db += db;
    return m;
}

NoisePsdModel NoisePsdModel::instrument_only() const {
    NoisePsdModel m = *this;
    m.a_gl = 0.0;
    return m;
}

NoisePsdModel NoisePsdModel::ground_loop_only() const {
    NoisePsdModel m{};
    m.a_gl = a_gl;
    m.alpha_gl = alpha_gl;
    m.f_min_hz = f_min_hz;
    m.f_max_hz = f_max_hz;
    return m;
}

double NoisePsdModel::band_variance(double omega_a, double omega_b) const {
    const double a = std::max(omega_a, omega_min());
    const double b = std::min(omega_b, omega_max());
    if (!(b > a)) return 0.0;
    auto f = [this](double w) { return psd(w); };
    const auto q = num::integrate_log_adaptive(f, a, b, {}, 1e-9, 6);
    return q.value / pi;
}

NoiseTrajectory synthesize_trajectory(const NoisePsdModel& model, double dt_s,
                                      std::size_t n, uint64_t seed) {
    if (n < 2) throw ArgumentError("synthesize_trajectory: need n >= 2");
    if (!(dt_s > 0.0)) throw ArgumentError("synthesize_trajectory: dt must be positive");

    const std::size_t m = num::next_pow2(n);
    const double dw = two_pi / (static_cast<double>(m) * dt_s);
    const double w_lo = model.omega_min();
    const double w_hi = model.omega_max();

    num::NormalRng rng(num::split_seed(seed, 0x6e6f6973)); // stream tag "nois"

    // Sub-window power (f_min up to half the first bin) becomes a random
    // per-realization offset: 1/f-like spectra keep their free-induction
    // weight even when the trace is much shorter than 1/f_min.
    const double var_lo = model.band_variance(w_lo, std::min(0.5 * dw, w_hi));
    const double offset = std::sqrt(std::max(var_lo, 0.0)) * rng.next();

    std::vector<std::complex<double>> spec(m, {0.0, 0.0});
    for (std::size_t k = 1; k < m / 2; ++k) {
        const double wk = dw * static_cast<double>(k);
        if (wk > w_hi) break; // band-limited synthesis clips at f_max
        double s_k;
        if (wk < w_lo) {
            // representable but below the model band: treat as part of the
            // band edge so no spectral weight is double counted
            s_k = 0.0;
        } else {
            s_k = model.psd(wk);
        }
        // Each bin carries a cos/sin quadrature pair A_k cos + B_k sin with
        // Var(A_k) = Var(B_k) = S(w_k) dw / pi; the pair contributes exactly
        // the panel (1/2pi) S |f~|^2 dw to the coherence integral.
        const double amp = std::sqrt(s_k * dw / pi);
        const double a = amp * rng.next();
        const double b = amp * rng.next();
        spec[k] = std::complex<double>(a, -b) * (0.5 * static_cast<double>(m));
        spec[m - k] = std::conj(spec[k]);
    }
    spec[0] = std::complex<double>(offset * static_cast<double>(m), 0.0);

    num::fft_pow2(spec, +1); // unnormalized inverse
    NoiseTrajectory traj;
    traj.dt_s = dt_s;
    traj.seed = seed;
    traj.samples.resize(n);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j)
        traj.samples[j] = spec[j].real() * inv_m;
    return traj;
}

std::pair<std::vector<double>, std::vector<double>>
periodogram(const NoiseTrajectory& traj, int n_segments) {
    if (n_segments < 1) throw ArgumentError("periodogram: need n_segments >= 1");
    const std::size_t n = traj.samples.size();
    // 50% overlap Welch segmentation
    const std::size_t seg = num::next_pow2(2 * n / (static_cast<std::size_t>(n_segments) + 1)) / 2;
    if (seg < 8) throw ArgumentError("periodogram: trajectory too short for segmentation");
    const std::size_t hop = seg / 2;

    std::vector<double> window(seg);
    double wss = 0.0; // sum of squared window
    for (std::size_t i = 0; i < seg; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(two_pi * static_cast<double>(i) / static_cast<double>(seg)));
        wss += window[i] * window[i];
    }

    const double fs = 1.0 / traj.dt_s;
    std::vector<double> psd_acc(seg / 2, 0.0);
    int count = 0;
    std::vector<std::complex<double>> buf(seg);
    for (std::size_t start = 0; start + seg <= n; start += hop) {
        for (std::size_t i = 0; i < seg; ++i)
            buf[i] = traj.samples[start + i] * window[i];
        num::fft_pow2(buf, -1);
        for (std::size_t k = 1; k <= seg / 2; ++k) {
            // one-sided per-Hz density; doubles positive-frequency power
            const double p = std::norm(buf[k]) * 2.0 / (fs * wss);
            if (k < seg / 2) psd_acc[k] += p;
        }
        // DC power goes to bin 0 (offset), kept out of the one-sided grid
        ++count;
        if (count >= 2 * n_segments) break;
    }
    if (count == 0) throw ArgumentError("periodogram: trajectory shorter than segmentation");

    std::vector<double> f_hz, est;
    f_hz.reserve(seg / 2 - 1);
    est.reserve(seg / 2 - 1);
    for (std::size_t k = 1; k < seg / 2; ++k) {
        f_hz.push_back(fs * static_cast<double>(k) / static_cast<double>(seg));
        est.push_back(psd_acc[k] / count);
    }
    return {std::move(f_hz), std::move(est)};
}

} // namespace swapdd
