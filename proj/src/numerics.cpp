#include "swapdd/numerics.hpp"

#include "swapdd/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace swapdd::num {

uint64_t SplitMix64::next() {
    state += 0x9E3779B97f4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    // 53 random bits into (0,1); offset by half an ulp so 0 is excluded
    return (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

uint64_t split_seed(uint64_t base, uint64_t stream) {
    SplitMix64 s(base ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    s.next();
    return s.next();
}

double NormalRng::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = rng_.next_double();
    const double u2 = rng_.next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
}

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw ArgumentError("fft_pow2: length must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * two_pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw ArgumentError("brent_root: endpoints do not bracket a root");
    if (std::abs(fa) < std::abs(fb)) { std::swap(a, b); std::swap(fa, fb); }
    double c = a, fc = fa, d = b - a;
    bool mflag = true;
    for (int it = 0; it < max_iter; ++it) {
        if (fb == 0.0 || std::abs(b - a) < xtol) return b;
        double s;
        if (fa != fc && fb != fc) {
            // inverse quadratic interpolation
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }
        const double lo = (3.0 * a + b) / 4.0;
        const bool cond = !((s > std::min(lo, b) && s < std::max(lo, b))) ||
                          (mflag && std::abs(s - b) >= std::abs(b - c) / 2.0) ||
                          (!mflag && std::abs(s - b) >= std::abs(c - d) / 2.0) ||
                          (mflag && std::abs(b - c) < xtol) ||
                          (!mflag && std::abs(c - d) < xtol);
        if (cond) {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if (fa * fs < 0.0) { b = s; fb = fs; }
        else { a = s; fa = fs; }
        if (std::abs(fa) < std::abs(fb)) { std::swap(a, b); std::swap(fa, fb); }
    }
    return b;
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double gl16(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * kGlNodes[static_cast<std::size_t>(i)];
        s += kGlWeights[static_cast<std::size_t>(i)] * (f(c - x) + f(c + x));
    }
    return s * h;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth, bool& ok) {
    const double m = 0.5 * (a + b);
    const double left = gl16(f, a, m);
    const double right = gl16(f, m, b);
    const double delta = left + right - whole;
    if (std::abs(delta) <= tol || depth <= 0) {
        if (depth <= 0 && std::abs(delta) > tol) ok = false;
        return left + right;
    }
    return adapt(f, a, m, left, 0.5 * tol, depth - 1, ok) +
           adapt(f, m, b, right, 0.5 * tol, depth - 1, ok);
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol, int max_depth) {
    QuadratureResult res;
    if (a == b) return res;
    const double whole = gl16(f, a, b);
    const double scale = std::max(std::abs(whole), 1e-300);
    bool ok = true;
    res.value = adapt(f, a, b, whole, rel_tol * scale, max_depth, ok);
    res.converged = ok;
    return res;
}

QuadratureResult integrate_log_adaptive(const std::function<double(double)>& f,
                                        double a, double b,
                                        const std::vector<double>& breakpoints,
                                        double rel_tol, int panels_per_decade,
                                        int max_depth) {
    if (!(a > 0.0) || !(b > a))
        throw ArgumentError("integrate_log_adaptive: need 0 < a < b");
    std::vector<double> edges;
    const double la = std::log10(a), lb = std::log10(b);
    const int n_panels = std::max(1, static_cast<int>(std::ceil((lb - la) * panels_per_decade)));
    edges.reserve(static_cast<std::size_t>(n_panels) + breakpoints.size() + 2);
    for (int i = 0; i <= n_panels; ++i)
        edges.push_back(std::pow(10.0, la + (lb - la) * i / n_panels));
    for (double bp : breakpoints)
        if (bp > a && bp < b) edges.push_back(bp);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.front() = a;
    edges.back() = b;

    // first pass for magnitude estimate, second with tolerances pinned to it
    double rough = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        rough += std::abs(gl16(f, edges[i], edges[i + 1]));
    const double tol_abs = rel_tol * std::max(rough, 1e-300);

    QuadratureResult res;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double whole = gl16(f, edges[i], edges[i + 1]);
        bool ok = true;
        res.value += adapt(f, edges[i], edges[i + 1], whole, tol_abs, max_depth, ok);
        if (!ok) res.converged = false;
    }
    return res;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw ArgumentError("linspace: need n >= 2");
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    if (!(a > 0.0) || !(b > 0.0)) throw ArgumentError("logspace: need positive endpoints");
    if (n < 2) throw ArgumentError("logspace: need n >= 2");
    std::vector<double> v(static_cast<std::size_t>(n));
    const double la = std::log10(a), lb = std::log10(b);
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = std::pow(10.0, la + (lb - la) * i / (n - 1));
    return v;
}

uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace swapdd::num
