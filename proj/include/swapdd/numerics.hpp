#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace swapdd::num {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// --- deterministic random streams -------------------------------------------
//
// Trajectory synthesis must be bit-reproducible across platforms, so we do not
// use std::normal_distribution (its output is implementation-defined).

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next();
    // uniform in (0,1), never exactly 0 or 1
    double next_double();
};

// Derive an independent stream seed from (base seed, stream id).
uint64_t split_seed(uint64_t base, uint64_t stream);

// Standard-normal generator, Box-Muller on SplitMix64 output.
class NormalRng {
public:
    explicit NormalRng(uint64_t seed) : rng_(seed) {}
    double next();

private:
    SplitMix64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// --- FFT ---------------------------------------------------------------------

// In-place radix-2 complex FFT; length must be a power of two.
// sign = -1: forward (e^{-i...}), sign = +1: inverse without the 1/n factor.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

std::size_t next_pow2(std::size_t n);

// --- root finding ------------------------------------------------------------

// Brent's method on [a,b]; requires f(a) and f(b) of opposite sign.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-14, int max_iter = 200);

// --- quadrature ----------------------------------------------------------------

// Adaptive Gauss-Legendre on a set of panels. Panels are refined by bisection
// until the local GL(n) vs split-GL(n) estimate converges; evaluation order is
// fixed so concurrent use yields reproducible sums.
struct QuadratureResult {
    double value = 0.0;
    bool converged = true;
};

// Integrate f over [a, b] split into log-spaced panels (requires 0 < a < b),
// with extra panel boundaries inserted at `breakpoints` (pole avoidance).
QuadratureResult integrate_log_adaptive(const std::function<double(double)>& f,
                                        double a, double b,
                                        const std::vector<double>& breakpoints = {},
                                        double rel_tol = 1e-9,
                                        int panels_per_decade = 4,
                                        int max_depth = 28);

// Plain adaptive GL on a single interval.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-10, int max_depth = 28);

// --- small helpers -------------------------------------------------------------

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n); // log-spaced between a and b (values)

// FNV-1a 64-bit hash of a byte string (run manifests).
uint64_t fnv1a64(const void* data, std::size_t len);

} // namespace swapdd::num
