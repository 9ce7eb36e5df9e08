#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace synge {

/// Extended precision used for the Bessel and constitutive kernels.
using xreal = long double;

inline constexpr xreal kPi = 3.141592653589793238462643383279502884L;
/// Euler's constant C_E.
inline constexpr xreal kEuler = 0.577215664901532860606512090082402431L;

/// Rapidity atanh(v/c).
inline double rapidity(double v, double c) { return std::atanh(v / c); }

/// Relativistic velocity addition (a + b) / (1 + ab/c^2).
inline double compose_velocity(double a, double b, double c) {
    return (a + b) / (1.0 + a * b / (c * c));
}

/// Result of a scalar bracketed root search.
struct RootResult {
    double x;
    int iterations;
};

/// Root of f on [lo, hi] (f(lo), f(hi) of opposite sign) with TOMS 748.
/// Throws BracketError when the end values do not bracket a root and
/// ConvergenceError when the iteration budget is exhausted.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     int bits = 52, int max_iter = 200);

/// Variant taking precomputed end values.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double f_lo, double f_hi, int bits = 52, int max_iter = 200);

/// Extended-precision variant, converged to the full xreal mantissa.
struct RootResultExt {
    xreal x;
    int iterations;
};

RootResultExt find_root_ext(const std::function<xreal(xreal)>& f, xreal lo, xreal hi,
                            xreal f_lo, xreal f_hi, int max_iter = 200);

/// n points from a to b, logarithmically spaced (n >= 2, a, b > 0).
std::vector<double> log_grid(double a, double b, std::size_t n);

/// n points from a to b, evenly spaced (n >= 2).
std::vector<double> linear_grid(double a, double b, std::size_t n);

/// x printed with 17 significant digits (round-trip safe).
std::string format17(double x);

/// Runs body(i) for i in [0, n) on up to `threads` worker threads.
/// Each index is processed exactly once, so results written per index are
/// independent of the thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace synge
