#pragma once

#include <cmath>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

namespace oracle {

/// Brute-force constitutive model built from Boost's Bessel functions,
/// bisection inversions and finite-difference derivatives. c = m = k_B = 1.
struct Eos {
    bool monatomic = true;

    static long double K(int j, long double g) { return boost::math::cyl_bessel_k(j, g); }

    /// e/p.
    long double r(long double g) const {
        return monatomic ? g * K(1, g) / K(2, g) + 3 : g * K(0, g) / K(1, g) + 3;
    }

    /// Specific entropy plus ln rho.
    long double psi(long double g) const {
        return monatomic ? g * K(1, g) / K(2, g) + std::log(K(2, g) / g)
                         : g * K(0, g) / K(1, g) + std::log(K(1, g) / (g * g));
    }

    long double entropy(long double g, long double rho) const { return psi(g) - std::log(rho); }

    /// Pressure on the isentrope shat, from shat = psi(g) - ln(g p).
    long double pressure(long double g, long double shat) const {
        return std::exp(psi(g) - shat) / g;
    }

    /// Bisection on ln g for pressure(g, shat) = p.
    long double gamma_of(long double p, long double shat, long double rel_tol = 1e-16L) const {
        long double a = std::log(1e-8L), b = std::log(1e7L);
        const long double target = std::log(p);
        for (int i = 0; i < 400 && b - a > rel_tol; ++i) {
            const long double m = 0.5L * (a + b);
            if (std::log(pressure(std::exp(m), shat)) > target) {
                a = m;
            } else {
                b = m;
            }
        }
        return std::exp(0.5L * (a + b));
    }

    /// de/dp at fixed entropy from fourth-order differences in gamma.
    long double e_p(long double g) const {
        const long double h = 1e-3L * g;
        auto d = [h, g](auto f) {
            return (f(g - 2 * h) - 8 * f(g - h) + 8 * f(g + h) - f(g + 2 * h)) / (12 * h);
        };
        const long double dr = d([this](long double x) { return r(x); });
        const long double dlnp = d([this](long double x) { return std::log(pressure(x, 0)); });
        return r(g) + dr / dlnp;
    }

    /// sqrt(e_p)/(e + p) at pressure p on the isentrope.
    long double invariant_integrand(long double p, long double shat) const {
        const long double g = gamma_of(p, shat);
        return std::sqrt(e_p(g)) / (p * (r(g) + 1));
    }
};

/// Rapidity change int_{p}^{p_a} sqrt(e_p)/(e+p) dp along an isentrope.
inline long double rapidity_integral(const Eos& eos, long double p, long double p_a,
                                     long double shat) {
    using Quad = boost::math::quadrature::gauss_kronrod<long double, 31>;
    // Integrate in ln p for a smooth integrand.
    auto f = [&](long double lp) {
        const long double q = std::exp(lp);
        return q * eos.invariant_integrand(q, shat);
    };
    return Quad::integrate(f, std::log(p), std::log(p_a), 8, 1e-13L);
}

/// J(p) = int_0^p sqrt(e_p)/(e+p) dp: quadrature on [cut, p], cut <= p/1e6,
/// plus a tail.
/// Below the cut f(q) q^{-alpha} is a smooth function of x = q^beta, fitted
/// by a quartic through five nodes spread over [0.05 x_cut, x_cut] and
/// integrated term by term.
inline long double invariant_j(const Eos& eos, long double p, long double shat) {
    // The fit needs the cut in the classical regime, so it moves below
    // p/1e6 when the state is hot.
    long double cut = p * 1e-6L;
    while (eos.gamma_of(cut, shat) < 200) cut *= 0.1L;
    const long double body = rapidity_integral(eos, cut, p, shat);
    const long double k = eos.monatomic ? 5.0L / 3 : 7.0L / 5;
    const long double alpha = -1 + (k - 1) / (2 * k);
    const long double beta = (k - 1) / k;
    constexpr int n = 5;
    const long double frac[n] = {1.0L, 0.75L, 0.5L, 0.25L, 0.05L};
    long double a[n][n + 1];
    for (int i = 0; i < n; ++i) {
        const long double q = cut * std::pow(frac[i], 1 / beta);
        for (int m = 0; m < n; ++m) a[i][m] = std::pow(frac[i], m);
        a[i][n] = eos.invariant_integrand(q, shat) * std::pow(q, -alpha);
    }
    // Gaussian elimination with partial pivoting, coefficients in x / x_cut.
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int i = c + 1; i < n; ++i)
            if (std::fabs(a[i][c]) > std::fabs(a[piv][c])) piv = i;
        for (int m = 0; m <= n; ++m) std::swap(a[c][m], a[piv][m]);
        for (int i = c + 1; i < n; ++i) {
            const long double f = a[i][c] / a[c][c];
            for (int m = c; m <= n; ++m) a[i][m] -= f * a[c][m];
        }
    }
    long double coef[n];
    for (int c = n - 1; c >= 0; --c) {
        long double s = a[c][n];
        for (int m = c + 1; m < n; ++m) s -= a[c][m] * coef[m];
        coef[c] = s / a[c][c];
    }
    // int_0^cut q^alpha (x/x_cut)^m dq = cut^{alpha+1} / (alpha + 1 + m beta).
    long double tail = 0;
    for (int m = 0; m < n; ++m) tail += coef[m] / (alpha + 1 + m * beta);
    return body + tail * std::pow(cut, alpha + 1);
}

}  // namespace oracle
