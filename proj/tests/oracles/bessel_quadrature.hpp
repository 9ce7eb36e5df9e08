#pragma once

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

/// e^g K_j(g) by adaptive quadrature of the integral representation
/// K_j(g) = (2^j j!/(2j)!) g^{-j} int_g^inf e^{-l} (l^2 - g^2)^{j-1/2} dl,
/// written with l = g cosh t so the endpoint singularity disappears:
/// e^g K_j(g) = (2^j j!/(2j)!) g^j int_0^T e^{-g (cosh t - 1)} sinh^{2j} t dt.
inline long double bessel_k_scaled_quadrature(int j, long double g) {
    if (j < 0 || j > 3 || !(g > 0)) throw std::domain_error("oracle order 0..3, g > 0");
    static const long double prefactor[4] = {1.0L, 1.0L, 1.0L / 3, 1.0L / 15};
    auto f = [j, g](long double t) {
        const long double s = std::sinh(t);
        return std::exp(-g * (std::cosh(t) - 1)) * std::pow(s, 2 * j);
    };
    // Beyond T the integrand is below e^{-250} of its scale.
    const long double T = std::acosh(1 + 250 / g);
    using Quad = boost::math::quadrature::gauss_kronrod<long double, 61>;
    long double err = 0;
    const long double v = Quad::integrate(f, 0.0L, T, 15, 1e-14L, &err);
    if (!(err <= 1e-13L * std::fabs(v))) throw std::runtime_error("oracle quadrature did not converge");
    return prefactor[j] * std::pow(g, j) * v;
}

inline long double bessel_k_quadrature(int j, long double g) {
    return bessel_k_scaled_quadrature(j, g) * std::exp(-g);
}

}  // namespace oracle
