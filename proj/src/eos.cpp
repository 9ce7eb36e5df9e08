#include "synge/eos.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "synge/error.hpp"

namespace synge {

namespace {

void require_gamma(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("gamma must be positive and finite, got " + format17(gamma));
    }
}

// Derivative of q with respect to gamma, written in d = 1 - q.
xreal q_prime(GasKind kind, xreal g, xreal d) {
    if (kind == GasKind::Monatomic) return d * d - 2 * d + 3 * (1 - d) / g;
    return d * d - 2 * d + (1 - d) / g;
}

}  // namespace

const char* to_string(GasKind kind) {
    return kind == GasKind::Monatomic ? "monatomic" : "diatomic";
}

GasKind parse_gas_kind(const std::string& name) {
    if (name == "monatomic") return GasKind::Monatomic;
    if (name == "diatomic") return GasKind::Diatomic;
    throw DomainError("unknown gas '" + name + "' (expected monatomic or diatomic)");
}

void check_window(const Gas& gas, double gamma, const char* what) {
    if (!gas.window.contains(gamma)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << ": gamma = " << gamma << " outside accuracy window [" << gas.window.lo
            << ", " << gas.window.hi << "]";
        throw WindowError(msg.str(), gas.window.lo, gas.window.hi);
    }
}

namespace detail {

Coefficients coefficients(GasKind kind, xreal g) {
    const BesselCore core = bessel_core(g);
    Coefficients c{};
    c.g = g;
    if (kind == GasKind::Monatomic) {
        const xreal y = 1 - core.w;
        const xreal den = 2 / g + y;
        c.q = 1 / den;
        c.d = (2 / g - core.w) / den;
        c.L = (3 - 2 * g * c.d) + g * c.d * c.d - 3 * c.d - 4 / g;
        c.R1 = (4 - 2 * g * c.d) + g * c.d * c.d - 4 * c.d;
    } else {
        c.q = 1 - core.w;
        c.d = core.w;
        c.L = (1 - 2 * g * c.d) + g * c.d * c.d - c.d - 4 / g;
        c.R1 = (2 - 2 * g * c.d) + g * c.d * c.d - 2 * c.d;
    }
    c.r = g * c.q + 3;
    c.ep = c.r + c.R1 / c.L;
    return c;
}

xreal log_pressure_shape(GasKind kind, xreal g) {
    const BesselCore core = bessel_core(g);
    if (kind == GasKind::Monatomic) {
        const xreal y = 1 - core.w;
        const xreal d = (2 / g - core.w) / (2 / g + y);
        const xreal k2s = 2 * core.k1s / g + core.k0s;
        return std::log(k2s) - g * d - 2 * std::log(g);
    }
    return std::log(core.k1s) - g * core.w - 3 * std::log(g);
}

xreal invariant_density(GasKind kind, xreal g) {
    const Coefficients c = coefficients(kind, g);
    return -std::sqrt(c.ep) * c.L / (c.r + 1);
}

xreal invariant_density_leading(GasKind kind) {
    // Classical limit G ~ sqrt(k)/(k-1) gamma^{-3/2} with k = 5/3 or 7/5.
    if (kind == GasKind::Monatomic) return std::sqrt(xreal(15)) / 2;
    return std::sqrt(xreal(35)) / 2;
}

}  // namespace detail

double energy_ratio(const Gas& gas, double gamma) {
    require_gamma(gamma);
    return static_cast<double>(detail::coefficients(gas.kind, gamma).r);
}

double e_p(const Gas& gas, double gamma) {
    require_gamma(gamma);
    return static_cast<double>(detail::coefficients(gas.kind, gamma).ep);
}

double dlnp_dgamma(const Gas& gas, double gamma) {
    require_gamma(gamma);
    return static_cast<double>(detail::coefficients(gas.kind, gamma).L);
}

double gn_indicator(const Gas& gas, double gamma) {
    require_gamma(gamma);
    const detail::Coefficients c = detail::coefficients(gas.kind, gamma);
    const xreal g = c.g, q = c.q, d = c.d;
    const xreal qp = q_prime(gas.kind, g, d);
    const xreal q2m1 = d * d - 2 * d;  // q^2 - 1
    const xreal shared = q2m1 + 2 * g * q * qp;
    xreal R1p, Lp;
    if (gas.kind == GasKind::Monatomic) {
        R1p = shared + 4 * qp;
        Lp = shared + 3 * qp + 4 / (g * g);
    } else {
        R1p = shared + 2 * qp;
        Lp = shared + qp + 4 / (g * g);
    }
    const xreal ep_prime = c.R1 + (R1p * c.L - c.R1 * Lp) / (c.L * c.L);
    return static_cast<double>((c.r + 1) * ep_prime / c.L - 2 * c.ep * (c.ep - 1));
}

double pressure_isentrope(const Gas& gas, double gamma, double shat) {
    require_gamma(gamma);
    const xreal lp = 2 * std::log(xreal(gas.units.c)) + gas.units.S0 - xreal(shat) +
                     detail::log_pressure_shape(gas.kind, gamma);
    return static_cast<double>(std::exp(lp));
}

double entropy(const Gas& gas, double gamma, double rho) {
    require_gamma(gamma);
    if (!(rho > 0.0)) throw DomainError("density must be positive, got " + format17(rho));
    const xreal g = gamma;
    const xreal psi = detail::log_pressure_shape(gas.kind, g) + std::log(g);
    return static_cast<double>(psi - std::log(xreal(rho)) + gas.units.S0);
}

double entropy_k3_form(const Gas& gas, double gamma, double rho) {
    require_gamma(gamma);
    if (gas.kind != GasKind::Monatomic) {
        throw DomainError("the K3/K2 entropy form is defined for the monatomic gas only");
    }
    if (!(rho > 0.0)) throw DomainError("density must be positive, got " + format17(rho));
    const xreal g = gamma;
    const xreal k2s = bessel_k_scaled_ext(2, g);
    const xreal k3s = bessel_k_scaled_ext(3, g);
    return static_cast<double>(g * k3s / k2s - std::log(g) + std::log(k2s) - g -
                               std::log(xreal(rho)) + gas.units.S0);
}

double gamma_from(const Gas& gas, double p, double shat) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError("pressure must be positive and finite, got " + format17(p));
    }
    const xreal target = std::log(xreal(p)) - 2 * std::log(xreal(gas.units.c)) - gas.units.S0 + shat;
    auto f = [&](double u) {
        return static_cast<double>(detail::log_pressure_shape(gas.kind, std::exp(xreal(u))) - target);
    };
    const double ulo = std::log(gas.window.lo), uhi = std::log(gas.window.hi);

    // Heuristic start from the ultra-relativistic or classical limit of the shape.
    const double t = static_cast<double>(target);
    double guess;
    if (gas.kind == GasKind::Monatomic) {
        const double ur = 0.25 * (std::log(2.0) - t);
        guess = ur < 0 ? ur : (0.5 * std::log(kPi / 2) - 1.5 - t) / 2.5;
    } else {
        const double ur = -0.25 * t;
        guess = ur < 0 ? ur : (0.5 * std::log(kPi / 2) - 0.5 - t) / 3.5;
    }
    guess = std::clamp(guess, ulo, uhi);

    // Geometric expansion in gamma (factor 4) around the guess.
    double a = guess, b = guess;
    double fa = f(a), fb = fa;
    const double step = std::log(4.0);
    while (fa < 0 && a > ulo) {
        b = a;
        fb = fa;
        a = std::max(ulo, a - step);
        fa = f(a);
    }
    while (fb > 0 && b < uhi) {
        a = b;
        fa = fb;
        b = std::min(uhi, b + step);
        fb = f(b);
    }
    if (fa < 0 || fb > 0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "gamma_from: p = " << p << " not reachable on isentrope shat = " << shat
            << " inside attempted bracket gamma in [" << gas.window.lo << ", " << gas.window.hi
            << "]";
        throw WindowError(msg.str(), gas.window.lo, gas.window.hi);
    }
    // Polish in gamma itself: a relative tolerance on ln gamma degenerates near 0.
    auto fg = [&](double g) {
        return static_cast<double>(detail::log_pressure_shape(gas.kind, g) - target);
    };
    const double ga = a == ulo ? gas.window.lo : std::exp(a);
    const double gb = b == uhi ? gas.window.hi : std::exp(b);
    const double gamma = find_root(fg, ga, gb).x;
    const double resid = pressure_isentrope(gas, gamma, shat) / p - 1.0;
    if (!(std::fabs(resid) < 1e-12)) {
        throw ToleranceError("gamma_from residual " + format17(resid) + " exceeds 1e-12");
    }
    return gamma;
}

double rest_frame_speed(const Gas& gas, double gamma) {
    require_gamma(gamma);
    return static_cast<double>(1 / std::sqrt(detail::coefficients(gas.kind, gamma).ep));
}

SpecificHeats specific_heats(const Gas& gas, double gamma) {
    require_gamma(gamma);
    const detail::Coefficients c = detail::coefficients(gas.kind, gamma);
    const xreal cv = c.r - c.g * c.R1;
    return {static_cast<double>(cv), static_cast<double>(1 + cv)};
}

double temperature(const Gas& gas, double gamma) {
    require_gamma(gamma);
    return gas.units.m * gas.units.c * gas.units.c / (gas.units.k_B * gamma);
}

ThermoPoint thermo_point(const Gas& gas, double gamma, double rho) {
    require_gamma(gamma);
    if (!(rho > 0.0)) throw DomainError("density must be positive, got " + format17(rho));
    ThermoPoint t{};
    t.gamma = gamma;
    t.rho = rho;
    t.p = rho * gas.units.c * gas.units.c / gamma;
    t.e = t.p * energy_ratio(gas, gamma);
    t.T = temperature(gas, gamma);
    t.shat = entropy(gas, gamma, rho);
    return t;
}

namespace {

void check_velocity(const Gas& gas, double v) {
    if (!std::isfinite(v) || !(std::fabs(v) < gas.units.c)) {
        throw DomainError("superluminal velocity |v| = " + format17(std::fabs(v)) +
                          " >= c = " + format17(gas.units.c));
    }
}

}  // namespace

FluidState state_from_primitive(const Gas& gas, double rho, double v, double p) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw DomainError("density must be positive, got " + format17(rho));
    }
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError("pressure must be positive, got " + format17(p));
    }
    check_velocity(gas, v);
    const double gamma = rho * gas.units.c * gas.units.c / p;
    check_window(gas, gamma, "state");
    FluidState s;
    s.p = p;
    s.v = v;
    s.rho = rho;
    s.gamma = gamma;
    s.shat = entropy(gas, gamma, rho);
    s.e = p * energy_ratio(gas, gamma);
    return s;
}

FluidState state_from_pressure(const Gas& gas, double p, double v, double shat) {
    check_velocity(gas, v);
    const double gamma = gamma_from(gas, p, shat);
    FluidState s;
    s.p = p;
    s.v = v;
    s.shat = shat;
    s.gamma = gamma;
    s.rho = gamma * p / (gas.units.c * gas.units.c);
    s.e = p * energy_ratio(gas, gamma);
    return s;
}

FluidState state_from_gamma(const Gas& gas, double gamma, double v, double shat) {
    require_gamma(gamma);
    check_velocity(gas, v);
    check_window(gas, gamma, "state");
    FluidState s;
    s.gamma = gamma;
    s.v = v;
    s.shat = shat;
    s.p = pressure_isentrope(gas, gamma, shat);
    s.rho = gamma * s.p / (gas.units.c * gas.units.c);
    s.e = s.p * energy_ratio(gas, gamma);
    return s;
}

Primitive primitive_from_state(const FluidState& s) { return {s.rho, s.v, s.p}; }

std::array<double, 3> main_field(const Gas& gas, const FluidState& s) {
    const double c = gas.units.c;
    const double T = temperature(gas, s.gamma);
    const double S = gas.units.k_B / gas.units.m * s.shat;
    const double lorentz = 1.0 / std::sqrt(1.0 - s.v * s.v / (c * c));
    return {((s.e + s.p) / s.rho - T * S) / T, lorentz * s.v / T, lorentz / (c * T)};
}

double invariant_density(const Gas& gas, double gamma) {
    require_gamma(gamma);
    return static_cast<double>(detail::invariant_density(gas.kind, gamma));
}

double invariant_integral(const Gas& gas, double gamma) {
    require_gamma(gamma);
    using Quad = boost::math::quadrature::gauss_kronrod<xreal, 31>;
    const GasKind kind = gas.kind;
    const xreal a0 = detail::invariant_density_leading(kind);
    constexpr xreal t_min = 1e-3L;
    xreal total = 0, err = 0, scale = 0;

    // gamma < 1: integrate gamma G(gamma) over u = ln gamma.
    if (gamma < 1.0) {
        auto fu = [kind](xreal u) {
            const xreal g = std::exp(u);
            return g * detail::invariant_density(kind, g);
        };
        xreal e1 = 0;
        total += Quad::integrate(fu, std::log(xreal(gamma)), xreal(0), 15, 1e-12L, &e1);
        err += e1;
    }
    // gamma >= 1: t = gamma^{-1/2} maps the tail to a finite interval with a
    // regular integrand 2 G t^{-3} = 2 (a0 + a1 t^2 + ...) as t -> 0. Below
    // t_min the first two terms are used, a1 estimated at t = 1e-2.
    const xreal t_top = 1 / std::sqrt(std::max(xreal(gamma), xreal(1)));
    constexpr xreal t_fit = 1e-2L;
    const xreal a1 = (detail::invariant_density(kind, 1 / (t_fit * t_fit)) /
                          (t_fit * t_fit * t_fit) - a0) / (t_fit * t_fit);
    auto tail = [a0, a1](xreal t) { return 2 * a0 * t + 2 * a1 * t * t * t / 3; };
    if (t_top > t_min) {
        auto ft = [kind](xreal t) {
            const xreal g = 1 / (t * t);
            return 2 * detail::invariant_density(kind, g) / (t * t * t);
        };
        xreal e2 = 0;
        total += Quad::integrate(ft, t_min, t_top, 15, 1e-12L, &e2);
        err += e2;
        total += tail(t_min);
    } else {
        total += tail(t_top);
    }
    scale = std::fabs(total);
    if (!(err <= 1e-10L * std::max(scale, xreal(1)))) {
        throw ConvergenceError("invariant integral quadrature error " +
                               format17(static_cast<double>(err)));
    }
    return static_cast<double>(total);
}

}  // namespace synge
