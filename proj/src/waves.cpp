#include "synge/waves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "synge/error.hpp"

namespace synge {

namespace {

constexpr double kOdeAbsTol = 1e-14;
constexpr double kOdeRelTol = 1e-12;

void require_nonlinear(Family f) {
    if (f != Family::One && f != Family::Three) {
        throw DomainError("wave curves exist only for families 1 and 3");
    }
}

double lorentz_denominator(double v, double c) { return c * c - v * v; }

std::array<double, 3> conserved(const FluidState& s, double c) {
    const double den = lorentz_denominator(s.v, c);
    return {s.rho * c / std::sqrt(den), (s.e + s.p) * s.v / den,
            (s.e * c * c + s.p * s.v * s.v) / den};
}

std::array<double, 3> flux(const FluidState& s, double c) {
    const double den = lorentz_denominator(s.v, c);
    return {s.rho * c * s.v / std::sqrt(den), (s.e + s.p) * s.v * s.v / den + s.p,
            (s.e + s.p) * c * c * s.v / den};
}

}  // namespace

Family family_from_index(int i) {
    if (i < 1 || i > 3) throw DomainError("family must be 1, 2 or 3, got " + std::to_string(i));
    return static_cast<Family>(i);
}

const char* to_string(WaveKind kind) {
    switch (kind) {
        case WaveKind::Shock: return "shock";
        case WaveKind::Rarefaction: return "rarefaction";
        case WaveKind::Contact: return "contact";
        case WaveKind::VacuumEdge: return "vacuum_edge";
        case WaveKind::Anchor: return "anchor";
    }
    return "unknown";
}

Eigenvalues eigenvalues(const Gas& gas, const FluidState& s) {
    const double c = gas.units.c;
    const double ep = e_p(gas, s.gamma);
    const double sq = std::sqrt(ep);
    const double v = s.v;
    const double den = ep * c * c - v * v;
    const double a = (ep - 1.0) * c * c * v;
    const double b = sq * c * lorentz_denominator(v, c);
    return {(a - b) / den, v, (a + b) / den};
}

double characteristic_speed(const Gas& gas, const FluidState& s, Family f) {
    const Eigenvalues ev = eigenvalues(gas, s);
    if (f == Family::One) return ev.l1;
    if (f == Family::Two) return ev.l2;
    return ev.l3;
}

RiemannInvariants riemann_invariants(const Gas& gas, const FluidState& s) {
    const double phi = rapidity(s.v, gas.units.c);
    const double J = invariant_integral(gas, s.gamma);
    return {phi + J, phi - J};
}

FluidState rarefaction_state_gamma(const Gas& gas, const FluidState& anchor, Family f,
                                   double gamma) {
    require_nonlinear(f);
    if (gamma == anchor.gamma) return anchor;
    if (!(gamma > anchor.gamma)) {
        throw DomainError("rarefaction side violation: gamma " + format17(gamma) +
                          " below anchor gamma " + format17(anchor.gamma));
    }
    check_window(gas, gamma, "rarefaction");
    namespace ode = boost::numeric::odeint;
    using State = std::array<double, 1>;

    // Rapidity along the isentrope in u = ln gamma: d phi/du = +-gamma G(gamma).
    const double sign = f == Family::One ? 1.0 : -1.0;
    const GasKind kind = gas.kind;
    auto rhs = [sign, kind](const State&, State& dxdt, double u) {
        const xreal g = std::exp(xreal(u));
        dxdt[0] = sign * static_cast<double>(g * detail::invariant_density(kind, g));
    };
    const double u0 = std::log(anchor.gamma), u1 = std::log(gamma);
    State phi{rapidity(anchor.v, gas.units.c)};
    auto stepper = ode::make_controlled(kOdeAbsTol, kOdeRelTol, ode::runge_kutta_dopri5<State>());
    ode::integrate_adaptive(stepper, rhs, phi, u0, u1, (u1 - u0) / 16);

    FluidState out;
    out.gamma = gamma;
    out.shat = anchor.shat;
    out.p = pressure_isentrope(gas, gamma, anchor.shat);
    out.rho = gamma * out.p / (gas.units.c * gas.units.c);
    out.e = out.p * energy_ratio(gas, gamma);
    out.v = gas.units.c * std::tanh(phi[0]);
    return out;
}

FluidState rarefaction_state(const Gas& gas, const FluidState& anchor, Family f, double p) {
    require_nonlinear(f);
    if (p == anchor.p) return anchor;
    if (!(p > 0.0) || p > anchor.p) {
        throw DomainError("rarefaction side violation: p = " + format17(p) +
                          " must lie in (0, p_anchor = " + format17(anchor.p) + "]");
    }
    const double gamma = gamma_from(gas, p, anchor.shat);
    FluidState out = rarefaction_state_gamma(gas, anchor, f, gamma);
    out.p = p;
    out.rho = gamma * p / (gas.units.c * gas.units.c);
    out.e = p * energy_ratio(gas, gamma);
    return out;
}

ShockPoint shock_state(const Gas& gas, const FluidState& anchor, Family f, double p) {
    require_nonlinear(f);
    if (p == anchor.p) return {anchor, characteristic_speed(gas, anchor, f), f};
    if (!(p > anchor.p) || !std::isfinite(p)) {
        throw DomainError("shock side violation: p = " + format17(p) +
                          " must exceed p_anchor = " + format17(anchor.p));
    }
    const GasKind kind = gas.kind;
    const xreal pa = anchor.p, px = p;
    const xreal ra = detail::coefficients(kind, anchor.gamma).r;
    const xreal ga = anchor.gamma;
    const xreal rhs = (ra + 1) * (ra + px / pa) / (ga * ga);
    // Taub adiabat with n = gamma p / (m c^2), e = p r(gamma). Weak shocks
    // take their speed from e - e_anchor, so the root is kept in xreal.
    auto taub = [&](xreal g) {
        const xreal r = detail::coefficients(kind, g).r;
        return (r + 1) * (r + pa / px) / (g * g) - rhs;
    };

    xreal hi = ga, f_hi = taub(hi);
    xreal lo = hi, f_lo = f_hi;
    std::ostringstream trace;
    trace.precision(17);
    while (f_lo <= 0) {
        if (lo <= gas.window.lo) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "Taub adiabat: downstream gamma below window for p = " << p
                << "; bracket trace" << trace.str();
            throw WindowError(msg.str(), gas.window.lo, gas.window.hi);
        }
        hi = lo;
        f_hi = f_lo;
        lo = std::max(xreal(gas.window.lo), lo / 2);
        f_lo = taub(lo);
        trace << " [" << static_cast<double>(lo) << ": " << static_cast<double>(f_lo) << "]";
    }
    const xreal gamma = find_root_ext(taub, lo, hi, f_lo, f_hi).x;
    check_window(gas, static_cast<double>(gamma), "shock downstream");

    const xreal c = gas.units.c;
    const xreal e = px * detail::coefficients(kind, gamma).r;
    const xreal ea = pa * ra;
    FluidState down;
    down.p = p;
    down.gamma = static_cast<double>(gamma);
    down.rho = static_cast<double>(gamma * px / (c * c));
    down.e = static_cast<double>(e);
    down.shat = entropy(gas, down.gamma, down.rho);

    // Jump in the anchor rest frame.
    const xreal de = e - ea;
    const xreal vhat_mag = c * std::sqrt((px - pa) * de / ((px + ea) * (pa + e)));
    const xreal vhat = f == Family::One ? -vhat_mag : vhat_mag;
    const xreal s_rest = (e + pa) * vhat / de;
    const xreal va = anchor.v;
    down.v = static_cast<double>((va + vhat) / (1 + va * vhat / (c * c)));
    const double s = static_cast<double>((va + s_rest) / (1 + va * s_rest / (c * c)));
    return {down, s, f};
}

std::array<double, 3> hugoniot_residual(const Gas& gas, const FluidState& left,
                                        const FluidState& right, double s) {
    const double c = gas.units.c;
    const auto uL = conserved(left, c), uR = conserved(right, c);
    const auto FL = flux(left, c), FR = flux(right, c);
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const double scale = std::max({std::fabs(FL[i]), std::fabs(FR[i]), c * std::fabs(uL[i]),
                                       c * std::fabs(uR[i])});
        const double jump = s * (uR[i] - uL[i]) - (FR[i] - FL[i]);
        out[i] = scale > 0 ? jump / scale : 0.0;
    }
    return out;
}

double rest_frame_shock_speed(const Gas& gas, const FluidState& left, double s) {
    return compose_velocity(s, -left.v, gas.units.c);
}

double entropy_production(const Gas& gas, const FluidState& left, const FluidState& right,
                          double s) {
    const double sbar = rest_frame_shock_speed(gas, left, s) / gas.units.c;
    return -sbar * (right.shat - left.shat);
}

double entropy_production_closed_form(const Gas& gas, const FluidState& left,
                                      const FluidState& right, double s) {
    if (gas.kind != GasKind::Monatomic) {
        throw DomainError("closed-form entropy production is monatomic only");
    }
    const double sbar = rest_frame_shock_speed(gas, left, s) / gas.units.c;
    const xreal gL = left.gamma, gR = right.gamma;
    const xreal dr = detail::coefficients(gas.kind, gR).r - detail::coefficients(gas.kind, gL).r;
    const xreal k2_ratio = bessel_k_scaled_ext(2, gR) / bessel_k_scaled_ext(2, gL);
    const xreal log_phi = std::log(k2_ratio) + (gL - gR) + std::log(gL / gR);
    const xreal bracket = dr + log_phi + std::log(xreal(left.rho) / xreal(right.rho));
    return static_cast<double>(-sbar * bracket);
}

LaxResult lax_check(const Gas& gas, const FluidState& anchor, const ShockPoint& shock) {
    const double la = characteristic_speed(gas, anchor, shock.family);
    const double ld = characteristic_speed(gas, shock.state, shock.family);
    double g1, g2;
    if (shock.family == Family::One) {
        g1 = la - shock.s;
        g2 = shock.s - ld;
    } else {
        g1 = shock.s - la;
        g2 = ld - shock.s;
    }
    const double margin = std::min(g1, g2);
    const bool degenerate = std::fabs(g1) <= 1e-8 && std::fabs(g2) <= 1e-8;
    return {g1 > 0 && g2 > 0, margin, degenerate};
}

CurveRow curve_point(const Gas& gas, const FluidState& anchor, Family f, double p) {
    require_nonlinear(f);
    if (!(p > 0.0)) throw DomainError("curve pressure must be positive, got " + format17(p));
    if (p == anchor.p) {
        const double l = characteristic_speed(gas, anchor, f);
        return {anchor.p, anchor.v, anchor.shat, anchor.gamma, WaveKind::Anchor, l, l};
    }
    if (p > anchor.p) {
        const ShockPoint sp = shock_state(gas, anchor, f, p);
        return {sp.state.p, sp.state.v, sp.state.shat, sp.state.gamma, WaveKind::Shock, sp.s, sp.s};
    }
    const FluidState r = rarefaction_state(gas, anchor, f, p);
    const double la = characteristic_speed(gas, anchor, f);
    const double lr = characteristic_speed(gas, r, f);
    // Family 1 fans open left to right from the anchor, family 3 fans end at it.
    const double lo = f == Family::One ? la : lr;
    const double hi = f == Family::One ? lr : la;
    return {r.p, r.v, r.shat, r.gamma, WaveKind::Rarefaction, lo, hi};
}

CurveTable wave_curve(const Gas& gas, const FluidState& anchor, Family f,
                      const std::vector<double>& p_grid, int threads) {
    require_nonlinear(f);
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] > 0.0)) throw DomainError("p grid must be positive");
        if (i > 0 && !(p_grid[i] > p_grid[i - 1])) {
            throw DomainError("p grid must be strictly increasing");
        }
    }
    CurveTable table(p_grid.size());
    parallel_for(p_grid.size(), threads,
                 [&](std::size_t i) { table[i] = curve_point(gas, anchor, f, p_grid[i]); });
    return table;
}

}  // namespace synge
