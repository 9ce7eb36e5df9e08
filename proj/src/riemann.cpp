#include "synge/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "synge/error.hpp"

namespace synge {

namespace {

constexpr double kVacuumBand = 1e-10;
constexpr double kZeroStrength = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same_state(const FluidState& a, const FluidState& b) {
    return a.p == b.p && a.v == b.v && a.shat == b.shat && a.gamma == b.gamma;
}

FluidState curve_state(const Gas& gas, const FluidState& anchor, Family f, double p) {
    if (p > anchor.p) return shock_state(gas, anchor, f, p).state;
    return rarefaction_state(gas, anchor, f, p);
}

Wave fan(int family, double head, double tail) {
    return {family, WaveKind::Rarefaction, kNaN, head, tail};
}

Wave jump(int family, WaveKind kind, double speed) { return {family, kind, speed, kNaN, kNaN}; }

// Point inside a rarefaction fan with lambda_f(state) = xi. The curve is
// parametrized by gamma on [g_lo, g_hi]; l_lo, l_hi are the speeds at the ends.
FluidState fan_state(const Gas& gas, const FluidState& anchor, Family f, double g_lo,
                     double g_hi, double l_lo, double l_hi, double xi) {
    auto residual = [&](double g) {
        return characteristic_speed(gas, rarefaction_state_gamma(gas, anchor, f, g), f) - xi;
    };
    const double g = find_root(residual, g_lo, g_hi, l_lo - xi, l_hi - xi).x;
    return rarefaction_state_gamma(gas, anchor, f, g);
}

}  // namespace

double Wave::left_edge() const {
    return kind == WaveKind::Rarefaction ? std::min(head, tail) : speed;
}

double Wave::right_edge() const {
    return kind == WaveKind::Rarefaction ? std::max(head, tail) : speed;
}

RiemannInput make_input(const Gas& gas, const Primitive& left, const Primitive& right) {
    return {gas, state_from_primitive(gas, left.rho, left.v, left.p),
            state_from_primitive(gas, right.rho, right.v, right.p)};
}

double curve_velocity(const RiemannInput& in, CurveSide side, double p) {
    if (!(p > 0.0)) throw DomainError("curve pressure must be positive, got " + format17(p));
    if (side == CurveSide::OneFromLeft) return curve_state(in.gas, in.left, Family::One, p).v;
    return curve_state(in.gas, in.right, Family::Three, p).v;
}

RiemannSolution solve(const RiemannInput& in) {
    const Gas& gas = in.gas;
    const FluidState& L = in.left;
    const FluidState& R = in.right;
    const double c = gas.units.c;
    RiemannSolution sol;
    sol.input = in;
    sol.inv_left = riemann_invariants(gas, L);
    sol.inv_right = riemann_invariants(gas, R);

    if (same_state(L, R)) {
        sol.p_m = L.p;
        sol.v_m = L.v;
        sol.u_ml = L;
        sol.u_mr = R;
        return sol;
    }

    const double gap = sol.inv_left.rbar - sol.inv_right.sbar;
    sol.boundary = std::fabs(gap) <= kVacuumBand;
    if (gap <= kVacuumBand) {
        sol.vacuum = true;
        const double tail1 = c * std::tanh(sol.inv_left.rbar);
        const double tail3 = c * std::tanh(sol.inv_right.sbar);
        sol.waves.push_back(fan(1, characteristic_speed(gas, L, Family::One), tail1));
        sol.waves.push_back(jump(1, WaveKind::VacuumEdge, tail1));
        sol.waves.push_back(jump(3, WaveKind::VacuumEdge, tail3));
        sol.waves.push_back(fan(3, characteristic_speed(gas, R, Family::Three), tail3));
        return sol;
    }

    auto phi = [&](double p) {
        return curve_state(gas, L, Family::One, p).v - curve_state(gas, R, Family::Three, p).v;
    };

    // Below p_floor one of the rarefaction branches leaves the gamma window.
    const double p_floor = std::max(pressure_isentrope(gas, gas.window.hi, L.shat),
                                    pressure_isentrope(gas, gas.window.hi, R.shat)) *
                           (1 + 1e-12);
    std::ostringstream trace;
    trace.precision(17);
    double p_lo = std::max(std::min(L.p, R.p) * 1e-6, p_floor);
    double f_lo = phi(p_lo);
    trace << " [" << p_lo << ": " << f_lo << "]";
    while (f_lo < 0) {
        if (p_lo <= p_floor) {
            throw WindowError("intermediate pressure lies below the gamma window; bracket trace" +
                                  trace.str(),
                              gas.window.lo, gas.window.hi);
        }
        p_lo = std::max(p_lo * 1e-3, p_floor);
        f_lo = phi(p_lo);
        trace << " [" << p_lo << ": " << f_lo << "]";
    }
    double p_hi = std::max(L.p, R.p);
    double f_hi = phi(p_hi);
    trace << " [" << p_hi << ": " << f_hi << "]";
    for (int k = 0; f_hi > 0; ++k) {
        if (k > 400) throw BracketError("no sign change of f1 - f3; bracket trace" + trace.str());
        p_lo = p_hi;
        f_lo = f_hi;
        p_hi *= 2;
        f_hi = phi(p_hi);
        trace << " [" << p_hi << ": " << f_hi << "]";
    }
    const double p_m = find_root(phi, p_lo, p_hi, f_lo, f_hi).x;

    FluidState ml = curve_state(gas, L, Family::One, p_m);
    FluidState mr = curve_state(gas, R, Family::Three, p_m);
    const double v_m = 0.5 * (ml.v + mr.v);
    sol.residual = std::fabs(ml.v - mr.v);
    if (!(sol.residual < 1e-10 * std::max(1.0, std::fabs(v_m)))) {
        throw ToleranceError("wave-curve intersection residual " + format17(sol.residual) +
                             " exceeds tolerance");
    }
    ml.v = v_m;
    mr.v = v_m;
    sol.p_m = p_m;
    sol.v_m = v_m;
    sol.u_ml = ml;
    sol.u_mr = mr;

    if (std::fabs(L.p - p_m) >= kZeroStrength * p_m) {
        if (p_m > L.p) {
            sol.waves.push_back(jump(1, WaveKind::Shock, shock_state(gas, L, Family::One, p_m).s));
        } else {
            sol.waves.push_back(fan(1, characteristic_speed(gas, L, Family::One),
                                    characteristic_speed(gas, ml, Family::One)));
        }
    }
    if (std::fabs(ml.shat - mr.shat) > kZeroStrength * std::max(1.0, std::fabs(ml.shat))) {
        sol.waves.push_back(jump(2, WaveKind::Contact, v_m));
    }
    if (std::fabs(R.p - p_m) >= kZeroStrength * p_m) {
        if (p_m > R.p) {
            sol.waves.push_back(
                jump(3, WaveKind::Shock, shock_state(gas, R, Family::Three, p_m).s));
        } else {
            sol.waves.push_back(fan(3, characteristic_speed(gas, R, Family::Three),
                                    characteristic_speed(gas, mr, Family::Three)));
        }
    }
    return sol;
}

const char* to_string(Region r) {
    switch (r) {
        case Region::Left: return "left";
        case Region::Fan1: return "fan1";
        case Region::MiddleLeft: return "middle_left";
        case Region::MiddleRight: return "middle_right";
        case Region::Fan3: return "fan3";
        case Region::Right: return "right";
        case Region::Vacuum: return "vacuum";
    }
    return "unknown";
}

FluidState vacuum_marker(double xi) {
    FluidState s;
    s.p = 0;
    s.rho = 0;
    s.e = 0;
    s.v = xi;
    s.gamma = std::numeric_limits<double>::infinity();
    s.shat = kNaN;
    return s;
}

SampleResult sample(const RiemannSolution& sol, double xi) {
    const Gas& gas = sol.input.gas;
    const FluidState& L = sol.input.left;
    const FluidState& R = sol.input.right;

    if (sol.vacuum) {
        const Wave& w1 = sol.waves.front();
        const Wave& w3 = sol.waves.back();
        if (xi < w1.head) return {L, Region::Left, false};
        if (xi < w1.tail) {
            // Fan part inside the window; the remainder is filled by markers.
            const FluidState edge =
                rarefaction_state_gamma(gas, L, Family::One, gas.window.hi);
            const double l_edge = characteristic_speed(gas, edge, Family::One);
            if (xi <= l_edge) {
                return {fan_state(gas, L, Family::One, L.gamma, gas.window.hi, w1.head, l_edge,
                                  xi),
                        Region::Fan1, false};
            }
            return {vacuum_marker(xi), Region::Fan1, true};
        }
        if (xi <= w3.tail) return {vacuum_marker(xi), Region::Vacuum, true};
        if (xi < w3.head) {
            const FluidState edge =
                rarefaction_state_gamma(gas, R, Family::Three, gas.window.hi);
            const double l_edge = characteristic_speed(gas, edge, Family::Three);
            if (xi >= l_edge) {
                return {fan_state(gas, R, Family::Three, R.gamma, gas.window.hi, w3.head, l_edge,
                                  xi),
                        Region::Fan3, false};
            }
            return {vacuum_marker(xi), Region::Fan3, true};
        }
        return {R, Region::Right, false};
    }

    const double v_m = *sol.v_m;
    const Wave* w1 = nullptr;
    const Wave* w3 = nullptr;
    for (const Wave& w : sol.waves) {
        if (w.family == 1) w1 = &w;
        if (w.family == 3) w3 = &w;
    }

    if (xi < v_m) {
        if (!w1) return {L, Region::Left, false};
        if (w1->kind == WaveKind::Shock) {
            if (xi < w1->speed) return {L, Region::Left, false};
            return {*sol.u_ml, Region::MiddleLeft, false};
        }
        if (xi < w1->head) return {L, Region::Left, false};
        if (xi < w1->tail) {
            return {fan_state(gas, L, Family::One, L.gamma, sol.u_ml->gamma, w1->head, w1->tail,
                              xi),
                    Region::Fan1, false};
        }
        return {*sol.u_ml, Region::MiddleLeft, false};
    }

    if (!w3) return {R, Region::Right, false};
    if (w3->kind == WaveKind::Shock) {
        if (xi >= w3->speed) return {R, Region::Right, false};
        return {*sol.u_mr, Region::MiddleRight, false};
    }
    if (xi >= w3->head) return {R, Region::Right, false};
    if (xi > w3->tail) {
        return {fan_state(gas, R, Family::Three, R.gamma, sol.u_mr->gamma, w3->head, w3->tail, xi),
                Region::Fan3, false};
    }
    return {*sol.u_mr, Region::MiddleRight, false};
}

}  // namespace synge
