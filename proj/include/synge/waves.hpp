#pragma once

#include <array>
#include <string>
#include <vector>

#include "synge/eos.hpp"

namespace synge {

/// Characteristic family. 1 and 3 are genuinely nonlinear, 2 is the contact.
enum class Family { One = 1, Two = 2, Three = 3 };

/// Throws DomainError unless i is 1, 2 or 3.
Family family_from_index(int i);
inline int index(Family f) { return static_cast<int>(f); }

enum class WaveKind { Shock, Rarefaction, Contact, VacuumEdge, Anchor };
const char* to_string(WaveKind kind);

struct Eigenvalues {
    double l1;
    double l2;
    double l3;
};

Eigenvalues eigenvalues(const Gas& gas, const FluidState& s);

/// lambda_1, lambda_2 or lambda_3 of the state.
double characteristic_speed(const Gas& gas, const FluidState& s, Family f);

struct RiemannInvariants {
    double rbar;   ///< constant across 1-rarefactions
    double sbar;   ///< constant across 3-rarefactions
};

/// rbar, sbar = atanh(v/c) +- J(gamma).
RiemannInvariants riemann_invariants(const Gas& gas, const FluidState& s);

/// Rarefaction from `anchor` to pressure p <= p_anchor.
/// Family 1 is anchored at the left state, family 3 at the right state.
FluidState rarefaction_state(const Gas& gas, const FluidState& anchor, Family f, double p);

/// Same curve parametrized by gamma >= gamma_anchor.
FluidState rarefaction_state_gamma(const Gas& gas, const FluidState& anchor, Family f,
                                   double gamma);

/// Shock from `anchor` to downstream pressure p >= p_anchor.
struct ShockPoint {
    FluidState state;   ///< downstream state
    double s;           ///< lab-frame shock speed
    Family family;
};

ShockPoint shock_state(const Gas& gas, const FluidState& anchor, Family f, double p);

/// Relative jump residuals s[[u]] - [[F(u)]] of the three conservation laws.
std::array<double, 3> hugoniot_residual(const Gas& gas, const FluidState& left,
                                        const FluidState& right, double s);

/// Entropy production -(s/c)(shat_R - shat_L) per unit left density, with s
/// measured in the rest frame of the left state. `left`/`right` are the
/// physical sides of the jump.
double entropy_production(const Gas& gas, const FluidState& left, const FluidState& right,
                          double s);

/// Monatomic closed form in terms of r(gamma) and K2. Throws for diatomic.
double entropy_production_closed_form(const Gas& gas, const FluidState& left,
                                      const FluidState& right, double s);

/// Shock speed seen from the rest frame of `left`.
double rest_frame_shock_speed(const Gas& gas, const FluidState& left, double s);

struct LaxResult {
    bool holds;        ///< both inequalities strict
    double margin;     ///< smaller of the two inequality gaps
    bool degenerate;   ///< both gaps within 1e-8 of zero (zero-strength limit)
};

/// lambda(downstream) < s < lambda(anchor) for family 1, mirrored for family 3.
LaxResult lax_check(const Gas& gas, const FluidState& anchor, const ShockPoint& shock);

/// One point on a composite wave curve.
struct CurveRow {
    double p;
    double v;
    double shat;
    double gamma;
    WaveKind kind;
    double speed_lo;   ///< left edge of the wave (shock speed for shocks)
    double speed_hi;   ///< right edge of the wave
};

using CurveTable = std::vector<CurveRow>;

/// Composite curve point: rarefaction for p < p_anchor, shock for p > p_anchor.
CurveRow curve_point(const Gas& gas, const FluidState& anchor, Family f, double p);

/// Tabulates curve_point over a sorted positive grid.
CurveTable wave_curve(const Gas& gas, const FluidState& anchor, Family f,
                      const std::vector<double>& p_grid, int threads = 1);

}  // namespace synge
