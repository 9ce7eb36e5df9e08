#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synge/waves.hpp"

namespace synge {

struct RiemannInput {
    Gas gas;
    FluidState left;
    FluidState right;
};

/// Builds the input from primitive (rho, v, p) data on both sides.
RiemannInput make_input(const Gas& gas, const Primitive& left, const Primitive& right);

/// One elementary wave of the solution.
struct Wave {
    int family;       ///< 1, 2 or 3
    WaveKind kind;
    double speed;     ///< shock, contact and vacuum edge speed; NaN for fans
    double head;      ///< fan head (first edge the fluid meets); NaN otherwise
    double tail;      ///< fan tail; NaN otherwise
    /// Leftmost and rightmost xi covered by the wave.
    double left_edge() const;
    double right_edge() const;
};

struct RiemannSolution {
    RiemannInput input;
    bool vacuum = false;
    bool boundary = false;          ///< |rbar_L - sbar_R| within the 1e-10 band
    std::vector<Wave> waves;        ///< ordered left to right
    std::optional<FluidState> u_ml;
    std::optional<FluidState> u_mr;
    std::optional<double> p_m;
    std::optional<double> v_m;
    double residual = 0;            ///< |f1(p_M) - f3(p_M)|
    RiemannInvariants inv_left{};
    RiemannInvariants inv_right{};
};

enum class CurveSide { OneFromLeft, ThreeFromRight };

/// f1(p) from the left state or f3(p) from the right state.
double curve_velocity(const RiemannInput& in, CurveSide side, double p);

/// Exact solution of the Riemann problem.
RiemannSolution solve(const RiemannInput& in);

enum class Region { Left, Fan1, MiddleLeft, MiddleRight, Fan3, Right, Vacuum };
const char* to_string(Region r);

/// State at xi = x/t. Vacuum markers have p = rho = e = 0, gamma = inf,
/// shat = NaN and v = xi.
struct SampleResult {
    FluidState state;
    Region region;
    bool vacuum_marker;
};

SampleResult sample(const RiemannSolution& sol, double xi);

/// The vacuum marker at xi.
FluidState vacuum_marker(double xi);

}  // namespace synge
