#pragma once

#include <array>
#include <string>

#include "synge/bessel.hpp"
#include "synge/numerics.hpp"

namespace synge {

enum class GasKind { Monatomic, Diatomic };

/// Physical constants. With the defaults every formula is dimensionless.
struct Units {
    double c = 1.0;     ///< light speed
    double m = 1.0;     ///< particle rest mass
    double k_B = 1.0;   ///< Boltzmann constant
    double S0 = 0.0;    ///< entropy reference, absorbs the Planck-constant prefactor
};

/// Range of gamma inside which states are accepted.
struct GammaWindow {
    double lo = kBesselWindowLo;
    double hi = kBesselWindowHi;
    bool contains(double g) const { return g >= lo && g <= hi; }
};

/// Gas closure together with units and accuracy window.
struct Gas {
    GasKind kind = GasKind::Monatomic;
    Units units{};
    GammaWindow window{};

    Gas() = default;
    Gas(GasKind k) : kind(k) {}
    Gas(GasKind k, Units u, GammaWindow w = {}) : kind(k), units(u), window(w) {}
};

const char* to_string(GasKind kind);
/// Parses "monatomic" or "diatomic"; throws DomainError otherwise.
GasKind parse_gas_kind(const std::string& name);

/// Equilibrium point (gamma, rho) with derived quantities.
struct ThermoPoint {
    double gamma;
    double rho;
    double p;
    double e;
    double T;
    double shat;
};

/// Primitive hydrodynamic state (p, v, shat) with cached gamma, rho, e.
struct FluidState {
    double p = 0;
    double v = 0;
    double shat = 0;
    double gamma = 0;
    double rho = 0;
    double e = 0;
};

struct Primitive {
    double rho;
    double v;
    double p;
};

struct SpecificHeats {
    double c_V;
    double c_p;
};

/// e/p as a function of gamma.
double energy_ratio(const Gas& gas, double gamma);

/// de/dp at constant entropy.
double e_p(const Gas& gas, double gamma);

/// (e+p) e_pp - 2 e_p (e_p - 1) with the common 1/p factor cleared.
double gn_indicator(const Gas& gas, double gamma);

/// d ln p / d gamma at constant entropy.
double dlnp_dgamma(const Gas& gas, double gamma);

/// p(gamma, shat) along an isentrope.
double pressure_isentrope(const Gas& gas, double gamma, double shat);

/// Specific entropy shat = (m/k_B) S.
double entropy(const Gas& gas, double gamma, double rho);

/// Monatomic entropy written with K3/K2; differs from entropy() by a constant.
double entropy_k3_form(const Gas& gas, double gamma, double rho);

/// Inverse of pressure_isentrope in gamma.
double gamma_from(const Gas& gas, double p, double shat);

/// Rest-frame sound speed 1/sqrt(e_p), in units of c.
double rest_frame_speed(const Gas& gas, double gamma);

/// Specific heats per unit mass, in units of k_B/m.
SpecificHeats specific_heats(const Gas& gas, double gamma);

ThermoPoint thermo_point(const Gas& gas, double gamma, double rho);

FluidState state_from_primitive(const Gas& gas, double rho, double v, double p);
/// State on the isentrope shat at pressure p.
FluidState state_from_pressure(const Gas& gas, double p, double v, double shat);
/// State on the isentrope shat at coldness gamma.
FluidState state_from_gamma(const Gas& gas, double gamma, double v, double shat);
Primitive primitive_from_state(const FluidState& s);

/// Temperature m c^2 / (k_B gamma).
double temperature(const Gas& gas, double gamma);

/// Main field (1/T)((e+p)/rho - T S, Gamma v, Gamma/c).
std::array<double, 3> main_field(const Gas& gas, const FluidState& s);

/// Integrand of the Riemann-invariant integral in the gamma variable:
/// sqrt(e_p) / (e+p) dp = -G(gamma) d gamma along an isentrope.
double invariant_density(const Gas& gas, double gamma);

/// J(gamma) = int_0^p sqrt(e_p)/(e+p) dp along the isentrope through gamma.
/// Depends on gamma only.
double invariant_integral(const Gas& gas, double gamma);

/// Throws WindowError if gamma is outside the gas window.
void check_window(const Gas& gas, double gamma, const char* what);

namespace detail {

/// Gamma-only constitutive coefficients in extended precision.
struct Coefficients {
    xreal g;
    xreal q;     ///< K1/K2 (monatomic) or K0/K1 (diatomic)
    xreal d;     ///< 1 - q
    xreal r;     ///< e/p
    xreal L;     ///< d ln p / d gamma at fixed entropy
    xreal R1;    ///< dr/d gamma
    xreal ep;    ///< de/dp at fixed entropy
};

Coefficients coefficients(GasKind kind, xreal gamma);

/// ln p(gamma, shat) - ln c^2 - S0 + shat.
xreal log_pressure_shape(GasKind kind, xreal gamma);

/// G(gamma) without window checks.
xreal invariant_density(GasKind kind, xreal gamma);

/// Leading coefficient a0 of G ~ a0 gamma^{-3/2} as gamma -> infinity.
xreal invariant_density_leading(GasKind kind);

}  // namespace detail

}  // namespace synge
