#include <doctest.h>

#include <cmath>

#include "oracles/eos_oracle.hpp"
#include "oracles/finite_difference.hpp"
#include "synge/eos.hpp"
#include "synge/error.hpp"

using namespace synge;

namespace {

const Gas kMono{GasKind::Monatomic};
const Gas kDia{GasKind::Diatomic};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

oracle::Eos brute(const Gas& gas) { return {gas.kind == GasKind::Monatomic}; }

}  // namespace

TEST_CASE("energy ratio limits") {
    CHECK(std::fabs(energy_ratio(kMono, 1e-6) - 3) < 1e-3);
    CHECK(std::fabs(energy_ratio(kDia, 1e-6) - 3) < 1e-3);
    CHECK(std::fabs(energy_ratio(kMono, 1e4) - 1e4 - 1.5) < 1e-3);
    CHECK(std::fabs(energy_ratio(kDia, 1e4) - 1e4 - 2.5) < 1e-3);
}

TEST_CASE("energy ratio against Boost ratios") {
    for (const Gas& gas : {kMono, kDia}) {
        const auto o = brute(gas);
        for (double g : log_grid(1e-3, 500, 60)) CHECK(rel(energy_ratio(gas, g), o.r(g)) < 1e-13);
    }
}

TEST_CASE("e_p limits, bound and finite differences") {
    CHECK(std::fabs(e_p(kMono, 1e-6) - 3) < 1e-3);
    for (const Gas& gas : {kMono, kDia}) {
        for (double g : log_grid(1e-6, 1e4, 400)) CHECK(e_p(gas, g) > 3);
        for (double g : {0.1, 1.0, 10.0}) {
            CHECK(rel(e_p(gas, g), oracle::fd_e_p(gas, g)) < 1e-6);
            CHECK(rel(e_p(gas, g), static_cast<double>(brute(gas).e_p(g))) < 1e-9);
        }
    }
}

TEST_CASE("genuine nonlinearity indicator") {
    for (const Gas& gas : {kMono, kDia}) {
        for (double g : {1e-6, 0.1, 1.0, 10.0}) CHECK(gn_indicator(gas, g) < 0);
        for (double g : {0.1, 1.0, 10.0}) {
            INFO(to_string(gas.kind) << " g=" << g);
            CHECK(rel(gn_indicator(gas, g), oracle::fd_gn(gas, g)) < 1e-5);
        }
        for (double g : log_grid(1e-6, 1e4, 300)) CHECK(gn_indicator(gas, g) < 0);
    }
}

TEST_CASE("pressure on the isentrope matches the entropy definition") {
    for (const Gas& gas : {kMono, kDia}) {
        const auto o = brute(gas);
        for (double g : {1e-3, 0.5, 1.0, 30.0, 400.0}) {
            for (double s : {-2.0, 0.0, 1.5}) {
                CHECK(rel(pressure_isentrope(gas, g, s), static_cast<double>(o.pressure(g, s))) < 1e-12);
            }
        }
    }
}

TEST_CASE("gamma_from") {
    CHECK(std::fabs(gamma_from(kMono, pressure_isentrope(kMono, 1.0, 0), 0) - 1.0) < 1e-10);
    const auto o = brute(kDia);
    for (double p : {1e-3, 0.1, 1.0, 7.0}) {
        for (double s : {-1.0, 0.0, 2.0}) {
            const double ref = static_cast<double>(o.gamma_of(p, s, 1e-14L));
            CHECK(rel(gamma_from(kDia, p, s), ref) < 1e-12);
        }
    }
    for (const Gas& gas : {kMono, kDia}) {
        for (double g : log_grid(1e-5, 5e3, 50)) {
            CHECK(rel(gamma_from(gas, pressure_isentrope(gas, g, 0.3), 0.3), g) < 1e-12);
        }
    }
    CHECK_THROWS_AS(gamma_from(kMono, -1.0, 0), DomainError);
    CHECK_THROWS_AS(gamma_from(kMono, 1e300, 0), WindowError);
    Gas narrow = kMono;
    narrow.window = {0.5, 2.0};
    CHECK_THROWS_AS(gamma_from(narrow, pressure_isentrope(kMono, 10, 0), 0), WindowError);
}

TEST_CASE("states from primitives") {
    const FluidState a = state_from_primitive(kMono, 1, 0, 0.5);
    CHECK(a.gamma == 2);
    const FluidState b = state_from_primitive(kMono, 1, 0.9, 0.1);
    CHECK(b.gamma == doctest::Approx(10).epsilon(1e-15));
    CHECK_THROWS_AS(state_from_primitive(kMono, 1, 1.0, 1), DomainError);
    CHECK_THROWS_AS(state_from_primitive(kMono, -1, 0, 1), DomainError);
    CHECK_THROWS_AS(state_from_primitive(kMono, 1, 0, 1e-9), WindowError);
    for (const Gas& gas : {kMono, kDia}) {
        const FluidState s = state_from_primitive(gas, 0.7, -0.2, 0.3);
        const FluidState t = state_from_pressure(gas, s.p, s.v, s.shat);
        CHECK(rel(t.gamma, s.gamma) < 1e-10);
        CHECK(rel(t.rho, s.rho) < 1e-10);
        CHECK(rel(t.e, s.e) < 1e-10);
        const FluidState u = state_from_gamma(gas, s.gamma, s.v, s.shat);
        CHECK(rel(u.p, s.p) < 1e-10);
        const Primitive prim = primitive_from_state(s);
        CHECK(prim.rho == 0.7);
        CHECK(prim.p == 0.3);
    }
}

TEST_CASE("units") {
    Gas gas{GasKind::Monatomic, Units{2.0, 1.0, 1.0, 0.0}};
    const FluidState s = state_from_primitive(gas, 1, 1.5, 0.5);
    CHECK(s.gamma == 8);
    CHECK_THROWS_AS(state_from_primitive(gas, 1, 2.0, 0.5), DomainError);
    CHECK(temperature(gas, 8) == 0.5);
    const ThermoPoint t = thermo_point(kMono, 2, 3);
    CHECK(t.p == 1.5);
    CHECK(t.T == 0.5);
    CHECK(t.e > 3 * t.p);
}

TEST_CASE("sound speed and heats") {
    for (const Gas& gas : {kMono, kDia}) {
        CHECK(std::fabs(rest_frame_speed(gas, 1e-6) - 1 / std::sqrt(3.0)) < 1e-3);
        double prev = 1;
        for (double g : log_grid(1e-6, 1e4, 1000)) {
            const double l = rest_frame_speed(gas, g);
            CHECK(l < prev);
            prev = l;
        }
    }
    CHECK(std::fabs(specific_heats(kMono, 1e4).c_V - 1.5) < 1e-2);
    CHECK(std::fabs(specific_heats(kDia, 1e4).c_V - 2.5) < 1e-2);
    for (double g : log_grid(1e-6, 1e4, 200)) {
        const SpecificHeats h = specific_heats(kDia, g);
        CHECK(h.c_V > 0);
        CHECK(h.c_p - h.c_V == doctest::Approx(1.0));
    }
}

TEST_CASE("entropy forms") {
    for (const Gas& gas : {kMono, kDia}) {
        const auto o = brute(gas);
        for (double g : {0.01, 1.0, 50.0}) {
            CHECK(std::fabs(entropy(gas, g, 2.0) - static_cast<double>(o.entropy(g, 2.0))) < 1e-12);
        }
    }
    const double c0 = entropy_k3_form(kMono, 1.0, 1.0) - entropy(kMono, 1.0, 1.0);
    for (double g : {0.01, 0.3, 4.0, 80.0}) {
        CHECK(entropy_k3_form(kMono, g, 0.4) - entropy(kMono, g, 0.4) == doctest::Approx(c0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(entropy_k3_form(kDia, 1.0, 1.0), DomainError);
}

TEST_CASE("invariant integral: gamma quadrature vs pressure quadrature") {
    for (const Gas& gas : {kMono, kDia}) {
        const auto o = brute(gas);
        // The oracle's unscaled Bessel values limit its tail nodes to gamma <~ 1e4.
        for (double g : {0.1, 0.5, 1.0, 2.0}) {
            const double p = pressure_isentrope(gas, g, 0);
            const double ref = static_cast<double>(oracle::invariant_j(o, p, 0));
            INFO(to_string(gas.kind) << " g=" << g);
            CHECK(std::fabs(invariant_integral(gas, g) - ref) < 1e-7);
        }
        double prev = 0;
        for (double g : log_grid(1e4, 1e-6, 40)) {
            const double j = invariant_integral(gas, g);
            CHECK(j > prev);
            prev = j;
        }
    }
}

TEST_CASE("main field") {
    const FluidState s = state_from_primitive(kMono, 1, 0.5, 1);
    const auto u = main_field(kMono, s);
    const double lorentz = 1 / std::sqrt(0.75);
    CHECK(u[1] == doctest::Approx(lorentz * 0.5 / temperature(kMono, s.gamma)));
    CHECK(u[2] == doctest::Approx(lorentz / temperature(kMono, s.gamma)));
}

TEST_CASE("gas names") {
    CHECK(parse_gas_kind("monatomic") == GasKind::Monatomic);
    CHECK(parse_gas_kind("diatomic") == GasKind::Diatomic);
    CHECK_THROWS_AS(parse_gas_kind("triatomic"), DomainError);
    CHECK_THROWS_AS(energy_ratio(kMono, 0.0), DomainError);
}
