#include "synge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "synge/error.hpp"

namespace synge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

xreal x2m1(const GammaPoint& p) { return p.d * p.d - 2 * p.d; }   // x^2 - 1
xreal y2m1(const GammaPoint& p) { return p.w * p.w - 2 * p.w; }   // y^2 - 1

// Monatomic B-lemma quantities.
xreal b1(const GammaPoint& p) {
    const xreal g = p.g, x = p.x;
    return g * g * x * x2m1(p) + 7 * g * x * x + 8 * x - 4 * g - 16 / g;
}
xreal b2(const GammaPoint& p) { return p.g * x2m1(p) + 2 * p.x - 8 / p.g; }
xreal b3(const GammaPoint& p) { return p.g * x2m1(p) + 4 * p.x; }

// Diatomic analogs.
xreal bb1(const GammaPoint& p) {
    const xreal g = p.g, y = p.y;
    return g * g * y * y2m1(p) + 5 * g * y * y - 4 * g - 16 / g;
}
xreal bb2(const GammaPoint& p) { return p.g * y2m1(p) - 8 / p.g; }
xreal bb3(const GammaPoint& p) { return p.g * y2m1(p) + 2 * p.y; }

xreal i1(const GammaPoint& p) {
    const xreal g = p.g, x = p.x, q = x2m1(p);
    return g * g * q * q + 4 * g * x * q - 9 * x * x - 33 * x / g + 12 + 12 / (g * g);
}

xreal i2(const GammaPoint& p) {
    const xreal g = p.g, y = p.y, q = y2m1(p);
    const xreal g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
    const xreal y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
    // The g^2 and 4g terms are grouped as g^2 (1 - y^2)^2 and 4 g y (y^2 - 1).
    return g2 * q * q + 4 * g * y * q + (12 + 12 / g2) * y4 + (63 / g + 96 / g3) * y3 +
           (-9 + 90 / g2 + 288 / g4) * y2 + (-52 / g - 12 / g3 + 384 / (g4 * g)) * y -
           52 / g2 - 72 / g4 + 192 / (g4 * g2);
}

xreal i3(const GammaPoint& p) {
    const xreal g = p.g, y = p.y, q = y2m1(p);
    return g * g * q * q - 11 * y * y - 9 * y / g + 10 + 12 / (g * g);
}

std::function<xreal(const GammaPoint&)> from_coefficients(
    GasKind kind, xreal (*f)(const detail::Coefficients&)) {
    return [kind, f](const GammaPoint& p) { return f(detail::coefficients(kind, p.g)); };
}

xreal neg_L(const detail::Coefficients& c) { return -c.L; }
xreal ep_minus_3(const detail::Coefficients& c) { return c.g * c.q + c.R1 / c.L; }
xreal sound_speed(const detail::Coefficients& c) {
    const xreal excess = c.g * c.q + c.R1 / c.L;   // e_p - 3
    const xreal pe = 1 / c.ep;
    return std::min(pe, excess / (3 * c.ep));
}
xreal c_v(const detail::Coefficients& c) { return c.r - c.g * c.R1; }

Interval all() { return {0, kInf, true, true}; }

}  // namespace

const char* to_string(Applicability a) {
    switch (a) {
        case Applicability::Monatomic: return "monatomic";
        case Applicability::Diatomic: return "diatomic";
        case Applicability::Bessel: return "bessel";
    }
    return "unknown";
}

GasFilter parse_gas_filter(const std::string& name) {
    if (name == "monatomic") return GasFilter::Monatomic;
    if (name == "diatomic") return GasFilter::Diatomic;
    if (name == "both") return GasFilter::Both;
    throw DomainError("unknown gas filter '" + name + "' (expected monatomic, diatomic or both)");
}

bool Interval::contains(double g) const {
    const bool above = lo_open ? g > lo : g >= lo;
    const bool below = hi_open ? g < hi : g <= hi;
    return above && below;
}

std::string Interval::describe() const {
    std::ostringstream s;
    s.precision(10);
    s << (lo_open ? "(" : "[") << lo << ", ";
    if (std::isinf(hi)) {
        s << "inf)";
    } else {
        s << hi << (hi_open ? ")" : "]");
    }
    return s.str();
}

GammaPoint gamma_point(xreal gamma) {
    const BesselCore c = bessel_core(gamma);
    GammaPoint p;
    p.g = gamma;
    p.w = c.w;
    p.y = 1 - c.w;
    const xreal den = 2 / gamma + p.y;
    p.x = 1 / den;
    p.d = (2 / gamma - c.w) / den;
    return p;
}

xreal gamma0() { return 2 * std::exp(-kEuler); }

xreal gamma1() { return (-9 + std::sqrt(xreal(129))) / 2; }

xreal i3_margin(xreal gamma) { return i3(gamma_point(gamma)); }

std::vector<Check> default_catalog() {
    using A = Applicability;
    const double g0 = static_cast<double>(gamma0());
    const double sqrt2 = std::sqrt(2.0);
    std::vector<Check> c;

    // Monatomic estimates.
    c.push_back({"imp-ine1", A::Monatomic, all(), "g^2 x^2 + 3 g x - g^2 - 3 < 0",
                 [](const GammaPoint& p) {
                     return -(p.g * p.g * x2m1(p) + 3 * p.g * p.x - 3);
                 }});
    c.push_back({"imp-ine2", A::Monatomic, all(), "g x^3 + 4 x^2 - g x - 1 < 0",
                 [](const GammaPoint& p) {
                     return -(p.g * p.x * x2m1(p) + 4 * p.x * p.x - 1);
                 }});
    c.push_back({"I1", A::Monatomic, all(), "I_1 > 0", i1});
    c.push_back({"I2", A::Monatomic, all(), "I_2 > 0 (K0/K1 form)", i2});
    c.push_back({"B1", A::Monatomic, all(), "B_1 < 0", [](const GammaPoint& p) { return -b1(p); }});
    c.push_back({"B2", A::Monatomic, all(), "B_2 < 0", [](const GammaPoint& p) { return -b2(p); }});
    c.push_back({"B3", A::Monatomic, all(), "B_3 > 0", b3});
    c.push_back({"B1-B2", A::Monatomic, all(), "B_1 - B_2 < 0",
                 [](const GammaPoint& p) { return b2(p) - b1(p); }});
    c.push_back({"B1-B2-B3", A::Monatomic, all(), "B_1 - B_2 - B_3 < 0",
                 [](const GammaPoint& p) { return b2(p) + b3(p) - b1(p); }});
    c.push_back({"B2+B3", A::Monatomic, all(), "B_2 + B_3 < 0",
                 [](const GammaPoint& p) { return -(b2(p) + b3(p)); }});

    // Diatomic estimates.
    c.push_back({"imp-inep", A::Diatomic, all(), "g^2 y^3 + 2 g y^2 - (g^2 + 2) y - g < 0",
                 [](const GammaPoint& p) {
                     return -(p.g * p.g * p.y * y2m1(p) + 2 * p.g * p.y * p.y - 2 * p.y - p.g);
                 }});
    c.push_back({"p-cV", A::Diatomic, all(), "g^2 y^2 + g y - g^2 - 3 < 0",
                 [](const GammaPoint& p) { return -(p.g * p.g * y2m1(p) + p.g * p.y - 3); }});
    c.push_back({"I3", A::Diatomic, all(), "I_3 > 0", i3});
    c.push_back({"Bbar1", A::Diatomic, all(), "Bbar_1 < 0",
                 [](const GammaPoint& p) { return -bb1(p); }});
    c.push_back({"Bbar2", A::Diatomic, all(), "Bbar_2 < 0",
                 [](const GammaPoint& p) { return -bb2(p); }});
    c.push_back({"Bbar3", A::Diatomic, all(), "Bbar_3 > 0", bb3});
    c.push_back({"Bbar1-Bbar2", A::Diatomic, all(), "Bbar_1 - Bbar_2 < 0",
                 [](const GammaPoint& p) { return bb2(p) - bb1(p); }});
    c.push_back({"Bbar1-Bbar2-Bbar3", A::Diatomic, all(), "Bbar_1 - Bbar_2 - Bbar_3 < 0",
                 [](const GammaPoint& p) { return bb2(p) + bb3(p) - bb1(p); }});
    c.push_back({"Bbar2+Bbar3", A::Diatomic, all(), "Bbar_2 + Bbar_3 < 0",
                 [](const GammaPoint& p) { return -(bb2(p) + bb3(p)); }});

    // K0/K1 bounds, written for w = 1 - K0/K1 so that large-gamma margins keep
    // their significant digits.
    c.push_back({"rough-lower", A::Bessel, {sqrt2, kInf, true, true}, "K0/K1 >= 1 - 1/(2g)",
                 [](const GammaPoint& p) { return 1 / (2 * p.g) - p.w; }});
    c.push_back({"rough-upper", A::Bessel, {sqrt2, kInf, true, true},
                 "K0/K1 <= 1 - 1/(2g) + 3/(8g^2) + 3/(16g^3)", [](const GammaPoint& p) {
                     const xreal u = 1 / p.g;
                     return p.w - u / 2 + 3 * u * u / 8 + 3 * u * u * u / 16;
                 }});
    c.push_back({"acurate-lower", A::Bessel, {2, kInf, true, true},
                 "K0/K1 >= 1 - 1/(2g) + 3/(8g^2) - 3/(8g^3) + 63/(128g^4) - 31/(20g^5)",
                 [](const GammaPoint& p) {
                     const xreal u = 1 / p.g;
                     const xreal tail =
                         u * (xreal(1) / 2 +
                              u * (xreal(-3) / 8 +
                                   u * (xreal(3) / 8 + u * (xreal(-63) / 128 + u * xreal(31) / 20))));
                     return tail - p.w;
                 }});
    c.push_back({"acurate-upper", A::Bessel, {2, kInf, true, true},
                 "K0/K1 <= 1 - 1/(2g) + 3/(8g^2) - 3/(8g^3) + 63/(128g^4) + 7/(8g^5)",
                 [](const GammaPoint& p) {
                     const xreal u = 1 / p.g;
                     const xreal tail =
                         u * (xreal(1) / 2 +
                              u * (xreal(-3) / 8 +
                                   u * (xreal(3) / 8 + u * (xreal(-63) / 128 - u * xreal(7) / 8))));
                     return p.w - tail;
                 }});
    c.push_back({"new1", A::Bessel, {g0, sqrt2, false, false}, "K0/K1 <= 1 - (g0 - 1)/g",
                 [](const GammaPoint& p) { return p.w - (gamma0() - 1) / p.g; }});
    c.push_back({"low1-lower", A::Bessel, {0, g0, true, false}, "K0/K1 >= g/(sqrt(g^2 + 1) + 1)",
                 [](const GammaPoint& p) {
                     return p.y - p.g / (std::sqrt(p.g * p.g + 1) + 1);
                 }});
    c.push_back({"low1-upper", A::Bessel, {0, g0, true, false},
                 "K0/K1 <= g (11/16 - ln(g/2) - C_E)", [](const GammaPoint& p) {
                     return p.g * (xreal(11) / 16 - (std::log(p.g / 2) + kEuler)) - p.y;
                 }});
    c.push_back({"low1-quadratic", A::Bessel, {0, g0, true, false}, "y^2 + 2y/g - 1 > 0",
                 [](const GammaPoint& p) { return p.y * p.y + 2 * p.y / p.g - 1; }});
    c.push_back({"K012-1", A::Bessel, all(), "K1^2 <= 3 K0 K2",
                 [](const GammaPoint& p) { return 3 * p.y / p.x - 1; }});
    c.push_back({"K012-2", A::Bessel, all(), "3y^2 + 6y/g - 1 >= 0",
                 [](const GammaPoint& p) { return 3 * p.y * p.y + 6 * p.y / p.g - 1; }});

    // Properties shared by both closures.
    for (GasKind kind : {GasKind::Monatomic, GasKind::Diatomic}) {
        const A a = kind == GasKind::Monatomic ? A::Monatomic : A::Diatomic;
        c.push_back({"inver", a, all(), "d ln p / d gamma |_S < 0", from_coefficients(kind, neg_L)});
        c.push_back({"speed", a, all(), "e_p > 3", from_coefficients(kind, ep_minus_3)});
        c.push_back({"cV", a, all(), "c_V > 0", from_coefficients(kind, c_v)});
        c.push_back(
            {"sound-speed", a, all(), "0 < p_e < 1/3", from_coefficients(kind, sound_speed)});
    }
    return c;
}

std::vector<double> split_points() {
    return {static_cast<double>(gamma0()), static_cast<double>(gamma1()), std::sqrt(2.0), 2.0,
            4.0};
}

std::vector<double> grid_points(const VerifyGrid& grid) {
    if (!(grid.gamma_min > 0) || !(grid.gamma_max > grid.gamma_min) || grid.points < 2) {
        throw DomainError("verify grid needs 0 < gamma_min < gamma_max and at least 2 points");
    }
    if (grid.gamma_min < kBesselWindowLo || grid.gamma_max > kBesselWindowHi) {
        throw WindowError("verify grid [" + format17(grid.gamma_min) + ", " +
                              format17(grid.gamma_max) + "] leaves the gamma window",
                          kBesselWindowLo, kBesselWindowHi);
    }
    std::vector<double> pts = grid.spacing == Spacing::Log
                                  ? log_grid(grid.gamma_min, grid.gamma_max, grid.points)
                                  : linear_grid(grid.gamma_min, grid.gamma_max, grid.points);
    if (grid.refine) {
        for (double s : split_points()) {
            for (double g : linear_grid(0.99 * s, 1.01 * s, 100)) {
                if (g >= grid.gamma_min && g <= grid.gamma_max) pts.push_back(g);
            }
            // The split point itself, so closed interval ends are exercised.
            if (s >= grid.gamma_min && s <= grid.gamma_max) pts.push_back(s);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }
    return pts;
}

std::size_t CheckReport::failed() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed(); }));
}

CheckReport run_checks(GasFilter filter, const VerifyGrid& grid, int threads,
                       const std::vector<Check>& catalog) {
    const std::vector<double> pts = grid_points(grid);
    std::vector<const Check*> active;
    for (const Check& c : catalog) {
        if (c.applies == Applicability::Monatomic && filter == GasFilter::Diatomic) continue;
        if (c.applies == Applicability::Diatomic && filter == GasFilter::Monatomic) continue;
        active.push_back(&c);
    }

    // margins[i][k]: check k at point i; NaN where the point is outside the domain.
    const std::size_t nc = active.size();
    std::vector<xreal> margins(pts.size() * nc, std::numeric_limits<xreal>::quiet_NaN());
    std::vector<char> inside(pts.size() * nc, 0);
    parallel_for(pts.size(), threads, [&](std::size_t i) {
        const GammaPoint gp = gamma_point(pts[i]);
        for (std::size_t k = 0; k < nc; ++k) {
            if (!active[k]->domain.contains(pts[i])) continue;
            inside[i * nc + k] = 1;
            margins[i * nc + k] = active[k]->margin(gp);
        }
    });

    CheckReport report;
    report.grid = grid;
    report.grid_points = pts.size();
    for (std::size_t k = 0; k < nc; ++k) {
        CheckResult r;
        r.id = active[k]->id;
        r.applies = active[k]->applies;
        r.domain = active[k]->domain.describe();
        r.statement = active[k]->statement;
        bool first = true;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!inside[i * nc + k]) continue;
            const xreal m = margins[i * nc + k];
            ++r.points;
            const bool ok = m > 0;
            if (!ok) ++r.violations;
            if (first || !(m >= r.worst_margin) ) {
                r.worst_margin = static_cast<double>(m);
                r.worst_gamma = pts[i];
                first = false;
            }
        }
        report.results.push_back(r);
    }
    return report;
}

std::string format_table(const CheckReport& report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-20s %-10s %-26s %7s %-24s %-24s %s\n", "check", "gas",
                  "domain", "points", "worst_gamma", "worst_margin", "status");
    out << line;
    for (const CheckResult& r : report.results) {
        std::snprintf(line, sizeof line, "%-20s %-10s %-26s %7zu %-24.17g %-24.17g %s\n",
                      r.id.c_str(), to_string(r.applies), r.domain.c_str(), r.points,
                      r.worst_gamma, r.worst_margin, r.passed() ? "PASS" : "FAIL");
        out << line;
    }
    std::snprintf(line, sizeof line, "%zu checks, %zu failed, %zu grid points\n",
                  report.results.size(), report.failed(), report.grid_points);
    out << line;
    return out.str();
}

}  // namespace synge
