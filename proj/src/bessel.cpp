#include "synge/bessel.hpp"

#include <cmath>
#include <string>

#include "synge/error.hpp"

namespace synge {

namespace {

constexpr xreal kEps = 1e-21L;
constexpr int kSeriesCap = 60;

void require_positive(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("Bessel argument must be positive and finite, got " + format17(gamma));
    }
}

}  // namespace

BesselOrder::BesselOrder(int j) : j_(j) {
    if (j < 0 || j > 3) throw DomainError("Bessel order must be in 0..3, got " + std::to_string(j));
}

namespace detail {

// Power/log series, K0 and K1 with psi(m+1) = -C_E + H_m.
BesselCore core_series(xreal g) {
    const xreal h = g / 2;
    const xreal lh = std::log(h);
    const xreal h2 = h * h;
    xreal k0 = 0, k1 = 1 / g;
    xreal t0 = 1;      // (g/2)^{2m} / (m!)^2
    xreal t1 = h;      // (g/2)^{2m+1} / (m! (m+1)!)
    xreal psi_m1 = -kEuler;             // psi(m+1)
    xreal psi_m2 = -kEuler + 1;         // psi(m+2)
    for (int m = 0; m < kSeriesCap; ++m) {
        const xreal d0 = -t0 * (lh - psi_m1);
        const xreal d1 = t1 * (lh - (psi_m1 + psi_m2) / 2);
        k0 += d0;
        k1 += d1;
        if (std::fabs(d0) < kEps * std::fabs(k0) && std::fabs(d1) < kEps * std::fabs(k1)) break;
        t0 *= h2 / ((m + 1) * xreal(m + 1));
        t1 *= h2 / ((m + 1) * xreal(m + 2));
        psi_m1 = psi_m2;
        psi_m2 += 1 / xreal(m + 2);
    }
    const xreal eg = std::exp(g);
    return {k0 * eg, k1 * eg, 1 - k0 / k1};
}

// Steed's continued fraction (Temme's CF2) for order 0, scaled by e^x.
BesselCore core_continued_fraction(xreal x) {
    const xreal a1 = 0.25L;
    xreal b = 2 * (1 + x);
    xreal d = 1 / b;
    xreal h = d, delh = d;
    xreal q1 = 0, q2 = 1;
    xreal q = a1, c = a1, a = -a1;
    xreal s = 1 + q * delh;
    int i = 1;
    for (; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1);
        const xreal qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2;
        d = 1 / (b + a * d);
        delh = (b * d - 1) * delh;
        h += delh;
        const xreal dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < kEps && std::fabs(delh / h) < kEps) break;
    }
    if (i >= 100000) throw ConvergenceError("Bessel continued fraction did not converge");
    h *= a1;
    const xreal k0s = std::sqrt(kPi / (2 * x)) / s;
    const xreal num = x + 0.5L - h;
    return {k0s, k0s * num / x, (0.5L - h) / num};
}

// Asymptotic expansion truncated at its smallest term.
BesselCore core_asymptotic(xreal g) {
    const xreal u = 1 / g;
    xreal s0 = 1, s1 = 1, sd = 0;  // sum A0, sum A1, sum (A1 - A0)
    xreal t0 = 1, t1 = 1;
    xreal last = 1;
    for (int m = 1; m < 400; ++m) {
        const xreal k = 2 * m - 1;
        const xreal n0 = t0 * (-k * k) / (8 * m) * u;
        const xreal n1 = t1 * (4 - k * k) / (8 * m) * u;
        const xreal mag = std::fabs(n1);
        if (mag >= last) break;
        t0 = n0;
        t1 = n1;
        s0 += t0;
        s1 += t1;
        sd += t1 - t0;
        last = mag;
        if (mag < kEps * 1e-3L) break;
    }
    const xreal pre = std::sqrt(kPi / (2 * g));
    return {pre * s0, pre * s1, sd / s1};
}

}  // namespace detail

BesselCore bessel_core(xreal gamma) {
    if (gamma <= detail::kSeriesMax) return detail::core_series(gamma);
    if (gamma < detail::kAsymptoticMin) return detail::core_continued_fraction(gamma);
    return detail::core_asymptotic(gamma);
}

xreal bessel_k_scaled_ext(int j, xreal gamma) {
    BesselOrder order(j);
    const BesselCore c = bessel_core(gamma);
    if (order.value() == 0) return c.k0s;
    if (order.value() == 1) return c.k1s;
    const xreal k2 = 2 * c.k1s / gamma + c.k0s;
    if (order.value() == 2) return k2;
    return 4 * k2 / gamma + c.k1s;
}

xreal asymptotic_coefficient(int j, int m) {
    if (m < 0) throw DomainError("coefficient index must be non-negative");
    xreal a = 1;
    const xreal mu = 4 * xreal(j) * j;
    for (int k = 1; k <= m; ++k) {
        const xreal odd = 2 * k - 1;
        a *= (mu - odd * odd) / (8 * xreal(k));
    }
    return a;
}

xreal remainder_bound(int j, int n, xreal gamma) {
    return 2 * std::exp((xreal(j) * j - 0.25L) / gamma) * std::fabs(asymptotic_coefficient(j, n));
}

namespace {

struct Quad {
    double k[4];
};

// K0..K3 in double; the recurrence is applied in double so that it holds
// exactly for the returned values.
Quad scaled_values(double gamma) {
    const BesselCore c = bessel_core(gamma);
    Quad q;
    q.k[0] = static_cast<double>(c.k0s);
    q.k[1] = static_cast<double>(c.k1s);
    q.k[2] = 2.0 * q.k[1] / gamma + q.k[0];
    q.k[3] = 4.0 * q.k[2] / gamma + q.k[1];
    return q;
}

Quad unscaled_values(double gamma) {
    const BesselCore c = bessel_core(gamma);
    const xreal e = std::exp(-xreal(gamma));
    Quad q;
    q.k[0] = static_cast<double>(c.k0s * e);
    q.k[1] = static_cast<double>(c.k1s * e);
    q.k[2] = 2.0 * q.k[1] / gamma + q.k[0];
    q.k[3] = 4.0 * q.k[2] / gamma + q.k[1];
    return q;
}

}  // namespace

double bessel_k(BesselOrder order, double gamma) {
    require_positive(gamma);
    return unscaled_values(gamma).k[order.value()];
}

double bessel_k_scaled(BesselOrder order, double gamma) {
    require_positive(gamma);
    return scaled_values(gamma).k[order.value()];
}

BesselEval bessel_eval(BesselOrder order, double gamma) {
    require_positive(gamma);
    return {unscaled_values(gamma).k[order.value()], scaled_values(gamma).k[order.value()], gamma,
            gamma >= kBesselWindowLo && gamma <= kBesselWindowHi};
}

double ratio(RatioKind kind, double gamma) {
    require_positive(gamma);
    const BesselCore c = bessel_core(gamma);
    const xreal y = 1 - c.w;
    if (kind == RatioKind::K0_over_K1) return static_cast<double>(y);
    return static_cast<double>(1 / (2 / xreal(gamma) + y));
}

}  // namespace synge
