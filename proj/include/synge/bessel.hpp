#pragma once

#include "synge/numerics.hpp"

namespace synge {

/// Documented accuracy window of the Bessel engine.
inline constexpr double kBesselWindowLo = 1e-6;
inline constexpr double kBesselWindowHi = 1e4;

/// Order j of K_j, restricted to 0..3.
class BesselOrder {
  public:
    /// Throws DomainError unless 0 <= j <= 3.
    BesselOrder(int j);
    int value() const noexcept { return j_; }

  private:
    int j_;
};

/// One evaluation of K_j(gamma).
struct BesselEval {
    double value;     ///< K_j(gamma), may underflow to 0 for large gamma
    double scaled;    ///< e^gamma K_j(gamma)
    double gamma;
    bool in_window;   ///< false: outside [1e-6, 1e4], accuracy not guaranteed
};

/// K_j(gamma). K_2 and K_3 come from the upward recurrence.
double bessel_k(BesselOrder order, double gamma);

/// e^gamma K_j(gamma), free of underflow.
double bessel_k_scaled(BesselOrder order, double gamma);

/// Value, scaled value and window status together.
BesselEval bessel_eval(BesselOrder order, double gamma);

enum class RatioKind { K0_over_K1, K1_over_K2 };

/// K0/K1 or K1/K2 from scaled values.
double ratio(RatioKind kind, double gamma);

/// Extended-precision core shared with the constitutive layer.
struct BesselCore {
    xreal k0s;   ///< e^g K0
    xreal k1s;   ///< e^g K1
    xreal w;     ///< 1 - K0/K1, accurate also when it is small
};

/// Core evaluation without window checks. Requires gamma > 0.
BesselCore bessel_core(xreal gamma);

/// e^g K_j for j = 0..3 in extended precision.
xreal bessel_k_scaled_ext(int j, xreal gamma);

/// Asymptotic coefficient A_{j,m} of the large-gamma expansion.
xreal asymptotic_coefficient(int j, int m);

/// Bound 2 e^{(j^2 - 1/4)/gamma} |A_{j,n}| on the scaled remainder.
xreal remainder_bound(int j, int n, xreal gamma);

namespace detail {
/// Branches, exposed for overlap tests.
BesselCore core_series(xreal gamma);
BesselCore core_continued_fraction(xreal gamma);
BesselCore core_asymptotic(xreal gamma);
inline constexpr xreal kSeriesMax = 2.0L;
inline constexpr xreal kAsymptoticMin = 25.0L;
}  // namespace detail

}  // namespace synge
