#pragma once

#include <functional>
#include <string>
#include <vector>

#include "synge/eos.hpp"

namespace synge {

/// Gas family a check belongs to; Bessel checks are gas independent.
enum class Applicability { Monatomic, Diatomic, Bessel };
const char* to_string(Applicability a);

enum class GasFilter { Monatomic, Diatomic, Both };
GasFilter parse_gas_filter(const std::string& name);

enum class Spacing { Log, Linear };

/// Interval of gamma on which a predicate is asserted.
struct Interval {
    double lo;
    double hi;
    bool lo_open = false;
    bool hi_open = false;
    bool contains(double g) const;
    std::string describe() const;
};

/// Bessel data at one gamma, shared by all predicates.
struct GammaPoint {
    xreal g;
    xreal y;    ///< K0/K1
    xreal w;    ///< 1 - y
    xreal x;    ///< K1/K2
    xreal d;    ///< 1 - x
};

GammaPoint gamma_point(xreal gamma);

/// One inequality of the catalog. The predicate holds iff margin > 0.
struct Check {
    std::string id;
    Applicability applies;
    Interval domain;
    std::string statement;
    std::function<xreal(const GammaPoint&)> margin;
};

/// Every inequality and bound of the catalog.
std::vector<Check> default_catalog();

struct VerifyGrid {
    double gamma_min = 1e-6;
    double gamma_max = 1e4;
    std::size_t points = 10000;
    Spacing spacing = Spacing::Log;
    bool refine = true;   ///< add 100 points within 1% of each proof split point
};

/// Proof split points gamma_0, gamma_1, sqrt 2, 2, 4.
std::vector<double> split_points();

/// Grid points in increasing order, refinement included.
std::vector<double> grid_points(const VerifyGrid& grid);

struct CheckResult {
    std::string id;
    Applicability applies;
    std::string domain;
    std::string statement;
    std::size_t points = 0;
    std::size_t violations = 0;
    double worst_gamma = 0;
    double worst_margin = 0;
    bool passed() const { return points > 0 && violations == 0; }
};

struct CheckReport {
    VerifyGrid grid;
    std::size_t grid_points = 0;
    std::vector<CheckResult> results;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }
};

/// Evaluates the catalog on the grid. Throws WindowError if the grid leaves
/// [1e-6, 1e4]. Results do not depend on the thread count.
CheckReport run_checks(GasFilter filter, const VerifyGrid& grid, int threads = 1,
                       const std::vector<Check>& catalog = default_catalog());

/// Human-readable table of a report.
std::string format_table(const CheckReport& report);

/// gamma_0 = 2 e^{-C_E}, root of ln(gamma/2) + C_E.
xreal gamma0();
/// gamma_1 = (-9 + sqrt 129)/2, root of g^2 + 9 g - 12.
xreal gamma1();

/// Margin of I_3 > 0 at gamma.
xreal i3_margin(xreal gamma);

}  // namespace synge
