#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "synge/error.hpp"
#include "synge/verify.hpp"

using namespace synge;

namespace {

Check& find(std::vector<Check>& catalog, const std::string& id) {
    for (Check& c : catalog) {
        if (c.id == id) return c;
    }
    throw std::runtime_error("no check " + id);
}

}  // namespace

TEST_CASE("split constants") {
    CHECK(static_cast<double>(gamma0()) == doctest::Approx(1.1229189).epsilon(1e-7));
    CHECK(std::fabs(std::log(gamma0() / 2) + kEuler) < 1e-18L);
    const xreal g1 = gamma1();
    CHECK(std::fabs(g1 * g1 + 9 * g1 - 12) < 1e-17L);
    CHECK(g1 > 1.1789L);
    CHECK(g1 > gamma0());
    const auto s = split_points();
    CHECK(s.size() == 5);
    CHECK(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("default run passes every check") {
    const CheckReport report = run_checks(GasFilter::Both, VerifyGrid{}, 4);
    CHECK(report.all_passed());
    CHECK(report.grid_points >= 10000);
    std::set<std::string> ids;
    for (const CheckResult& r : report.results) {
        INFO(r.id);
        CHECK(r.passed());
        CHECK(r.worst_margin > 0);
        CHECK(r.points > 0);
        ids.insert(r.id);
    }
    for (const char* id : {"imp-ine1", "imp-ine2", "imp-inep", "p-cV", "I1", "I2", "I3", "B1", "B2",
                           "B3", "Bbar1", "Bbar2", "Bbar3", "rough-lower", "rough-upper",
                           "acurate-lower", "acurate-upper", "new1", "low1-lower", "low1-upper",
                           "K012-1", "K012-2", "inver", "speed", "cV", "sound-speed"}) {
        CHECK(ids.count(id) == 1);
    }
    const std::string table = format_table(report);
    CHECK(table.find("acurate-upper") != std::string::npos);
}

TEST_CASE("results do not depend on the thread count") {
    VerifyGrid grid;
    grid.points = 2000;
    const CheckReport a = run_checks(GasFilter::Both, grid, 1);
    const CheckReport b = run_checks(GasFilter::Both, grid, 7);
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].worst_gamma == b.results[i].worst_gamma);
        CHECK(a.results[i].worst_margin == b.results[i].worst_margin);
    }
}

TEST_CASE("gas filter") {
    VerifyGrid grid;
    grid.points = 200;
    const CheckReport m = run_checks(GasFilter::Monatomic, grid);
    for (const CheckResult& r : m.results) CHECK(r.applies != Applicability::Diatomic);
    const CheckReport d = run_checks(parse_gas_filter("diatomic"), grid);
    for (const CheckResult& r : d.results) CHECK(r.applies != Applicability::Monatomic);
    CHECK_THROWS_AS(parse_gas_filter("plasma"), DomainError);
}

TEST_CASE("negated predicate is reported with its worst gamma") {
    std::vector<Check> catalog = default_catalog();
    Check& c = find(catalog, "I3");
    const auto original = c.margin;
    c.margin = [original](const GammaPoint& p) { return -original(p); };
    VerifyGrid grid;
    grid.points = 500;
    const CheckReport report = run_checks(GasFilter::Diatomic, grid, 2, catalog);
    CHECK_FALSE(report.all_passed());
    CHECK(report.failed() == 1);
    for (const CheckResult& r : report.results) {
        if (r.id != "I3") continue;
        CHECK_FALSE(r.passed());
        CHECK(r.violations == r.points);
        CHECK(r.worst_margin < 0);
        CHECK(static_cast<double>(-original(gamma_point(r.worst_gamma))) == r.worst_margin);
    }
}

TEST_CASE("I3 waypoints") {
    for (double g : {0.5, static_cast<double>(gamma1()), std::sqrt(2.0), 4.0}) {
        CHECK(i3_margin(g) > 0);
    }
}

TEST_CASE("grid construction") {
    VerifyGrid grid;
    grid.points = 100;
    const auto pts = grid_points(grid);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(pts.front() == 1e-6);
    CHECK(pts.back() == 1e4);
    for (double s : split_points()) {
        CHECK(std::binary_search(pts.begin(), pts.end(), s));
        const auto n = std::count_if(pts.begin(), pts.end(),
                                     [s](double g) { return std::fabs(g / s - 1) <= 0.01 + 1e-12; });
        CHECK(n >= 100);
    }
    grid.refine = false;
    CHECK(grid_points(grid).size() == 100);
    grid.spacing = Spacing::Linear;
    const auto lin = grid_points(grid);
    CHECK(lin[2] - lin[1] == doctest::Approx(lin[51] - lin[50]));
    grid.gamma_min = 1e-7;
    CHECK_THROWS_AS(grid_points(grid), WindowError);
    CHECK_THROWS_AS(run_checks(GasFilter::Both, grid), WindowError);
}

TEST_CASE("margins vary continuously on each proof interval") {
    const auto catalog = default_catalog();
    for (const Check& c : catalog) {
        const double lo = std::max(c.domain.lo, 1e-6) * (1 + 1e-9);
        const double hi = std::min(c.domain.hi, 1e4) * (1 - 1e-9);
        const auto g = log_grid(lo, hi, 3000);
        std::vector<double> m(g.size());
        double scale = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            m[i] = static_cast<double>(c.margin(gamma_point(g[i])));
            scale = std::max(scale, std::fabs(m[i]));
        }
        int bad = 0;
        for (std::size_t i = 1; i + 2 < g.size(); ++i) {
            const double left = std::fabs(m[i] - m[i - 1]) / (g[i] - g[i - 1]);
            const double right = std::fabs(m[i + 2] - m[i + 1]) / (g[i + 2] - g[i + 1]);
            const double step = std::fabs(m[i + 1] - m[i]);
            if (step > 10 * (g[i + 1] - g[i]) * std::max(left, right) + 1e-13 * scale) ++bad;
        }
        INFO(c.id);
        CHECK(bad == 0);
    }
}

TEST_CASE("sound speed bound on the grid") {
    VerifyGrid grid;
    grid.points = 1000;
    const CheckReport r = run_checks(GasFilter::Both, grid);
    for (const CheckResult& c : r.results) {
        if (c.id == "sound-speed") CHECK(c.passed());
    }
}

TEST_CASE("interval description") {
    Interval i{std::sqrt(2.0), std::numeric_limits<double>::infinity(), true, true};
    CHECK(i.contains(2.0));
    CHECK_FALSE(i.contains(std::sqrt(2.0)));
    CHECK(i.describe().front() == '(');
}
