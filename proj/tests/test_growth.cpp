#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fourcycle/growth.hpp"

using namespace fourcycle;

TEST_SUITE("growth") {

TEST_CASE("fit recovers exact powers") {
    std::vector<std::pair<double, double>> cubic;
    for (double x : {10.0, 20.0, 40.0, 80.0}) cubic.emplace_back(x, 2.5 * x * x * x);
    FitResult f = fit_exponent(cubic);
    CHECK(std::abs(f.slope - 3.0) < 1e-9);
    CHECK(std::abs(std::exp(f.intercept) - 2.5) < 1e-9);
    CHECK(f.rms_residual < 1e-12);
}

TEST_CASE("fit input validation") {
    CHECK_THROWS_AS(fit_exponent({{10, 5}, {20, 9}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_exponent({{10, 5}, {10, 9}, {10, 12}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_exponent({{10, 5}, {20, 0.5}, {30, 12}}), std::invalid_argument);
}

TEST_CASE("star grows quadratically") {
    GrowthSeries s = growth_series("star", {30, 60, 120, 240});
    CHECK(std::abs(s.mean_slope - 2.0) < 0.05);
}

TEST_CASE("tripartite matching grows quadratically") {
    GrowthSeries s = growth_series("tripartite_matching", {30, 60, 120, 240});
    CHECK(std::abs(s.mean_slope - 2.0) < 0.05);
}

TEST_CASE("projective plane family grows with exponent 5/2") {
    GrowthSeries s = growth_series("rodl_phelps", {2, 3, 5, 7, 11, 13});
    CHECK(std::abs(s.mean_slope - 2.5) < 0.1);
    // n = 3(q^2+q+1) and |E| = (q+1)(q^2+q+1)^2, recorded exactly
    for (const auto& p : s.points) {
        long long npts = static_cast<long long>(p.param) * p.param + p.param + 1;
        CHECK(p.n == 3 * npts);
        CHECK(static_cast<long long>(p.edges) == (p.param + 1) * npts * npts);
    }
}

TEST_CASE("girth-5 greedy growth smoke") {
    GrowthSeries s = growth_series("girth5_greedy", {50, 100, 200}, 2, 0);
    CHECK(s.per_seed_slopes.size() == 2);
    CHECK(s.mean_slope > 1.0);
    CHECK(s.mean_slope < 2.0);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(growth_series("star", {30, 60}), std::invalid_argument);
    CHECK_THROWS_AS(growth_series("star", {30, 60, 120}, 0), std::invalid_argument);
    CHECK_THROWS_AS(growth_series("nonesuch", {30, 60, 120}), std::invalid_argument);
}

} // TEST_SUITE
